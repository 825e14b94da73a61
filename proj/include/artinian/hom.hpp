#pragma once

// Hom_R(M, N) as a module of generator images, duals, trace ideals,
// reflexivity, randomized isomorphism certificates, Auslander transpose and Ext.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "module.hpp"
#include "resolution.hpp"

namespace artinian {

/// Block matrix of (n_j)_j -> (Σ_j A[j,k] n_j)_k from N^rows to N^cols.
template <class F>
Matrix<F> induced_hom(const RMatrix<F>& a, const FPModule<F>& n) {
    const auto d = n.dim();
    Matrix<F> out(n.field(), a.cols() * d, a.rows() * d);
    for (std::size_t j = 0; j < a.rows(); ++j)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a.ring().is_zero(a.at(j, k))) continue;
            auto blk = n.action_of(a.at(j, k));
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t c = 0; c < d; ++c) out(k * d + r, j * d + c) = blk(r, c);
        }
    return out;
}

/// Hom_R(M, N). An element is the tuple of images of the minimal generators
/// of M, stored in N^λ(M); the R-action is the diagonal one.
template <class F>
struct HomSpace {
    Presentation<F> source_presentation;
    std::size_t source_dim = 0;
    Submodule<F> space;      // inside N^a
    Matrix<F> section;       // a*dim(R) x dim M, cover * section = identity

    std::size_t dim() const { return space.module.dim(); }
    std::size_t num_generators() const { return source_presentation.generators.size(); }
};

/// Right inverse of a surjective cover matrix: invert the pivot columns.
template <class F>
Matrix<F> cover_section(const Matrix<F>& cover) {
    const auto& fld = cover.field();
    auto ech = reduced_row_echelon(cover);
    if (ech.pivot_cols.size() != cover.rows()) throw std::logic_error("cover_section: cover is not surjective");
    const auto n = cover.rows();
    Matrix<F> aug(fld, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t t = 0; t < n; ++t) aug(r, t) = cover(r, ech.pivot_cols[t]);
        aug(r, n + r) = fld.one();
    }
    auto inv = reduced_row_echelon(std::move(aug)).reduced;
    Matrix<F> s(fld, cover.cols(), n);
    for (std::size_t t = 0; t < n; ++t)
        for (std::size_t c = 0; c < n; ++c) s(ech.pivot_cols[t], c) = inv(t, n + c);
    return s;
}

template <class F>
HomSpace<F> hom(const FPModule<F>& m, const FPModule<F>& n) {
    HomSpace<F> h;
    h.source_presentation = present(m);
    h.source_dim = m.dim();
    const auto& p = h.source_presentation;
    auto sys = induced_hom(p.relations, n);
    h.space = realize_subspace(m.ring_ptr(), kernel_subspace(sys), power_action(n, p.generators.size()));
    h.section = m.dim() ? cover_section(p.cover) : Matrix<F>(m.field(), p.cover.cols(), 0);
    return h;
}

/// The k-matrix (dim N x dim M) of the homomorphism with generator images v.
template <class F>
Matrix<F> map_from_images(const HomSpace<F>& h, const FPModule<F>& n, const Vec<F>& images) {
    const auto a = h.num_generators(), d = n.dim();
    const auto dr = n.ring().dim();
    Matrix<F> psi(n.field(), d, a * dr);
    for (std::size_t j = 0; j < a; ++j) {
        Vec<F> g(images.begin() + static_cast<std::ptrdiff_t>(j * d), images.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
        auto imgs = n.monomial_images(g);
        for (std::size_t u = 0; u < dr; ++u)
            for (std::size_t r = 0; r < d; ++r) psi(r, j * dr + u) = imgs[u][r];
    }
    return psi * h.section;
}

/// M* = Hom_R(M, R) realized inside R^λ(M).
template <class F>
Submodule<F> dual(const FPModule<F>& m) {
    auto p = present(m);
    auto sys = p.relations.transpose().linearize();
    return realize_subspace(m.ring_ptr(), kernel_subspace(sys), free_action(m.ring_ptr(), p.generators.size()));
}

/// tr_R(M): the ideal spanned by all φ(g) for φ in M* and g a generator of M.
template <class F>
Subspace<F> trace_ideal(const FPModule<F>& m) {
    const auto& ring = m.ring();
    const auto dr = ring.dim();
    auto md = dual(m);
    Subspace<F> t(ring.field(), dr);
    for (const auto& v : md.subspace.basis())
        for (std::size_t j = 0; j * dr < v.size(); ++j)
            t.insert(Vec<F>(v.begin() + static_cast<std::ptrdiff_t>(j * dr), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * dr)));
    return t;
}

/// The maximal ideal as a subspace of R.
template <class F>
Subspace<F> maximal_ideal_subspace(const ArtinianAlgebra<F>& ring) {
    Subspace<F> s(ring.field(), ring.dim());
    for (std::size_t u = 1; u < ring.dim(); ++u) {
        Vec<F> e = ring.zero();
        e[u] = ring.field().one();
        s.insert(e);
    }
    return s;
}

/// The biduality map M -> M** as a matrix into R^c, where c = λ(M*), and
/// the verdict: M is reflexive iff that map is injective and dim M** = dim M.
template <class F>
struct Biduality {
    Matrix<F> evaluation;
    std::size_t rank = 0;
    std::size_t dim_module = 0;
    std::size_t dim_bidual = 0;
    bool reflexive = false;
};

template <class F>
Biduality<F> biduality(const FPModule<F>& m) {
    Biduality<F> b;
    b.dim_module = m.dim();
    HomSpace<F> h = hom(m, free_module(m.ring_ptr(), 1));
    const auto& md = h.space;
    auto gens = minimal_generators(md.module);
    const auto dr = m.ring().dim();
    b.evaluation = Matrix<F>(m.field(), gens.size() * dr, m.dim());
    auto one = free_module(m.ring_ptr(), 1);
    for (std::size_t l = 0; l < gens.size(); ++l) {
        auto phi = map_from_images(h, one, md.embed(gens[l]));
        for (std::size_t r = 0; r < dr; ++r)
            for (std::size_t c = 0; c < m.dim(); ++c) b.evaluation(l * dr + r, c) = phi(r, c);
    }
    b.rank = rank(b.evaluation);
    b.dim_bidual = dual(md.module).module.dim();
    b.reflexive = b.rank == b.dim_module && b.dim_bidual == b.dim_module;
    return b;
}

template <class F>
bool is_reflexive(const FPModule<F>& m) {
    return biduality(m).reflexive;
}

enum class IsoVerdict { yes, no, unknown };

inline const char* to_string(IsoVerdict v) {
    switch (v) {
        case IsoVerdict::yes: return "yes";
        case IsoVerdict::no: return "no";
        default: return "unknown";
    }
}

/// yes comes with an exactly verified bijective R-linear map; no only when
/// an invariant (dimension, generator count, socle dimension) differs.
template <class F>
struct IsoResult {
    IsoVerdict verdict = IsoVerdict::unknown;
    std::size_t trials_used = 0;
    std::optional<Matrix<F>> certificate;
};

template <class F>
IsoResult<F> are_isomorphic(const FPModule<F>& m, const FPModule<F>& n, std::size_t trials = 64,
                            std::uint64_t seed = 1) {
    IsoResult<F> res;
    if (m.dim() != n.dim() || num_generators(m) != num_generators(n) || socle(m).dim() != socle(n).dim()) {
        res.verdict = IsoVerdict::no;
        return res;
    }
    if (m.dim() == 0) {
        res.verdict = IsoVerdict::yes;
        res.certificate = Matrix<F>(m.field(), 0, 0);
        return res;
    }
    auto h = hom(m, n);
    const auto& fld = m.field();
    std::mt19937_64 rng(seed);
    const auto& basis = h.space.subspace.basis();
    for (std::size_t t = 0; t < trials; ++t) {
        res.trials_used = t + 1;
        Vec<F> v(h.space.subspace.ambient_dim(), fld.zero());
        for (const auto& b : basis) sub_scaled(fld, v, fld.neg(fld.random(rng)), b);
        auto phi = map_from_images(h, n, v);
        if (rank(phi) == m.dim()) {
            res.verdict = IsoVerdict::yes;
            res.certificate = std::move(phi);
            return res;
        }
    }
    return res;
}

/// Splits off copies of R: while some φ in M* sends a generator to a unit,
/// M ≅ R ⊕ ker φ.
template <class F>
std::pair<std::size_t, FPModule<F>> strip_free_summands(const FPModule<F>& m) {
    std::size_t count = 0;
    FPModule<F> cur = m;
    auto one = free_module(m.ring_ptr(), 1);
    const auto dr = m.ring().dim();
    while (!cur.is_zero()) {
        auto h = hom(cur, one);
        const Vec<F>* hit = nullptr;
        for (const auto& v : h.space.subspace.basis()) {
            for (std::size_t j = 0; j < h.num_generators() && !hit; ++j)
                if (!cur.field().is_zero(v[j * dr])) hit = &v;
            if (hit) break;
        }
        if (!hit) break;
        auto phi = map_from_images(h, one, *hit);
        auto ker = kernel_subspace(phi);
        auto sub = realize_subspace(cur.ring_ptr(), std::move(ker), module_action(cur));
        if (sub.module.dim() + dr != cur.dim()) throw std::logic_error("strip_free_summands: kernel has wrong dimension");
        cur = std::move(sub.module);
        ++count;
    }
    return {count, std::move(cur)};
}

/// Tr M = coker(P^t) for the minimal presentation P of M.
template <class F>
FPModule<F> auslander_transpose(const FPModule<F>& m) {
    return from_presentation(present(m).relations.transpose());
}

/// Ext^i_R(M, N) from the minimal resolution of M, realized as a subquotient
/// of N^β_i.
template <class F>
FPModule<F> ext(std::size_t i, const FPModule<F>& m, const FPModule<F>& n) {
    auto res = minimal_free_resolution(m, i + 1);
    const auto& ring = m.ring_ptr();
    if (i >= res.betti.size()) return FPModule<F>::zero(ring);
    const auto bi = res.betti[i];
    Subspace<F> cycles(n.field(), bi * n.dim());
    if (i < res.differentials.size()) cycles = kernel_subspace(induced_hom(res.differentials[i], n));
    else cycles = Subspace<F>::span(n.field(), bi * n.dim(), Matrix<F>::identity(n.field(), bi * n.dim()).columns());
    auto z = realize_subspace(ring, std::move(cycles), power_action(n, bi));
    std::vector<Vec<F>> bounds;
    if (i > 0) {
        auto dprev = induced_hom(res.differentials[i - 1], n);
        for (const auto& c : dprev.columns()) bounds.push_back(z.coordinates(c));
    }
    return quotient(z.module, bounds).module;
}

}  // namespace artinian
