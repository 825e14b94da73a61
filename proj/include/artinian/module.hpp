#pragma once

// Finitely generated modules over an Artinian monomial algebra. A module is
// held by its k-realization: a basis size and one action matrix per
// variable. Presentations are derived from the realization when needed.

#include <cstddef>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"

namespace artinian {

template <class F>
class FPModule {
public:
    using Algebra = ArtinianAlgebra<F>;
    using Element = typename F::Element;

    FPModule() = default;
    FPModule(AlgebraPtr<F> ring, std::size_t dim, std::vector<Matrix<F>> action)
        : ring_(std::move(ring)), dim_(dim), action_(std::move(action)) {
        if (!ring_) throw std::invalid_argument("FPModule: null ring");
        if (action_.size() != ring_->num_vars()) throw std::invalid_argument("FPModule: need one action per variable");
        for (const auto& x : action_)
            if (x.rows() != dim_ || x.cols() != dim_) throw std::invalid_argument("FPModule: action has wrong shape");
    }

    static FPModule zero(AlgebraPtr<F> ring) {
        std::vector<Matrix<F>> a(ring->num_vars(), Matrix<F>(ring->field(), 0, 0));
        return FPModule(ring, 0, std::move(a));
    }

    const Algebra& ring() const { return *ring_; }
    const AlgebraPtr<F>& ring_ptr() const { return ring_; }
    const F& field() const { return ring_->field(); }
    std::size_t dim() const { return dim_; }
    std::size_t num_vars() const { return action_.size(); }
    const Matrix<F>& action(std::size_t i) const { return action_.at(i); }
    const std::vector<Matrix<F>>& actions() const { return action_; }
    bool is_zero() const { return dim_ == 0; }

    Vec<F> apply(std::size_t i, const Vec<F>& v) const { return action_[i].apply(v); }

    /// X^u v for every standard monomial u, in basis order.
    std::vector<Vec<F>> monomial_images(const Vec<F>& v) const {
        const auto& r = *ring_;
        std::vector<Vec<F>> out(r.dim());
        out[0] = v;
        for (std::size_t u = 1; u < r.dim(); ++u) out[u] = apply(r.parent_variable(u), out[r.parent(u)]);
        return out;
    }

    /// r·v for a ring element r.
    Vec<F> act(const Vec<F>& r, const Vec<F>& v) const {
        const auto& fld = field();
        auto imgs = monomial_images(v);
        Vec<F> out(dim_, fld.zero());
        for (std::size_t u = 0; u < imgs.size(); ++u)
            if (!fld.is_zero(r[u]))
                for (std::size_t k = 0; k < dim_; ++k) out[k] = fld.add(out[k], fld.mul(r[u], imgs[u][k]));
        return out;
    }

    /// Matrix of multiplication by r.
    Matrix<F> action_of(const Vec<F>& r) const {
        Matrix<F> m(field(), dim_, dim_);
        for (std::size_t c = 0; c < dim_; ++c) {
            Vec<F> e(dim_, field().zero());
            e[c] = field().one();
            auto col = act(r, e);
            for (std::size_t k = 0; k < dim_; ++k) m(k, c) = col[k];
        }
        return m;
    }

    /// Actions commute pairwise and are nilpotent.
    bool is_valid() const {
        for (std::size_t i = 0; i < action_.size(); ++i) {
            for (std::size_t j = i + 1; j < action_.size(); ++j)
                if (!(action_[i] * action_[j] == action_[j] * action_[i])) return false;
            Matrix<F> p = Matrix<F>::identity(field(), dim_);
            for (std::size_t k = 0; k < dim_ + 1 && !p.is_zero(); ++k) p = p * action_[i];
            if (!p.is_zero()) return false;
        }
        return true;
    }

private:
    AlgebraPtr<F> ring_;
    std::size_t dim_ = 0;
    std::vector<Matrix<F>> action_;
};

/// The variable action on an ambient space, given without materializing
/// dense matrices (free modules are large and very sparse).
template <class F>
using VariableAction = std::function<Vec<F>(std::size_t, const Vec<F>&)>;

template <class F>
VariableAction<F> module_action(const FPModule<F>& m) {
    return [&m](std::size_t i, const Vec<F>& v) { return m.apply(i, v); };
}

/// Action on R^rank with coordinates ordered generator-major: index j*dim(R)+u.
template <class F>
VariableAction<F> free_action(const AlgebraPtr<F>& ring, std::size_t rank) {
    return [ring, rank](std::size_t i, const Vec<F>& v) {
        const auto d = ring->dim();
        const auto& fld = ring->field();
        const auto xi = ring->variable_index(i);
        Vec<F> out(v.size(), fld.zero());
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t u = 0; u < d; ++u) {
                const auto& c = v[j * d + u];
                if (fld.is_zero(c)) continue;
                if (auto w = ring->product_index(xi, u); w >= 0) out[j * d + static_cast<std::size_t>(w)] = c;
            }
        return out;
    };
}

/// Diagonal action on M^copies.
template <class F>
VariableAction<F> power_action(const FPModule<F>& m, std::size_t copies) {
    return [&m, copies](std::size_t i, const Vec<F>& v) {
        const auto d = m.dim();
        Vec<F> out(v.size(), m.field().zero());
        for (std::size_t j = 0; j < copies; ++j) {
            Vec<F> block(v.begin() + static_cast<std::ptrdiff_t>(j * d), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
            if (is_zero_vector(m.field(), block)) continue;
            auto img = m.apply(i, block);
            std::copy(img.begin(), img.end(), out.begin() + static_cast<std::ptrdiff_t>(j * d));
        }
        return out;
    };
}

/// A submodule together with its basis in ambient coordinates.
template <class F>
struct Submodule {
    FPModule<F> module;
    Subspace<F> subspace;  // basis vector t is the image of intrinsic basis vector t

    Vec<F> embed(const Vec<F>& coords) const {
        const auto& fld = subspace.field();
        Vec<F> v(subspace.ambient_dim(), fld.zero());
        for (std::size_t t = 0; t < coords.size(); ++t)
            if (!fld.is_zero(coords[t])) sub_scaled(fld, v, fld.neg(coords[t]), subspace.basis()[t]);
        return v;
    }
    Vec<F> coordinates(const Vec<F>& ambient) const { return subspace.coordinates(ambient); }
};

/// Realizes an action-closed subspace as a module.
template <class F>
Submodule<F> realize_subspace(const AlgebraPtr<F>& ring, Subspace<F> w, const VariableAction<F>& ambient) {
    const auto s = w.dim();
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < ring->num_vars(); ++i) {
        Matrix<F> y(ring->field(), s, s);
        for (std::size_t t = 0; t < s; ++t) {
            auto img = ambient(i, w.basis()[t]);
            for (std::size_t t2 = 0; t2 < s; ++t2) y(t2, t) = img[w.pivots()[t2]];
        }
        act.push_back(std::move(y));
    }
    FPModule<F> m(ring, s, std::move(act));
    return {std::move(m), std::move(w)};
}

/// Smallest action-closed subspace containing the given vectors.
template <class F>
Subspace<F> closure(const F& field, std::size_t ambient_dim, std::size_t num_vars, const std::vector<Vec<F>>& gens,
                    const VariableAction<F>& ambient) {
    Subspace<F> w(field, ambient_dim);
    std::vector<Vec<F>> queue;
    for (const auto& g : gens)
        if (w.insert(g)) queue.push_back(g);
    while (!queue.empty()) {
        Vec<F> v = std::move(queue.back());
        queue.pop_back();
        for (std::size_t i = 0; i < num_vars; ++i) {
            auto img = ambient(i, v);
            if (w.insert(img)) queue.push_back(std::move(img));
        }
    }
    return w;
}

template <class F>
Submodule<F> submodule_generated(const FPModule<F>& m, const std::vector<Vec<F>>& gens) {
    auto act = module_action(m);
    return realize_subspace(m.ring_ptr(), closure(m.field(), m.dim(), m.num_vars(), gens, act), act);
}

/// Quotient of an ambient space by an action-closed subspace. The quotient
/// basis is the set of non-pivot ambient coordinates.
template <class F>
struct Quotient {
    FPModule<F> module;
    Subspace<F> relations;
    std::vector<std::size_t> kept;

    Vec<F> project(const Vec<F>& v) const {
        auto r = relations.reduce(v);
        Vec<F> out(kept.size(), relations.field().zero());
        for (std::size_t q = 0; q < kept.size(); ++q) out[q] = r[kept[q]];
        return out;
    }
};

template <class F>
Quotient<F> quotient_by(const AlgebraPtr<F>& ring, Subspace<F> w, const VariableAction<F>& ambient) {
    const auto& fld = ring->field();
    auto kept = w.complement();
    const auto q = kept.size();
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < ring->num_vars(); ++i) {
        Matrix<F> y(fld, q, q);
        for (std::size_t c = 0; c < q; ++c) {
            Vec<F> unit(w.ambient_dim(), fld.zero());
            unit[kept[c]] = fld.one();
            auto img = w.reduce(ambient(i, unit));
            for (std::size_t r = 0; r < q; ++r) y(r, c) = img[kept[r]];
        }
        act.push_back(std::move(y));
    }
    FPModule<F> m(ring, q, std::move(act));
    return {std::move(m), std::move(w), std::move(kept)};
}

template <class F>
Quotient<F> quotient(const FPModule<F>& m, const std::vector<Vec<F>>& gens) {
    auto act = module_action(m);
    return quotient_by(m.ring_ptr(), closure(m.field(), m.dim(), m.num_vars(), gens, act), act);
}

template <class F>
FPModule<F> free_module(const AlgebraPtr<F>& ring, std::size_t rank) {
    const auto d = ring->dim();
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < ring->num_vars(); ++i) {
        Matrix<F> y(ring->field(), rank * d, rank * d);
        for (std::size_t j = 0; j < rank; ++j)
            for (std::size_t u = 0; u < d; ++u)
                for (std::size_t w = 0; w < d; ++w)
                    y(j * d + w, j * d + u) = ring->action(i)(w, u);
        act.push_back(std::move(y));
    }
    return FPModule<F>(ring, rank * d, std::move(act));
}

template <class F>
FPModule<F> residue_field(const AlgebraPtr<F>& ring) {
    std::vector<Matrix<F>> act(ring->num_vars(), Matrix<F>(ring->field(), 1, 1));
    return FPModule<F>(ring, 1, std::move(act));
}

template <class F>
FPModule<F> direct_sum(const FPModule<F>& a, const FPModule<F>& b) {
    const auto n = a.dim() + b.dim();
    std::vector<Matrix<F>> act;
    for (std::size_t i = 0; i < a.num_vars(); ++i) {
        Matrix<F> y(a.field(), n, n);
        for (std::size_t r = 0; r < a.dim(); ++r)
            for (std::size_t c = 0; c < a.dim(); ++c) y(r, c) = a.action(i)(r, c);
        for (std::size_t r = 0; r < b.dim(); ++r)
            for (std::size_t c = 0; c < b.dim(); ++c) y(a.dim() + r, a.dim() + c) = b.action(i)(r, c);
        act.push_back(std::move(y));
    }
    return FPModule<F>(a.ring_ptr(), n, std::move(act));
}

template <class F>
FPModule<F> direct_power(const FPModule<F>& m, std::size_t copies) {
    FPModule<F> out = FPModule<F>::zero(m.ring_ptr());
    for (std::size_t c = 0; c < copies; ++c) out = direct_sum(out, m);
    return out;
}

/// m·M as a subspace.
template <class F>
Subspace<F> radical(const FPModule<F>& m) {
    Subspace<F> w(m.field(), m.dim());
    for (std::size_t i = 0; i < m.num_vars(); ++i)
        for (std::size_t c = 0; c < m.dim(); ++c) w.insert(m.action(i).column(c));
    return w;
}

/// m^t·M as a subspace.
template <class F>
Subspace<F> radical_power(const FPModule<F>& m, std::size_t t) {
    std::vector<Vec<F>> cur;
    for (std::size_t c = 0; c < m.dim(); ++c) {
        Vec<F> e(m.dim(), m.field().zero());
        e[c] = m.field().one();
        cur.push_back(std::move(e));
    }
    for (std::size_t step = 0; step < t; ++step) {
        Subspace<F> next(m.field(), m.dim());
        for (const auto& v : cur)
            for (std::size_t i = 0; i < m.num_vars(); ++i) next.insert(m.apply(i, v));
        cur = next.basis();
        if (cur.empty()) break;
    }
    return Subspace<F>::span(m.field(), m.dim(), cur);
}

template <class F>
bool is_killed_by_maximal_ideal(const FPModule<F>& m) {
    for (const auto& x : m.actions())
        if (!x.is_zero()) return false;
    return true;
}

/// soc(M): joint kernel of the variable actions.
template <class F>
Subspace<F> socle(const FPModule<F>& m) {
    const auto d = m.dim(), e = m.num_vars();
    Matrix<F> stacked(m.field(), e * d, d);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) stacked(i * d + r, c) = m.action(i)(r, c);
    return Subspace<F>::span(m.field(), d, kernel_vectors(stacked));
}

/// Minimal generators: unit vectors on the coordinates complementary to mM.
template <class F>
std::vector<Vec<F>> minimal_generators(const FPModule<F>& m) {
    std::vector<Vec<F>> out;
    for (auto q : radical(m).complement()) {
        Vec<F> e(m.dim(), m.field().zero());
        e[q] = m.field().one();
        out.push_back(std::move(e));
    }
    return out;
}

/// λ(M), the minimal number of generators.
template <class F>
std::size_t num_generators(const FPModule<F>& m) {
    return m.dim() - radical(m).dim();
}

/// Matrix of the cover R^a -> M sending e_j to gens[j]; column j*dim(R)+u is X^u gens[j].
template <class F>
Matrix<F> cover_matrix(const FPModule<F>& m, const std::vector<Vec<F>>& gens) {
    const auto d = m.ring().dim();
    Matrix<F> c(m.field(), m.dim(), gens.size() * d);
    for (std::size_t j = 0; j < gens.size(); ++j) {
        auto imgs = m.monomial_images(gens[j]);
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t r = 0; r < m.dim(); ++r) c(r, j * d + u) = imgs[u][r];
    }
    return c;
}

/// Ω^1(M) = ker(R^a -> M) for the cover on the given generators.
template <class F>
Submodule<F> kernel_of_cover(const FPModule<F>& m, const std::vector<Vec<F>>& gens) {
    auto w = kernel_subspace(cover_matrix(m, gens));
    return realize_subspace(m.ring_ptr(), std::move(w), free_action(m.ring_ptr(), gens.size()));
}

/// Matrix over R. Entries are ring elements; column c is the image of the
/// c-th basis vector, read as an element of R^rows (generator-major).
template <class F>
class RMatrix {
public:
    using RElem = Vec<F>;

    RMatrix() = default;
    RMatrix(AlgebraPtr<F> ring, std::size_t rows, std::size_t cols)
        : ring_(std::move(ring)), rows_(rows), cols_(cols), entries_(rows * cols, ring_->zero()) {}

    static RMatrix from_columns(const AlgebraPtr<F>& ring, std::size_t rows, const std::vector<Vec<F>>& columns) {
        RMatrix p(ring, rows, columns.size());
        const auto d = ring->dim();
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (std::size_t r = 0; r < rows; ++r)
                p.at(r, c) = RElem(columns[c].begin() + static_cast<std::ptrdiff_t>(r * d),
                                   columns[c].begin() + static_cast<std::ptrdiff_t>((r + 1) * d));
        return p;
    }

    const ArtinianAlgebra<F>& ring() const { return *ring_; }
    const AlgebraPtr<F>& ring_ptr() const { return ring_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    RElem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const RElem& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    Vec<F> column_vector(std::size_t c) const {
        const auto d = ring_->dim();
        Vec<F> v(rows_ * d, ring_->field().zero());
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t u = 0; u < d; ++u) v[r * d + u] = at(r, c)[u];
        return v;
    }
    std::vector<Vec<F>> column_vectors() const {
        std::vector<Vec<F>> out;
        for (std::size_t c = 0; c < cols_; ++c) out.push_back(column_vector(c));
        return out;
    }

    RMatrix transpose() const {
        RMatrix t(ring_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    RMatrix operator*(const RMatrix& b) const {
        if (cols_ != b.rows_) throw std::invalid_argument("RMatrix::operator*: shape mismatch");
        RMatrix out(ring_, rows_, b.cols_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < b.cols_; ++c)
                for (std::size_t k = 0; k < cols_; ++k)
                    out.at(r, c) = ring_->add(out.at(r, c), ring_->multiply(at(r, k), b.at(k, c)));
        return out;
    }

    bool is_zero() const {
        for (const auto& x : entries_)
            if (!ring_->is_zero(x)) return false;
        return true;
    }

    /// Every entry lies in the maximal ideal.
    bool is_minimal() const {
        for (const auto& x : entries_)
            if (!ring_->in_maximal_ideal(x)) return false;
        return true;
    }

    /// k-matrix of the R-linear map R^cols -> R^rows.
    Matrix<F> linearize() const {
        const auto d = ring_->dim();
        const auto& fld = ring_->field();
        Matrix<F> m(fld, rows_ * d, cols_ * d);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) {
                const auto& a = at(r, c);
                for (std::size_t u = 0; u < d; ++u) {
                    if (fld.is_zero(a[u])) continue;
                    for (std::size_t v = 0; v < d; ++v)
                        if (auto w = ring_->product_index(u, v); w >= 0) {
                            auto& slot = m(r * d + static_cast<std::size_t>(w), c * d + v);
                            slot = fld.add(slot, a[u]);
                        }
                }
            }
        return m;
    }

    /// Tab-separated entries, one row per line.
    std::string to_string() const {
        std::string out;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) out += (c ? "\t" : "") + ring_->to_string(at(r, c));
            out += '\n';
        }
        return out;
    }

private:
    AlgebraPtr<F> ring_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<RElem> entries_;
};

/// Minimal presentation R^b --relations--> R^a -> M -> 0.
template <class F>
struct Presentation {
    std::vector<Vec<F>> generators;  // a vectors in M
    Matrix<F> cover;                 // dim M x a*dim(R)
    Submodule<F> syzygy;             // Ω^1(M) inside R^a
    std::vector<Vec<F>> syzygy_generators;  // intrinsic coordinates in syzygy.module
    RMatrix<F> relations;            // a x b, columns are those generators in R^a
};

template <class F>
Presentation<F> present_on(const FPModule<F>& m, std::vector<Vec<F>> gens) {
    Presentation<F> p;
    p.generators = std::move(gens);
    p.cover = cover_matrix(m, p.generators);
    auto w = kernel_subspace(p.cover);
    p.syzygy = realize_subspace(m.ring_ptr(), std::move(w), free_action(m.ring_ptr(), p.generators.size()));
    p.syzygy_generators = minimal_generators(p.syzygy.module);
    std::vector<Vec<F>> cols;
    for (const auto& g : p.syzygy_generators) cols.push_back(p.syzygy.embed(g));
    p.relations = RMatrix<F>::from_columns(m.ring_ptr(), p.generators.size(), cols);
    return p;
}

template <class F>
Presentation<F> present(const FPModule<F>& m) {
    return present_on(m, minimal_generators(m));
}

/// Ω^1(M) realized inside R^{λ(M)}.
template <class F>
Submodule<F> syzygy(const FPModule<F>& m) {
    return kernel_of_cover(m, minimal_generators(m));
}

template <class F>
FPModule<F> nth_syzygy(const FPModule<F>& m, std::size_t n) {
    FPModule<F> cur = m;
    for (std::size_t i = 0; i < n && !cur.is_zero(); ++i) cur = syzygy(cur).module;
    return cur;
}

/// coker(P : R^cols -> R^rows).
template <class F>
FPModule<F> from_presentation(const RMatrix<F>& p) {
    const auto& ring = p.ring_ptr();
    auto act = free_action(ring, p.rows());
    auto w = closure(ring->field(), p.rows() * ring->dim(), ring->num_vars(), p.column_vectors(), act);
    return quotient_by(ring, std::move(w), act).module;
}

/// Pivots away unit entries (first unit in row-major order each round)
/// until every entry lies in m. The cokernel is unchanged up to isomorphism.
template <class F>
RMatrix<F> minimalize_presentation(RMatrix<F> p) {
    const auto& ring = p.ring();
    while (true) {
        std::size_t pr = p.rows(), pc = p.cols();
        for (std::size_t r = 0; r < p.rows() && pr == p.rows(); ++r)
            for (std::size_t c = 0; c < p.cols(); ++c)
                if (ring.is_unit(p.at(r, c))) {
                    pr = r;
                    pc = c;
                    break;
                }
        if (pr == p.rows()) return p;
        auto uinv = ring.inverse(p.at(pr, pc));
        // column operations clear row pr outside the pivot column
        for (std::size_t c = 0; c < p.cols(); ++c) {
            if (c == pc || ring.is_zero(p.at(pr, c))) continue;
            auto f = ring.multiply(p.at(pr, c), uinv);
            for (std::size_t r = 0; r < p.rows(); ++r)
                p.at(r, c) = ring.sub(p.at(r, c), ring.multiply(f, p.at(r, pc)));
        }
        RMatrix<F> q(p.ring_ptr(), p.rows() - 1, p.cols() - 1);
        for (std::size_t r = 0, qr = 0; r < p.rows(); ++r) {
            if (r == pr) continue;
            for (std::size_t c = 0, qc = 0; c < p.cols(); ++c) {
                if (c == pc) continue;
                q.at(qr, qc++) = p.at(r, c);
            }
            ++qr;
        }
        p = std::move(q);
    }
}

/// Number of copies of k split off M: dim soc(M) / (soc(M) ∩ mM).
template <class F>
std::size_t k_summand_multiplicity(const FPModule<F>& m) {
    auto s = socle(m);
    return s.dim() - s.intersection_dim(radical(m));
}

/// Splits off k-summands one at a time: pick z in soc(M) outside mM, complete
/// it to a minimal generating set, and keep the submodule generated by the
/// other generators. Returns the count and the remainder.
template <class F>
std::pair<std::size_t, FPModule<F>> strip_k_summands(const FPModule<F>& m) {
    std::size_t count = 0;
    FPModule<F> cur = m;
    while (!cur.is_zero()) {
        auto s = socle(cur);
        auto rad = radical(cur);
        const Vec<F>* z = nullptr;
        for (const auto& v : s.basis())
            if (!rad.contains(v)) {
                z = &v;
                break;
            }
        if (!z) break;
        auto w = rad;
        w.insert(*z);
        std::vector<Vec<F>> others;
        for (auto q : w.complement()) {
            Vec<F> e(cur.dim(), cur.field().zero());
            e[q] = cur.field().one();
            others.push_back(std::move(e));
        }
        auto n = submodule_generated(cur, others);
        if (n.module.dim() + 1 != cur.dim()) throw std::logic_error("strip_k_summands: splitting did not drop exactly k");
        cur = std::move(n.module);
        ++count;
    }
    return {count, std::move(cur)};
}

/// k-linear dual with transposed actions; for Artinian R this is Hom_R(M, E).
template <class F>
FPModule<F> matlis_dual(const FPModule<F>& m) {
    std::vector<Matrix<F>> act;
    for (const auto& x : m.actions()) act.push_back(x.transpose());
    return FPModule<F>(m.ring_ptr(), m.dim(), std::move(act));
}

/// Ann_R(M) as a subspace of R.
template <class F>
Subspace<F> annihilator(const FPModule<F>& m) {
    const auto d = m.ring().dim(), n = m.dim();
    Matrix<F> a(m.field(), n * n, d);
    for (std::size_t c = 0; c < n; ++c) {
        Vec<F> e(n, m.field().zero());
        e[c] = m.field().one();
        auto imgs = m.monomial_images(e);
        for (std::size_t u = 0; u < d; ++u)
            for (std::size_t r = 0; r < n; ++r) a(c * n + r, u) = imgs[u][r];
    }
    return kernel_subspace(a);
}

template <class F>
FPModule<F> ideal_as_module(const AlgebraPtr<F>& ring, const std::vector<Vec<F>>& gens) {
    return submodule_generated(FPModule<F>(free_module(ring, 1)), gens).module;
}

template <class F>
std::vector<Vec<F>> ideal_generators(const AlgebraPtr<F>& ring, const MonomialIdeal& j) {
    std::vector<Vec<F>> gens;
    for (const auto& g : j.generators())
        if (ring->index_of(g)) gens.push_back(ring->monomial(g));
    return gens;
}

template <class F>
FPModule<F> maximal_ideal_module(const AlgebraPtr<F>& ring) {
    return ideal_as_module(ring, ideal_generators(ring, MonomialIdeal::maximal(ring->num_vars())));
}

/// R/J for J generated by the given ring elements.
template <class F>
FPModule<F> cyclic_module(const AlgebraPtr<F>& ring, const std::vector<Vec<F>>& gens) {
    RMatrix<F> p(ring, 1, gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) p.at(0, c) = gens[c];
    return from_presentation(p);
}

template <class F>
FPModule<F> cyclic_module(const AlgebraPtr<F>& ring, const MonomialIdeal& j) {
    return cyclic_module(ring, ideal_generators(ring, j));
}

/// coker(R --g--> R) = R/(g) for a zero-divisor pair f·g = 0; its syzygies
/// are (g), (0:g), ...
template <class F>
FPModule<F> zero_divisor_module(const AlgebraPtr<F>& ring, const Vec<F>& f, const Vec<F>& g) {
    if (!ring->is_zero(ring->multiply(f, g))) throw std::invalid_argument("zero_divisor_module: f*g != 0");
    return cyclic_module(ring, std::vector<Vec<F>>{g});
}

/// coker(R -> R^e, 1 -> (x_1, ..., x_e)^t); its second syzygy is soc(R).
template <class F>
FPModule<F> socle_syzygy_module(const AlgebraPtr<F>& ring) {
    RMatrix<F> p(ring, ring->num_vars(), 1);
    for (std::size_t i = 0; i < ring->num_vars(); ++i) p.at(i, 0) = ring->variable(i);
    return from_presentation(p);
}

}  // namespace artinian
