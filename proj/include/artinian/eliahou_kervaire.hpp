#pragma once

// The Eliahou-Kervaire resolution of S/n^n over S = k[x_1..x_e].
//
// Position i of the complex is free on labels (f; j_1 < ... < j_i) with
// deg f = n and j_i < max(f); position 0 maps onto n^n ⊆ S. The differential
// is ∂ = d - δ with
//   d(f; J) = Σ_l (-1)^l x_{j_l} (f; J \ j_l)
//   δ(f; J) = Σ_l (-1)^l (f x_{j_l} / b(f x_{j_l})) (b(f x_{j_l}); J \ j_l)
// where l runs 1..i, b(g) is the product of the n smallest-index factors of
// g, and δ-terms on invalid labels vanish.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "module.hpp"

namespace artinian {

struct EKLabel {
    Monomial f;
    std::vector<std::size_t> indices;  // 0-based, strictly increasing

    std::size_t position() const { return indices.size(); }
    /// Internal degree deg f + i.
    std::size_t internal_degree() const { return f.degree() + indices.size(); }

    std::string to_string(const std::vector<std::string>& names) const {
        std::string s = "(" + f.to_string(names) + ";";
        for (std::size_t t = 0; t < indices.size(); ++t) s += (t ? "," : "") + std::to_string(indices[t] + 1);
        return s + ")";
    }

    bool operator==(const EKLabel&) const = default;
};

/// Monomials first (in GradedOrder), then index lists lexicographically.
inline bool ek_label_less(const EKLabel& a, const EKLabel& b) {
    if (a.f != b.f) return GradedOrder{}(a.f, b.f);
    return a.indices < b.indices;
}

inline bool ek_label_valid(const EKLabel& l) {
    if (l.indices.empty()) return true;
    return l.indices.back() < l.f.max_index();
}

inline void check_ek_parameters(std::size_t e, std::size_t n) {
    if (e < 2) throw std::invalid_argument("Eliahou-Kervaire: need e >= 2 variables");
    if (n < 2) throw std::invalid_argument("Eliahou-Kervaire: need n >= 2");
}

inline std::vector<EKLabel> ek_basis(std::size_t e, std::size_t n, std::size_t position) {
    check_ek_parameters(e, n);
    if (position >= e) throw std::out_of_range("ek_basis: position must be < e");
    std::vector<EKLabel> out;
    for (const auto& f : monomials_of_degree(e, static_cast<unsigned>(n))) {
        const auto top = f.max_index();
        if (position > top) continue;
        // index subsets of {0..top-1} of the given size, lexicographically
        std::vector<std::size_t> idx(position);
        for (std::size_t t = 0; t < position; ++t) idx[t] = t;
        while (true) {
            out.push_back({f, idx});
            std::size_t t = position;
            while (t > 0 && idx[t - 1] == top - position + t - 1) --t;
            if (t == 0) break;
            ++idx[t - 1];
            for (std::size_t u = t; u < position; ++u) idx[u] = idx[u - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), ek_label_less);
    return out;
}

/// f = b·g with deg b = n and max(b) <= min(g).
inline std::pair<Monomial, Monomial> ek_decompose(const Monomial& f, std::size_t n) {
    if (f.degree() < n) throw std::invalid_argument("ek_decompose: degree of f is below n");
    Monomial b(f.num_vars());
    std::size_t left = n;
    std::vector<unsigned> be(f.num_vars(), 0);
    for (std::size_t i = 0; i < f.num_vars() && left > 0; ++i) {
        auto take = std::min<std::size_t>(left, f[i]);
        be[i] = static_cast<unsigned>(take);
        left -= take;
    }
    b = Monomial(be);
    return {b, *f.divide(b)};
}

/// Integer polynomial in S, the entry type of EK matrices.
struct IntPolynomial {
    std::map<Monomial, long long> terms;

    bool is_zero() const { return terms.empty(); }
    void add(const Monomial& m, long long c) {
        auto& slot = terms[m];
        slot += c;
        if (slot == 0) terms.erase(m);
    }
    IntPolynomial operator*(const IntPolynomial& o) const {
        IntPolynomial r;
        for (const auto& [a, ca] : terms)
            for (const auto& [b, cb] : o.terms) r.add(a * b, ca * cb);
        return r;
    }
    IntPolynomial& operator+=(const IntPolynomial& o) {
        for (const auto& [m, c] : o.terms) add(m, c);
        return *this;
    }
    /// Every term has degree <= 1.
    bool is_linear() const {
        for (const auto& [m, c] : terms)
            if (m.degree() > 1) return false;
        return true;
    }
    std::string to_string(const std::vector<std::string>& names) const {
        if (terms.empty()) return "0";
        std::string out;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            auto [m, c] = *it;
            std::string mag = std::to_string(c < 0 ? -c : c);
            std::string term = m.is_one() ? mag : (mag == "1" ? m.to_string(names) : mag + "*" + m.to_string(names));
            if (out.empty()) out = (c < 0 ? "-" : "") + term;
            else out += (c < 0 ? "-" : "+") + term;
        }
        return out;
    }
};

/// Dense matrix over S with integer coefficients.
struct SMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<IntPolynomial> entries;

    SMatrix() = default;
    SMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}
    IntPolynomial& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const IntPolynomial& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }

    SMatrix operator*(const SMatrix& b) const {
        if (cols != b.rows) throw std::invalid_argument("SMatrix::operator*: shape mismatch");
        SMatrix out(rows, b.cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t k = 0; k < cols; ++k) {
                if (at(r, k).is_zero()) continue;
                for (std::size_t c = 0; c < b.cols; ++c)
                    if (!b.at(k, c).is_zero()) out.at(r, c) += at(r, k) * b.at(k, c);
            }
        return out;
    }
    bool is_zero() const {
        for (const auto& p : entries)
            if (!p.is_zero()) return false;
        return true;
    }
    std::string to_string(const std::vector<std::string>& names) const {
        std::string out;
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) out += (c ? "\t" : "") + at(r, c).to_string(names);
            out += '\n';
        }
        return out;
    }
};

/// The labeled complex. maps[0] is the 1 x |labels[0]| row (f;) -> f into S;
/// maps[i] for i >= 1 is |labels[i-1]| x |labels[i]|.
struct EKComplex {
    std::size_t e = 0, n = 0;
    std::vector<std::vector<EKLabel>> labels;
    std::vector<SMatrix> maps;

    std::vector<std::size_t> ranks() const {
        std::vector<std::size_t> r;
        for (const auto& l : labels) r.push_back(l.size());
        return r;
    }
    const SMatrix& top() const { return maps.back(); }
};

inline std::size_t label_index(const std::vector<EKLabel>& labels, const EKLabel& l) {
    auto it = std::lower_bound(labels.begin(), labels.end(), l, ek_label_less);
    if (it == labels.end() || !(*it == l)) throw std::logic_error("Eliahou-Kervaire: label " + l.to_string({}) + " missing");
    return static_cast<std::size_t>(it - labels.begin());
}

inline EKComplex ek_differential(std::size_t e, std::size_t n) {
    check_ek_parameters(e, n);
    EKComplex c;
    c.e = e;
    c.n = n;
    for (std::size_t i = 0; i < e; ++i) c.labels.push_back(ek_basis(e, n, i));

    SMatrix aug(1, c.labels[0].size());
    for (std::size_t t = 0; t < c.labels[0].size(); ++t) aug.at(0, t).add(c.labels[0][t].f, 1);
    c.maps.push_back(std::move(aug));

    for (std::size_t i = 1; i < e; ++i) {
        const auto& src = c.labels[i];
        const auto& dst = c.labels[i - 1];
        SMatrix m(dst.size(), src.size());
        for (std::size_t col = 0; col < src.size(); ++col) {
            const auto& [f, idx] = src[col];
            for (std::size_t l = 0; l < idx.size(); ++l) {
                const long long sign = (l % 2 == 0) ? -1 : 1;  // (-1)^(l+1) with 1-based l
                std::vector<std::size_t> rest = idx;
                rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(l));
                const auto xj = Monomial::variable(e, idx[l]);
                m.at(label_index(dst, {f, rest}), col).add(xj, sign);
                auto [b, g] = ek_decompose(f * xj, n);
                EKLabel target{b, rest};
                if (ek_label_valid(target)) m.at(label_index(dst, target), col).add(g, -sign);
            }
        }
        c.maps.push_back(std::move(m));
    }
    return c;
}

/// ∂ ∘ ∂ = 0 symbolically over the integers.
inline bool ek_squares_to_zero(const EKComplex& c) {
    for (std::size_t i = 0; i + 1 < c.maps.size(); ++i)
        if (!(c.maps[i] * c.maps[i + 1]).is_zero()) return false;
    return true;
}

/// Generators sit in internal degree n + i at position i.
inline std::size_t ek_generator_degree(const EKComplex& c, std::size_t position) { return c.n + position; }

/// Degree-d strand of maps[i]: rows are (target label) x (monomial), columns
/// (source label) x (monomial), evaluated over the field F.
template <class F>
Matrix<F> ek_strand(const EKComplex& c, std::size_t i, std::size_t d, const F& field = F()) {
    const auto& m = c.maps[i];
    const std::size_t src_deg = c.n + i;
    const std::size_t dst_deg = i == 0 ? 0 : c.n + i - 1;
    if (d < src_deg) return Matrix<F>(field, 0, 0);
    auto src_mons = monomials_of_degree(c.e, static_cast<unsigned>(d - src_deg));
    auto dst_mons = monomials_of_degree(c.e, static_cast<unsigned>(d - dst_deg));
    std::map<Monomial, std::size_t> dst_index;
    for (std::size_t t = 0; t < dst_mons.size(); ++t) dst_index[dst_mons[t]] = t;
    Matrix<F> out(field, m.rows * dst_mons.size(), m.cols * src_mons.size());
    for (std::size_t col = 0; col < m.cols; ++col)
        for (std::size_t s = 0; s < src_mons.size(); ++s)
            for (std::size_t row = 0; row < m.rows; ++row)
                for (const auto& [mon, coeff] : m.at(row, col).terms) {
                    auto t = dst_index.at(mon * src_mons[s]);
                    auto& slot = out(row * dst_mons.size() + t, col * src_mons.size() + s);
                    slot = field.add(slot, field.from_int(coeff));
                }
    return out;
}

struct ExactnessReport {
    bool exact = true;
    std::vector<std::string> failures;
};

/// Every strand of degree <= degree_bound is exact at each position, the
/// top map is injective, and the cokernel at S has dimension dim (S/n^n)_d.
template <class F>
ExactnessReport verify_ek_exactness(const EKComplex& c, std::size_t degree_bound, const F& field = F()) {
    ExactnessReport rep;
    auto fail = [&](std::string msg) {
        rep.exact = false;
        rep.failures.push_back(std::move(msg));
    };
    const auto e = c.e;
    for (std::size_t d = 0; d <= degree_bound; ++d) {
        std::vector<std::size_t> rk(c.maps.size(), 0), dims(c.maps.size(), 0);
        for (std::size_t i = 0; i < c.maps.size(); ++i) {
            auto strand = ek_strand(c, i, d, field);
            rk[i] = rank(strand);
            dims[i] = d >= c.n + i ? c.labels[i].size() * monomials_of_degree(e, static_cast<unsigned>(d - c.n - i)).size() : 0;
        }
        const auto s_d = monomials_of_degree(e, static_cast<unsigned>(d)).size();
        const auto quotient_d = d < c.n ? s_d : 0;
        if (s_d - rk[0] != quotient_d)
            fail("degree " + std::to_string(d) + ": homology at S has dimension " + std::to_string(s_d - rk[0]));
        for (std::size_t i = 0; i < c.maps.size(); ++i) {
            const auto kernel = dims[i] - rk[i];
            const auto image = i + 1 < c.maps.size() ? rk[i + 1] : 0;
            if (kernel != image)
                fail("degree " + std::to_string(d) + ": homology at position " + std::to_string(i) + " has dimension " +
                     std::to_string(kernel - std::min(kernel, image)));
        }
    }
    return rep;
}

template <class F>
ExactnessReport verify_ek_exactness(std::size_t e, std::size_t n, std::size_t degree_bound, const F& field = F()) {
    return verify_ek_exactness(ek_differential(e, n), degree_bound, field);
}

/// Rows selecting a maximal square lower-triangular submatrix of the top map.
struct TriangularWitness {
    bool found = false;
    bool rows_in_label_order = false;  // selected rows increase with the column
    bool columns_reversed = false;     // columns taken in reverse label order
    std::vector<std::size_t> columns;  // column order used
    std::vector<std::size_t> rows;     // rows[s] pairs with columns[s]
};

/// Row r may pair with the s-th column when it is nonzero there and zero on
/// every later column. Tries increasing rows greedily, then a matching.
inline TriangularWitness triangular_submatrix_witness(const EKComplex& c) {
    const auto& a = c.top();
    for (bool reversed : {false, true}) {
        std::vector<std::size_t> cols(a.cols);
        for (std::size_t t = 0; t < a.cols; ++t) cols[t] = reversed ? a.cols - 1 - t : t;
        std::vector<std::vector<std::size_t>> cand(a.cols);
        for (std::size_t s = 0; s < a.cols; ++s)
            for (std::size_t r = 0; r < a.rows; ++r) {
                if (a.at(r, cols[s]).is_zero()) continue;
                bool ok = true;
                for (std::size_t t = s + 1; t < a.cols && ok; ++t)
                    if (!a.at(r, cols[t]).is_zero()) ok = false;
                if (ok) cand[s].push_back(r);
            }
        TriangularWitness w;
        w.columns = cols;
        w.columns_reversed = reversed;
        // greedy increasing choice is optimal for the order-preserving variant
        std::optional<std::size_t> prev;
        bool greedy = true;
        for (std::size_t s = 0; s < a.cols && greedy; ++s) {
            auto it = std::find_if(cand[s].begin(), cand[s].end(), [&](std::size_t r) { return !prev || r > *prev; });
            if (it == cand[s].end()) greedy = false;
            else {
                w.rows.push_back(*it);
                prev = *it;
            }
        }
        if (greedy) {
            w.found = w.rows_in_label_order = true;
            return w;
        }
        // bipartite matching, rows may come in any order
        std::vector<long> owner(a.rows, -1);
        std::function<bool(std::size_t, std::vector<bool>&)> augment = [&](std::size_t s, std::vector<bool>& seen) {
            for (auto r : cand[s]) {
                if (seen[r]) continue;
                seen[r] = true;
                if (owner[r] < 0 || augment(static_cast<std::size_t>(owner[r]), seen)) {
                    owner[r] = static_cast<long>(s);
                    return true;
                }
            }
            return false;
        };
        bool all = true;
        for (std::size_t s = 0; s < a.cols && all; ++s) {
            std::vector<bool> seen(a.rows, false);
            all = augment(s, seen);
        }
        if (all) {
            w.rows.assign(a.cols, 0);
            for (std::size_t r = 0; r < a.rows; ++r)
                if (owner[r] >= 0) w.rows[static_cast<std::size_t>(owner[r])] = r;
            w.found = true;
            return w;
        }
    }
    return {};
}

/// The top map reduced to R = S/n^n as a matrix over R.
template <class F>
RMatrix<F> ek_top_over_quotient(const EKComplex& c, const AlgebraPtr<F>& ring) {
    const auto& a = c.top();
    RMatrix<F> out(ring, a.rows, a.cols);
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t col = 0; col < a.cols; ++col)
            for (const auto& [mon, coeff] : a.at(r, col).terms)
                out.at(r, col) = ring->add(out.at(r, col), ring->monomial(mon, ring->field().from_int(coeff)));
    return out;
}

struct KernelClaimReport {
    std::size_t kernel_dim = 0;
    std::size_t expected_dim = 0;  // columns * type(R)
    bool kernel_in_socle = false;
    bool holds() const { return kernel_in_socle && kernel_dim == expected_dim; }
};

/// ker(Ā) = (0 :_R m) F̄ over R = S/n^n.
template <class F>
KernelClaimReport ek_kernel_claim(const EKComplex& c, const F& field = F()) {
    auto ring = build_algebra(field, MonomialIdeal::maximal_power(c.e, static_cast<unsigned>(c.n)));
    auto abar = ek_top_over_quotient(c, ring);
    auto ker = kernel_subspace(abar.linearize());
    KernelClaimReport rep;
    rep.kernel_dim = ker.dim();
    auto soc = socle(*ring);
    rep.expected_dim = abar.cols() * soc.dim();
    const auto dr = ring->dim();
    rep.kernel_in_socle = true;
    for (const auto& v : ker.basis())
        for (std::size_t j = 0; j < abar.cols(); ++j)
            if (!soc.contains(Vec<F>(v.begin() + static_cast<std::ptrdiff_t>(j * dr), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * dr))))
                rep.kernel_in_socle = false;
    return rep;
}

}  // namespace artinian
