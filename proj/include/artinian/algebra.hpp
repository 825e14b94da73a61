#pragma once

// R = k[x_1..x_e]/I for a monomial ideal I primary to the maximal ideal,
// realized on its standard-monomial basis, with the ring-level invariants.

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "monomial.hpp"

namespace artinian {

inline std::vector<std::string> default_variable_names(std::size_t e) {
    static const char* few[] = {"x", "y", "z", "w"};
    std::vector<std::string> names;
    for (std::size_t i = 0; i < e; ++i) names.push_back(e <= 4 ? few[i] : "x" + std::to_string(i + 1));
    return names;
}

template <class F>
class ArtinianAlgebra {
public:
    using Element = typename F::Element;
    using RElem = Vec<F>;  // coefficients on the standard-monomial basis

    /// Throws std::domain_error for a non-Artinian ideal and
    /// std::invalid_argument for a generator of degree < 2.
    ArtinianAlgebra(F field, MonomialIdeal ideal, std::vector<std::string> names = {})
        : field_(std::move(field)), ideal_(std::move(ideal)), names_(std::move(names)) {
        const auto e = ideal_.num_vars();
        if (e == 0) throw std::invalid_argument("ArtinianAlgebra: need at least one variable");
        if (names_.empty()) names_ = default_variable_names(e);
        if (names_.size() != e) throw std::invalid_argument("ArtinianAlgebra: variable name count mismatch");
        for (const auto& g : ideal_.generators())
            if (g.degree() < 2)
                throw std::invalid_argument("ArtinianAlgebra: generator " + g.to_string(names_) +
                                            " has degree < 2; the presentation must satisfy I ⊆ n^2");
        if (!ideal_.is_artinian())
            throw std::domain_error("ArtinianAlgebra: " + ideal_.to_string(names_) + " is not primary to the maximal ideal");
        basis_ = ideal_.standard_monomials();
        for (std::size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;

        const auto d = basis_.size();
        product_.assign(d * d, -1);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t b = 0; b < d; ++b)
                if (auto it = index_.find(basis_[a] * basis_[b]); it != index_.end())
                    product_[a * d + b] = static_cast<long>(it->second);

        var_index_.assign(e, -1);
        for (std::size_t i = 0; i < e; ++i) {
            var_index_[i] = static_cast<long>(index_.at(Monomial::variable(e, i)));
            Matrix<F> x(field_, d, d);
            for (std::size_t u = 0; u < d; ++u)
                if (auto w = product_[static_cast<std::size_t>(var_index_[i]) * d + u]; w >= 0)
                    x(static_cast<std::size_t>(w), u) = field_.one();
            action_.push_back(std::move(x));
        }

        // every u != 1 is x_i * parent with i the first variable dividing u
        parent_.assign(d, 0);
        parent_var_.assign(d, 0);
        for (std::size_t u = 1; u < d; ++u) {
            auto i = basis_[u].min_index();
            parent_var_[u] = i;
            parent_[u] = index_.at(*basis_[u].divide(Monomial::variable(e, i)));
        }
    }

    static std::shared_ptr<const ArtinianAlgebra> make(F field, MonomialIdeal ideal, std::vector<std::string> names = {}) {
        return std::make_shared<const ArtinianAlgebra>(std::move(field), std::move(ideal), std::move(names));
    }

    const F& field() const { return field_; }
    const MonomialIdeal& ideal() const { return ideal_; }
    std::size_t num_vars() const { return ideal_.num_vars(); }
    const std::vector<std::string>& variable_names() const { return names_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Monomial>& basis() const { return basis_; }
    const Matrix<F>& action(std::size_t i) const { return action_.at(i); }

    std::optional<std::size_t> index_of(const Monomial& m) const {
        if (auto it = index_.find(m); it != index_.end()) return it->second;
        return std::nullopt;
    }
    /// Basis index of basis[a]*basis[b], or -1 when the product lies in I.
    long product_index(std::size_t a, std::size_t b) const { return product_[a * dim() + b]; }
    std::size_t variable_index(std::size_t i) const { return static_cast<std::size_t>(var_index_.at(i)); }
    std::size_t parent(std::size_t u) const { return parent_[u]; }
    std::size_t parent_variable(std::size_t u) const { return parent_var_[u]; }

    RElem zero() const { return RElem(dim(), field_.zero()); }
    RElem one() const {
        RElem r = zero();
        r[0] = field_.one();
        return r;
    }
    RElem monomial(const Monomial& m, const Element& c) const {
        RElem r = zero();
        if (auto i = index_of(m)) r[*i] = c;
        return r;
    }
    RElem monomial(const Monomial& m) const { return monomial(m, field_.one()); }
    RElem variable(std::size_t i) const { return monomial(Monomial::variable(num_vars(), i)); }

    RElem add(const RElem& a, const RElem& b) const {
        RElem r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.add(r[i], b[i]);
        return r;
    }
    RElem sub(const RElem& a, const RElem& b) const {
        RElem r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(r[i], b[i]);
        return r;
    }
    RElem scale(const RElem& a, const Element& c) const {
        RElem r = a;
        scale_in_place(field_, r, c);
        return r;
    }
    RElem multiply(const RElem& a, const RElem& b) const {
        const auto d = dim();
        RElem r = zero();
        for (std::size_t u = 0; u < d; ++u) {
            if (field_.is_zero(a[u])) continue;
            for (std::size_t v = 0; v < d; ++v) {
                if (field_.is_zero(b[v])) continue;
                if (auto w = product_[u * d + v]; w >= 0)
                    r[static_cast<std::size_t>(w)] = field_.add(r[static_cast<std::size_t>(w)], field_.mul(a[u], b[v]));
            }
        }
        return r;
    }
    bool is_zero(const RElem& a) const { return is_zero_vector(field_, a); }
    bool is_unit(const RElem& a) const { return !field_.is_zero(a[0]); }
    bool in_maximal_ideal(const RElem& a) const { return field_.is_zero(a[0]); }

    /// Inverse of a unit c(1 - n) as c^{-1}(1 + n + n^2 + ...), n nilpotent.
    RElem inverse(const RElem& a) const {
        if (!is_unit(a)) throw std::domain_error("ArtinianAlgebra::inverse: element is not a unit");
        auto cinv = field_.inv(a[0]);
        RElem n = sub(one(), scale(a, cinv));
        RElem sum = one(), power = one();
        for (std::size_t k = 1; k < dim(); ++k) {
            power = multiply(power, n);
            if (is_zero(power)) break;
            sum = add(sum, power);
        }
        return scale(sum, cinv);
    }

    std::string to_string(const RElem& a) const {
        std::string out;
        for (std::size_t u = 0; u < dim(); ++u) {
            if (field_.is_zero(a[u])) continue;
            std::string c = field_.to_string(a[u]);
            bool negative = !c.empty() && c[0] == '-';
            if (negative) c = c.substr(1);
            std::string term;
            if (basis_[u].is_one()) term = c;
            else if (c == "1") term = basis_[u].to_string(names_);
            else term = c + "*" + basis_[u].to_string(names_);
            if (out.empty()) out = negative ? "-" + term : term;
            else out += (negative ? "-" : "+") + term;
        }
        return out.empty() ? "0" : out;
    }

    std::string to_string() const {
        std::string vars;
        for (std::size_t i = 0; i < names_.size(); ++i) vars += (i ? "," : "") + names_[i];
        return field_.name() + "[" + vars + "]/" + ideal_.to_string(names_);
    }

private:
    F field_;
    MonomialIdeal ideal_;
    std::vector<std::string> names_;
    std::vector<Monomial> basis_;
    std::map<Monomial, std::size_t> index_;
    std::vector<long> product_;
    std::vector<long> var_index_;
    std::vector<Matrix<F>> action_;
    std::vector<std::size_t> parent_, parent_var_;
};

template <class F>
using AlgebraPtr = std::shared_ptr<const ArtinianAlgebra<F>>;

template <class F>
AlgebraPtr<F> build_algebra(F field, MonomialIdeal ideal, std::vector<std::string> names = {}) {
    return ArtinianAlgebra<F>::make(std::move(field), std::move(ideal), std::move(names));
}

/// Joint kernel of the variable actions: {r : x_i r = 0 for all i}.
template <class F>
Subspace<F> socle(const ArtinianAlgebra<F>& ring) {
    const auto d = ring.dim(), e = ring.num_vars();
    Matrix<F> stacked(ring.field(), e * d, d);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t r = 0; r < d; ++r)
            for (std::size_t c = 0; c < d; ++c) stacked(i * d + r, c) = ring.action(i)(r, c);
    return Subspace<F>::span(ring.field(), d, kernel_vectors(stacked));
}

template <class F>
std::size_t type_of(const ArtinianAlgebra<F>& ring) {
    return socle(ring).dim();
}

/// Least t with m^t = 0. For a monomial quotient m^t is spanned by the
/// standard monomials of degree >= t.
template <class F>
std::size_t loewy_length(const ArtinianAlgebra<F>& ring) {
    return ring.basis().back().degree() + 1;
}

template <class F>
std::size_t embedding_dimension(const ArtinianAlgebra<F>& ring) {
    return ring.num_vars();
}

template <class F>
bool is_gorenstein(const ArtinianAlgebra<F>& ring) {
    return type_of(ring) == 1;
}

/// dim_k m^t / m^{t+1} for t = 0 .. loewy_length - 1.
template <class F>
std::vector<std::size_t> hilbert_function(const ArtinianAlgebra<F>& ring) {
    std::vector<std::size_t> h(loewy_length(ring), 0);
    for (const auto& m : ring.basis()) ++h[m.degree()];
    return h;
}

/// soc(R) ⊄ m^2: some socle vector has a nonzero linear coefficient.
template <class F>
bool soc_outside_msq(const ArtinianAlgebra<F>& ring) {
    auto s = socle(ring);
    for (const auto& v : s.basis())
        for (std::size_t u = 0; u < ring.dim(); ++u)
            if (ring.basis()[u].degree() == 1 && !ring.field().is_zero(v[u])) return true;
    return false;
}

/// The colon ideal (I n :_S (I :_S n)) in the polynomial ring.
inline MonomialIdeal burch_colon(const MonomialIdeal& ideal) {
    auto n = MonomialIdeal::maximal(ideal.num_vars());
    return (ideal * n).colon(ideal.colon(n));
}

/// dim_k n / (I n :_S (I :_S n)), computed entirely in S.
inline std::size_t burch_index(const MonomialIdeal& ideal) {
    auto n = MonomialIdeal::maximal(ideal.num_vars());
    return k_dim_between(burch_colon(ideal).intersect(n), n);
}

template <class F>
std::size_t burch_index(const ArtinianAlgebra<F>& ring) {
    return burch_index(ring.ideal());
}

}  // namespace artinian
