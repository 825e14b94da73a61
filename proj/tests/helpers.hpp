#pragma once

#include <random>
#include <string>
#include <vector>

#include "artinian/artinian.hpp"

namespace testing_helpers {

using namespace artinian;

inline AlgebraPtr<PrimeField> ring_gf(const std::string& ideal, const std::vector<std::string>& vars,
                                      std::uint32_t p = 32003) {
    return build_algebra(PrimeField(p), parse_ideal(ideal, vars), vars);
}

inline AlgebraPtr<RationalField> ring_qq(const std::string& ideal, const std::vector<std::string>& vars) {
    return build_algebra(RationalField(), parse_ideal(ideal, vars), vars);
}

template <class F>
Matrix<F> random_matrix(const F& field, std::size_t r, std::size_t c, std::mt19937_64& rng, int density_percent = 60) {
    Matrix<F> a(field, r, c);
    std::uniform_int_distribution<int> pct(0, 99);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (pct(rng) < density_percent) a(i, j) = field.random(rng);
    return a;
}

/// Monomials with exponent vector componentwise below `bound`.
inline std::vector<Monomial> box(const std::vector<unsigned>& bound) {
    std::vector<Monomial> out;
    std::vector<unsigned> cur(bound.size(), 0);
    while (true) {
        out.emplace_back(cur);
        std::size_t i = 0;
        while (i < cur.size() && ++cur[i] == bound[i]) cur[i++] = 0;
        if (i == cur.size()) break;
    }
    return out;
}

/// Monomials of S outside I, found by scanning the box cut out by the pure powers.
inline std::vector<Monomial> brute_standard_monomials(const MonomialIdeal& ideal) {
    std::vector<unsigned> bound;
    for (std::size_t i = 0; i < ideal.num_vars(); ++i) bound.push_back(*ideal.pure_power(i));
    std::vector<Monomial> out;
    for (const auto& m : box(bound))
        if (!ideal.contains(m)) out.push_back(m);
    return out;
}

/// All ideals used as a shared sample of Artinian rings in two and three variables.
inline std::vector<std::pair<std::string, std::vector<std::string>>> sample_ideals() {
    std::vector<std::string> xy{"x", "y"}, xyz{"x", "y", "z"};
    return {{"(x^2)", {"x"}},
            {"(x^3)", {"x"}},
            {"(x^4)", {"x"}},
            {"(x,y)^2", xy},
            {"(x,y)^3", xy},
            {"(x^2,x*y,y^3)", xy},
            {"(x^2,x*y,y^4)", xy},
            {"(x^4,x^2*y,y^2)", xy},
            {"(x^4,x^2*y^2,y^4)", xy},
            {"(x^2,y^2)", xy},
            {"(x^3,x*y,y^3)", xy},
            {"(x,y,z)^2", xyz},
            {"(x^2,y^2,z^2)", xyz}};
}

}  // namespace testing_helpers
