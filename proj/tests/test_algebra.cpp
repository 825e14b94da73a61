#include <gtest/gtest.h>

#include <numeric>

#include "helpers.hpp"

using namespace artinian;
using testing_helpers::ring_gf;
using testing_helpers::sample_ideals;

namespace {

const std::vector<std::string> XY{"x", "y"};

// Socle of a monomial quotient read off combinatorially: standard m with x_i m in I for all i.
std::vector<Monomial> monomial_socle(const MonomialIdeal& ideal) {
    std::vector<Monomial> out;
    for (const auto& m : ideal.standard_monomials()) {
        bool killed = true;
        for (std::size_t i = 0; i < ideal.num_vars(); ++i)
            if (!ideal.contains(m.times_variable(i))) killed = false;
        if (killed) out.push_back(m);
    }
    return out;
}

}  // namespace

TEST(BuildAlgebra, Examples) {
    auto r = ring_gf("(x^2)", {"x"});
    EXPECT_EQ(r->dim(), 2u);
    EXPECT_EQ(r->basis()[1], Monomial::variable(1, 0));
    EXPECT_EQ(ring_gf("(x^4,x^2*y,y^2)", XY)->dim(), 6u);
    EXPECT_EQ(ring_gf("(x,y)^3", XY)->dim(), 6u);
    EXPECT_TRUE(r->basis()[0].is_one());
}

TEST(BuildAlgebra, RejectsBadPresentations) {
    EXPECT_THROW(ring_gf("(x^2,x*y)", XY), std::domain_error);
    EXPECT_THROW(ring_gf("(x,y^2)", XY), std::invalid_argument);
}

TEST(BuildAlgebra, ProductTableIsMonomialProduct) {
    for (const auto& [text, vars] : sample_ideals()) {
        auto r = ring_gf(text, vars);
        const auto& b = r->basis();
        for (std::size_t u = 0; u < r->dim(); ++u)
            for (std::size_t v = 0; v < r->dim(); ++v) {
                auto p = b[u] * b[v];
                auto idx = r->product_index(u, v);
                if (r->ideal().contains(p)) EXPECT_EQ(idx, -1);
                else EXPECT_EQ(b[static_cast<std::size_t>(idx)], p);
            }
    }
}

TEST(BuildAlgebra, ActionsCommuteAndAreNilpotent) {
    for (const auto& [text, vars] : sample_ideals()) {
        auto r = ring_gf(text, vars);
        const auto ll = loewy_length(*r);
        for (std::size_t i = 0; i < r->num_vars(); ++i) {
            for (std::size_t j = 0; j < r->num_vars(); ++j)
                EXPECT_TRUE(r->action(i) * r->action(j) == r->action(j) * r->action(i));
            auto p = Matrix<PrimeField>::identity(r->field(), r->dim());
            for (std::size_t k = 0; k < ll; ++k) p = p * r->action(i);
            EXPECT_TRUE(p.is_zero()) << text;
        }
        EXPECT_EQ(socle(*r).dim(), type_of(*r));
        auto h = hilbert_function(*r);
        EXPECT_EQ(std::accumulate(h.begin(), h.end(), std::size_t{0}), r->dim());
    }
}

TEST(Socle, MatchesMonomialOracle) {
    for (const auto& [text, vars] : sample_ideals()) {
        auto r = ring_gf(text, vars);
        std::vector<Vec<PrimeField>> vecs;
        for (const auto& m : monomial_socle(r->ideal())) vecs.push_back(r->monomial(m));
        auto oracle = Subspace<PrimeField>::span(r->field(), r->dim(), vecs);
        EXPECT_TRUE(oracle.same_as(socle(*r))) << text;
    }
}

TEST(Socle, Examples) {
    EXPECT_EQ(type_of(*ring_gf("(x,y)^2", XY)), 2u);
    auto r = ring_gf("(x^4,x^2*y,y^2)", XY);
    auto s = socle(*r);
    EXPECT_EQ(s.dim(), 2u);
    EXPECT_TRUE(s.contains(r->monomial(Monomial({1, 1}))));
    EXPECT_TRUE(s.contains(r->monomial(Monomial({3, 0}))));
    for (unsigned n = 2; n <= 5; ++n) EXPECT_EQ(type_of(*ring_gf("(x,y)^" + std::to_string(n), XY)), n);
}

TEST(Invariants, TypeLoewyGorenstein) {
    auto a = ring_gf("(x^3)", {"x"});
    EXPECT_EQ(type_of(*a), 1u);
    EXPECT_EQ(loewy_length(*a), 3u);
    EXPECT_TRUE(is_gorenstein(*a));

    auto b = ring_gf("(x,y)^3", XY);
    EXPECT_EQ(type_of(*b), 3u);
    EXPECT_EQ(loewy_length(*b), 3u);
    EXPECT_FALSE(is_gorenstein(*b));

    auto c = ring_gf("(x^2,x*y,y^3)", XY);
    EXPECT_EQ(type_of(*c), 2u);
    EXPECT_EQ(loewy_length(*c), 3u);
    EXPECT_TRUE(socle(*c).contains(c->variable(0)));
    EXPECT_TRUE(socle(*c).contains(c->monomial(Monomial({0, 2}))));
}

TEST(Invariants, SocOutsideMsq) {
    EXPECT_TRUE(soc_outside_msq(*ring_gf("(x^2,x*y,y^3)", XY)));
    EXPECT_FALSE(soc_outside_msq(*ring_gf("(x^4,x^2*y,y^2)", XY)));
    EXPECT_TRUE(soc_outside_msq(*ring_gf("(x,y)^2", XY)));
    for (const auto& [text, vars] : sample_ideals()) {
        auto r = ring_gf(text, vars);
        bool oracle = false;
        for (const auto& m : monomial_socle(r->ideal())) oracle = oracle || m.degree() == 1;
        EXPECT_EQ(soc_outside_msq(*r), oracle) << text;
    }
}

TEST(Invariants, TypeOfMaximalIdealPowers) {
    for (std::size_t e = 1; e <= 4; ++e)
        for (unsigned n = 2; n <= 4; ++n) {
            if (e == 1 && n < 2) continue;
            auto r = build_algebra(PrimeField(), MonomialIdeal::maximal_power(e, n));
            EXPECT_EQ(type_of(*r), binomial(e + n - 2, n - 1)) << e << "," << n;
        }
}

TEST(Burch, Examples) {
    EXPECT_EQ(burch_index(*ring_gf("(x^4)", {"x"})), 1u);
    EXPECT_EQ(burch_index(*ring_gf("(x^2,x*y,y^3)", XY)), 2u);
    // hand computation: I : n = n, I n : n = n^3 : n = n^2
    auto n = MonomialIdeal::maximal(2);
    auto i = n.power(2);
    EXPECT_EQ(i.colon(n), n);
    EXPECT_EQ((i * n).colon(n), n.power(2));
    EXPECT_EQ(burch_index(*ring_gf("(x,y)^2", XY)), 2u);
}

TEST(Burch, EqualsEdimWhenSocleLeavesMsq) {
    for (const auto& [text, vars] : sample_ideals()) {
        auto r = ring_gf(text, vars);
        if (soc_outside_msq(*r)) { EXPECT_EQ(burch_index(*r), embedding_dimension(*r)) << text; }
        EXPECT_LE(burch_index(*r), embedding_dimension(*r));
    }
}

TEST(Algebra, ElementArithmetic) {
    auto r = ring_gf("(x^2,x*y,y^3)", XY);
    auto x = r->variable(0), y = r->variable(1);
    EXPECT_TRUE(r->is_zero(r->multiply(x, y)));
    auto y2 = r->multiply(y, y);
    EXPECT_EQ(r->to_string(y2), "y^2");
    auto u = r->add(r->one(), y);
    EXPECT_TRUE(r->is_unit(u));
    EXPECT_EQ(r->multiply(u, r->inverse(u)), r->one());
}
