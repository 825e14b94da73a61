#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "helpers.hpp"

using namespace artinian;

namespace {

std::size_t error_position(const std::string& text) {
    try {
        parse_ring(text);
    } catch (const ParseError& e) {
        return e.position();
    }
    return std::string::npos;
}

}  // namespace

TEST(ParseRing, Literals) {
    auto r = parse_ring("GF(2)[x,y,z]/(x,y^2,z^3)^2");
    EXPECT_EQ(r.field, (FieldSpec{false, 2}));
    EXPECT_EQ(r.variables, (std::vector<std::string>{"x", "y", "z"}));
    auto gens = parse_ideal("(x^2,x*y^2,x*z^3,y^4,y^2*z^3,z^6)", r.variables);
    EXPECT_EQ(r.ideal, gens);

    auto q = parse_ring("QQ[x,y]/(x,y)^3");
    EXPECT_TRUE(q.field.rational);
    EXPECT_EQ(q.ideal, MonomialIdeal::maximal_power(2, 3));

    auto k = parse_ring(" k [ a , b ] / ( a^2 , a*b , b^3 ) ");
    EXPECT_EQ(k.field.characteristic, 32003u);
    EXPECT_EQ(k.ideal.generators().size(), 3u);

    EXPECT_EQ(parse_ring("QQ[x,y]/(x^2,x*y)+(y^3)").ideal, parse_ideal("(x^2,x*y,y^3)", {"x", "y"}));
    EXPECT_EQ(parse_ring("QQ[x,y]/(x,y)*(x,y^2)").ideal, parse_ideal("(x^2,x*y,y^3)", {"x", "y"}));
}

TEST(ParseRing, ErrorPositions) {
    // a non-monomial generator is reported where it starts
    EXPECT_EQ(error_position("QQ[x,y]/(x^2,x+y)"), 13u);
    EXPECT_EQ(error_position("QQ[x,y]/(x^2,w)"), 13u);
    EXPECT_EQ(error_position("QQ[x,x]/(x^2)"), 5u);
    EXPECT_EQ(error_position("GF(4)[x]/(x^2)"), 3u);
    EXPECT_EQ(error_position("ZZ[x]/(x^2)"), 0u);
    EXPECT_EQ(error_position("QQ[x]/(x^2) junk"), 12u);
    EXPECT_EQ(error_position("QQ[x]/(x^2"), 10u);
    EXPECT_THROW(parse_ring("QQ[x,y]/(x^2+y^2)"), ParseError);
    EXPECT_THROW(parse_ideal("(x^2,y)", {"x"}), ParseError);
}

TEST(ParseRing, RoundTrip) {
    for (const std::string text : {"GF(2)[x,y,z]/(x,y^2,z^3)^2", "QQ[x,y]/(x,y)^3", "GF(7)[a,b]/(a^4,a^2*b^2,b^4)",
                                   "GF(32003)[x]/(x^2)", "QQ[x,y,z]/(x^2,y^2,z^2)"}) {
        auto once = parse_ring(text);
        auto twice = parse_ring(once.to_string());
        EXPECT_EQ(twice.to_string(), once.to_string());
        EXPECT_EQ(twice.ideal, once.ideal);
        EXPECT_EQ(twice.field, once.field);
    }
}

TEST(ParsePolynomial, Terms) {
    auto p = parse_polynomial("3*x^2*y - y + 1", {"x", "y"});
    ASSERT_EQ(p.terms.size(), 3u);
    EXPECT_EQ(p.terms[0], std::make_pair(3LL, Monomial({2, 1})));
    EXPECT_EQ(p.terms[1], std::make_pair(-1LL, Monomial({0, 1})));
    EXPECT_EQ(p.terms[2], std::make_pair(1LL, Monomial({0, 0})));
    EXPECT_THROW(parse_polynomial("x + z", {"x", "y"}), ParseError);
    EXPECT_THROW(parse_polynomial("x y", {"x", "y"}), ParseError);
}

TEST(ParseGrid, TabsWhitespaceAndComments) {
    auto g = parse_grid("# header\nx\t0\n\n-y\tx*y\r\n");
    ASSERT_EQ(g.size(), 2u);
    EXPECT_EQ(g[1], (std::vector<std::string>{"-y", "x*y"}));
    EXPECT_EQ(parse_grid("x 0\n0 y\n").size(), 2u);
    EXPECT_THROW(parse_grid("x\t0\ny\n"), std::invalid_argument);
}

TEST(BuildModule, Specs) {
    auto r = testing_helpers::ring_gf("(x^2,x*y,y^3)", {"x", "y"});
    EXPECT_EQ(build_module(r, "k").dim(), 1u);
    EXPECT_EQ(build_module(r, "m").dim(), r->dim() - 1);
    EXPECT_EQ(build_module(r, "R^3").dim(), 3 * r->dim());
    EXPECT_EQ(build_module(r, "E").dim(), r->dim());
    EXPECT_EQ(build_module(r, "quotient:(x,y^2)").dim(), 2u);
    EXPECT_EQ(build_module(r, "ideal:(y)").dim(), 2u);
    EXPECT_THROW(build_module(r, "zd:x"), std::invalid_argument);
    EXPECT_THROW(build_module(r, "bogus"), std::invalid_argument);

    auto path = testing::TempDir() + "pres.tsv";
    {
        std::ofstream out(path);
        out << "x\t0\n0\ty\n";
    }
    auto m = build_module(r, "file:" + path);
    // R/(x) ⊕ R/(y)
    EXPECT_EQ(m.dim(), 3u + 2u);
    EXPECT_EQ(num_generators(m), 2u);
    std::remove(path.c_str());
}
