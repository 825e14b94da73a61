#include <gtest/gtest.h>

#include "helpers.hpp"

using namespace artinian;
using testing_helpers::ring_gf;
using testing_helpers::sample_ideals;

namespace {
const std::vector<std::string> XY{"x", "y"};
}

TEST(MinimalResolution, FreeModuleHasLengthZero) {
    auto r = ring_gf("(x^2,x*y,y^3)", XY);
    auto res = minimal_free_resolution(free_module(r, 3), 4);
    EXPECT_EQ(res.length(), 0u);
    EXPECT_EQ(res.betti, (std::vector<std::size_t>{3}));
}

TEST(MinimalResolution, ResidueFieldExamples) {
    auto ex = ring_gf("(x^4,x^2*y,y^2)", XY);
    auto res = minimal_free_resolution(residue_field(ex), 2);
    EXPECT_EQ(res.betti, (std::vector<std::size_t>{1, 2, 4}));

    auto sq = ring_gf("(x,y)^2", XY);
    auto rk = minimal_free_resolution(residue_field(sq), 6);
    for (std::size_t n = 0; n <= 6; ++n) EXPECT_EQ(rk.betti[n], std::size_t{1} << n);
}

TEST(MinimalResolution, ComplexIsMinimalAndMatchesSyzygies) {
    for (const auto& [text, vars] : sample_ideals()) {
        auto r = ring_gf(text, vars);
        for (const auto& m : {residue_field(r), maximal_ideal_module(r), socle_syzygy_module(r)}) {
            auto res = minimal_free_resolution(m, 4);
            EXPECT_TRUE(composes_to_zero(res)) << text;
            EXPECT_TRUE(is_minimal(res)) << text;
            // each Betti number is the number of generators of the corresponding syzygy
            auto cur = m;
            for (std::size_t i = 0; i < res.betti.size(); ++i) {
                EXPECT_EQ(res.betti[i], num_generators(cur)) << text << " position " << i;
                EXPECT_EQ(res.betti[i], cur.dim() - radical(cur).dim());
                cur = syzygy(cur).module;
            }
            for (std::size_t i = 0; i < res.length(); ++i) {
                EXPECT_EQ(res.differentials[i].rows(), res.betti[i]);
                EXPECT_EQ(res.differentials[i].cols(), res.betti[i + 1]);
            }
        }
    }
}

TEST(MinimalResolution, OverRationals) {
    auto r = testing_helpers::ring_qq("(x,y)^3", XY);
    auto res = minimal_free_resolution(residue_field(r), 3);
    EXPECT_TRUE(composes_to_zero(res));
    EXPECT_TRUE(is_minimal(res));
    EXPECT_EQ(res.betti[1], 2u);
    // Ω²k is spanned by (y,-x) and the 6-dim degree-2 part of R^2; the syzygy's
    // multiples account for 2 of those, leaving 1 + 4 generators
    EXPECT_EQ(res.betti[2], 5u);
}
