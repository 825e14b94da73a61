#pragma once

// Minimal free resolutions over R built from iterated minimal presentations.

#include <cstddef>
#include <vector>

#include "module.hpp"

namespace artinian {

/// F_n -> ... -> F_1 -> F_0 -> M. differentials[i] is the betti[i] x betti[i+1]
/// matrix of F_{i+1} -> F_i.
template <class F>
struct FreeResolution {
    std::vector<std::size_t> betti;
    std::vector<RMatrix<F>> differentials;
    std::vector<FPModule<F>> syzygies;  // syzygies[i] = Ω^i(M), syzygies[0] = M

    std::size_t length() const { return differentials.size(); }
};

/// Resolves M through homological position `steps` (so up to F_steps),
/// stopping early when a syzygy vanishes.
template <class F>
FreeResolution<F> minimal_free_resolution(const FPModule<F>& m, std::size_t steps) {
    FreeResolution<F> res;
    res.syzygies.push_back(m);
    auto pres = present(m);
    res.betti.push_back(pres.generators.size());
    for (std::size_t i = 0; i < steps && pres.relations.cols() > 0; ++i) {
        res.betti.push_back(pres.relations.cols());
        res.differentials.push_back(pres.relations);
        res.syzygies.push_back(pres.syzygy.module);
        if (i + 1 < steps) pres = present_on(pres.syzygy.module, pres.syzygy_generators);
    }
    return res;
}

template <class F>
bool composes_to_zero(const FreeResolution<F>& res) {
    for (std::size_t i = 0; i + 1 < res.differentials.size(); ++i)
        if (!(res.differentials[i] * res.differentials[i + 1]).is_zero()) return false;
    return true;
}

template <class F>
bool is_minimal(const FreeResolution<F>& res) {
    for (const auto& d : res.differentials)
        if (!d.is_minimal()) return false;
    return true;
}

}  // namespace artinian
