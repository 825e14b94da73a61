#pragma once

// Textual module specifications used by the command line:
//   k | m | R | R^a | E | soc-syz | quotient:(J) | ideal:(J) | zd:f,g | file:path
// where file:path holds a presentation grid (its cokernel is the module).

#include <string>
#include <vector>

#include "canonical.hpp"
#include "parser.hpp"

namespace artinian {

template <class F>
Vec<F> to_ring_element(const AlgebraPtr<F>& ring, const PolynomialTerms& p) {
    auto r = ring->zero();
    for (const auto& [c, m] : p.terms) r = ring->add(r, ring->monomial(m, ring->field().from_int(c)));
    return r;
}

template <class F>
Vec<F> parse_ring_element(const AlgebraPtr<F>& ring, const std::string& text) {
    return to_ring_element(ring, parse_polynomial(text, ring->variable_names()));
}

template <class F>
RMatrix<F> parse_presentation(const AlgebraPtr<F>& ring, const std::string& text) {
    auto grid = parse_grid(text);
    if (grid.empty()) throw std::invalid_argument("presentation grid is empty");
    RMatrix<F> p(ring, grid.size(), grid.front().size());
    for (std::size_t r = 0; r < grid.size(); ++r)
        for (std::size_t c = 0; c < grid[r].size(); ++c) p.at(r, c) = parse_ring_element(ring, grid[r][c]);
    return p;
}

template <class F>
FPModule<F> build_module(const AlgebraPtr<F>& ring, const std::string& spec) {
    auto rest = [&](const std::string& prefix) { return spec.substr(prefix.size()); };
    auto starts = [&](const std::string& prefix) { return spec.rfind(prefix, 0) == 0; };
    if (spec == "k") return residue_field(ring);
    if (spec == "m") return maximal_ideal_module(ring);
    if (spec == "R") return free_module(ring, 1);
    if (starts("R^")) return free_module(ring, std::stoul(rest("R^")));
    if (spec == "E") return injective_envelope(ring);
    if (spec == "soc-syz") return socle_syzygy_module(ring);
    if (starts("quotient:")) return cyclic_module(ring, parse_ideal(rest("quotient:"), ring->variable_names()));
    if (starts("ideal:"))
        return ideal_as_module(ring, ideal_generators(ring, parse_ideal(rest("ideal:"), ring->variable_names())));
    if (starts("zd:")) {
        auto body = rest("zd:");
        auto comma = body.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("zd: expects two elements f,g");
        return zero_divisor_module(ring, parse_ring_element(ring, body.substr(0, comma)),
                                   parse_ring_element(ring, body.substr(comma + 1)));
    }
    if (starts("file:")) return from_presentation(parse_presentation(ring, read_file(rest("file:"))));
    throw std::invalid_argument("unknown module spec '" + spec +
                                "' (expected k, m, R, R^a, E, soc-syz, quotient:(..), ideal:(..), zd:f,g, file:path)");
}

}  // namespace artinian
