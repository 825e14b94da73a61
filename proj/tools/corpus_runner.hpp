#pragma once

// Runs golden corpus entries: ring-report expectations plus module checks.

#include <cstdint>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "artinian/artinian.hpp"
#include "json.hpp"

namespace artinian::tools {

using nlohmann::json;

struct CheckOutcome {
    std::string entry;
    std::string what;
    bool pass = false;
    std::string detail;
};

template <class Fn>
decltype(auto) with_field(const FieldSpec& f, Fn&& fn) {
    if (f.rational) return fn(RationalField());
    return fn(PrimeField(f.characteristic));
}

template <class F>
std::vector<std::size_t> summand_sequence(FPModule<F> m, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i) {
        m = syzygy(m).module;
        out.push_back(k_summand_multiplicity(m));
    }
    return out;
}

inline std::string join(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

template <class F>
void run_checks(const AlgebraPtr<F>& ring, const json& entry, std::uint64_t seed, std::size_t trials,
                std::vector<CheckOutcome>& out) {
    const std::string name = entry.at("name");
    auto report = to_json(analyze_ring(ring));
    for (const auto& [key, spec] : entry.at("expect").items()) {
        CheckOutcome o{name, key, false, ""};
        o.pass = report.at(key) == spec.at("value");
        o.detail = "expected " + spec.at("value").dump() + ", computed " + report.at(key).dump();
        out.push_back(std::move(o));
    }
    for (const auto& chk : entry.at("checks")) {
        const std::string kind = chk.at("kind");
        CheckOutcome o{name, kind, false, ""};
        if (kind == "summand_sequence") {
            std::vector<std::size_t> want = chk.at("values");
            auto got = summand_sequence(build_module(ring, chk.at("module")), want.size());
            o.what += " " + chk.at("module").get<std::string>();
            o.pass = got == want;
            o.detail = "expected " + join(want) + ", computed " + join(got);
        } else if (kind == "syzygy_dims") {
            std::vector<std::size_t> want = chk.at("dims"), got;
            auto m = build_module(ring, chk.at("module"));
            for (std::size_t i = 0; i < want.size(); ++i) {
                m = syzygy(m).module;
                got.push_back(m.dim());
            }
            o.pass = got == want;
            o.detail = "expected " + join(want) + ", computed " + join(got);
        } else if (kind == "betti") {
            std::vector<std::size_t> want = chk.at("values");
            auto res = minimal_free_resolution(build_module(ring, chk.at("module")), want.size() - 1);
            o.pass = res.betti == want && composes_to_zero(res) && is_minimal(res);
            o.detail = "expected " + join(want) + ", computed " + join(res.betti);
        } else if (kind == "reflexive") {
            bool got = is_reflexive(build_module(ring, chk.at("module")));
            o.pass = got == chk.at("value").get<bool>();
            o.detail = std::string("computed ") + (got ? "true" : "false");
        } else if (kind == "envelope_iso_ring") {
            auto r = are_isomorphic(injective_envelope(ring), free_module(ring, 1), trials, seed);
            o.pass = to_string(r.verdict) == chk.at("value").get<std::string>();
            o.detail = std::string("verdict ") + to_string(r.verdict);
        } else if (kind == "syzygy_iso") {
            auto m = nth_syzygy(build_module(ring, chk.at("module")), chk.at("index"));
            auto r = are_isomorphic(m, build_module(ring, chk.at("target")), trials, seed);
            o.pass = r.verdict == IsoVerdict::yes;
            o.detail = std::string("verdict ") + to_string(r.verdict) + " after " + std::to_string(r.trials_used) + " trials";
        } else if (kind == "syzygy_iso_power") {
            auto m = build_module(ring, chk.at("module"));
            auto r = are_isomorphic(syzygy(m).module, direct_power(m, chk.at("copies")), trials, seed);
            o.pass = r.verdict == IsoVerdict::yes;
            o.detail = std::string("verdict ") + to_string(r.verdict) + " after " + std::to_string(r.trials_used) + " trials";
        } else if (kind == "k_summands") {
            auto got = k_summand_multiplicity(build_module(ring, chk.at("module")));
            o.pass = got == chk.at("value").get<std::size_t>();
            o.detail = "computed " + std::to_string(got);
        } else if (kind == "envelope_presentation") {
            auto p = present(injective_envelope(ring)).relations;
            o.pass = p.rows() == chk.at("rows").get<std::size_t>() && p.cols() == chk.at("cols").get<std::size_t>() &&
                     p.is_minimal();
            o.detail = "computed " + std::to_string(p.rows()) + "x" + std::to_string(p.cols());
        } else if (kind == "estar_generators") {
            auto got = num_generators(e_star(ring).module);
            o.pass = got == chk.at("value").get<std::size_t>();
            o.detail = "computed " + std::to_string(got);
        } else if (kind == "socle_syzygy") {
            auto om = nth_syzygy(socle_syzygy_module(ring), 2);
            o.pass = om.dim() == chk.at("dim").get<std::size_t>() && is_killed_by_maximal_ideal(om);
            o.detail = "dim " + std::to_string(om.dim());
        } else if (kind == "overring") {
            std::vector<unsigned> a = chk.at("exponents");
            auto g = gorenstein_overring(ring->ideal(), a);
            auto eo = canonical_via_overring(ring, g);
            bool contain = theorem_e_b_containment(g);
            bool kills = m_kills_e_star(ring);
            auto iso = are_isomorphic(eo, injective_envelope(ring), trials, seed).verdict;
            o.pass = contain == chk.at("containment").get<bool>() && kills == chk.at("m_kills_E_star").get<bool>() &&
                     eo.dim() == chk.at("envelope_dim").get<std::size_t>() && iso == IsoVerdict::yes;
            o.detail = std::string("containment ") + (contain ? "true" : "false") + ", m E* = 0 " + (kills ? "true" : "false") +
                       ", dim " + std::to_string(eo.dim()) + ", iso " + to_string(iso);
        } else if (kind == "overring_colon") {
            auto g = gorenstein_overring(ring->ideal());
            auto got = g.colon.to_string(ring->variable_names());
            o.pass = got == chk.at("value").get<std::string>();
            o.detail = "computed " + got;
        } else {
            o.detail = "unknown check kind";
        }
        out.push_back(std::move(o));
    }
}

/// Entries whose name equals selector (or all of them for "all").
inline std::vector<CheckOutcome> run_corpus(const json& corpus, const std::string& selector, std::uint64_t seed,
                                            std::size_t trials) {
    std::vector<CheckOutcome> out;
    bool matched = false;
    for (const auto& entry : corpus.at("entries")) {
        if (selector != "all" && entry.at("name") != selector) continue;
        matched = true;
        auto expr = parse_ring(entry.at("ring"));
        with_field(expr.field, [&](auto field) {
            auto ring = build_algebra(field, expr.ideal, expr.variables);
            run_checks(ring, entry, seed, trials, out);
        });
    }
    if (!matched) out.push_back({selector, "selector", false, "no corpus entry with this name"});
    return out;
}

}  // namespace artinian::tools
