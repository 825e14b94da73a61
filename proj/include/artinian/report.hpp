#pragma once

// Whole-ring summary and its JSON form.

#include <string>
#include <vector>

#include "canonical.hpp"
#include "json.hpp"

namespace artinian {

struct RingReport {
    std::string ring;
    std::string field;
    std::size_t edim = 0;
    std::size_t loewy_length = 0;
    std::size_t k_dimension = 0;
    std::vector<std::size_t> hilbert_function;
    std::size_t type = 0;
    bool gorenstein = false;
    bool gorenstein_by_estar = false;
    bool soc_outside_msq = false;
    std::size_t burch_index = 0;
    bool nearly_gorenstein = false;
    bool m_kills_e_star = false;
    std::size_t dim_e_star = 0;
    std::vector<unsigned> overring_exponents;
    bool theorem_e_b_containment = false;
};

template <class F>
RingReport analyze_ring(const AlgebraPtr<F>& ring, std::optional<std::vector<unsigned>> overring_exponents = std::nullopt) {
    RingReport r;
    r.ring = ring->to_string();
    r.field = ring->field().name();
    r.edim = embedding_dimension(*ring);
    r.loewy_length = loewy_length(*ring);
    r.k_dimension = ring->dim();
    r.hilbert_function = hilbert_function(*ring);
    r.type = type_of(*ring);
    r.gorenstein = is_gorenstein(*ring);
    r.soc_outside_msq = soc_outside_msq(*ring);
    r.burch_index = burch_index(*ring);
    auto env = injective_envelope(ring);
    r.nearly_gorenstein = maximal_ideal_subspace(*ring).is_subspace_of(trace_ideal(env));
    auto es = dual(env).module;
    r.dim_e_star = es.dim();
    r.m_kills_e_star = is_killed_by_maximal_ideal(es);
    r.gorenstein_by_estar = radical_power(es, r.loewy_length - 1).dim() > 0;
    auto g = gorenstein_overring(ring->ideal(), overring_exponents);
    r.overring_exponents = g.exponents;
    r.theorem_e_b_containment = theorem_e_b_containment(g);
    return r;
}

inline nlohmann::json to_json(const RingReport& r) {
    return nlohmann::json{{"ring", r.ring},
                          {"field", r.field},
                          {"edim", r.edim},
                          {"loewy_length", r.loewy_length},
                          {"k_dimension", r.k_dimension},
                          {"hilbert_function", r.hilbert_function},
                          {"type", r.type},
                          {"gorenstein", r.gorenstein},
                          {"gorenstein_by_estar", r.gorenstein_by_estar},
                          {"soc_outside_msq", r.soc_outside_msq},
                          {"burch_index", r.burch_index},
                          {"nearly_gorenstein", r.nearly_gorenstein},
                          {"m_kills_E_star", r.m_kills_e_star},
                          {"dim_E_star", r.dim_e_star},
                          {"overring_exponents", r.overring_exponents},
                          {"theorem_E_b_containment", r.theorem_e_b_containment}};
}

}  // namespace artinian
