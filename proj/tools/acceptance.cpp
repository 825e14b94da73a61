// Acceptance run: one PASS/FAIL line per criterion. All checks are exact;
// each criterion also has a wall-clock limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "artinian/artinian.hpp"
#include "corpus_data.hpp"
#include "corpus_runner.hpp"

using namespace artinian;
using artinian::tools::json;
using artinian::tools::with_field;

namespace {

using GF = PrimeField;

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<bool(std::ostringstream&)> run;
};

json corpus() { return json::parse(artinian::tools::kCorpusJson); }

AlgebraPtr<GF> gf_ring(const std::string& ideal, const std::vector<std::string>& vars, std::uint32_t p = 32003) {
    return build_algebra(GF(p), parse_ideal(ideal, vars), vars);
}

template <class F>
bool r_linear_bijection(const Matrix<F>& phi, const FPModule<F>& a, const FPModule<F>& b) {
    if (rank(phi) != a.dim() || a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.num_vars(); ++i)
        if (!(phi * a.action(i) == b.action(i) * phi)) return false;
    return true;
}

template <class F>
bool square_is_zero(const ArtinianAlgebra<F>& r) {
    return hilbert_function(r).size() <= 2;
}

/// Random element of m with about half of the basis monomials present.
template <class F>
Vec<F> random_in_max(const AlgebraPtr<F>& r, std::mt19937_64& rng) {
    auto v = r->zero();
    std::bernoulli_distribution coin(0.5);
    for (std::size_t b = 1; b < r->dim(); ++b)
        if (coin(rng)) v[b] = r->field().random(rng);
    if (r->is_zero(v) && r->dim() > 1) v[1] = r->field().one();
    return v;
}

/// Fixed eight-module sample: k, m, soc-syz and five cyclic quotients R/(f) or R/(f,g).
template <class F>
std::vector<FPModule<F>> module_sample(const AlgebraPtr<F>& r, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<FPModule<F>> out{residue_field(r), maximal_ideal_module(r), socle_syzygy_module(r)};
    for (int t = 0; t < 5; ++t) {
        std::vector<Vec<F>> gens{random_in_max(r, rng)};
        if (t % 2) gens.push_back(random_in_max(r, rng));
        out.push_back(cyclic_module(r, gens));
    }
    return out;
}

/// Calls fn(ring, entry) on every corpus ring in its own field.
template <class Fn>
void for_each_corpus_ring(Fn&& fn) {
    const auto c = corpus();
    for (const auto& entry : c.at("entries")) {
        auto expr = parse_ring(entry.at("ring"));
        with_field(expr.field, [&](auto field) {
            fn(build_algebra(field, expr.ideal, expr.variables), entry.at("name").template get<std::string>());
        });
    }
}

bool max_power_estar(std::ostringstream& log) {
    bool ok = true;
    std::size_t checked = 0;
    for (std::size_t e = 2; e <= 4; ++e)
        for (std::size_t n = 2; n <= 4; ++n) {
            if (binomial(e + n - 1, e) > 200) continue;
            auto rep = theorem_c_check<GF>(e, n);
            ++checked;
            if (!rep.holds) {
                ok = false;
                log << " (" << e << "," << n << ") dim E*=" << rep.dim_e_star << " expected " << rep.expected;
            }
        }
    const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> stated{{2, 3, 9}, {3, 2, 9}, {3, 4, 100}, {4, 3, 100}};
    for (auto [e, n, d] : stated) ok = ok && theorem_c_check<GF>(e, n).dim_e_star == d;
    log << " grid=" << checked;
    return ok && checked == 9;
}

bool worked_example(std::ostringstream& log) {
    auto c = ek_differential(2, 3);
    const auto& top = c.top();
    bool linear = true;
    for (const auto& p : top.entries) linear = linear && p.is_linear();
    auto r = build_algebra(GF(), MonomialIdeal::maximal_power(2, 3), {"x", "y"});
    auto pres = present(injective_envelope(r)).relations;
    auto es = e_star(r).module;
    log << " top=" << top.rows << "x" << top.cols << " E-pres=" << pres.rows() << "x" << pres.cols()
        << " gens(E*)=" << num_generators(es);
    return top.rows == 4 && top.cols == 3 && linear && ek_squares_to_zero(c) && pres.rows() == 3 && pres.cols() == 4 &&
           pres.is_minimal() && num_generators(es) == 9 && is_killed_by_maximal_ideal(es);
}

std::vector<std::size_t> recurrence(std::size_t count, std::size_t first, std::size_t second,
                                    const std::function<std::size_t(const std::vector<std::size_t>&)>& next) {
    std::vector<std::size_t> v{first, second};
    while (v.size() < count) v.push_back(next(v));
    return v;
}

bool sequence_a(std::ostringstream& log) {
    // a_{2n+1} = 4a_{2n-1}+2 and a_{2n+2} = 4a_{2n}-2, indices from 1
    auto expected = recurrence(6, 0, 2, [](const std::vector<std::size_t>& v) {
        const auto k = v.size() + 1;  // index being produced
        return k % 2 ? 4 * v[k - 3] + 2 : 4 * v[k - 3] - 2;
    });
    auto got = tools::summand_sequence(residue_field(gf_ring("(x^4,x^2*y,y^2)", {"x", "y"})), 6);
    log << " " << tools::join(got);
    return got == expected;
}

bool sequence_b(std::ostringstream& log) {
    auto expected = recurrence(8, 1, 3, [](const std::vector<std::size_t>& v) { return v[v.size() - 1] + 2 * v[v.size() - 2]; });
    bool ok = true;
    for (int n : {3, 4}) {
        auto got = tools::summand_sequence(residue_field(gf_ring("(x^2,x*y,y^" + std::to_string(n) + ")", {"x", "y"})), 8);
        log << " N=" << n << ":" << tools::join(got);
        ok = ok && got == expected;
    }
    return ok;
}

bool k_summands_in_syzygies(std::ostringstream& log) {
    bool ok = true;
    std::size_t rings = 0;
    for_each_corpus_ring([&](const auto& r, const std::string& name) {
        if (!soc_outside_msq(*r)) return;
        ++rings;
        for (const auto& m : module_sample(r, 20240913)) {
            auto o2 = nth_syzygy(m, 2);
            auto o3 = syzygy(o2).module;
            if (k_summand_multiplicity(o2) < 1 || k_summand_multiplicity(o3) < 1) {
                ok = false;
                log << " " << name;
            }
        }
    });
    auto special = gf_ring("(x^4,x^2*y,y^2)", {"x", "y"});
    auto mult = k_summand_multiplicity(nth_syzygy(socle_syzygy_module(special), 3));
    log << " rings=" << rings << " socle-in-square Ω³ multiplicity=" << mult;
    return ok && rings > 0 && mult == 0;
}

bool burch(std::ostringstream& log) {
    bool ok = burch_index(*gf_ring("(x^4)", {"x"})) == 1;
    std::size_t rings = 0;
    for_each_corpus_ring([&](const auto& r, const std::string& name) {
        if (!soc_outside_msq(*r)) return;
        ++rings;
        if (burch_index(*r) != embedding_dimension(*r)) {
            ok = false;
            log << " " << name;
        }
    });
    log << " rings=" << rings;
    return ok;
}

bool self_similar(std::ostringstream& log) {
    const std::vector<std::string> v{"x", "y", "z"};
    auto r = gf_ring("(x,y^2,z^3)^2", v, 2);
    auto m = ideal_as_module(r, ideal_generators(r, parse_ideal("(x,y^2,z^3)", v)));
    auto o1 = syzygy(m).module;
    auto target = direct_power(m, 3);
    auto iso = are_isomorphic(o1, target, 64, 20240913);
    bool ok = iso.verdict == IsoVerdict::yes && iso.trials_used <= 64 && iso.certificate &&
              r_linear_bijection(*iso.certificate, o1, target);
    auto cur = m;
    for (int n = 1; n <= 4; ++n) {
        cur = syzygy(cur).module;
        ok = ok && k_summand_multiplicity(cur) == 0;
    }
    log << " trials=" << iso.trials_used;
    return ok;
}

bool section_five(std::ostringstream& log) {
    bool ok = true;
    std::size_t rings = 0;
    for_each_corpus_ring([&](const auto& r, const std::string& name) {
        ++rings;
        auto env = injective_envelope(r);
        auto e1 = ext(1, auslander_transpose(env), free_module(r, 1));
        auto tr = trace_ideal(env);
        bool here = e1.dim() == r->dim() - tr.dim();
        const bool nearly = is_nearly_gorenstein(r);
        here = here && nearly == (e1.dim() <= 1 && is_killed_by_maximal_ideal(e1));
        const bool kills = m_kills_e_star(r);
        if (!is_gorenstein(*r)) here = here && square_is_zero(*r) == (nearly && kills);
        if (kills) here = here && theorem_e_b_containment(gorenstein_overring(r->ideal()));
        if (!here) log << " " << name;
        ok = ok && here;
    });
    auto bad = gf_ring("(x^4,x^2*y^2,y^4)", {"x", "y"});
    bool c1 = !theorem_e_b_containment(gorenstein_overring(bad->ideal())) && !m_kills_e_star(bad);
    auto dn = gf_ring("(x^2)", {"x"});
    bool c2 = theorem_e_b_containment(gorenstein_overring(dn->ideal(), std::vector<unsigned>{3})) && !m_kills_e_star(dn);
    log << " rings=" << rings << " counterexamples=" << c1 << c2;
    return ok && rings >= 12 && c1 && c2;
}

/// Random Artinian monomial ideal in 2 or 3 variables with dim R <= 60.
MonomialIdeal random_ideal(std::mt19937_64& rng) {
    for (;;) {
        std::size_t e = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < e; ++i)
            gens.push_back(Monomial::variable(e, i, std::uniform_int_distribution<unsigned>(2, 6)(rng)));
        int extra = std::uniform_int_distribution<int>(0, 4)(rng);
        for (int t = 0; t < extra; ++t) {
            std::vector<unsigned> exps(e);
            for (auto& x : exps) x = std::uniform_int_distribution<unsigned>(0, 3)(rng);
            Monomial m(exps);
            if (m.degree() >= 2) gens.push_back(m);
        }
        MonomialIdeal ideal(e, gens);
        if (ideal.standard_monomials().size() <= 60) return ideal;
    }
}

bool resolution_integrity(std::ostringstream& log) {
    std::mt19937_64 rng(20240913);
    std::size_t modules = 0;
    bool ok = true;
    for (int t = 0; t < 50; ++t) {
        auto r = build_algebra(GF(), random_ideal(rng));
        std::vector<Vec<GF>> two{random_in_max(r, rng), random_in_max(r, rng)};
        std::vector<FPModule<GF>> mods{cyclic_module(r, std::vector<Vec<GF>>{random_in_max(r, rng)}), cyclic_module(r, two),
                                       direct_sum(residue_field(r), maximal_ideal_module(r))};
        for (const auto& m : mods) {
            ++modules;
            bool here = true;
            auto res = minimal_free_resolution(m, 3);
            here = here && composes_to_zero(res) && is_minimal(res);
            auto o1 = syzygy(m).module;
            here = here && o1.dim() == num_generators(m) * r->dim() - m.dim();
            auto [count, rest] = strip_k_summands(m);
            here = here && count == k_summand_multiplicity(m) && k_summand_multiplicity(rest) == 0 && rest.dim() + count == m.dim();
            here = here && annihilator(m).same_as(annihilator(matlis_dual(m)));
            auto [c1, core] = strip_free_summands(m);
            auto [c2, tt] = strip_free_summands(auslander_transpose(auslander_transpose(m)));
            here = here && core.dim() == tt.dim();
            if (!here) log << " ring#" << t << ":" << r->ideal().to_string();
            ok = ok && here;
        }
    }
    log << " modules=" << modules;
    return ok;
}

bool gorenstein_detector(std::ostringstream& log) {
    bool ok = true;
    std::size_t rings = 0;
    for_each_corpus_ring([&](const auto& r, const std::string& name) {
        ++rings;
        if (gorenstein_by_estar(r) != (type_of(*r) == 1)) {
            ok = false;
            log << " " << name;
        }
    });
    auto dn = gf_ring("(x^2)", {"x"});
    auto es = e_star(dn).module;
    bool witness = gorenstein_by_estar(dn) && radical(es).dim() == maximal_ideal_module(dn).dim() && !is_killed_by_maximal_ideal(es);
    log << " rings=" << rings;
    return ok && witness;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "dim E* = binom(e+n-2,n-1)^2 and m E* = 0 for S/n^n, (e,n) in {2,3,4}^2", 60, max_power_estar},
        {2, "e=2, n=3 worked matrices", 5, worked_example},
        {3, "k-summand sequence over k[x,y]/(x^4,x^2y,y^2)", 120, sequence_a},
        {4, "k-summand sequence over k[x,y]/(x^2,xy,y^N), N=3,4", 120, sequence_b},
        {5, "k-summands in second and third syzygies", 120, k_summands_in_syzygies},
        {6, "Burch index", 10, burch},
        {7, "F2 syzygy certificate Omega(M) = M^3", 60, self_similar},
        {8, "trace, nearly Gorenstein and overring containment suite", 120, section_five},
        {9, "resolution integrity on 50 random rings", 300, resolution_integrity},
        {10, "Gorenstein detector via E*", 10, gorenstein_detector},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        std::ostringstream log;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = c.run(log);
        } catch (const std::exception& e) {
            log << " exception: " << e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool timely = secs < c.limit_seconds;
        if (!(ok && timely)) ++failures;
        std::printf("%s %2d  %s  [%.2fs / limit %.0fs]%s\n", ok && timely ? "PASS" : "FAIL", c.id, c.title, secs,
                    c.limit_seconds, log.str().c_str());
    }
    return failures ? 1 : 0;
}
