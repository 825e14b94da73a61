// artinian-workbench: command-line front end.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "artinian/artinian.hpp"
#include "corpus_data.hpp"
#include "corpus_runner.hpp"
#include "json.hpp"

using namespace artinian;
using artinian::tools::with_field;
using nlohmann::json;

namespace {

std::string join_sizes(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string field;
    std::uint64_t seed = 20240913;
    std::size_t trials = 64;
    std::size_t max_syzygy = 10;
    std::size_t max_dim = 200000;
    bool json = false;
    std::string out;
};

FieldSpec parse_field_flag(const std::string& s) {
    auto expr = parse_ring(s + "[x]/(x^2)");
    return expr.field;
}

RingExpression ring_from(const std::string& text, const Options& opt) {
    auto expr = parse_ring(text);
    if (!opt.field.empty()) expr.field = parse_field_flag(opt.field);
    return expr;
}

template <class F>
AlgebraPtr<F> make_ring(const RingExpression& expr, const F& field, const Options& opt) {
    auto ring = build_algebra(field, expr.ideal, expr.variables);
    if (ring->dim() > opt.max_dim)
        throw ResourceError("ring has dimension " + std::to_string(ring->dim()) + " > --max-dim " + std::to_string(opt.max_dim));
    return ring;
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::runtime_error("cannot write " + opt.out);
    f << text;
}

std::optional<std::vector<unsigned>> parse_exponents(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::vector<unsigned> a;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) a.push_back(static_cast<unsigned>(std::stoul(tok)));
    return a;
}

std::string text_report(const RingReport& r) {
    std::ostringstream os;
    auto b = [](bool v) { return v ? "true" : "false"; };
    os << "ring                     " << r.ring << "\n"
       << "k_dimension              " << r.k_dimension << "\n"
       << "edim                     " << r.edim << "\n"
       << "loewy_length             " << r.loewy_length << "\n"
       << "type                     " << r.type << "\n"
       << "gorenstein               " << b(r.gorenstein) << "\n"
       << "gorenstein_by_estar      " << b(r.gorenstein_by_estar) << "\n"
       << "soc_outside_msq          " << b(r.soc_outside_msq) << "\n"
       << "burch_index              " << r.burch_index << "\n"
       << "nearly_gorenstein        " << b(r.nearly_gorenstein) << "\n"
       << "m_kills_E_star           " << b(r.m_kills_e_star) << "\n"
       << "dim_E_star               " << r.dim_e_star << "\n"
       << "theorem_E_b_containment  " << b(r.theorem_e_b_containment) << "\n";
    return os.str();
}

int cmd_analyze(const Options& opt, const std::string& ring_text, const std::string& overring) {
    auto expr = ring_from(ring_text, opt);
    return with_field(expr.field, [&](auto field) {
        auto ring = make_ring(expr, field, opt);
        auto rep = analyze_ring(ring, parse_exponents(overring));
        emit(opt, opt.json ? to_json(rep).dump(2) + "\n" : text_report(rep));
        return 0;
    });
}

int cmd_syzygy(const Options& opt, const std::string& ring_text, const std::string& module, std::size_t n) {
    if (n > opt.max_syzygy)
        throw ResourceError("syzygy index " + std::to_string(n) + " exceeds --max-syzygy " + std::to_string(opt.max_syzygy));
    auto expr = ring_from(ring_text, opt);
    return with_field(expr.field, [&](auto field) {
        auto ring = make_ring(expr, field, opt);
        auto m = build_module(ring, module);
        json rows = json::array();
        std::ostringstream os;
        os << "i\tdim\tbetti\tk_summands\n";
        for (std::size_t i = 1; i <= n; ++i) {
            auto predicted = num_generators(m) * ring->dim();
            if (predicted > opt.max_dim)
                throw ResourceError("syzygy " + std::to_string(i) + " would live in dimension " + std::to_string(predicted) +
                                    " > --max-dim " + std::to_string(opt.max_dim));
            m = syzygy(m).module;
            auto lam = num_generators(m);
            auto ks = k_summand_multiplicity(m);
            os << i << "\t" << m.dim() << "\t" << lam << "\t" << ks << "\n";
            rows.push_back({{"index", i}, {"dim", m.dim()}, {"betti", lam}, {"k_summands", ks}});
        }
        json j{{"ring", ring->to_string()}, {"module", module}, {"syzygies", rows}};
        emit(opt, opt.json ? j.dump(2) + "\n" : os.str());
        return 0;
    });
}

json labels_json(const std::vector<EKLabel>& labels, const std::vector<std::string>& names) {
    json a = json::array();
    for (const auto& l : labels)
        a.push_back({{"f", l.f.to_string(names)}, {"indices", l.indices}, {"internal_degree", l.internal_degree()}});
    return a;
}

int cmd_resolve_ek(const Options& opt, std::size_t e, std::size_t n, std::size_t bound) {
    if (e < 2) throw std::invalid_argument("resolve-ek: e must be at least 2");
    if (n < 2) throw std::invalid_argument("resolve-ek: n must be at least 2");
    if (binomial(e + n - 1, n) * e > opt.max_dim) throw ResourceError("resolve-ek: complex exceeds --max-dim");
    auto c = ek_differential(e, n);
    if (bound == 0) bound = n + e;
    auto names = default_variable_names(e);
    bool squares = ek_squares_to_zero(c);
    auto exact = verify_ek_exactness(c, bound, RationalField());
    auto witness = triangular_submatrix_witness(c);
    auto claim = ek_kernel_claim(c, PrimeField());
    bool linear = true;
    for (const auto& p : c.top().entries)
        if (!p.is_linear()) linear = false;

    if (!opt.out.empty()) {
        std::filesystem::create_directories(opt.out);
        for (std::size_t i = 0; i < c.maps.size(); ++i) {
            std::ofstream f(std::filesystem::path(opt.out) / ("d" + std::to_string(i) + ".txt"));
            f << c.maps[i].to_string(names);
        }
        json meta{{"e", e}, {"n", n}, {"ranks", c.ranks()}};
        meta["labels"] = json::array();
        for (const auto& l : c.labels) meta["labels"].push_back(labels_json(l, names));
        std::ofstream(std::filesystem::path(opt.out) / "labels.json") << meta.dump(2) << "\n";
    }
    json j{{"e", e},
           {"n", n},
           {"ranks", c.ranks()},
           {"top_shape", {c.top().rows, c.top().cols}},
           {"top_linear", linear},
           {"squares_to_zero", squares},
           {"exact_through_degree", bound},
           {"exact", exact.exact},
           {"triangular_witness", {{"found", witness.found},
                                   {"rows_in_label_order", witness.rows_in_label_order},
                                   {"rows", witness.rows},
                                   {"columns", witness.columns}}},
           {"kernel_claim", {{"kernel_dim", claim.kernel_dim}, {"expected", claim.expected_dim}, {"holds", claim.holds()}}}};
    if (opt.json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "ranks            " << join_sizes(c.ranks()) << "\n"
                  << "top matrix       " << c.top().rows << "x" << c.top().cols << (linear ? " (linear)" : "") << "\n"
                  << c.top().to_string(names)
                  << "d^2 = 0          " << (squares ? "yes" : "no") << "\n"
                  << "exact to deg " << bound << "  " << (exact.exact ? "yes" : "no") << "\n"
                  << "triangular rows  " << (witness.found ? join_sizes(witness.rows) : std::string("none")) << "\n"
                  << "ker(A) claim     " << (claim.holds() ? "holds" : "fails") << " (dim " << claim.kernel_dim << ", expected "
                  << claim.expected_dim << ")\n";
        for (const auto& f : exact.failures) std::cout << "  " << f << "\n";
    }
    return squares && exact.exact && witness.found && claim.holds() ? 0 : 1;
}

int cmd_canonical(const Options& opt, const std::string& ring_text, const std::string& overring) {
    auto expr = ring_from(ring_text, opt);
    return with_field(expr.field, [&](auto field) {
        auto ring = make_ring(expr, field, opt);
        auto e1 = injective_envelope(ring);
        auto g = gorenstein_overring(ring->ideal(), parse_exponents(overring));
        auto e2 = canonical_via_overring(ring, g);
        auto iso = are_isomorphic(e1, e2, opt.trials, opt.seed);
        auto pres = present(e1);
        auto es = dual(e1).module;
        auto seq = exact_sequence_L_check(ring, g);
        json j{{"ring", ring->to_string()},
               {"envelope", {{"dim", e1.dim()}, {"generators", num_generators(e1)}, {"socle_dim", socle(e1).dim()}}},
               {"overring", {{"exponents", g.exponents},
                             {"colon", g.colon.to_string(ring->variable_names())},
                             {"dim", e2.dim()},
                             {"generators", num_generators(e2)}}},
               {"isomorphic", to_string(iso.verdict)},
               {"presentation_shape", {pres.relations.rows(), pres.relations.cols()}},
               {"dim_E_star", es.dim()},
               {"E_star_generators", num_generators(es)},
               {"m_kills_E_star", is_killed_by_maximal_ideal(es)},
               {"theorem_E_b_containment", theorem_e_b_containment(g)},
               {"exact_sequence", {{"dim_L", seq.dim_l},
                                   {"dim_E_star_mod_L", seq.dim_cokernel()},
                                   {"dim_colon_quotient", seq.dim_colon_quotient},
                                   {"dim_ext1", seq.dim_ext},
                                   {"holds", seq.holds()}}}};
        if (opt.json) emit(opt, j.dump(2) + "\n");
        else {
            std::ostringstream os;
            os << "ring               " << ring->to_string() << "\n"
               << "E (inverse system) dim " << e1.dim() << ", generators " << num_generators(e1) << "\n"
               << "E (overring)       dim " << e2.dim() << ", colon " << g.colon.to_string(ring->variable_names()) << "\n"
               << "isomorphic         " << to_string(iso.verdict) << "\n"
               << "presentation of E  " << pres.relations.rows() << "x" << pres.relations.cols() << "\n"
               << pres.relations.to_string()
               << "dim E*             " << es.dim() << ", generators " << num_generators(es) << "\n"
               << "m E* = 0           " << (is_killed_by_maximal_ideal(es) ? "true" : "false") << "\n"
               << "n(0:I) in I        " << (theorem_e_b_containment(g) ? "true" : "false") << "\n"
               << "dim L, E*/L        " << seq.dim_l << ", " << seq.dim_cokernel() << "\n"
               << "S/(I:(0:I)) + Ext1 " << seq.dim_colon_quotient << " + " << seq.dim_ext << "\n";
            emit(opt, os.str());
        }
        return 0;
    });
}

int cmd_trace(const Options& opt, const std::string& ring_text, const std::string& module) {
    auto expr = ring_from(ring_text, opt);
    return with_field(expr.field, [&](auto field) {
        auto ring = make_ring(expr, field, opt);
        auto m = build_module(ring, module);
        auto t = trace_ideal(m);
        json basis = json::array();
        for (const auto& v : t.basis()) basis.push_back(ring->to_string(v));
        bool contains_m = maximal_ideal_subspace(*ring).is_subspace_of(t);
        json j{{"ring", ring->to_string()}, {"module", module}, {"trace_dim", t.dim()},
               {"colength", ring->dim() - t.dim()}, {"contains_maximal_ideal", contains_m}, {"basis", basis}};
        if (opt.json) emit(opt, j.dump(2) + "\n");
        else {
            std::ostringstream os;
            os << "dim trace " << t.dim() << ", dim R/trace " << ring->dim() - t.dim() << ", contains m "
               << (contains_m ? "true" : "false") << "\n";
            for (const auto& b : basis) os << "  " << b.get<std::string>() << "\n";
            emit(opt, os.str());
        }
        return 0;
    });
}

int cmd_paper_examples(const Options& opt, const std::string& selector, const std::string& corpus_path) {
    json corpus = json::parse(corpus_path.empty() ? std::string(artinian::tools::kCorpusJson) : read_file(corpus_path));
    auto results = artinian::tools::run_corpus(corpus, selector, opt.seed, opt.trials);
    std::size_t failed = 0;
    json arr = json::array();
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        arr.push_back({{"entry", r.entry}, {"check", r.what}, {"pass", r.pass}, {"detail", r.detail}});
        if (!opt.json) std::cout << (r.pass ? "PASS " : "FAIL ") << r.entry << " " << r.what << ": " << r.detail << "\n";
    }
    if (opt.json) std::cout << json{{"results", arr}, {"failed", failed}}.dump(2) << "\n";
    else std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed ? 1 : 0;
}

int cmd_export(const Options& opt, const std::string& ring_text, const std::string& module, const std::string& what,
               std::size_t index) {
    auto expr = ring_from(ring_text, opt);
    return with_field(expr.field, [&](auto field) {
        auto ring = make_ring(expr, field, opt);
        auto m = build_module(ring, module);
        if (index > opt.max_syzygy) throw ResourceError("--index exceeds --max-syzygy");
        using RM = RMatrix<decltype(field)>;
        RM p;
        if (what == "presentation") p = present(nth_syzygy(m, index)).relations;
        else if (what == "minimalized") p = minimalize_presentation(present(nth_syzygy(m, index)).relations);
        else throw std::invalid_argument("--what must be presentation or minimalized");
        if (opt.json) {
            json rows = json::array();
            for (std::size_t r = 0; r < p.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < p.cols(); ++c) row.push_back(ring->to_string(p.at(r, c)));
                rows.push_back(row);
            }
            emit(opt, json{{"ring", ring->to_string()}, {"rows", p.rows()}, {"cols", p.cols()}, {"entries", rows}}.dump(2) + "\n");
        } else {
            emit(opt, p.to_string());
        }
        return 0;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact workbench for Artinian monomial algebras"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--field", opt.field, "override the coefficient field: GF(p) or QQ");
    app.add_option("--seed", opt.seed, "seed for randomized certificates");
    app.add_option("--trials", opt.trials, "random trials per isomorphism test");
    app.add_option("--max-syzygy", opt.max_syzygy, "largest syzygy index accepted");
    app.add_option("--max-dim", opt.max_dim, "largest k-dimension accepted");
    app.add_flag("--json", opt.json, "emit JSON");
    app.add_option("--out", opt.out, "write output to this file (resolve-ek: directory)");

    std::string ring, module = "k", overring, selector = "all", corpus_path, what = "presentation";
    std::size_t n = 1, e = 2, bound = 0, index = 0;

    auto* analyze = app.add_subcommand("analyze", "ring invariants report");
    analyze->add_option("ring", ring, "ring literal, e.g. 'QQ[x,y]/(x,y)^3'")->required();
    analyze->add_option("--overring", overring, "overring exponents a1,a2,...");

    auto* syz = app.add_subcommand("syzygy", "dimensions, Betti numbers and k-summands of syzygies");
    syz->add_option("ring", ring)->required();
    syz->add_option("module", module, "k, m, R, R^a, E, soc-syz, quotient:(J), ideal:(J), zd:f,g, file:path")->required();
    syz->add_option("-n", n, "number of syzygies")->default_val(1);

    auto* ek = app.add_subcommand("resolve-ek", "Eliahou-Kervaire resolution of S/n^n");
    ek->add_option("-e", e, "number of variables")->required();
    ek->add_option("-n", n, "power of the maximal ideal")->required();
    ek->add_option("--bound", bound, "degree bound for the exactness scan (default n+e)");

    auto* can = app.add_subcommand("canonical", "injective envelope by both constructions, E* and related checks");
    can->add_option("ring", ring)->required();
    can->add_option("--overring", overring, "overring exponents a1,a2,...");

    auto* tr = app.add_subcommand("trace", "trace ideal of a module");
    tr->add_option("ring", ring)->required();
    tr->add_option("module", module)->required();

    auto* ex = app.add_subcommand("paper-examples", "run the built-in example corpus");
    ex->add_option("selector", selector, "entry name or 'all'")->default_val("all");
    ex->add_option("--corpus", corpus_path, "read the corpus from a file instead");

    auto* exp = app.add_subcommand("export-matrix", "print a presentation matrix");
    exp->add_option("ring", ring)->required();
    exp->add_option("module", module)->required();
    exp->add_option("--what", what, "presentation or minimalized")->default_val("presentation");
    exp->add_option("--index", index, "present the index-th syzygy instead")->default_val(0);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*analyze) return cmd_analyze(opt, ring, overring);
        if (*syz) return cmd_syzygy(opt, ring, module, n);
        if (*ek) return cmd_resolve_ek(opt, e, n, bound);
        if (*can) return cmd_canonical(opt, ring, overring);
        if (*tr) return cmd_trace(opt, ring, module);
        if (*ex) return cmd_paper_examples(opt, selector, corpus_path);
        if (*exp) return cmd_export(opt, ring, module, what, index);
    } catch (const ParseError& err) {
        std::cerr << "parse error: " << err.what() << "\n";
        return 1;
    } catch (const std::domain_error& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 2;
    } catch (const ResourceError& err) {
        std::cerr << "resource bound: " << err.what() << "\n";
        return 3;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 1;
}
