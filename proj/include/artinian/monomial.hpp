#pragma once

// Monomials in e variables and monomial ideals with the combinatorial
// operations the colon-ideal formulas need. Variable indices are 0-based.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace artinian {

inline std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exp_(num_vars, 0) {}
    explicit Monomial(std::vector<unsigned> exponents) : exp_(std::move(exponents)) {}

    static Monomial one(std::size_t num_vars) { return Monomial(num_vars); }
    static Monomial variable(std::size_t num_vars, std::size_t i, unsigned power = 1) {
        if (i >= num_vars) throw std::out_of_range("Monomial::variable: index out of range");
        Monomial m(num_vars);
        m.exp_[i] = power;
        return m;
    }

    std::size_t num_vars() const { return exp_.size(); }
    const std::vector<unsigned>& exponents() const { return exp_; }
    unsigned operator[](std::size_t i) const { return exp_[i]; }

    unsigned degree() const {
        unsigned d = 0;
        for (auto a : exp_) d += a;
        return d;
    }
    bool is_one() const { return degree() == 0; }

    bool divides(const Monomial& m) const {
        check_same(m);
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > m.exp_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& m) const {
        check_same(m);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] += m.exp_[i];
        return r;
    }

    Monomial times_variable(std::size_t i, unsigned power = 1) const {
        Monomial r = *this;
        r.exp_.at(i) += power;
        return r;
    }

    /// this / d when d divides this.
    std::optional<Monomial> divide(const Monomial& d) const {
        if (!d.divides(*this)) return std::nullopt;
        Monomial r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] -= d.exp_[i];
        return r;
    }

    Monomial gcd(const Monomial& m) const {
        check_same(m);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = std::min(exp_[i], m.exp_[i]);
        return r;
    }

    Monomial lcm(const Monomial& m) const {
        check_same(m);
        Monomial r = *this;
        for (std::size_t i = 0; i < exp_.size(); ++i) r.exp_[i] = std::max(exp_[i], m.exp_[i]);
        return r;
    }

    // smallest / largest index of a variable dividing the monomial
    std::size_t min_index() const {
        for (std::size_t i = 0; i < exp_.size(); ++i)
            if (exp_[i] > 0) return i;
        throw std::domain_error("Monomial::min_index: monomial is 1");
    }
    std::size_t max_index() const {
        for (std::size_t i = exp_.size(); i-- > 0;)
            if (exp_[i] > 0) return i;
        throw std::domain_error("Monomial::max_index: monomial is 1");
    }

    /// Textual form x1^a1*x2^a2 with exponent 1 and absent variables elided;
    /// the unit monomial prints as 1.
    std::string to_string(const std::vector<std::string>& names) const {
        std::string out;
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            if (exp_[i] == 0) continue;
            if (!out.empty()) out += '*';
            out += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
            if (exp_[i] > 1) out += '^' + std::to_string(exp_[i]);
        }
        return out.empty() ? "1" : out;
    }
    std::string to_string() const { return to_string({}); }

    // plain lexicographic comparison of exponent vectors
    auto operator<=>(const Monomial&) const = default;

private:
    void check_same(const Monomial& m) const {
        if (m.exp_.size() != exp_.size()) throw std::invalid_argument("Monomial: variable count mismatch");
    }

    std::vector<unsigned> exp_;
};

/// Enumeration order used for every deterministic output: increasing degree,
/// and within a degree decreasing lexicographically with x1 > x2 > ... (so
/// 1, x, y, x^2, xy, y^2, ...).
struct GradedOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a > b;
    }
};

/// All monomials of degree d in e variables, in GradedOrder.
inline std::vector<Monomial> monomials_of_degree(std::size_t num_vars, unsigned d) {
    std::vector<Monomial> out;
    std::vector<unsigned> e(num_vars, 0);
    // recursive fill, x1 exponent descending gives the lex-descending order
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (num_vars == 0) {
            if (left == 0) out.emplace_back(e);
            return;
        }
        if (i + 1 == num_vars) {
            e[i] = left;
            out.emplace_back(e);
            return;
        }
        for (unsigned a = left + 1; a-- > 0;) {
            e[i] = a;
            self(self, i + 1, left - a);
        }
        e[i] = 0;
    };
    rec(rec, 0, d);
    return out;
}

class MonomialIdeal;
MonomialIdeal minimalize_generators(std::size_t num_vars, std::vector<Monomial> gens);

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    /// The zero ideal.
    explicit MonomialIdeal(std::size_t num_vars) : nvars_(num_vars) {}
    MonomialIdeal(std::size_t num_vars, std::vector<Monomial> gens) : nvars_(num_vars) {
        for (const auto& g : gens)
            if (g.num_vars() != num_vars) throw std::invalid_argument("MonomialIdeal: generator in wrong ring");
        gens_ = minimal_set(std::move(gens));
    }

    static MonomialIdeal unit(std::size_t num_vars) { return MonomialIdeal(num_vars, {Monomial::one(num_vars)}); }
    static MonomialIdeal maximal(std::size_t num_vars) {
        std::vector<Monomial> g;
        for (std::size_t i = 0; i < num_vars; ++i) g.push_back(Monomial::variable(num_vars, i));
        return MonomialIdeal(num_vars, std::move(g));
    }
    static MonomialIdeal maximal_power(std::size_t num_vars, unsigned t) {
        return MonomialIdeal(num_vars, monomials_of_degree(num_vars, t));
    }

    std::size_t num_vars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }
    /// this ⊇ other
    bool contains(const MonomialIdeal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool operator==(const MonomialIdeal& o) const { return nvars_ == o.nvars_ && gens_ == o.gens_; }

    MonomialIdeal operator+(const MonomialIdeal& o) const {
        check_same(o);
        std::vector<Monomial> g = gens_;
        g.insert(g.end(), o.gens_.begin(), o.gens_.end());
        return MonomialIdeal(nvars_, std::move(g));
    }

    MonomialIdeal operator*(const MonomialIdeal& o) const {
        check_same(o);
        std::vector<Monomial> g;
        for (const auto& a : gens_)
            for (const auto& b : o.gens_) g.push_back(a * b);
        return MonomialIdeal(nvars_, std::move(g));
    }

    MonomialIdeal power(unsigned t) const {
        if (t == 0) return unit(nvars_);
        MonomialIdeal r = *this;
        for (unsigned i = 1; i < t; ++i) r = r * (*this);
        return r;
    }

    /// Intersection via pairwise lcm of generators.
    MonomialIdeal intersect(const MonomialIdeal& o) const {
        check_same(o);
        std::vector<Monomial> g;
        for (const auto& a : gens_)
            for (const auto& b : o.gens_) g.push_back(a.lcm(b));
        return MonomialIdeal(nvars_, std::move(g));
    }

    /// (I : g), generated by m / gcd(m, g).
    MonomialIdeal colon(const Monomial& g) const {
        std::vector<Monomial> q;
        for (const auto& m : gens_) q.push_back(*m.divide(m.gcd(g)));
        return MonomialIdeal(nvars_, std::move(q));
    }

    /// (I : J) = intersection over generators g of J of (I : g). (I : 0) = (1).
    MonomialIdeal colon(const MonomialIdeal& j) const {
        check_same(j);
        MonomialIdeal r = unit(nvars_);
        for (const auto& g : j.gens_) r = r.intersect(colon(g));
        return r;
    }

    /// Exponent of the smallest pure power of x_i in the ideal, if any.
    std::optional<unsigned> pure_power(std::size_t i) const {
        std::optional<unsigned> best;
        for (const auto& g : gens_) {
            bool pure = true;
            for (std::size_t k = 0; k < nvars_; ++k)
                if (k != i && g[k] != 0) pure = false;
            if (pure && (!best || g[i] < *best)) best = g[i];
        }
        return best;
    }

    /// True when the quotient S/I is finite-dimensional.
    bool is_artinian() const {
        for (std::size_t i = 0; i < nvars_; ++i)
            if (!pure_power(i)) return false;
        return true;
    }

    /// Monomials outside the ideal, in GradedOrder.
    std::vector<Monomial> standard_monomials() const {
        for (std::size_t i = 0; i < nvars_; ++i)
            if (!pure_power(i))
                throw std::domain_error("standard_monomials: no pure power of variable " + std::to_string(i + 1) +
                                        " in ideal, quotient is not Artinian");
        std::vector<Monomial> out;
        if (contains(Monomial::one(nvars_))) return out;
        // the standard monomials form an order ideal: grow it from 1
        std::set<Monomial> seen{Monomial::one(nvars_)};
        std::deque<Monomial> queue{Monomial::one(nvars_)};
        while (!queue.empty()) {
            Monomial m = queue.front();
            queue.pop_front();
            out.push_back(m);
            for (std::size_t i = 0; i < nvars_; ++i) {
                Monomial n = m.times_variable(i);
                if (!contains(n) && seen.insert(n).second) queue.push_back(n);
            }
        }
        std::sort(out.begin(), out.end(), GradedOrder{});
        return out;
    }

    std::string to_string(const std::vector<std::string>& names) const {
        std::string out = "(";
        for (std::size_t i = 0; i < gens_.size(); ++i) out += (i ? "," : "") + gens_[i].to_string(names);
        if (gens_.empty()) out += "0";
        return out + ")";
    }
    std::string to_string() const { return to_string({}); }

private:
    void check_same(const MonomialIdeal& o) const {
        if (o.nvars_ != nvars_) throw std::invalid_argument("MonomialIdeal: variable count mismatch");
    }

    static std::vector<Monomial> minimal_set(std::vector<Monomial> gens) {
        std::sort(gens.begin(), gens.end(), GradedOrder{});
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> kept;
        for (const auto& g : gens) {
            bool redundant = false;
            for (const auto& k : kept)
                if (k.divides(g)) {
                    redundant = true;
                    break;
                }
            if (!redundant) kept.push_back(g);
        }
        return kept;  // already in GradedOrder
    }

    std::size_t nvars_ = 0;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal minimalize_generators(std::size_t num_vars, std::vector<Monomial> gens) {
    return MonomialIdeal(num_vars, std::move(gens));
}

inline void check_borel_indices(std::size_t num_vars, std::size_t i, std::size_t j) {
    if (!(i < j && j < num_vars)) throw std::out_of_range("Borel move needs 0 <= i < j < num_vars");
}

/// m * x_i / x_j for i < j, when x_j divides m.
inline std::optional<Monomial> borel_move(const Monomial& m, std::size_t i, std::size_t j) {
    check_borel_indices(m.num_vars(), i, j);
    if (m[j] == 0) return std::nullopt;
    auto r = m.divide(Monomial::variable(m.num_vars(), j));
    return r->times_variable(i);
}

/// m * x_j / x_i for i < j, when x_i divides m.
inline std::optional<Monomial> inverse_borel_move(const Monomial& m, std::size_t i, std::size_t j) {
    check_borel_indices(m.num_vars(), i, j);
    if (m[i] == 0) return std::nullopt;
    auto r = m.divide(Monomial::variable(m.num_vars(), i));
    return r->times_variable(j);
}

inline bool is_borel_fixed(const MonomialIdeal& ideal) {
    const auto e = ideal.num_vars();
    for (const auto& g : ideal.generators())
        for (std::size_t j = 0; j < e; ++j)
            for (std::size_t i = 0; i < j; ++i)
                if (auto m = borel_move(g, i, j); m && !ideal.contains(*m)) return false;
    return true;
}

/// The monomials reachable from start by Borel and inverse Borel moves.
inline std::set<Monomial> borel_orbit(const Monomial& start) {
    const auto e = start.num_vars();
    std::set<Monomial> seen{start};
    std::deque<Monomial> queue{start};
    while (!queue.empty()) {
        Monomial m = queue.front();
        queue.pop_front();
        for (std::size_t j = 0; j < e; ++j)
            for (std::size_t i = 0; i < j; ++i)
                for (auto n : {borel_move(m, i, j), inverse_borel_move(m, i, j)})
                    if (n && seen.insert(*n).second) queue.push_back(*n);
    }
    return seen;
}

/// dim_k(bound / j) for monomial ideals j ⊆ bound: the number of monomials in
/// bound but not in j. Throws when that number is infinite.
inline std::size_t k_dim_between(const MonomialIdeal& j, const MonomialIdeal& bound) {
    if (j.num_vars() != bound.num_vars()) throw std::invalid_argument("k_dim_between: variable count mismatch");
    const auto e = j.num_vars();
    // Membership in either ideal only depends on exponents capped at the
    // largest generator exponent, so a witness at the cap repeats forever.
    std::vector<unsigned> cap(e, 0);
    for (const auto* ideal : {&j, &bound})
        for (const auto& g : ideal->generators())
            for (std::size_t i = 0; i < e; ++i) cap[i] = std::max(cap[i], g[i]);
    std::size_t count = 0;
    std::vector<unsigned> x(e, 0);
    while (true) {
        Monomial m(x);
        if (bound.contains(m) && !j.contains(m)) {
            for (std::size_t i = 0; i < e; ++i)
                if (x[i] == cap[i])
                    throw std::domain_error("k_dim_between: quotient " + bound.to_string() + " / " + j.to_string() +
                                            " is infinite-dimensional");
            ++count;
        }
        std::size_t i = 0;
        while (i < e && x[i] == cap[i]) x[i++] = 0;
        if (i == e) break;
        ++x[i];
    }
    return count;
}

}  // namespace artinian
