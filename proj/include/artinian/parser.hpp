#pragma once

// Ring literals FIELD '[' vars ']' '/' ideal_expr, ring elements, and
// presentation grids.
//
//   ideal_expr := product ('+' product)*
//   product    := power ('*' power)*
//   power      := atom ('^' integer)?
//   atom       := variable | '1' | '(' ideal_expr (',' ideal_expr)* ')'
//
// A bare product of variables is a principal monomial ideal, so
// (x,y^2,z^3)^2, (x^2,x*y)+(y^3) and (x,y)*(x,y^2) all denote monomial
// ideals. '+' directly between bare monomials would be a polynomial and is
// rejected.

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace artinian {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

struct FieldSpec {
    bool rational = false;
    std::uint32_t characteristic = 32003;

    std::string to_string() const { return rational ? "QQ" : "GF(" + std::to_string(characteristic) + ")"; }
    bool operator==(const FieldSpec&) const = default;
};

struct RingExpression {
    FieldSpec field;
    std::vector<std::string> variables;
    MonomialIdeal ideal;

    std::string to_string() const {
        std::string vars;
        for (std::size_t i = 0; i < variables.size(); ++i) vars += (i ? "," : "") + variables[i];
        return field.to_string() + "[" + vars + "]/" + ideal.to_string(variables);
    }
};

namespace detail {

class Cursor {
public:
    explicit Cursor(std::string text) : s_(std::move(text)) {}

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool done() {
        skip();
        return i_ >= s_.size();
    }
    char peek() {
        skip();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++i_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    bool accept_word(const std::string& w) {
        skip();
        if (s_.compare(i_, w.size(), w) != 0) return false;
        i_ += w.size();
        return true;
    }
    std::string identifier() {
        skip();
        std::size_t start = i_;
        if (i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) {
            ++i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        }
        if (start == i_) fail("expected an identifier");
        return s_.substr(start, i_ - start);
    }
    bool at_digit() {
        skip();
        return i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]));
    }
    bool at_identifier() {
        skip();
        return i_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_');
    }
    unsigned long long integer() {
        skip();
        std::size_t start = i_;
        unsigned long long v = 0;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
            v = v * 10 + static_cast<unsigned>(s_[i_] - '0');
            if (v > (1ull << 40)) fail("integer too large");
            ++i_;
        }
        if (start == i_) fail("expected an integer");
        return v;
    }
    std::size_t pos() const { return i_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

private:
    std::string s_;
    std::size_t i_ = 0;
};

struct IdealNode {
    MonomialIdeal ideal;
    bool bare = false;  // a single monomial written without parentheses
};

class IdealParser {
public:
    IdealParser(Cursor& c, const std::vector<std::string>& vars) : c_(c), vars_(vars) {}

    IdealNode sum() {
        auto first_pos = c_.pos();
        IdealNode acc = product();
        while (c_.peek() == '+') {
            if (acc.bare) throw ParseError("non-monomial generator (sum of monomials)", first_pos);
            auto pos = c_.pos();
            c_.accept('+');
            IdealNode rhs = product();
            if (rhs.bare) throw ParseError("non-monomial generator (sum of monomials)", pos);
            acc = {acc.ideal + rhs.ideal, false};
        }
        if (c_.peek() == '-') c_.fail("non-monomial generator (subtraction)");
        return acc;
    }

private:
    IdealNode product() {
        IdealNode acc = power();
        while (c_.accept('*')) {
            IdealNode rhs = power();
            acc = {acc.ideal * rhs.ideal, acc.bare && rhs.bare};
        }
        return acc;
    }

    IdealNode power() {
        IdealNode base = atom();
        if (c_.accept('^')) {
            auto t = c_.integer();
            if (t == 0) base = {MonomialIdeal::unit(vars_.size()), base.bare};
            else base = {base.ideal.power(static_cast<unsigned>(t)), base.bare};
        }
        return base;
    }

    IdealNode atom() {
        const auto e = vars_.size();
        if (c_.accept('(')) {
            IdealNode acc{MonomialIdeal(e), false};
            do {
                acc.ideal = acc.ideal + sum().ideal;
            } while (c_.accept(','));
            c_.expect(')');
            return acc;
        }
        if (c_.at_digit()) {
            auto pos = c_.pos();
            auto v = c_.integer();
            if (v == 0) return {MonomialIdeal(e), true};
            if (v != 1) throw ParseError("coefficients are not allowed in monomial generators", pos);
            return {MonomialIdeal::unit(e), true};
        }
        if (c_.at_identifier()) {
            auto pos = c_.pos();
            auto name = c_.identifier();
            for (std::size_t i = 0; i < e; ++i)
                if (vars_[i] == name) return {MonomialIdeal(e, {Monomial::variable(e, i)}), true};
            throw ParseError("unknown variable '" + name + "'", pos);
        }
        c_.fail("expected '(', a variable or 1");
    }

    Cursor& c_;
    const std::vector<std::string>& vars_;
};

inline FieldSpec parse_field(Cursor& c) {
    FieldSpec f;
    if (c.accept_word("QQ")) {
        f.rational = true;
        return f;
    }
    if (c.accept_word("GF")) {
        c.expect('(');
        auto pos = c.pos();
        auto p = c.integer();
        if (p >= (1ull << 31) || !is_prime(p)) throw ParseError("GF(p) needs a prime p < 2^31", pos);
        c.expect(')');
        f.characteristic = static_cast<std::uint32_t>(p);
        return f;
    }
    if (c.accept_word("k")) return f;
    c.fail("expected a field: GF(p), QQ or k");
}

}  // namespace detail

inline RingExpression parse_ring(const std::string& text) {
    detail::Cursor c(text);
    RingExpression r;
    r.field = detail::parse_field(c);
    c.expect('[');
    do {
        auto pos = c.pos();
        auto v = c.identifier();
        for (const auto& w : r.variables)
            if (w == v) throw ParseError("duplicate variable '" + v + "'", pos);
        r.variables.push_back(v);
    } while (c.accept(','));
    c.expect(']');
    c.expect('/');
    detail::IdealParser ip(c, r.variables);
    r.ideal = ip.sum().ideal;
    if (!c.done()) c.fail("trailing input");
    return r;
}

/// Monomial ideal expression in the given variables.
inline MonomialIdeal parse_ideal(const std::string& text, const std::vector<std::string>& variables) {
    detail::Cursor c(text);
    detail::IdealParser ip(c, variables);
    auto node = ip.sum();
    if (!c.done()) c.fail("trailing input");
    return node.ideal;
}

/// A polynomial Σ c·m with integer coefficients: terms like 3*x^2*y, -y, 1.
struct PolynomialTerms {
    std::vector<std::pair<long long, Monomial>> terms;
};

inline PolynomialTerms parse_polynomial(const std::string& text, const std::vector<std::string>& variables) {
    detail::Cursor c(text);
    const auto e = variables.size();
    PolynomialTerms out;
    bool first = true;
    while (first || !c.done()) {
        long long sign = 1;
        if (c.accept('-')) sign = -1;
        else if (!first) c.expect('+');
        else c.accept('+');
        first = false;
        long long coeff = 1;
        Monomial m(e);
        bool any = false;
        do {
            if (c.at_digit()) {
                coeff *= static_cast<long long>(c.integer());
            } else {
                auto pos = c.pos();
                auto name = c.identifier();
                std::size_t idx = e;
                for (std::size_t i = 0; i < e; ++i)
                    if (variables[i] == name) idx = i;
                if (idx == e) throw ParseError("unknown variable '" + name + "'", pos);
                unsigned power = 1;
                if (c.accept('^')) power = static_cast<unsigned>(c.integer());
                m = m.times_variable(idx, power);
            }
            any = true;
        } while (c.accept('*'));
        if (!any) c.fail("expected a term");
        out.terms.push_back({sign * coeff, m});
    }
    return out;
}

/// Grid of ring-element expressions, one row per line, entries separated by
/// tabs (or by whitespace when a line has no tabs). Blank lines and lines
/// starting with '#' are skipped.
inline std::vector<std::vector<std::string>> parse_grid(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::vector<std::string> row;
        if (line.find('\t') != std::string::npos) {
            std::string cell;
            std::istringstream ls(line);
            while (std::getline(ls, cell, '\t')) row.push_back(cell);
        } else {
            std::istringstream ls(line);
            std::string cell;
            while (ls >> cell) row.push_back(cell);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::invalid_argument("parse_grid: row " + std::to_string(rows.size() + 1) + " has " +
                                        std::to_string(row.size()) + " entries, expected " + std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace artinian
