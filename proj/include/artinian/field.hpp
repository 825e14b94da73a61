#pragma once

// Coefficient fields. A field is a small value object that knows how to do
// arithmetic on its Element type; matrices and algebras carry a copy of it.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace artinian {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// The prime field F_p with residues stored in [0, p).
class PrimeField {
public:
    using Element = std::uint32_t;

    explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not prime");
        if (p >= (1u << 31)) throw std::invalid_argument("PrimeField: modulus too large");
    }

    std::uint32_t characteristic() const { return p_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long v) const {
        long long r = v % static_cast<long long>(p_);
        if (r < 0) r += p_;
        return static_cast<Element>(r);
    }

    Element add(Element a, Element b) const {
        Element s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const {
        return static_cast<Element>(static_cast<std::uint64_t>(a) * b % p_);
    }
    // a - b*c, the elimination kernel
    Element sub_mul(Element a, Element b, Element c) const {
        std::uint64_t bc = static_cast<std::uint64_t>(b) * c % p_;
        return a >= bc ? static_cast<Element>(a - bc) : static_cast<Element>(a + p_ - bc);
    }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        long long t = 0, new_t = 1, r = p_, new_r = a;
        while (new_r != 0) {
            long long q = r / new_r;
            long long tmp = t - q * new_t;
            t = new_t;
            new_t = tmp;
            tmp = r - q * new_r;
            r = new_r;
            new_r = tmp;
        }
        return from_int(t);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    bool is_zero(Element a) const { return a == 0; }
    bool is_one(Element a) const { return a == 1; }
    bool equal(Element a, Element b) const { return a == b; }

    template <class Rng>
    Element random(Rng& rng) const {
        std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
        return dist(rng);
    }

    // Residues above p/2 print as negatives so that -1 reads as -1.
    std::string to_string(Element a) const {
        if (p_ > 2 && a > p_ / 2) return "-" + std::to_string(p_ - a);
        return std::to_string(a);
    }
    std::string name() const { return "GF(" + std::to_string(p_) + ")"; }

    bool operator==(const PrimeField& o) const { return p_ == o.p_; }

private:
    std::uint32_t p_;
};

/// The rationals with arbitrary-precision numerator and denominator.
class RationalField {
public:
    using Element = mpq_class;

    std::uint32_t characteristic() const { return 0; }

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(long long v) const { return Element(mpz_class(std::to_string(v))); }
    Element from_fraction(long long num, long long den) const {
        if (den == 0) throw std::domain_error("RationalField: zero denominator");
        Element q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
        q.canonicalize();
        return q;
    }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element sub_mul(const Element& a, const Element& b, const Element& c) const { return a - b * c; }
    Element inv(const Element& a) const {
        if (a == 0) throw std::domain_error("RationalField: inverse of zero");
        return 1 / a;
    }
    Element div(const Element& a, const Element& b) const { return a * inv(b); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_one(const Element& a) const { return a == 1; }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    // Small integers are enough for generic-position sampling.
    template <class Rng>
    Element random(Rng& rng) const {
        std::uniform_int_distribution<int> dist(-50, 50);
        return Element(dist(rng));
    }

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "QQ"; }

    bool operator==(const RationalField&) const { return true; }
};

}  // namespace artinian
