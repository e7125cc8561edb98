#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <string>

#include "reldom/errors.hpp"

namespace reldom {

// ---------------------------------------------------------------------------
// Rational scalars: thin wrapper over GMP's mpq_class so that results are
// always materialized and canonical (lowest terms, positive denominator).
// ---------------------------------------------------------------------------
struct Rat {
    mpq_class v;

    Rat() : v(0) {}
    explicit Rat(long n) : v(n) {}
    explicit Rat(mpq_class q) : v(std::move(q)) {}

    std::string str() const { return v.get_str(); }
};

// GF(p) scalars are bare residues; all arithmetic goes through the field
// object, which carries the modulus.
using GFElt = std::uint64_t;

// ---------------------------------------------------------------------------
// Field objects. All scalar arithmetic is routed through one of these, so the
// element types can stay as small as possible.
// ---------------------------------------------------------------------------
struct FieldQQ {
    using Elt = Rat;

    Elt zero() const { return Rat(); }
    Elt one() const { return Rat(1); }
    Elt from_long(long n) const { return Rat(n); }
    Elt add(const Elt& a, const Elt& b) const { return Rat(mpq_class(a.v + b.v)); }
    Elt sub(const Elt& a, const Elt& b) const { return Rat(mpq_class(a.v - b.v)); }
    Elt mul(const Elt& a, const Elt& b) const { return Rat(mpq_class(a.v * b.v)); }
    Elt neg(const Elt& a) const { return Rat(mpq_class(-a.v)); }
    Elt inv(const Elt& a) const {
        if (is_zero(a)) throw input_error("division by zero in QQ");
        return Rat(mpq_class(1 / a.v));
    }
    bool is_zero(const Elt& a) const { return a.v == 0; }
    bool eq(const Elt& a, const Elt& b) const { return a.v == b.v; }
    std::string to_string(const Elt& a) const { return a.v.get_str(); }
    Elt from_string(const std::string& s) const {
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
        if (q.get_den() == 0) throw input_error("zero denominator: " + s);
        q.canonicalize();
        return Rat(q);
    }
    std::string name() const { return "QQ"; }
    friend bool operator==(const FieldQQ&, const FieldQQ&) { return true; }
};

struct FieldGF {
    using Elt = GFElt;
    std::uint64_t p = 0;

    FieldGF() = default;
    explicit FieldGF(std::uint64_t modulus) : p(modulus) {
        if (p < 2 || p >= (1ull << 31) || !is_prime(p))
            throw input_error("GF modulus must be a prime < 2^31: " + std::to_string(modulus));
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    Elt zero() const { return 0; }
    Elt one() const { return 1 % p; }
    Elt from_long(long n) const {
        long r = n % static_cast<long>(p);
        if (r < 0) r += static_cast<long>(p);
        return static_cast<Elt>(r);
    }
    Elt add(Elt a, Elt b) const { return (a + b) % p; }
    Elt sub(Elt a, Elt b) const { return (a + p - b) % p; }
    Elt mul(Elt a, Elt b) const { return (a * b) % p; }
    Elt neg(Elt a) const { return a == 0 ? 0 : p - a; }
    Elt inv(Elt a) const {
        if (a == 0) throw input_error("division by zero in GF(" + std::to_string(p) + ")");
        return pow(a, p - 2);
    }
    Elt pow(Elt a, std::uint64_t e) const {
        Elt r = one(), b = a % p;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    bool is_zero(Elt a) const { return a == 0; }
    bool eq(Elt a, Elt b) const { return a == b; }
    std::string to_string(Elt a) const { return std::to_string(a); }
    Elt from_string(const std::string& s) const {
        // accept integers and p/q with q invertible
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return from_long(std::stol(s));
            Elt num = from_long(std::stol(s.substr(0, slash)));
            Elt den = from_long(std::stol(s.substr(slash + 1)));
            return mul(num, inv(den));
        } catch (const std::invalid_argument&) {
            throw input_error("bad GF(" + std::to_string(p) + ") literal: " + s);
        } catch (const std::out_of_range&) {
            throw input_error("GF literal out of range: " + s);
        }
    }
    std::string name() const { return "GF:" + std::to_string(p); }
    friend bool operator==(const FieldGF& a, const FieldGF& b) { return a.p == b.p; }
};

}  // namespace reldom
