#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "reldom/field.hpp"
#include "reldom/matrix.hpp"

namespace reldom {

// Polynomials over a field, coefficients ascending by degree, normalized so
// the leading coefficient is nonzero (the zero polynomial is the empty list).
template <class F>
struct Poly {
    using Elt = typename F::Elt;
    std::vector<Elt> c;

    static Poly trim(const F& f, std::vector<Elt> v) {
        while (!v.empty() && f.is_zero(v.back())) v.pop_back();
        return Poly{std::move(v)};
    }
    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one(const F& f) const { return deg() == 0 && f.eq(c[0], f.one()); }
};

template <class F>
Poly<F> poly_monic(const F& f, Poly<F> a) {
    if (a.is_zero()) return a;
    auto s = f.inv(a.c.back());
    for (auto& x : a.c) x = f.mul(x, s);
    return a;
}

template <class F>
Poly<F> poly_mul(const F& f, const Poly<F>& a, const Poly<F>& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<typename F::Elt> r(a.c.size() + b.c.size() - 1, f.zero());
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c[i], b.c[j]));
    return Poly<F>::trim(f, std::move(r));
}

template <class F>
Poly<F> poly_sub(const F& f, const Poly<F>& a, const Poly<F>& b) {
    std::vector<typename F::Elt> r(std::max(a.c.size(), b.c.size()), f.zero());
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = f.sub(r[i], b.c[i]);
    return Poly<F>::trim(f, std::move(r));
}

// Division with remainder: a = q*b + r.
template <class F>
std::pair<Poly<F>, Poly<F>> poly_divmod(const F& f, Poly<F> a, const Poly<F>& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    Poly<F> q;
    if (a.deg() < b.deg()) return {q, a};
    q.c.assign(a.deg() - b.deg() + 1, f.zero());
    auto lead_inv = f.inv(b.c.back());
    while (!a.is_zero() && a.deg() >= b.deg()) {
        int shift = a.deg() - b.deg();
        auto coef = f.mul(a.c.back(), lead_inv);
        q.c[shift] = coef;
        for (int i = 0; i <= b.deg(); ++i)
            a.c[i + shift] = f.sub(a.c[i + shift], f.mul(coef, b.c[i]));
        a = Poly<F>::trim(f, std::move(a.c));
    }
    return {Poly<F>::trim(f, std::move(q.c)), a};
}

template <class F>
Poly<F> poly_mod(const F& f, const Poly<F>& a, const Poly<F>& b) {
    return poly_divmod(f, a, b).second;
}

template <class F>
Poly<F> poly_gcd(const F& f, Poly<F> a, Poly<F> b) {
    while (!b.is_zero()) {
        auto r = poly_mod(f, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(f, a);
}

template <class F>
Poly<F> poly_derivative(const F& f, const Poly<F>& a) {
    std::vector<typename F::Elt> r;
    for (int i = 1; i <= a.deg(); ++i) r.push_back(f.mul(a.c[i], f.from_long(i)));
    return Poly<F>::trim(f, std::move(r));
}

// base^e mod m, with a big-integer exponent.
template <class F>
Poly<F> poly_powmod(const F& f, Poly<F> base, mpz_class e, const Poly<F>& m) {
    Poly<F> r{{f.one()}};
    base = poly_mod(f, base, m);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = poly_mod(f, poly_mul(f, r, base), m);
        base = poly_mod(f, poly_mul(f, base, base), m);
        e >>= 1;
    }
    return r;
}

// Evaluate p at a square matrix.
template <class F>
Matrix<F> poly_eval_matrix(const Poly<F>& p, const Matrix<F>& a) {
    const F& f = a.field();
    int n = a.rows();
    Matrix<F> acc(f, n, n);
    Matrix<F> pw = Matrix<F>::identity(f, n);
    for (int i = 0; i <= p.deg(); ++i) {
        if (!f.is_zero(p.c[i])) acc = acc.add(pw.scale(p.c[i]));
        if (i < p.deg()) pw = pw.mul(a);
    }
    return acc;
}

// Minimal polynomial of a square matrix: grow the span of vec(a^k) until a
// dependency appears.
template <class F>
Poly<F> minimal_polynomial(const Matrix<F>& a) {
    const F& f = a.field();
    int n = a.rows();
    if (n == 0) return Poly<F>{{f.one()}};
    Matrix<F> pw = Matrix<F>::identity(f, n);
    Matrix<F> cols(f, n * n, 0);
    for (int k = 0; k <= n; ++k) {
        auto v = vec(pw);
        auto coeffs = solve(cols, v);
        if (coeffs) {
            std::vector<typename F::Elt> c;
            for (int i = 0; i < k; ++i) c.push_back(f.neg(coeffs->at(i, 0)));
            c.push_back(f.one());
            return Poly<F>::trim(f, std::move(c));
        }
        cols = cols.hstack(v);
        pw = pw.mul(a);
    }
    throw input_error("minimal polynomial search failed");  // unreachable
}

namespace detail {

// Given a nontrivial divisor g | m, grow g until gcd(g, m/g) = 1. Returns the
// coprime pair, or nullopt when the saturation swallows all of m.
template <class F>
std::optional<std::pair<Poly<F>, Poly<F>>> saturate_divisor(const F& f, const Poly<F>& m,
                                                            Poly<F> g) {
    if (g.deg() <= 0 || g.deg() >= m.deg()) return std::nullopt;
    while (true) {
        auto co = poly_divmod(f, m, g).first;
        auto h = poly_gcd(f, g, co);
        if (h.is_one(f)) return std::make_pair(poly_monic(f, g), poly_monic(f, co));
        g = poly_mul(f, g, h);
        if (g.deg() >= m.deg()) return std::nullopt;
    }
}

inline std::vector<Poly<FieldGF>> divisor_candidates(const FieldGF& f, const Poly<FieldGF>& m,
                                                     std::uint64_t seed) {
    std::vector<Poly<FieldGF>> cand;
    // x | m
    if (f.is_zero(m.c[0])) cand.push_back(Poly<FieldGF>{{f.zero(), f.one()}});
    // repeated-factor part
    auto d = poly_derivative(f, m);
    if (!d.is_zero()) cand.push_back(poly_gcd(f, m, d));
    // distinct-degree slices: gcd(x^(p^k) - x, m)
    Poly<FieldGF> x{{f.zero(), f.one()}};
    mpz_class q = 1;
    for (int k = 1; k <= m.deg(); ++k) {
        q *= mpz_class(static_cast<unsigned long>(f.p));
        auto xq = poly_powmod(f, x, q, m);
        auto diff = xq;
        if (diff.deg() < 1) diff.c.resize(2, f.zero());
        diff.c[1] = f.sub(diff.c[1], f.one());
        diff = Poly<FieldGF>::trim(f, std::move(diff.c));
        cand.push_back(poly_gcd(f, diff, m));
        // random equal-degree probes inside that slice
        auto& slice = cand.back();
        if (slice.deg() > k && f.p > 2) {
            std::mt19937_64 rng(seed * 1099511628211ull + k);
            mpz_class half = (q - 1) / 2;
            for (int t = 0; t < 24; ++t) {
                std::vector<GFElt> rc(static_cast<size_t>(slice.deg()), 0);
                for (auto& cc : rc) cc = rng() % f.p;
                auto r = Poly<FieldGF>::trim(f, std::move(rc));
                if (r.is_zero()) continue;
                auto pw = poly_powmod(f, r, half, slice);
                if (pw.deg() >= 0) {
                    auto shifted = pw;
                    if (shifted.c.empty()) shifted.c.push_back(f.zero());
                    shifted.c[0] = f.sub(shifted.c[0], f.one());
                    shifted = Poly<FieldGF>::trim(f, std::move(shifted.c));
                    auto g = poly_gcd(f, shifted, slice);
                    if (g.deg() > 0 && g.deg() < slice.deg()) {
                        cand.push_back(g);
                        break;
                    }
                }
            }
        }
        if (f.p == 2 && k == 1 && slice.deg() >= 1) {
            // roots can only be 0 or 1; test x-1 directly
            Poly<FieldGF> lin{{f.one(), f.one()}};
            cand.push_back(poly_gcd(f, lin, m));
        }
    }
    return cand;
}

inline std::vector<Poly<FieldQQ>> divisor_candidates(const FieldQQ& f, const Poly<FieldQQ>& m,
                                                     std::uint64_t) {
    std::vector<Poly<FieldQQ>> cand;
    if (f.is_zero(m.c[0])) cand.push_back(Poly<FieldQQ>{{f.zero(), f.one()}});
    auto d = poly_derivative(f, m);
    cand.push_back(poly_gcd(f, m, d));
    // rational roots of the squarefree part, via trial division of the
    // extreme integer coefficients
    auto sf = poly_divmod(f, m, poly_gcd(f, m, d)).first;
    if (sf.deg() >= 1) {
        mpz_class lcm_den = 1;
        for (auto& c : sf.c) lcm_den = lcm(lcm_den, c.v.get_den());
        std::vector<mpz_class> ic;
        for (auto& c : sf.c) ic.push_back(mpq_class(c.v * lcm_den).get_num());
        size_t low = 0;
        while (low < ic.size() && ic[low] == 0) ++low;
        mpz_class c0 = low < ic.size() ? ic[low] : 0;
        mpz_class cl = ic.back();
        auto divisors = [](const mpz_class& n0) {
            std::vector<mpz_class> ds;
            mpz_class n = abs(n0);
            for (mpz_class t = 1; t * t <= n && t < 200000; ++t)
                if (n % t == 0) {
                    ds.push_back(t);
                    if (t != n / t) ds.push_back(n / t);
                }
            return ds;
        };
        auto eval_zero = [&](const mpq_class& x) {
            mpq_class acc = 0, pw = 1;
            for (auto& c : sf.c) {
                acc += c.v * pw;
                pw *= x;
            }
            return acc == 0;
        };
        for (auto& num : divisors(c0))
            for (auto& den : divisors(cl))
                for (int sgn : {1, -1}) {
                    mpq_class r(num * sgn, den);
                    r.canonicalize();
                    if (eval_zero(r))
                        cand.push_back(Poly<FieldQQ>{{Rat(mpq_class(-r)), f.one()}});
                }
    }
    return cand;
}

}  // namespace detail

// Try to write m = a*b with gcd(a,b) = 1 and both nontrivial. Used to split
// modules along generalized eigenspaces of an endomorphism. Over QQ a split
// hidden behind irrational eigenvalues can be missed; callers must cope.
template <class F>
std::optional<std::pair<Poly<F>, Poly<F>>> coprime_split(const F& f, const Poly<F>& m,
                                                         std::uint64_t seed = 0) {
    if (m.deg() <= 1) return std::nullopt;
    for (auto& g : detail::divisor_candidates(f, m, seed)) {
        auto pair = detail::saturate_divisor(f, m, g);
        if (pair) return pair;
    }
    return std::nullopt;
}

}  // namespace reldom
