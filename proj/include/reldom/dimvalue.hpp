#pragma once

#include <algorithm>
#include <string>

#include "reldom/errors.hpp"

namespace reldom {

// A homological dimension: a nonnegative integer, a certified infinity, or a
// lower bound ">=cap" when a computation ran out of budget.
struct DimValue {
    enum class Kind { Finite, Infinite, AtLeast };
    Kind kind = Kind::Finite;
    int n = 0;  // the finite value, or the bound for AtLeast

    static DimValue finite(int v) { return {Kind::Finite, v}; }
    static DimValue infinite() { return {Kind::Infinite, 0}; }
    static DimValue at_least(int v) { return {Kind::AtLeast, v}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinite() const { return kind == Kind::Infinite; }
    bool is_bound() const { return kind == Kind::AtLeast; }

    int finite_value() const {
        if (!is_finite()) throw input_error("dimension value is not finite: " + str());
        return n;
    }

    // Certified comparison with an integer threshold; throws when the stored
    // bound cannot decide.
    bool ge(int d) const {
        switch (kind) {
            case Kind::Finite: return n >= d;
            case Kind::Infinite: return true;
            case Kind::AtLeast:
                if (n >= d) return true;
                throw undetermined_error("cannot certify >= " + std::to_string(d), n);
        }
        return false;
    }
    bool le(int d) const {
        switch (kind) {
            case Kind::Finite: return n <= d;
            case Kind::Infinite: return false;
            case Kind::AtLeast:
                if (n > d) return false;
                throw undetermined_error("cannot certify <= " + std::to_string(d), n);
        }
        return false;
    }

    DimValue plus(int t) const {
        if (is_finite()) return finite(n + t);
        if (is_bound()) return at_least(n + t);
        return infinite();
    }

    std::string str() const {
        switch (kind) {
            case Kind::Finite: return std::to_string(n);
            case Kind::Infinite: return "inf";
            case Kind::AtLeast: return ">=" + std::to_string(n);
        }
        return "?";
    }

    friend bool operator==(const DimValue& a, const DimValue& b) {
        return a.kind == b.kind && (a.kind == Kind::Infinite || a.n == b.n);
    }
};

// min semantics: infinity is the top element; a bound ">=c" only wins against
// values that are certainly larger.
inline DimValue dim_min(const DimValue& a, const DimValue& b) {
    if (a.is_infinite()) return b;
    if (b.is_infinite()) return a;
    if (a.is_finite() && b.is_finite()) return DimValue::finite(std::min(a.n, b.n));
    // at least one side is a bound
    if (a.is_finite()) return a.n <= b.n ? a : b;  // b is a bound >= b.n
    if (b.is_finite()) return b.n <= a.n ? b : a;
    return DimValue::at_least(std::min(a.n, b.n));
}

inline DimValue dim_max(const DimValue& a, const DimValue& b) {
    if (a.is_infinite() || b.is_infinite()) return DimValue::infinite();
    if (a.is_finite() && b.is_finite()) return DimValue::finite(std::max(a.n, b.n));
    if (a.is_bound() && b.is_bound()) return DimValue::at_least(std::max(a.n, b.n));
    // one finite, one bound: the bound may still exceed the finite value
    const DimValue& fin = a.is_finite() ? a : b;
    const DimValue& bnd = a.is_finite() ? b : a;
    if (bnd.n >= fin.n) return bnd;
    return DimValue::at_least(bnd.n);
}

}  // namespace reldom
