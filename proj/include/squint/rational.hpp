#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace squint {

// Exact arithmetic everywhere: no floating point in any verdict path.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational pow_rational(const Rational& base, long exp) {
    if (exp == 0) return Rational(1);
    Rational b = base;
    long e = exp;
    if (e < 0) {
        b = Rational(1) / b;
        e = -e;
    }
    Rational acc(1);
    while (e > 0) {
        if (e & 1) acc *= b;
        b *= b;
        e >>= 1;
    }
    return acc;
}

} // namespace squint
