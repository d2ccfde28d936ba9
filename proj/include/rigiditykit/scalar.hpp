#pragma once

// Scalar kinds shared by every module. Two kinds exist:
//
//   Rational — exact arithmetic on arbitrary-precision rationals (GMP's
//              mpq_class). All certification paths run in this kind so
//              that strict inequalities never depend on rounding.
//   double   — IEEE float64, used for the trigonometric hypersurface
//              models and the informative exponential-bound checks.
//
// mpq_class keeps values in reduced form (gcd(num, den) = 1, den > 0)
// through arithmetic; construction sites that bypass arithmetic must
// canonicalize, which the helpers below do.

#include <gmpxx.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>

#include "rigiditykit/errors.hpp"

namespace rigiditykit {

using Rational = mpq_class;

template <class K>
struct kind_traits;

template <>
struct kind_traits<Rational> {
    static constexpr bool is_exact = true;
    static constexpr const char* name = "exact-rational";
};

template <>
struct kind_traits<double> {
    static constexpr bool is_exact = false;
    static constexpr const char* name = "float64";
};

template <class K>
inline constexpr bool is_exact_v = kind_traits<K>::is_exact;

inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(double x) { return x; }

inline bool is_finite_value(const Rational&) { return true; }
inline bool is_finite_value(double x) { return std::isfinite(x); }

// Reduced rational from an integer pair.
inline Rational rational(long num, long den = 1) {
    if (den == 0) throw ParseError("rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// x^e by repeated squaring; negative e inverts first (x must be nonzero).
template <class K>
K pow_int(K x, long e) {
    if (e < 0) {
        if (x == K(0)) throw InvalidRange("pow_int: zero base with negative exponent");
        x = K(1) / x;
        e = -e;
    }
    K result(1);
    while (e > 0) {
        if (e & 1) result = result * x;
        x = x * x;
        e >>= 1;
    }
    return result;
}

// Kind-aware equality for internal identity checks: exact for rationals,
// relative tolerance for floats.
inline bool kind_equal(const Rational& a, const Rational& b, double = 0.0) { return a == b; }
inline bool kind_equal(double a, double b, double rel_tol = 1e-9) {
    double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= rel_tol * scale;
}

// Parses "p/q" or a plain integer (optional leading sign, q >= 1).
Rational parse_rational(std::string_view text);

// Reduced "p/q"; plain "p" when the denominator is 1.
std::string to_string(const Rational& x);

// 17 significant digits, enough to round-trip any double.
std::string format_double(double x);

}  // namespace rigiditykit
