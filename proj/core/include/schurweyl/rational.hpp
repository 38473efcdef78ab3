#pragma once

#include <gmpxx.h>

#include <string>

namespace schurweyl {

/// Exact rational in canonical form (positive denominator, reduced).
using Rational = mpq_class;
/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Builds a canonicalized p/q.
inline Rational make_rational(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational &r) { return r.get_str(); }

/// Always "p/q", also for integers ("1/1").
inline std::string to_fraction_string(const Rational &r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline std::string to_string(const BigInt &z) { return z.get_str(); }

inline double to_double(const Rational &r) { return r.get_d(); }

} // namespace schurweyl
