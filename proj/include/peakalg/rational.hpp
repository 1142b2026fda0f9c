#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace peakalg {

using Integer = mpz_class;

// Exact rational scalar. Backed by GMP; mpq_class keeps values canonical
// (reduced, positive denominator) as long as they are built through
// arithmetic or through make_rational below.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational &x) { return sgn(x) == 0; }

inline Rational inverse(const Rational &x) {
    if (is_zero(x)) throw std::domain_error("division by zero");
    return 1 / x;
}

inline std::string to_string(const Rational &x) {
    return x.get_str();
}

// Parses "p" or "p/q".
inline Rational rational_from_string(const std::string &s) {
    Rational q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

} // namespace peakalg
