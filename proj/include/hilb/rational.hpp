#pragma once

#include <gmpxx.h>
#include <string>
#include <stdexcept>

namespace hilb {

// Exact arbitrary-precision rational, canonical form maintained by GMP
// (gcd-reduced, denominator > 0, zero is 0/1).
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("parse_rat: bad literal '" + s + "'");
    q.canonicalize();
    return q;
}

inline int sign(const Rat& q) { return sgn(q); }

} // namespace hilb
