#pragma once
// Exact rational scalars. Thin layer over GMP's mpq_class: canonical form
// (reduced, positive denominator) is maintained by GMP; we add parsing and
// the "p/q" string form used by the JSON schema.

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace corecx {

using Rational = mpq_class;

inline Rational rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", optional leading '-'. Rejects garbage loudly.
Rational rat_parse(const std::string& s);

// "p" when q = 1, otherwise "p/q"; q always positive.
std::string rat_str(const Rational& r);

Rational rat_factorial(unsigned n);
Rational rat_binomial(unsigned n, unsigned k);

} // namespace corecx
