#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace skewcalc {

// All certified arithmetic in this project is exact; these are the only
// number types used outside of tests.
using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

/// Parse "p", "-p" or "p/q" into a canonical rational.
Rat parse_rational(const std::string& text);

std::string to_string(const Rat& q);

} // namespace skewcalc
