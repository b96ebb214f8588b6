#pragma once
#include <gmpxx.h>

#include <string>
#include <vector>

namespace projcoh {

using Int = mpz_class;
using Rat = mpq_class;

// C(n,k), exact; zero outside 0 <= k <= n.
Int binomial(long n, long k);

// binomial as long; asserts the value fits.
long binomial_l(long n, long k);

// lcm of denominators of a rational vector (>= 1).
Int common_denominator(const std::vector<Rat>& v);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

// parse "p/q" or "p"; throws std::invalid_argument on junk.
Rat parse_rational(const std::string& s);

}  // namespace projcoh
