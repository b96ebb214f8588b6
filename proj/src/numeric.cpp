#include "projcoh/numeric.hpp"

#include <cassert>
#include <stdexcept>

namespace projcoh {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

long binomial_l(long n, long k) {
  Int b = binomial(n, k);
  assert(b.fits_slong_p());
  return b.get_si();
}

Int common_denominator(const std::vector<Rat>& v) {
  Int d = 1;
  for (const Rat& x : v) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den().get_mpz_t());
  return d;
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  std::string t = s;
  if (t.find('/') == std::string::npos) t += "/1";
  Rat r;
  if (r.set_str(t, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace projcoh
