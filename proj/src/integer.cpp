#include "psum/integer.hpp"

namespace psum {

Integer factorial(const Integer& a) {
  if (a < 0)
    throw std::domain_error("factorial: negative argument " + to_string(a));
  if (!a.fits_ulong_p())
    throw std::domain_error("factorial: argument too large: " + to_string(a));
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), a.get_ui());
  return r;
}

Integer binomial(const Integer& a, const Integer& b) {
  if (a < 0)
    throw std::domain_error("binomial: negative upper index " + to_string(a));
  if (b < 0 || b > a) return 0;
  if (!b.fits_ulong_p())
    throw std::domain_error("binomial: lower index too large: " + to_string(b));
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), a.get_mpz_t(), b.get_ui());
  return r;
}

Integer int_pow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Integer pow2(unsigned long exp) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), exp);
  return r;
}

Integer div_exact(const Integer& a, const Integer& b) {
  if (b == 0) throw std::logic_error("div_exact: division by zero");
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()))
    throw std::logic_error("div_exact: " + to_string(b) + " does not divide " +
                           to_string(a));
  Integer r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace psum
