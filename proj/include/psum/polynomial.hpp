#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "psum/rational.hpp"

namespace psum {

// Dense univariate polynomial with exact Rational coefficients, stored in
// ascending degree. Canonical form: no trailing zero coefficient; the zero
// polynomial is the empty list, with degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  static Polynomial constant(Rational c);
  static Polynomial variable();                       // x
  static Polynomial monomial(Rational c, long degree);  // c * x^degree

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  // Coefficient of x^i; 0 beyond the stored degree.
  Rational coeff(long i) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational eval(const Rational& x) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& p, const Rational& s);
  friend Polynomial operator*(const Rational& s, const Polynomial& p) {
    return p * s;
  }

  // Quotient and remainder of exact rational long division (divisor != 0).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const;

  // this(inner(x)).
  Polynomial compose(const Polynomial& inner) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Ascending exact-form rendering, e.g. "18*n + 168*n^3"; "0" for zero.
  std::string str(const std::string& var = "n") const;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Polynomial& p);

// Generalized falling factorial: the monic degree-m product
// (x - 0*1)(x - 1*2)...(x - (m-1)m), for m >= 1.
Polynomial falling_factorial_generalized(long m);

// Binomial coefficient with polynomial upper argument:
// C(upper, lower) = upper*(upper-1)*...*(upper-lower+1) / lower!
// as a polynomial, so it can be evaluated at non-integer points.
Polynomial binomial_poly(const Polynomial& upper, long lower);

// Unique interpolating polynomial through the given (x, y) points
// (distinct x values), degree < #points.
Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points);

}  // namespace psum
