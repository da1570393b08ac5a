#include "psum/polynomial.hpp"

#include <ostream>
#include <sstream>
#include <stdexcept>

#include "psum/integer.hpp"

namespace psum {

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(Rational c) {
  return Polynomial{{std::move(c)}};
}

Polynomial Polynomial::variable() {
  return Polynomial{{Rational(0), Rational(1)}};
}

Polynomial Polynomial::monomial(Rational c, long degree) {
  if (degree < 0) throw std::domain_error("monomial: negative degree");
  std::vector<Rational> v(static_cast<size_t>(degree) + 1, Rational(0));
  v.back() = std::move(c);
  return Polynomial{std::move(v)};
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(-c);
  return Polynomial{std::move(v)};
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()),
                          Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = v[i] + a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] = v[i] + b.coeffs_[i];
  return Polynomial{std::move(v)};
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return Polynomial{std::move(v)};
}

Polynomial operator*(const Polynomial& p, const Rational& s) {
  std::vector<Rational> v;
  v.reserve(p.coeffs_.size());
  for (const auto& c : p.coeffs_) v.push_back(c * s);
  return Polynomial{std::move(v)};
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(
    const Polynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divmod: division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const long dd = divisor.degree();
  const Rational& lead = divisor.coeffs_.back();
  long rd = static_cast<long>(rem.size()) - 1;
  if (rd < dd) return {Polynomial{}, *this};
  std::vector<Rational> quot(static_cast<size_t>(rd - dd) + 1, Rational(0));
  while (rd >= dd) {
    Rational q = rem[static_cast<size_t>(rd)] / lead;
    quot[static_cast<size_t>(rd - dd)] = q;
    if (!q.is_zero()) {
      for (long i = 0; i <= dd; ++i) {
        size_t idx = static_cast<size_t>(rd - dd + i);
        rem[idx] = rem[idx] - q * divisor.coeffs_[static_cast<size_t>(i)];
      }
    }
    rem.pop_back();
    --rd;
  }
  return {Polynomial{std::move(quot)}, Polynomial{std::move(rem)}};
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * inner + Polynomial::constant(*it);
  return acc;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    bool negative = c < Rational(0);
    Rational mag = negative ? -c : c;
    if (first) {
      if (negative) os << '-';
      first = false;
    } else {
      os << (negative ? " - " : " + ");
    }
    bool unit = mag == Rational(1);
    if (i == 0) {
      os << mag.str();
    } else {
      if (!unit) os << mag.str() << '*';
      os << var;
      if (i > 1) os << '^' << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.str();
}

Polynomial falling_factorial_generalized(long m) {
  if (m < 1) throw std::domain_error("falling_factorial_generalized: m must be >= 1");
  Polynomial x = Polynomial::variable();
  Polynomial prod = Polynomial::constant(Rational(1));
  for (long j = 0; j < m; ++j)
    prod = prod * (x - Polynomial::constant(Rational(Integer(j) * Integer(j + 1))));
  return prod;
}

Polynomial binomial_poly(const Polynomial& upper, long lower) {
  if (lower < 0) return Polynomial{};
  Polynomial prod = Polynomial::constant(Rational(1));
  for (long i = 0; i < lower; ++i)
    prod = prod * (upper - Polynomial::constant(Rational(i)));
  return prod * Rational(Integer(1), factorial(static_cast<unsigned long>(lower)));
}

Polynomial interpolate(const std::vector<std::pair<Rational, Rational>>& points) {
  // Newton's divided differences, then expand the nested form.
  const size_t n = points.size();
  if (n == 0) return Polynomial{};
  std::vector<Rational> coef;
  coef.reserve(n);
  std::vector<Rational> col;
  col.reserve(n);
  for (const auto& p : points) col.push_back(p.second);
  coef.push_back(col[0]);
  for (size_t level = 1; level < n; ++level) {
    for (size_t i = 0; i + level < n; ++i) {
      col[i] = (col[i + 1] - col[i]) /
               (points[i + level].first - points[i].first);
    }
    col.pop_back();
    coef.push_back(col[0]);
  }
  Polynomial acc = Polynomial::constant(coef[n - 1]);
  for (size_t i = n - 1; i-- > 0;) {
    Polynomial shift = Polynomial::variable() - Polynomial::constant(points[i].first);
    acc = acc * shift + Polynomial::constant(coef[i]);
  }
  return acc;
}

}  // namespace psum
