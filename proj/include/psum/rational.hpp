#pragma once

#include <iosfwd>
#include <string>

#include "psum/integer.hpp"

namespace psum {

// Exact fraction of Integers, kept in lowest terms with denominator >= 1 at
// all times, so equality is plain structural equality.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  Rational(Integer n) : num_(std::move(n)), den_(1) {}
  Rational(Integer num, Integer den)
      : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  // The exact Integer value; throws std::logic_error if den != 1.
  Integer to_integer() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws on division by zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  // "p/q", or just "p" when q == 1.
  std::string str() const;

 private:
  void normalize();

  Integer num_;
  Integer den_;  // > 0
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace psum
