#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace psum {

// Arbitrary-precision signed integer. Exact +, -, *, divisibility; never
// overflows for any input in scope.
using Integer = mpz_class;

inline std::string to_string(const Integer& v) { return v.get_str(); }

// a! for a >= 0; throws std::domain_error on negative input.
Integer factorial(const Integer& a);

// C(a,b) for a >= 0. Out-of-range b (b < 0 or b > a) yields 0; the
// closed-form sums rely on those vanishing terms at small n.
Integer binomial(const Integer& a, const Integer& b);

// base^exp, exact.
Integer int_pow(const Integer& base, unsigned long exp);

// 2^exp.
Integer pow2(unsigned long exp);

// Exact quotient a/b; throws std::logic_error if b does not divide a.
Integer div_exact(const Integer& a, const Integer& b);

}  // namespace psum
