#pragma once

#include <optional>
#include <string>
#include <vector>

#include "psum/integer.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

namespace psum {

// S: 1^k + 2^k + ... + n^k
// T: 1^k + 3^k + ... + (2n-1)^k
// Omega: n^k - (n-1)^k + ... + (-1)^{n-1} 1^k
enum class SumKind { S, T, Omega };

enum class EvalMethod {
  Brute,
  Theorem1,    // scaled even formula, S only
  KnuthEven,   // S_{2k}
  KnuthOdd,    // S_{2k-1}
  QForm,       // scaled odd via Q polynomials
  FForm,       // scaled odd via F polynomials
  BernoulliFormula,
  Recursive,
  Closed,      // T_{2k} / Omega_{2k} direct binomial forms
};

SumKind sum_kind_from_string(const std::string& s);    // "S" "T" "omega"
EvalMethod eval_method_from_string(long exponent, const std::string& s);

Integer brute(SumKind kind, long k, long n);

// 2^{2k} S_{2k}(n) = sum_m R(k,m) C(2n+m+1, 2m+1).
Integer s_even_scaled(long k, long n);

// S_{2k}(n) = sum_m R(k,m) (2n+1)/(2m+1) C(n+m, 2m).
Integer s_even_knuth(long k, long n);

// S_{2k-1}(n) = sum_m R(k,m)/m C(n+m, 2m).
Integer s_odd_knuth(long k, long n);

// T_{2k}(n) = sum_m R(k,m) C(2n+m, 2m+1).
Integer t_even(long k, long n);

// Omega_{2k}(n) = sum_m R(k,m) C(n+m, 2m).
Integer omega_even(long k, long n);

// Q_{k,1} = n^{2k-1}; Q_{k,m} = 2 sum_{j=m}^{k} C(2k-1,2j-2) R(j-1,m-1) n^{2k-2j+1}.
// Odd polynomial of degree 2k-2m+1.
Polynomial q_polynomial(long k, long m);

// 2^{2k-1} S_{2k-1}(n) = sum_m Q_{k,m}(n) C(n+m, 2m-1).
Integer s_odd_scaled_q(long k, long n);

// F_m(n) = sum_{i=1}^{n} C(2i+m-1, 2m-1) as a degree-2m polynomial
// (interpolated through n = 0..2m). Memoized.
Polynomial f_polynomial(long m);

// G_m = F_m / C(n+h, 2h) with h = floor((m+1)/2); the division is exact.
Polynomial g_polynomial(long m);

// 2^{2k-1} S_{2k-1}(n) = sum_m R(k,m) F_m(n)/m.
Integer s_odd_scaled_f(long k, long n);

// B_0..B_max via the recurrence sum_{j=0}^{m} C(m+1,j) B_j = 0 (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(long max_index);

// B_{2k} = sum_m (-1)^{m-1} m!(m-1)!/(2m+1)! R(k,m).
Rational bernoulli_even_via_r(long k);

// B_k(x) = sum_j C(k,j) B_j x^{k-j}.
Polynomial bernoulli_polynomial(long k);

// T_{2k}(n) with the binomial expanded as a polynomial in n.
Polynomial t_even_polynomial(long k);

// (2k+1)/2^{2k} sum_m R(k,m) C(2n+m-1, 2m+1) as a polynomial in n;
// equals B_{2k+1}(n).
Polynomial odd_bernoulli_rhs_polynomial(long k);
Rational odd_bernoulli_identity_rhs(long k, const Rational& n);

// S_k(n) = n^{k+1}/(k+1) + n^k/2
//          - (1/(k+1)) sum_{j=1}^{floor(k/2)} sum_{m=1}^{j}
//            (-1)^m m!(m-1)!/(2m+1)! C(k+1,2j) R(j,m) n^{k+1-2j}.
Integer s_via_bernoulli(long k, long n);

// S_k(n) = (n+1) S_{k-1}(n) - sum_{i=1}^{n} S_{k-1}(i), S_0(n) = n.
Integer s_recursive(long k, long n);

struct EvalResult {
  Integer value;
  std::optional<Integer> scaled;  // set by methods that compute 2^j S
};

// Dispatch on (kind, method, exponent); throws std::invalid_argument when the
// method does not apply to the kind or the exponent's parity.
EvalResult evaluate(SumKind kind, EvalMethod method, long exponent, long n);

}  // namespace psum
