#include "psum/power_sums.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "psum/triangles.hpp"

namespace psum {

namespace {

Integer require_integer(const Rational& v, const char* what) {
  if (!v.is_integer())
    throw std::logic_error(std::string(what) + ": non-integral total " + v.str());
  return v.to_integer();
}

void check_kn(long k, long n, const char* what) {
  if (k < 1) throw std::domain_error(std::string(what) + ": need k >= 1");
  if (n < 0) throw std::domain_error(std::string(what) + ": need n >= 0");
}

}  // namespace

SumKind sum_kind_from_string(const std::string& s) {
  if (s == "S") return SumKind::S;
  if (s == "T") return SumKind::T;
  if (s == "omega") return SumKind::Omega;
  throw std::invalid_argument("unknown sum kind: " + s);
}

EvalMethod eval_method_from_string(long exponent, const std::string& s) {
  if (s == "brute") return EvalMethod::Brute;
  if (s == "theorem1") return EvalMethod::Theorem1;
  if (s == "knuth")
    return exponent % 2 == 0 ? EvalMethod::KnuthEven : EvalMethod::KnuthOdd;
  if (s == "qform") return EvalMethod::QForm;
  if (s == "fform") return EvalMethod::FForm;
  if (s == "bernoulli") return EvalMethod::BernoulliFormula;
  if (s == "recursive") return EvalMethod::Recursive;
  if (s == "closed") return EvalMethod::Closed;
  throw std::invalid_argument("unknown method: " + s);
}

Integer brute(SumKind kind, long k, long n) {
  check_kn(k, n, "brute");
  Integer sum = 0;
  for (long i = 1; i <= n; ++i) {
    Integer base;
    switch (kind) {
      case SumKind::S: base = i; break;
      case SumKind::T: base = 2 * i - 1; break;
      case SumKind::Omega: base = i; break;
    }
    Integer term = int_pow(base, static_cast<unsigned long>(k));
    if (kind == SumKind::Omega && (n - i) % 2 == 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

Integer s_even_scaled(long k, long n) {
  check_kn(k, n, "s_even_scaled");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Integer sum = 0;
  for (long m = 1; m <= k; ++m)
    sum += row[static_cast<size_t>(m)] *
           binomial(Integer(2 * n + m + 1), Integer(2 * m + 1));
  return sum;
}

Integer s_even_knuth(long k, long n) {
  check_kn(k, n, "s_even_knuth");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Rational sum;
  for (long m = 1; m <= k; ++m)
    sum = sum + Rational(row[static_cast<size_t>(m)] * Integer(2 * n + 1) *
                             binomial(Integer(n + m), Integer(2 * m)),
                         Integer(2 * m + 1));
  return require_integer(sum, "s_even_knuth");
}

Integer s_odd_knuth(long k, long n) {
  check_kn(k, n, "s_odd_knuth");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Rational sum;
  for (long m = 1; m <= k; ++m)
    sum = sum + Rational(row[static_cast<size_t>(m)] *
                             binomial(Integer(n + m), Integer(2 * m)),
                         Integer(m));
  return require_integer(sum, "s_odd_knuth");
}

Integer t_even(long k, long n) {
  check_kn(k, n, "t_even");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Integer sum = 0;
  for (long m = 1; m <= k; ++m)
    sum += row[static_cast<size_t>(m)] *
           binomial(Integer(2 * n + m), Integer(2 * m + 1));
  return sum;
}

Integer omega_even(long k, long n) {
  check_kn(k, n, "omega_even");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Integer sum = 0;
  for (long m = 1; m <= k; ++m)
    sum += row[static_cast<size_t>(m)] *
           binomial(Integer(n + m), Integer(2 * m));
  return sum;
}

Polynomial q_polynomial(long k, long m) {
  if (k < 1 || m < 1 || m > k)
    throw std::domain_error("q_polynomial: need 1 <= m <= k");
  if (m == 1) return Polynomial::monomial(Rational(1), 2 * k - 1);
  Polynomial q;
  for (long j = m; j <= k; ++j) {
    Integer c = 2 * binomial(Integer(2 * k - 1), Integer(2 * j - 2)) *
                r_number(j - 1, m - 1);
    q = q + Polynomial::monomial(Rational(c), 2 * k - 2 * j + 1);
  }
  return q;
}

Integer s_odd_scaled_q(long k, long n) {
  check_kn(k, n, "s_odd_scaled_q");
  Rational sum;
  for (long m = 1; m <= k; ++m)
    sum = sum + q_polynomial(k, m).eval(Rational(n)) *
                    Rational(binomial(Integer(n + m), Integer(2 * m - 1)));
  return require_integer(sum, "s_odd_scaled_q");
}

Polynomial f_polynomial(long m) {
  if (m < 1) throw std::domain_error("f_polynomial: need m >= 1");
  static std::mutex mu;
  static std::map<long, Polynomial> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<Rational, Rational>> points;
  Integer acc = 0;
  points.emplace_back(Rational(0), Rational(0));
  for (long n = 1; n <= 2 * m; ++n) {
    acc += binomial(Integer(2 * n + m - 1), Integer(2 * m - 1));
    points.emplace_back(Rational(n), Rational(acc));
  }
  Polynomial f = interpolate(points);
  cache.emplace(m, f);
  return f;
}

Polynomial g_polynomial(long m) {
  if (m < 1) throw std::domain_error("g_polynomial: need m >= 1");
  long h = (m + 1) / 2;
  Polynomial divisor = binomial_poly(
      Polynomial::variable() + Polynomial::constant(Rational(h)), 2 * h);
  auto [quot, rem] = f_polynomial(m).divmod(divisor);
  if (!rem.is_zero())
    throw std::logic_error("g_polynomial: F_" + std::to_string(m) +
                           " not divisible by its binomial factor");
  return quot;
}

Integer s_odd_scaled_f(long k, long n) {
  check_kn(k, n, "s_odd_scaled_f");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Rational sum;
  for (long m = 1; m <= k; ++m)
    sum = sum + Rational(row[static_cast<size_t>(m)], Integer(m)) *
                    f_polynomial(m).eval(Rational(n));
  return require_integer(sum, "s_odd_scaled_f");
}

std::vector<Rational> bernoulli_numbers(long max_index) {
  if (max_index < 0)
    throw std::domain_error("bernoulli_numbers: need max_index >= 0");
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<long>(cache.size()) <= max_index) {
    long m = static_cast<long>(cache.size());
    Rational acc;
    for (long j = 0; j < m; ++j)
      acc = acc + Rational(binomial(Integer(m + 1), Integer(j))) *
                      cache[static_cast<size_t>(j)];
    cache.push_back(-acc / Rational(m + 1));
  }
  return {cache.begin(), cache.begin() + max_index + 1};
}

Rational bernoulli_even_via_r(long k) {
  if (k < 1) throw std::domain_error("bernoulli_even_via_r: need k >= 1");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Rational sum;
  for (long m = 1; m <= k; ++m) {
    Rational term(factorial(Integer(m)) * factorial(Integer(m - 1)) *
                      row[static_cast<size_t>(m)],
                  factorial(Integer(2 * m + 1)));
    sum = m % 2 == 1 ? sum + term : sum - term;
  }
  return sum;
}

Polynomial bernoulli_polynomial(long k) {
  if (k < 0) throw std::domain_error("bernoulli_polynomial: need k >= 0");
  std::vector<Rational> b = bernoulli_numbers(k);
  Polynomial p;
  for (long j = 0; j <= k; ++j)
    p = p + Polynomial::monomial(
                Rational(binomial(Integer(k), Integer(j))) *
                    b[static_cast<size_t>(j)],
                k - j);
  return p;
}

Polynomial t_even_polynomial(long k) {
  if (k < 1) throw std::domain_error("t_even_polynomial: need k >= 1");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Polynomial two_n = Polynomial::monomial(Rational(2), 1);
  Polynomial sum;
  for (long m = 1; m <= k; ++m)
    sum = sum + Rational(row[static_cast<size_t>(m)]) *
                    binomial_poly(two_n + Polynomial::constant(Rational(m)),
                                  2 * m + 1);
  return sum;
}

Polynomial odd_bernoulli_rhs_polynomial(long k) {
  if (k < 1) throw std::domain_error("odd_bernoulli_rhs_polynomial: need k >= 1");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Polynomial two_n = Polynomial::monomial(Rational(2), 1);
  Polynomial sum;
  for (long m = 1; m <= k; ++m)
    sum = sum + Rational(row[static_cast<size_t>(m)]) *
                    binomial_poly(two_n + Polynomial::constant(Rational(m - 1)),
                                  2 * m + 1);
  return sum * Rational(Integer(2 * k + 1), pow2(static_cast<unsigned long>(2 * k)));
}

Rational odd_bernoulli_identity_rhs(long k, const Rational& n) {
  return odd_bernoulli_rhs_polynomial(k).eval(n);
}

Integer s_via_bernoulli(long k, long n) {
  check_kn(k, n, "s_via_bernoulli");
  Rational nk1(int_pow(Integer(n), static_cast<unsigned long>(k + 1)));
  Rational nk(int_pow(Integer(n), static_cast<unsigned long>(k)));
  Rational sum = nk1 / Rational(k + 1) + nk / Rational(2);
  Rational inner;
  for (long j = 1; j <= k / 2; ++j) {
    Rational per_j;
    for (long m = 1; m <= j; ++m) {
      Rational term(factorial(Integer(m)) * factorial(Integer(m - 1)) *
                        r_number(j, m),
                    factorial(Integer(2 * m + 1)));
      per_j = m % 2 == 1 ? per_j - term : per_j + term;
    }
    inner = inner + per_j * Rational(binomial(Integer(k + 1), Integer(2 * j)) *
                                     int_pow(Integer(n),
                                             static_cast<unsigned long>(k + 1 - 2 * j)));
  }
  sum = sum - inner / Rational(k + 1);
  return require_integer(sum, "s_via_bernoulli");
}

Integer s_recursive(long k, long n) {
  check_kn(k, n, "s_recursive");
  std::vector<Integer> cur(static_cast<size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) cur[static_cast<size_t>(i)] = i;
  for (long d = 1; d <= k; ++d) {
    std::vector<Integer> next(static_cast<size_t>(n) + 1, Integer(0));
    Integer run = 0;
    for (long i = 1; i <= n; ++i) {
      run += cur[static_cast<size_t>(i)];
      next[static_cast<size_t>(i)] = (i + 1) * cur[static_cast<size_t>(i)] - run;
    }
    cur = std::move(next);
  }
  return cur[static_cast<size_t>(n)];
}

EvalResult evaluate(SumKind kind, EvalMethod method, long exponent, long n) {
  if (exponent < 1) throw std::invalid_argument("evaluate: need exponent >= 1");
  if (n < 0) throw std::invalid_argument("evaluate: need n >= 0");
  bool even = exponent % 2 == 0;
  auto need = [&](bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
  };
  switch (method) {
    case EvalMethod::Brute:
      return {brute(kind, exponent, n), std::nullopt};
    case EvalMethod::Theorem1: {
      need(kind == SumKind::S && even, "theorem1 applies to even S sums only");
      Integer scaled = s_even_scaled(exponent / 2, n);
      return {div_exact(scaled, pow2(static_cast<unsigned long>(exponent))),
              scaled};
    }
    case EvalMethod::KnuthEven:
      need(kind == SumKind::S && even, "knuth even form needs an even S sum");
      return {s_even_knuth(exponent / 2, n), std::nullopt};
    case EvalMethod::KnuthOdd:
      need(kind == SumKind::S && !even, "knuth odd form needs an odd S sum");
      return {s_odd_knuth((exponent + 1) / 2, n), std::nullopt};
    case EvalMethod::QForm: {
      need(kind == SumKind::S && !even, "qform applies to odd S sums only");
      Integer scaled = s_odd_scaled_q((exponent + 1) / 2, n);
      return {div_exact(scaled, pow2(static_cast<unsigned long>(exponent))),
              scaled};
    }
    case EvalMethod::FForm: {
      need(kind == SumKind::S && !even, "fform applies to odd S sums only");
      Integer scaled = s_odd_scaled_f((exponent + 1) / 2, n);
      return {div_exact(scaled, pow2(static_cast<unsigned long>(exponent))),
              scaled};
    }
    case EvalMethod::BernoulliFormula:
      need(kind == SumKind::S, "bernoulli method applies to S sums only");
      return {s_via_bernoulli(exponent, n), std::nullopt};
    case EvalMethod::Recursive:
      need(kind == SumKind::S, "recursive method applies to S sums only");
      return {s_recursive(exponent, n), std::nullopt};
    case EvalMethod::Closed:
      need(kind != SumKind::S, "closed forms cover T and omega sums");
      need(even, "closed forms need an even exponent");
      if (kind == SumKind::T) return {t_even(exponent / 2, n), std::nullopt};
      return {omega_even(exponent / 2, n), std::nullopt};
  }
  throw std::logic_error("unreachable method");
}

}  // namespace psum
