#include "psum/faulhaber.hpp"

#include <stdexcept>

#include "psum/power_sums.hpp"
#include "psum/triangles.hpp"

namespace psum {

FaulhaberKind faulhaber_kind_from_string(const std::string& s) {
  if (s == "b") return FaulhaberKind::b;
  if (s == "c") return FaulhaberKind::c;
  if (s == "d") return FaulhaberKind::d;
  throw std::invalid_argument("unknown coefficient kind: " + s);
}

CRoute c_route_from_string(const std::string& s) {
  if (s == "legendre_stirling") return CRoute::LegendreStirling;
  if (s == "relation") return CRoute::Relation;
  if (s == "gessel_viennot") return CRoute::GesselViennot;
  throw std::invalid_argument("unknown c route: " + s);
}

FaulhaberCoeffs faulhaber_b(long k) {
  if (k < 1) throw std::domain_error("faulhaber_b: need k >= 1");
  std::vector<Integer> row = triangle_row(Family::R, k);
  FaulhaberCoeffs out{k, FaulhaberKind::b, {}};
  for (long r = 1; r <= k; ++r) {
    Rational sum;
    for (long m = r; m <= k; ++m)
      sum = sum + Rational(3 * pow2(static_cast<unsigned long>(r)) *
                               row[static_cast<size_t>(m)] *
                               legendre_stirling_first(m, r),
                           factorial(Integer(2 * m + 1)));
    out.values.push_back(sum);
  }
  return out;
}

FaulhaberCoeffs faulhaber_c(long k, CRoute route) {
  if (k < 1) throw std::domain_error("faulhaber_c: need k >= 1");
  FaulhaberCoeffs out{k, FaulhaberKind::c, {}};
  switch (route) {
    case CRoute::LegendreStirling: {
      std::vector<Integer> row = triangle_row(Family::R, k + 1);
      for (long r = 1; r <= k; ++r) {
        Rational sum;
        for (long m = r; m <= k; ++m)
          sum = sum + Rational(pow2(static_cast<unsigned long>(r + 1)) *
                                   row[static_cast<size_t>(m + 1)] *
                                   legendre_stirling_first(m + 1, r + 1),
                               factorial(Integer(2 * m + 2)) * Integer(m + 1));
        out.values.push_back(sum);
      }
      break;
    }
    case CRoute::Relation: {
      std::vector<Integer> row = triangle_row(Family::R, k);
      for (long r = 1; r <= k; ++r) {
        Rational sum;
        for (long m = r; m <= k; ++m)
          sum = sum + Rational(pow2(static_cast<unsigned long>(r + 1)) *
                                   row[static_cast<size_t>(m)] *
                                   legendre_stirling_first(m, r),
                               factorial(Integer(2 * m + 1)));
        out.values.push_back(sum * Rational(Integer(2 * k + 1), Integer(r + 1)));
      }
      break;
    }
    case CRoute::GesselViennot: {
      std::vector<Rational> bern = bernoulli_numbers(2 * k);
      for (long r = 1; r <= k; ++r) {
        Rational sum;
        for (long m = 0; m <= (r - 1) / 2; ++m)
          sum = sum + Rational(binomial(Integer(2 * r - 1 - 2 * m), Integer(r)) *
                               binomial(Integer(2 * k + 1), Integer(2 * m + 1))) *
                          bern[static_cast<size_t>(2 * k - 2 * m)];
        Rational front(pow2(static_cast<unsigned long>(r + 1)), Integer(r + 1));
        if (r % 2 == 0) front = -front;
        out.values.push_back(front * sum);
      }
      break;
    }
  }
  return out;
}

FaulhaberCoeffs faulhaber_d(long k) {
  if (k < 1) throw std::domain_error("faulhaber_d: need k >= 1");
  std::vector<Integer> row = triangle_row(Family::R, k);
  FaulhaberCoeffs out{k, FaulhaberKind::d, {}};
  for (long r = 1; r <= k; ++r) {
    Rational sum;
    for (long m = r; m <= k; ++m)
      sum = sum + Rational(pow2(static_cast<unsigned long>(r)) *
                               row[static_cast<size_t>(m)] *
                               legendre_stirling_first(m, r),
                           factorial(Integer(2 * m)));
    out.values.push_back(sum);
  }
  return out;
}

Rational horizontal_recurrence_check(long k) {
  if (k < 2) throw std::domain_error("horizontal_recurrence_check: need k >= 2");
  std::vector<Integer> row = triangle_row(Family::R, k);
  Rational sum;
  for (long m = 1; m <= k; ++m) {
    Integer f = factorial(Integer(m - 1));
    Rational term(f * f * row[static_cast<size_t>(m)],
                  factorial(Integer(2 * m)));
    sum = m % 2 == 0 ? sum + term : sum - term;
  }
  return sum;
}

Rational fau5_check(long k) {
  if (k < 1) throw std::domain_error("fau5_check: need k >= 1");
  std::vector<Integer> row = triangle_row(Family::R, k + 1);
  Rational sum;
  for (long m = 1; m <= k + 1; ++m)
    sum = sum + Rational(row[static_cast<size_t>(m)] *
                             legendre_stirling_first(m, 1),
                         factorial(Integer(2 * m)) * Integer(m));
  return sum;
}

Integer reconstruct_power_sum(const FaulhaberCoeffs& coeffs, long n) {
  if (n < 0) throw std::domain_error("reconstruct_power_sum: need n >= 0");
  Rational s1(Integer(n) * Integer(n + 1), Integer(2));
  Rational sum;
  Rational power(1);  // S_1^{r-1}
  for (const auto& value : coeffs.values) {
    sum = sum + value * power;
    power = power * s1;
  }
  switch (coeffs.kind) {
    case FaulhaberKind::b:
      sum = sum * Rational(Integer(n) * Integer(n + 1) * Integer(2 * n + 1),
                           Integer(6));
      break;
    case FaulhaberKind::c:
      sum = sum * s1 * s1;
      break;
    case FaulhaberKind::d:
      sum = sum * s1;
      break;
  }
  if (!sum.is_integer())
    throw std::logic_error("reconstruct_power_sum: non-integral value " +
                           sum.str());
  return sum.to_integer();
}

}  // namespace psum
