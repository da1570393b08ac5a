#pragma once

#include <string>
#include <vector>

#include "psum/integer.hpp"
#include "psum/rational.hpp"

namespace psum {

// Which power sum the coefficient vector reconstructs:
//   b: S_{2k}   = S_2 * sum_r b_{k,r} S_1^{r-1}
//   c: S_{2k+1} = S_1^2 * sum_r c_{k,r} S_1^{r-1}
//   d: Omega_{2k} = sum_r d_{k,r} S_1^r
enum class FaulhaberKind { b, c, d };

enum class CRoute { LegendreStirling, Relation, GesselViennot };

FaulhaberKind faulhaber_kind_from_string(const std::string& s);
CRoute c_route_from_string(const std::string& s);

struct FaulhaberCoeffs {
  long k;
  FaulhaberKind kind;
  std::vector<Rational> values;  // values[r-1] holds the coefficient of index r
};

// b_{k,r} = sum_{m=r}^{k} 3*2^r/(2m+1)! R(k,m) Ps_m^(r).
FaulhaberCoeffs faulhaber_b(long k);

// All three routes agree:
//   LegendreStirling: sum_{m=r}^{k} 2^{r+1}/((2m+2)!(m+1)) R(k+1,m+1) Ps_{m+1}^(r+1)
//   Relation:         (2k+1)/(r+1) sum_{m=r}^{k} 2^{r+1}/(2m+1)! R(k,m) Ps_m^(r)
//   GesselViennot:    (-1)^{r-1} 2^{r+1}/(r+1) sum_{m=0}^{floor((r-1)/2)}
//                     C(2r-1-2m,r) C(2k+1,2m+1) B_{2k-2m}
FaulhaberCoeffs faulhaber_c(long k, CRoute route = CRoute::LegendreStirling);

// d_{k,r} = sum_{m=r}^{k} 2^r/(2m)! R(k,m) Ps_m^(r).
FaulhaberCoeffs faulhaber_d(long k);

// sum_{m=1}^{k} (-1)^m ((m-1)!)^2/(2m)! R(k,m); exactly 0 for k >= 2.
Rational horizontal_recurrence_check(long k);

// sum_{m=1}^{k+1} R(k+1,m) Ps_m^(1) / ((2m)! m); exactly 0 for k >= 1.
Rational fau5_check(long k);

// Evaluates the Faulhaber form at integer n; the result is asserted integral.
Integer reconstruct_power_sum(const FaulhaberCoeffs& coeffs, long n);

}  // namespace psum
