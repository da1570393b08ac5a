#pragma once

#include <string>
#include <vector>

#include "psum/integer.hpp"

namespace psum {

// The five integer families. LittleU is the signed first-kind companion of U.
enum class Family { R, U, LittleU, Ps, Salie };

Family family_from_string(const std::string& s);  // "R" "U" "u" "Ps" "salie"
std::string family_name(Family f);

// First defined row index: 0 for R and Ps, 1 for U, u and salie. Column
// indices in each row start at the same value.
long family_first_row(Family f);

struct Triangle {
  Family family;
  long first_row;
  std::vector<std::vector<Integer>> rows;  // rows[i] is row (first_row + i)
};

// R(k,m) = sum_{j=0}^{m} (-1)^j C(2m,j) (m-j)^{2k}, with 0^0 = 1.
Integer r_number(long k, long m);

// U(k,m) = 2 R(k,m)/(2m)!, the division being exact.
Integer u_central_second(long k, long m);

// u(k,m): coefficient of x^m in x(x-1)(x-4)...(x-(k-1)^2).
Integer u_central_first(long k, long m);

// Ps_m^(r): coefficient of x^r in (x-0*1)(x-1*2)...(x-(m-1)m); 0 outside [0,m].
Integer legendre_stirling_first(long m, long r);

// Salie number s(k,r) = sum_{m=r}^{k} U(k,m) Ps_m^(r).
Integer salie_number(long k, long r);

// R(k,m) as the partition sum over tuples (b_1,...,b_k) with sum r*b_r = k and
// sum b_r = m; accumulated in Rational, asserted integral.
Integer r_via_partitions(long k, long m);

// Closed forms for the diagonals R(k,k-s), s = 0..4; requires k >= s+1.
Integer r_diagonal(long k, long s);

// Memoized row access. triangle_row returns a copy of the requested row.
Triangle triangle_rows(Family f, long max_row);
std::vector<Integer> triangle_row(Family f, long row);

std::string to_csv(const Triangle& t);
std::string to_json(const Triangle& t);
std::string to_bfile(const Triangle& t);
std::string to_table(const Triangle& t);

// Inverse of to_bfile for a known family; validates the 1-based index column.
Triangle triangle_from_bfile(Family f, const std::string& text);

}  // namespace psum
