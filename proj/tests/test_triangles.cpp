#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include <doctest.h>

#include "psum/integer.hpp"
#include "psum/triangles.hpp"

using namespace psum;

namespace {

const std::vector<std::vector<long>> kRTable = {
    {1},
    {0, 1},
    {0, 1, 12},
    {0, 1, 60, 360},
    {0, 1, 252, 5040, 20160},
    {0, 1, 1020, 52920, 604800, 1814400},
    {0, 1, 4092, 506880, 12640320, 99792000, 239500800},
};

const std::vector<std::vector<long>> kPsTable = {
    {1},
    {0, 1},
    {0, -2, 1},
    {0, 12, -8, 1},
    {0, -144, 108, -20, 1},
    {0, 2880, -2304, 508, -40, 1},
    {0, -86400, 72000, -17544, 1708, -70, 1},
};

}  // namespace

TEST_SUITE("triangles") {

TEST_CASE("family parsing") {
  CHECK(family_from_string("R") == Family::R);
  CHECK(family_from_string("U") == Family::U);
  CHECK(family_from_string("u") == Family::LittleU);
  CHECK(family_from_string("Ps") == Family::Ps);
  CHECK(family_from_string("salie") == Family::Salie);
  CHECK_THROWS_AS(family_from_string("bogus"), std::invalid_argument);
  CHECK(family_name(Family::LittleU) == "u");
  CHECK(family_first_row(Family::R) == 0);
  CHECK(family_first_row(Family::Ps) == 0);
  CHECK(family_first_row(Family::U) == 1);
  CHECK(family_first_row(Family::LittleU) == 1);
  CHECK(family_first_row(Family::Salie) == 1);
}

TEST_CASE("r_number matches the frozen rows") {
  for (long k = 0; k < static_cast<long>(kRTable.size()); ++k)
    for (long m = 0; m <= k; ++m)
      CHECK(r_number(k, m) == kRTable[k][m]);
  CHECK(r_number(4, 3) == 5040);
  CHECK(r_number(1, 1) == 1);
  CHECK(r_number(6, 6) == Integer("239500800"));
  CHECK_THROWS_AS(r_number(-1, 0), std::domain_error);
  CHECK_THROWS_AS(r_number(3, 4), std::domain_error);
  CHECK_THROWS_AS(r_number(3, -1), std::domain_error);
}

TEST_CASE("legendre_stirling_first matches the frozen rows") {
  for (long m = 0; m < static_cast<long>(kPsTable.size()); ++m)
    for (long r = 0; r <= m; ++r)
      CHECK(legendre_stirling_first(m, r) == kPsTable[m][r]);
  CHECK(legendre_stirling_first(4, 2) == 108);
  CHECK(legendre_stirling_first(6, 3) == -17544);
  CHECK(legendre_stirling_first(3, 5) == 0);
  CHECK(legendre_stirling_first(3, -2) == 0);
  CHECK_THROWS_AS(legendre_stirling_first(-1, 0), std::domain_error);
  for (long m = 1; m <= 6; ++m) {
    Integer expected = factorial(Integer(m)) * factorial(Integer(m - 1));
    if (m % 2 == 0) expected = -expected;
    CHECK(legendre_stirling_first(m, 1) == expected);
  }
}

TEST_CASE("second-kind central factorial values") {
  CHECK(u_central_second(4, 2) == 21);
  CHECK(u_central_second(3, 2) == 5);
  for (long k = 1; k <= 8; ++k) {
    CHECK(u_central_second(k, k) == 1);
    CHECK(u_central_second(k, 1) == 1);
  }
  CHECK_THROWS_AS(u_central_second(3, 0), std::domain_error);
  CHECK_THROWS_AS(u_central_second(2, 3), std::domain_error);
}

TEST_CASE("first-kind central factorial values") {
  CHECK(u_central_first(3, 1) == 4);
  CHECK(u_central_first(3, 2) == -5);
  for (long k = 1; k <= 8; ++k) CHECK(u_central_first(k, k) == 1);
  CHECK_THROWS_AS(u_central_first(0, 0), std::domain_error);
  CHECK_THROWS_AS(u_central_first(4, 5), std::domain_error);
}

TEST_CASE("salie number values") {
  CHECK(salie_number(1, 1) == 1);
  CHECK(salie_number(2, 1) == -1);
  CHECK(salie_number(2, 2) == 1);
  CHECK(salie_number(3, 2) == -3);
  CHECK_THROWS_AS(salie_number(2, 0), std::domain_error);
  CHECK_THROWS_AS(salie_number(2, 3), std::domain_error);
  for (long k = 1; k <= 8; ++k)
    for (long r = 1; r <= k; ++r) {
      Integer direct = 0;
      for (long m = r; m <= k; ++m)
        direct += u_central_second(k, m) * legendre_stirling_first(m, r);
      CHECK(salie_number(k, r) == direct);
    }
}

TEST_CASE("partition sum agrees with the direct formula") {
  CHECK(r_via_partitions(2, 1) == 1);
  CHECK(r_via_partitions(2, 2) == 12);
  CHECK(r_via_partitions(5, 3) == 52920);
  for (long k = 1; k <= 10; ++k)
    for (long m = 1; m <= k; ++m)
      CHECK(r_via_partitions(k, m) == r_number(k, m));
  CHECK_THROWS_AS(r_via_partitions(3, 0), std::domain_error);
  CHECK_THROWS_AS(r_via_partitions(2, 3), std::domain_error);
}

TEST_CASE("diagonal closed forms") {
  CHECK(r_diagonal(3, 0) == 360);
  CHECK(r_diagonal(4, 1) == 5040);
  CHECK(r_diagonal(5, 2) == 52920);
  for (long s = 0; s <= 4; ++s)
    for (long k = s + 1; k <= 12; ++k)
      CHECK(r_diagonal(k, s) == r_number(k, k - s));
  CHECK_THROWS_AS(r_diagonal(6, 5), std::domain_error);
  CHECK_THROWS_AS(r_diagonal(2, 2), std::domain_error);
  CHECK_THROWS_AS(r_diagonal(1, -1), std::domain_error);
}

TEST_CASE("R and U are (2m)!/2 multiples of each other") {
  for (long k = 1; k <= 15; ++k)
    for (long m = 1; m <= k; ++m)
      CHECK(2 * r_number(k, m) ==
            factorial(Integer(2 * m)) * u_central_second(k, m));
}

TEST_CASE("U and u triangles are mutually inverse") {
  for (long k = 1; k <= 12; ++k)
    for (long j = 1; j <= k; ++j) {
      Integer forward = 0, backward = 0;
      for (long m = j; m <= k; ++m) {
        forward += u_central_second(k, m) * u_central_first(m, j);
        backward += u_central_first(k, m) * u_central_second(m, j);
      }
      Integer expected = (k == j) ? 1 : 0;
      CHECK(forward == expected);
      CHECK(backward == expected);
    }
}

TEST_CASE("sequence inversion through U and u") {
  std::mt19937_64 eng(424242);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Integer> b(11);  // index 1..10
    for (long m = 1; m <= 10; ++m)
      b[m] = Integer(static_cast<long>(eng() % 2001) - 1000);
    std::vector<Integer> a(11);
    for (long k = 1; k <= 10; ++k) {
      a[k] = 0;
      for (long m = 1; m <= k; ++m) a[k] += u_central_second(k, m) * b[m];
    }
    for (long k = 1; k <= 10; ++k) {
      Integer recovered = 0;
      for (long m = 1; m <= k; ++m) recovered += u_central_first(k, m) * a[m];
      CHECK(recovered == b[k]);
    }
  }
}

TEST_CASE("U satisfies the triangle recurrence") {
  for (long k = 2; k <= 15; ++k)
    for (long m = 1; m <= k; ++m) {
      Integer left = (m >= 2) ? u_central_second(k - 1, m - 1) : Integer(0);
      Integer up = (m <= k - 1) ? u_central_second(k - 1, m) : Integer(0);
      CHECK(u_central_second(k, m) == left + Integer(m) * Integer(m) * up);
    }
}

TEST_CASE("row access and bounds") {
  Triangle single = triangle_rows(Family::LittleU, 1);
  REQUIRE(single.rows.size() == 1);
  CHECK(single.first_row == 1);
  CHECK(single.rows[0] == std::vector<Integer>{Integer(1)});

  std::vector<Integer> row5 = triangle_row(Family::R, 5);
  REQUIRE(row5.size() == 6);
  CHECK(row5[3] == 52920);
  CHECK_THROWS_AS(triangle_row(Family::U, 0), std::domain_error);
  CHECK_THROWS_AS(triangle_rows(Family::R, -1), std::domain_error);
}

TEST_CASE("rows match the pointwise definitions for every family") {
  Triangle tr = triangle_rows(Family::R, 9);
  Triangle tu = triangle_rows(Family::U, 9);
  Triangle tl = triangle_rows(Family::LittleU, 9);
  Triangle tp = triangle_rows(Family::Ps, 9);
  Triangle ts = triangle_rows(Family::Salie, 9);
  for (long k = 0; k <= 9; ++k)
    for (long m = 0; m <= k; ++m) CHECK(tr.rows[k][m] == r_number(k, m));
  for (long k = 1; k <= 9; ++k)
    for (long m = 1; m <= k; ++m) {
      CHECK(tu.rows[k - 1][m - 1] == u_central_second(k, m));
      CHECK(tl.rows[k - 1][m - 1] == u_central_first(k, m));
      CHECK(ts.rows[k - 1][m - 1] == salie_number(k, m));
    }
  for (long m = 0; m <= 9; ++m)
    for (long r = 0; r <= m; ++r)
      CHECK(tp.rows[m][r] == legendre_stirling_first(m, r));
}

TEST_CASE("serialization goldens") {
  Triangle t = triangle_rows(Family::R, 2);
  CHECK(to_csv(t) == "k,m,value\n0,0,1\n1,0,0\n1,1,1\n2,0,0\n2,1,1\n2,2,12\n");
  CHECK(to_json(t) == "[[1],[0,1],[0,1,12]]");
  CHECK(to_bfile(t) == "1 1\n2 0\n3 1\n4 0\n5 1\n6 12\n");

  std::string table = to_table(t);
  CHECK(table.find("k\\m") != std::string::npos);
  CHECK(table.find("12") != std::string::npos);
  CHECK(to_table(triangle_rows(Family::Ps, 2)).find("m\\r") !=
        std::string::npos);
  CHECK(to_table(triangle_rows(Family::Salie, 2)).find("k\\r") !=
        std::string::npos);
  CHECK(to_json(triangle_rows(Family::U, 3)) == "[[1],[1,1],[1,5,1]]");
}

TEST_CASE("bfile round trips") {
  for (Family f : {Family::R, Family::Ps}) {
    Triangle t = triangle_rows(f, 6);
    Triangle back = triangle_from_bfile(f, to_bfile(t));
    CHECK(back.rows == t.rows);
    CHECK(back.first_row == t.first_row);
  }
  Triangle ts = triangle_rows(Family::Salie, 5);
  CHECK(triangle_from_bfile(Family::Salie, to_bfile(ts)).rows == ts.rows);

  CHECK_THROWS_AS(triangle_from_bfile(Family::R, "1 1\n3 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(triangle_from_bfile(Family::R, "1 1\n2 0\n3 1\n4 0\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(triangle_from_bfile(Family::R, "1 x\n"),
                  std::invalid_argument);
}

TEST_CASE("concurrent row access is consistent") {
  std::vector<std::vector<Integer>> reference;
  for (long k = 0; k <= 12; ++k) {
    std::vector<Integer> row;
    for (long m = 0; m <= k; ++m) row.push_back(r_number(k, m));
    reference.push_back(std::move(row));
  }
  std::vector<std::thread> workers;
  std::vector<int> mismatches(8, 0);
  for (int w = 0; w < 8; ++w)
    workers.emplace_back([w, &reference, &mismatches]() {
      for (long k = 0; k <= 12; ++k)
        if (triangle_row(Family::R, k) != reference[k]) ++mismatches[w];
    });
  for (auto& th : workers) th.join();
  for (int w = 0; w < 8; ++w) CHECK(mismatches[w] == 0);
}

TEST_CASE("repeated queries return identical data") {
  Triangle first = triangle_rows(Family::Salie, 7);
  Triangle second = triangle_rows(Family::Salie, 7);
  CHECK(first.rows == second.rows);
  CHECK(triangle_row(Family::Ps, 6) == triangle_row(Family::Ps, 6));
}

}  // TEST_SUITE
