#include <random>
#include <stdexcept>

#include <doctest.h>

#include "psum/integer.hpp"
#include "psum/polynomial.hpp"
#include "psum/rational.hpp"

using namespace psum;

TEST_SUITE("numeric_core") {

TEST_CASE("factorial basics and iterated-product oracle") {
  CHECK(factorial(Integer(0)) == 1);
  CHECK(factorial(Integer(4)) == 24);
  Integer oracle = 1;
  for (long i = 1; i <= 12; ++i) oracle *= i;
  CHECK(factorial(Integer(12)) == oracle);
  CHECK(factorial(Integer(12)) == Integer("479001600"));
  CHECK_THROWS_AS(factorial(Integer(-1)), std::domain_error);
}

TEST_CASE("binomial values and zero convention") {
  CHECK(binomial(Integer(5), Integer(3)) == 10);
  CHECK(binomial(Integer(6), Integer(7)) == 0);
  CHECK(binomial(Integer(8), Integer(3)) == 56);  // 2n+2 at n=3
  CHECK(binomial(Integer(7), Integer(-1)) == 0);
  CHECK(binomial(Integer(0), Integer(0)) == 1);
  CHECK_THROWS_AS(binomial(Integer(-2), Integer(1)), std::domain_error);
}

TEST_CASE("binomial equals factorial ratio up to 60") {
  for (long a = 0; a <= 60; ++a)
    for (long b = 0; b <= a; ++b)
      CHECK(binomial(Integer(a), Integer(b)) ==
            div_exact(factorial(Integer(a)),
                      factorial(Integer(b)) * factorial(Integer(a - b))));
}

TEST_CASE("Pascal rule including out-of-range columns") {
  for (long a = 1; a <= 60; ++a)
    for (long b = -1; b <= a + 1; ++b)
      CHECK(binomial(Integer(a), Integer(b)) ==
            binomial(Integer(a - 1), Integer(b - 1)) +
                binomial(Integer(a - 1), Integer(b)));
}

TEST_CASE("power and exact division helpers") {
  CHECK(int_pow(Integer(3), 4) == 81);
  CHECK(int_pow(Integer(0), 0) == 1);
  CHECK(int_pow(Integer(-2), 3) == -8);
  CHECK(pow2(10) == 1024);
  CHECK(pow2(0) == 1);
  CHECK(div_exact(Integer(84), Integer(12)) == 7);
  CHECK_THROWS_AS(div_exact(Integer(7), Integer(2)), std::logic_error);
  CHECK_THROWS_AS(div_exact(Integer(1), Integer(0)), std::logic_error);
}

TEST_CASE("rational canonical form") {
  CHECK(Rational(Integer(2), Integer(4)) == Rational(Integer(1), Integer(2)));
  CHECK(Rational(Integer(3), Integer(-6)).str() == "-1/2");
  CHECK(Rational(Integer(-6), Integer(-4)).str() == "3/2");
  CHECK(Rational(Integer(0), Integer(-7)).str() == "0");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), std::domain_error);

  std::mt19937_64 eng(987654);
  for (int trial = 0; trial < 200; ++trial) {
    long p = static_cast<long>(eng() % 2000001) - 1000000;
    long q = static_cast<long>(eng() % 2000001) - 1000000;
    if (q == 0) q = 1;
    Rational r{Integer(p), Integer(q)};
    CHECK(r.den() > 0);
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.num().get_mpz_t(), r.den().get_mpz_t());
    CHECK(g == 1);
    CHECK(r == Rational(Integer(3 * p), Integer(3 * q)));
  }
}

TEST_CASE("rational arithmetic and integer conversion") {
  Rational half(Integer(1), Integer(2));
  Rational third(Integer(1), Integer(3));
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK((-half).str() == "-1/2");
  CHECK(third < half);
  CHECK(Rational(7).is_integer());
  CHECK(Rational(7).to_integer() == 7);
  CHECK_FALSE(half.is_integer());
  CHECK_THROWS_AS(half.to_integer(), std::logic_error);
  CHECK_THROWS_AS(half / Rational(0), std::domain_error);
}

TEST_CASE("polynomial canonical form and evaluation") {
  Polynomial zero;
  CHECK(zero.degree() == -1);
  CHECK(zero.is_zero());
  CHECK(zero.eval(Rational(Integer(22), Integer(7))) == Rational(0));
  CHECK(Polynomial{{Rational(1), Rational(0), Rational(0)}}.degree() == 0);

  Polynomial p{{Rational(0), Rational(-2), Rational(1)}};  // x^2 - 2x
  CHECK(p.eval(Rational(3)) == Rational(3));
  Polynomial x = Polynomial::variable();
  CHECK(x * (x - Polynomial::constant(Rational(2))) == p);
  CHECK(p.coeff(1) == Rational(-2));
  CHECK(p.coeff(5) == Rational(0));
}

TEST_CASE("polynomial ring laws on random inputs") {
  std::mt19937_64 eng(24681357);
  auto random_poly = [&]() {
    long degree = static_cast<long>(eng() % 9);
    std::vector<Rational> coeffs;
    for (long i = 0; i <= degree; ++i) {
      long num = static_cast<long>(eng() % 41) - 20;
      long den = static_cast<long>(eng() % 9) + 1;
      coeffs.emplace_back(Integer(num), Integer(den));
    }
    return Polynomial{std::move(coeffs)};
  };
  for (int trial = 0; trial < 40; ++trial) {
    Polynomial p = random_poly(), q = random_poly(), r = random_poly();
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK(p + (q + r) == (p + q) + r);
    Rational at(Integer(static_cast<long>(eng() % 15) - 7), Integer(3));
    CHECK((p * q).eval(at) == p.eval(at) * q.eval(at));
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("polynomial division and composition") {
  Polynomial x = Polynomial::variable();
  Polynomial num = x * x + Polynomial::constant(Rational(1));
  Polynomial den = x + Polynomial::constant(Rational(1));
  auto [quot, rem] = num.divmod(den);
  CHECK(quot == x - Polynomial::constant(Rational(1)));
  CHECK(rem == Polynomial::constant(Rational(2)));
  CHECK(quot * den + rem == num);
  CHECK_THROWS_AS(num.divmod(Polynomial{}), std::domain_error);

  Polynomial shifted = num.compose(x + Polynomial::constant(Rational(1)));
  CHECK(shifted.eval(Rational(2)) == num.eval(Rational(3)));

  std::mt19937_64 eng(11224488);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Rational> pc, qc;
    for (long i = 0; i <= static_cast<long>(eng() % 6); ++i)
      pc.emplace_back(Integer(static_cast<long>(eng() % 21) - 10));
    for (long i = 0; i < static_cast<long>(eng() % 5); ++i)
      qc.emplace_back(Integer(static_cast<long>(eng() % 21) - 10));
    qc.emplace_back(Integer(static_cast<long>(eng() % 5) + 1));
    Polynomial p{pc}, q{qc};
    auto [pq_quot, pq_rem] = (p * q).divmod(q);
    CHECK(pq_quot == p);
    CHECK(pq_rem.is_zero());
  }
}

TEST_CASE("polynomial printing") {
  CHECK(Polynomial{}.str() == "0");
  CHECK(Polynomial::constant(Rational(-3)).str() == "-3");
  CHECK(Polynomial::variable().str() == "n");
  CHECK(Polynomial::monomial(Rational(1), 9).str() == "n^9");
  Polynomial q52{{Rational(0), Rational(18), Rational(0), Rational(168),
                  Rational(0), Rational(252), Rational(0), Rational(72)}};
  CHECK(q52.str() == "18*n + 168*n^3 + 252*n^5 + 72*n^7");
  Polynomial mixed{{Rational(Integer(-1), Integer(3)), Rational(1),
                    Rational(Integer(-5), Integer(2))}};
  CHECK(mixed.str() == "-1/3 + n - 5/2*n^2");
  CHECK(mixed.str("x") == "-1/3 + x - 5/2*x^2");
}

TEST_CASE("generalized falling factorial") {
  Polynomial x = Polynomial::variable();
  CHECK(falling_factorial_generalized(1) == x);
  CHECK(falling_factorial_generalized(2).str("x") == "-2*x + x^2");
  CHECK(falling_factorial_generalized(3).str("x") == "12*x - 8*x^2 + x^3");
  CHECK_THROWS_AS(falling_factorial_generalized(0), std::domain_error);
  CHECK_THROWS_AS(falling_factorial_generalized(-3), std::domain_error);
}

TEST_CASE("binomial polynomial and interpolation") {
  Polynomial x = Polynomial::variable();
  Polynomial c_x_2 = binomial_poly(x, 2);
  CHECK(c_x_2.eval(Rational(5)) == Rational(10));
  CHECK(c_x_2.eval(Rational(Integer(1), Integer(2))) ==
        Rational(Integer(-1), Integer(8)));
  CHECK(binomial_poly(x, 0) == Polynomial::constant(Rational(1)));

  std::vector<std::pair<Rational, Rational>> cubes;
  for (long i = 0; i <= 3; ++i)
    cubes.emplace_back(Rational(i), Rational(int_pow(Integer(i), 3)));
  CHECK(interpolate(cubes) == Polynomial::monomial(Rational(1), 3));
  for (long i = 4; i <= 9; ++i)
    CHECK(interpolate(cubes).eval(Rational(i)) ==
          Rational(int_pow(Integer(i), 3)));
}

}  // TEST_SUITE
