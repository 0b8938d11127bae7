#include <catch2/catch_amalgamated.hpp>

#include "unisolv/rational.hpp"
#include "unisolv/rng.hpp"

using namespace unisolv;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, 4).numerator() == 3);
  CHECK(Rational(6, 4).denominator() == 2);
  CHECK(Rational(6, -4).numerator() == -3);
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational(0, 7).numerator() == 0);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK(Rational(-3, -7) == Rational(3, 7));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 3) == Rational(3, 2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK((-Rational(2, 5)).abs() == Rational(2, 5));
}

TEST_CASE("rational string round trip") {
  CHECK(Rational(-3, 7).to_string() == "-3/7");
  CHECK(Rational(5).to_string() == "5");
  CHECK(Rational(10, 2).to_string() == "5");
  CHECK(Rational::from_string("-3/7") == Rational(-3, 7));
  CHECK(Rational::from_string("5") == Rational(5));
  CHECK(Rational::from_string("6/-4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);

  SeededRng rng(20240615);
  for (int trial = 0; trial < 200; ++trial) {
    Rational r = rng.next_rational(-999, 999, 1, 200);
    CHECK(Rational::from_string(r.to_string()) == r);
  }
}

TEST_CASE("gaussian rational field operations") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  CHECK((GaussianRational(1, 1) * GaussianRational(1, -1)) == GaussianRational(2));
  CHECK(GaussianRational(3, 4).norm() == Rational(25));
  CHECK(GaussianRational(1) / GaussianRational(0, 1) == GaussianRational(0, -1));
  CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(0), std::domain_error);

  SeededRng rng(81);
  for (int trial = 0; trial < 100; ++trial) {
    GaussianRational a = rng.next_gaussian_rational();
    GaussianRational b = rng.next_gaussian_rational();
    GaussianRational c = rng.next_gaussian_rational();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(20) == BigInt("2432902008176640000"));
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(4, 7) == 0);
  CHECK(binomial(40, 20) == BigInt("137846528820"));
}
