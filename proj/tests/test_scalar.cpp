#include "doctest.h"

#include "orbva/scalar.hpp"

#include <cmath>

using namespace orbva;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("difference of squares") {
  RadicalScalar a = RadicalScalar::sqrt_of(2) + RadicalScalar(1);
  RadicalScalar b = RadicalScalar::sqrt_of(2) - RadicalScalar(1);
  CHECK(a * b == RadicalScalar(1));
}

TEST_CASE("square extraction") {
  CHECK(RadicalScalar::sqrt_of(8) == RadicalScalar::term(2, 2));
  CHECK(RadicalScalar::sqrt_of(8).terms().begin()->first == 2);
}

TEST_CASE("addition collapses like radicands") {
  RadicalScalar half_rt3 = RadicalScalar::term(Rational(1, 2), 3);
  CHECK(half_rt3 + half_rt3 == RadicalScalar::sqrt_of(3));
}

TEST_CASE("sqrt of rational normal form") {
  CHECK(RadicalScalar::sqrt_of(Rational(3, 4)) == RadicalScalar::term(Rational(1, 2), 3));
  CHECK(RadicalScalar::sqrt_of(Rational(1, 6)) == RadicalScalar::term(Rational(1, 6), 6));
  CHECK(RadicalScalar::sqrt_of(0).is_zero());
  CHECK_THROWS(RadicalScalar::sqrt_of(Rational(-1, 2)));
}

TEST_CASE("float evaluation against libm") {
  CHECK(std::abs(RadicalScalar::sqrt_of(2).to_double() - std::sqrt(2.0)) < 1e-12);
  CHECK(RadicalScalar(1).to_double() == 1.0);
  CHECK(std::abs(RadicalScalar::sqrt_of(Rational(1, 6)).to_double() - std::sqrt(1.0 / 6.0)) <
        1e-12);
  // Known digits from the operation contract.
  CHECK(std::abs(RadicalScalar::sqrt_of(2).to_double() - 1.414214) < 1e-6);
  CHECK(std::abs(RadicalScalar::sqrt_of(Rational(1, 6)).to_double() - 0.408248) < 1e-6);
}

TEST_CASE("approximation precision contract") {
  RadicalScalar x = RadicalScalar::term(Rational(7, 3), 5) - RadicalScalar::term(Rational(2), 3);
  double target = (7.0 / 3.0) * std::sqrt(5.0) - 2.0 * std::sqrt(3.0);
  for (int digits : {1, 3, 6, 12}) {
    double err = std::abs(rational_to_double(x.approximation(digits)) - target);
    CHECK(err < 1.5 * std::pow(10.0, -digits));
  }
}

TEST_CASE("ring laws") {
  std::vector<RadicalScalar> vals = {
      RadicalScalar(Rational(3, 7)), RadicalScalar::sqrt_of(Rational(5, 2)),
      RadicalScalar::term(Rational(-1, 3), 6) + RadicalScalar(2),
      RadicalScalar::sqrt_of(12) - RadicalScalar::sqrt_of(27)};
  for (const auto& a : vals) {
    for (const auto& b : vals) {
      CHECK(a * b == b * a);
      CHECK(a + b == b + a);
      for (const auto& c : vals) {
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
      }
    }
  }
}

TEST_CASE("sqrt squares back to its argument") {
  for (Rational q : {Rational(0), Rational(7), Rational(3, 4), Rational(50, 49)}) {
    RadicalScalar r = RadicalScalar::sqrt_of(q);
    CHECK(r * r == RadicalScalar(q));
  }
}

TEST_CASE("exact inverse") {
  std::vector<RadicalScalar> vals = {
      RadicalScalar(Rational(-5, 3)),
      RadicalScalar::sqrt_of(2),
      RadicalScalar::sqrt_of(2) + RadicalScalar(1),
      RadicalScalar::term(Rational(1, 2), 6) - RadicalScalar::sqrt_of(3) + RadicalScalar(4),
  };
  for (const auto& v : vals) {
    CHECK(v * v.inverse() == RadicalScalar(1));
  }
  CHECK_THROWS(RadicalScalar().inverse());
}

TEST_CASE("sign and distinguishability") {
  CHECK(RadicalScalar().sign() == 0);
  CHECK(RadicalScalar::sqrt_of(2).sign() == 1);
  CHECK((-RadicalScalar::sqrt_of(2)).sign() == -1);
  // sqrt(2)+sqrt(3) is close to sqrt(9.89) but must stay distinguishable.
  RadicalScalar a = RadicalScalar::sqrt_of(2) + RadicalScalar::sqrt_of(3);
  RadicalScalar b = RadicalScalar::sqrt_of(Rational(989, 100));
  CHECK(a != b);
  CHECK((a - b).sign() != 0);
}

TEST_CASE("squarefree decomposition") {
  auto [s, f] = squarefree_decompose(BigInt(720));  // 720 = 12^2 * 5
  CHECK(s == 12);
  CHECK(f == 5);
  auto [s2, f2] = squarefree_decompose(BigInt(1));
  CHECK(s2 == 1);
  CHECK(f2 == 1);
}

TEST_SUITE_END();
