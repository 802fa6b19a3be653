#pragma once

#include "orbva/util.hpp"

#include <map>
#include <string>

namespace orbva {

/// Exact element of the Q-span of square roots of positive integers,
/// sum_r q_r * sqrt(r) with every stored radicand squarefree and every
/// stored coefficient nonzero. Radicand 1 carries the rational part.
/// Values are immutable in spirit: all operations return fresh objects,
/// so concurrent reads are safe.
class RadicalScalar {
 public:
  RadicalScalar() = default;
  RadicalScalar(int v) : RadicalScalar(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  RadicalScalar(long v) : RadicalScalar(Rational(v)) {}  // NOLINT
  RadicalScalar(const Rational& q);                      // NOLINT
  RadicalScalar(const BigInt& n) : RadicalScalar(Rational(n)) {}  // NOLINT

  /// Exact sqrt(q) for rational q >= 0, normalized as sqrt(num*den)/den.
  static RadicalScalar sqrt_of(const Rational& q);
  static RadicalScalar term(const Rational& coeff, const BigInt& radicand);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// The value as a Rational; throws unless is_rational().
  Rational rational_value() const;

  const std::map<BigInt, Rational>& terms() const { return terms_; }

  RadicalScalar operator-() const;
  RadicalScalar& operator+=(const RadicalScalar& o);
  RadicalScalar& operator-=(const RadicalScalar& o);
  RadicalScalar& operator*=(const RadicalScalar& o);
  friend RadicalScalar operator+(RadicalScalar a, const RadicalScalar& b) { return a += b; }
  friend RadicalScalar operator-(RadicalScalar a, const RadicalScalar& b) { return a -= b; }
  friend RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b);
  friend bool operator==(const RadicalScalar& a, const RadicalScalar& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const RadicalScalar& a, const RadicalScalar& b) { return !(a == b); }
  friend bool operator<(const RadicalScalar& a, const RadicalScalar& b) {
    return a.terms_ < b.terms_;
  }

  /// Exact multiplicative inverse in Q(sqrt p_1, ..., sqrt p_k); throws on zero.
  RadicalScalar inverse() const;

  /// Rational approximation within 10^-digits of the true value.
  Rational approximation(int digits) const;
  double to_double() const;
  /// Exact sign (-1, 0, +1) by adaptive-precision refinement.
  int sign() const;

  std::string str() const;

 private:
  std::map<BigInt, Rational> terms_;
};

inline RadicalScalar sqrt_of_rational(const Rational& q) { return RadicalScalar::sqrt_of(q); }

}  // namespace orbva
