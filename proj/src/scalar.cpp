#include "orbva/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <set>
#include <sstream>

namespace orbva {

namespace mp = boost::multiprecision;

RadicalScalar::RadicalScalar(const Rational& q) {
  if (q != 0) terms_[BigInt(1)] = q;
}

RadicalScalar RadicalScalar::term(const Rational& coeff, const BigInt& radicand) {
  if (radicand <= 0) throw std::invalid_argument("radicand must be positive");
  RadicalScalar out;
  if (coeff == 0) return out;
  auto [sq, rad] = squarefree_decompose(radicand);
  out.terms_[rad] = coeff * sq;
  return out;
}

RadicalScalar RadicalScalar::sqrt_of(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt_of: negative rational");
  if (q == 0) return RadicalScalar();
  BigInt num = numerator(q), den = denominator(q);
  // sqrt(num/den) = sqrt(num*den) / den
  return term(Rational(1, den), num * den);
}

bool RadicalScalar::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rational RadicalScalar::rational_value() const {
  if (terms_.empty()) return 0;
  if (!is_rational()) throw std::domain_error("RadicalScalar is irrational: " + str());
  return terms_.begin()->second;
}

RadicalScalar RadicalScalar::operator-() const {
  RadicalScalar out = *this;
  for (auto& [r, q] : out.terms_) q = -q;
  return out;
}

RadicalScalar& RadicalScalar::operator+=(const RadicalScalar& o) {
  for (const auto& [r, q] : o.terms_) {
    auto it = terms_.find(r);
    if (it == terms_.end()) {
      terms_.emplace(r, q);
    } else {
      it->second += q;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

RadicalScalar& RadicalScalar::operator-=(const RadicalScalar& o) { return *this += -o; }

RadicalScalar operator*(const RadicalScalar& a, const RadicalScalar& b) {
  RadicalScalar out;
  for (const auto& [r1, q1] : a.terms_) {
    for (const auto& [r2, q2] : b.terms_) {
      // sqrt(r1)*sqrt(r2) = g*sqrt((r1/g)(r2/g)) with g = gcd; the cofactors
      // are coprime and squarefree, so their product is already squarefree.
      BigInt g = mp::gcd(r1, r2);
      BigInt rad = (r1 / g) * (r2 / g);
      Rational coeff = q1 * q2 * g;
      auto it = out.terms_.find(rad);
      if (it == out.terms_.end()) {
        out.terms_.emplace(rad, coeff);
      } else {
        it->second += coeff;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

RadicalScalar& RadicalScalar::operator*=(const RadicalScalar& o) { return *this = *this * o; }

RadicalScalar RadicalScalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) {
    Rational q = terms_.begin()->second;
    return RadicalScalar(Rational(denominator(q), numerator(q)));
  }
  std::set<BigInt> primes;
  for (const auto& [r, q] : terms_) {
    for (const auto& p : prime_factors(r)) primes.insert(p);
  }
  std::vector<BigInt> ps(primes.begin(), primes.end());
  // Multiply all conjugates (every nontrivial sign pattern on sqrt(p)); the
  // full product with *this is the rational field norm.
  RadicalScalar conj_product = Rational(1);
  for (std::size_t mask = 1; mask < (std::size_t{1} << ps.size()); ++mask) {
    RadicalScalar c;
    for (const auto& [r, q] : terms_) {
      int flips = 0;
      for (std::size_t i = 0; i < ps.size(); ++i) {
        if ((mask >> i) & 1 && r % ps[i] == 0) ++flips;
      }
      Rational coeff = (flips % 2) ? -q : q;
      auto it = c.terms_.find(r);
      if (it == c.terms_.end()) {
        if (coeff != 0) c.terms_.emplace(r, coeff);
      } else {
        it->second += coeff;
        if (it->second == 0) c.terms_.erase(it);
      }
    }
    conj_product *= c;
  }
  RadicalScalar norm = *this * conj_product;
  if (!norm.is_rational() || norm.is_zero()) {
    throw std::logic_error("radical norm failed to rationalize");
  }
  Rational nq = norm.rational_value();
  return conj_product * RadicalScalar(Rational(denominator(nq), numerator(nq)));
}

Rational RadicalScalar::approximation(int digits) const {
  if (digits < 1) throw std::invalid_argument("precision must be >= 1");
  if (terms_.empty()) return 0;
  // Each sqrt is computed to `digits + slack` places so the weighted sum stays
  // inside 10^-digits.
  Rational coeff_sum = 0;
  for (const auto& [r, q] : terms_) coeff_sum += abs(q);
  int slack = 2;
  for (Rational s = coeff_sum; s > 1; s /= 10) ++slack;
  BigInt scale = 1;
  for (int i = 0; i < digits + slack; ++i) scale *= 10;
  Rational out = 0;
  for (const auto& [r, q] : terms_) {
    if (r == 1) {
      out += q;
    } else {
      BigInt root = isqrt_floor(r * scale * scale);
      out += q * Rational(root, scale);
    }
  }
  return out;
}

double RadicalScalar::to_double() const { return rational_to_double(approximation(25)); }

int RadicalScalar::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) {
    Rational q = terms_.begin()->second;
    return q > 0 ? 1 : -1;
  }
  for (int digits = 20;; digits *= 2) {
    Rational approx = approximation(digits);
    Rational err = 1;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    err = Rational(2, scale);
    if (approx > err) return 1;
    if (approx < -err) return -1;
    if (digits > 20000) throw std::logic_error("sign refinement failed to converge");
  }
}

std::string RadicalScalar::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, q] : terms_) {
    if (!first) os << (q > 0 ? " + " : " - ");
    Rational a = (!first && q < 0) ? Rational(-q) : q;
    if (first && q < 0) {
      os << "-";
      a = -q;
    }
    first = false;
    if (r == 1) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "sqrt(" << r << ")";
    }
  }
  return os.str();
}

}  // namespace orbva
