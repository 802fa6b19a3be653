#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace orbva {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  BigInt r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Generalized binomial coefficient: n may be any integer, j >= 0.
inline Rational binomial(long n, long j) {
  if (j < 0) return 0;
  Rational r = 1;
  for (long i = 0; i < j; ++i) {
    r *= Rational(n - i, i + 1);
  }
  return r;
}

inline BigInt isqrt_floor(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt of negative argument");
  return boost::multiprecision::sqrt(n);
}

/// Writes n = square * squarefree and returns {sqrt(square), squarefree}.
///
/// Small primes are extracted by trial division; the remaining cofactor R has
/// no prime factor below the trial bound, so it is 1, p, p^2, or a product of
/// distinct large primes. p^2 is detected by an exact square-root test; beyond
/// ~B^3 a square factor could hide, which we refuse rather than mis-normalize.
std::pair<BigInt, BigInt> squarefree_decompose(BigInt n);

/// Prime factorization by trial division (throws if a cofactor cannot be
/// resolved); used for the conjugation set of exact radical inverses.
std::vector<BigInt> prime_factors(BigInt n);

inline double rational_to_double(const Rational& q) {
  return q.convert_to<double>();
}

/// FNV-1a, used to fingerprint run configurations in output files.
inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Exceptions from
/// workers are rethrown on the caller thread.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace orbva
