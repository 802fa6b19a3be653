#include "orbva/util.hpp"

#include <atomic>
#include <exception>
#include <mutex>

namespace orbva {

namespace {
constexpr long kTrialBound = 1000000;
}

std::pair<BigInt, BigInt> squarefree_decompose(BigInt n) {
  if (n <= 0) throw std::invalid_argument("squarefree_decompose requires n > 0");
  BigInt square = 1, free = 1;
  for (long p = 2; p <= kTrialBound && BigInt(p) * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) square *= p;
    if (e % 2) free *= p;
  }
  if (n > 1) {
    BigInt r = isqrt_floor(n);
    if (r * r == n) {
      square *= r;
    } else {
      // No prime factor <= kTrialBound remains, so n is squarefree unless it
      // exceeds kTrialBound^3 (where p^2*q could hide).
      BigInt limit = BigInt(kTrialBound);
      if (n >= limit * limit * limit) {
        throw std::domain_error("squarefree_decompose: cofactor too large to certify");
      }
      free *= n;
    }
  }
  return {square, free};
}

std::vector<BigInt> prime_factors(BigInt n) {
  if (n <= 0) throw std::invalid_argument("prime_factors requires n > 0");
  std::vector<BigInt> out;
  for (long p = 2; p <= kTrialBound && BigInt(p) * p <= n; p == 2 ? p = 3 : p += 2) {
    if (n % p != 0) continue;
    out.emplace_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) {
    BigInt r = isqrt_floor(n);
    if (r * r == n) {
      out.push_back(r);  // r is prime here: no factor <= kTrialBound survives
    } else {
      BigInt limit = BigInt(kTrialBound);
      if (n >= limit * limit) {
        throw std::domain_error("prime_factors: cofactor too large to certify prime");
      }
      out.push_back(n);
    }
  }
  return out;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<std::size_t>(jobs, n);
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace orbva
