#include "puiseux/primes.hpp"

#include <algorithm>
#include <mutex>
#include <vector>

#include "puiseux/error.hpp"

namespace puiseux {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

bool is_prime(const Integer& n) {
  if (sgn(n) <= 0) return false;
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  // Beyond 64 bits: GMP's test with enough rounds is deterministic in practice,
  // and no such primes occur at the scales used here.
  return mpz_probab_prime_p(n.get_mpz_t(), 50) > 0;
}

namespace {

class PrimeTable {
 public:
  // Returns primes[i] for i < count, extending the table as needed.
  std::uint64_t at(std::size_t i) {
    std::lock_guard<std::mutex> lock(mu_);
    std::uint64_t candidate = primes_.empty() ? 2 : primes_.back() + 1;
    while (primes_.size() <= i) {
      if (is_prime(candidate)) primes_.push_back(candidate);
      ++candidate;
    }
    return primes_[i];
  }

  // Index of the first prime >= bound.
  std::size_t first_at_least(std::uint64_t bound) {
    std::size_t i = 0;
    while (at(i) < bound) ++i;
    return i;
  }

 private:
  std::mutex mu_;
  std::vector<std::uint64_t> primes_;
};

PrimeTable& table() {
  static PrimeTable t;
  return t;
}

}  // namespace

std::uint64_t nth_prime(std::uint64_t n, std::uint64_t lower_bound) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "prime index must be >= 1");
  std::size_t base = table().first_at_least(lower_bound);
  return table().at(base + n - 1);
}

std::uint64_t prime_index(std::uint64_t p, std::uint64_t lower_bound) {
  if (!is_prime(p) || p < lower_bound) {
    fail(ErrorCode::kInvalidArgument,
         std::to_string(p) + " is not a prime >= " + std::to_string(lower_bound));
  }
  std::size_t base = table().first_at_least(lower_bound);
  std::size_t i = base;
  while (table().at(i) < p) ++i;
  return i - base + 1;
}

}  // namespace puiseux
