#pragma once

#include <cstdint>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Deterministic primality by trial division (inputs stay small).
bool is_prime(std::uint64_t n);
bool is_prime(const Integer& n);

/// The n-th prime (1-based) among the primes >= lower_bound.
/// lower_bound 0 or 2 gives 2, 3, 5, ...; 3 gives the odd primes; 5 gives P>=5.
/// The shared prime table grows on demand under a lock.
std::uint64_t nth_prime(std::uint64_t n, std::uint64_t lower_bound = 0);

/// 1-based position of prime p in the sequence of primes >= lower_bound.
/// Throws kInvalidArgument when p is not such a prime.
std::uint64_t prime_index(std::uint64_t p, std::uint64_t lower_bound = 0);

}  // namespace puiseux
