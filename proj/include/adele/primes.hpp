#pragma once

#include <cstdint>
#include <vector>

namespace adele {

// Primes <= n by sieve of Eratosthenes.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

bool is_prime(std::int64_t n);

// gcd, modular pow/inverse on 64-bit values (arguments small enough that
// __int128 covers intermediate products).
std::int64_t gcd64(std::int64_t a, std::int64_t b);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t inv_mod(std::int64_t a, std::int64_t mod);  // throws if not invertible

}  // namespace adele
