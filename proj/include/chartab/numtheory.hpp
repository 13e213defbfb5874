#ifndef CHARTAB_NUMTHEORY_HPP
#define CHARTAB_NUMTHEORY_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace chartab {

bool is_prime(std::uint64_t n);

// Prime factorization as (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

// All divisors, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

// Decomposes q = p^f with p prime; returns {0,0} if q is not a prime power
// (or q < 2).
std::pair<std::uint64_t, unsigned> prime_power_decompose(std::uint64_t q);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);

// Legendre symbol (a|p) for odd prime p: 0, 1 or -1.
int legendre_symbol(std::int64_t a, std::uint64_t p);

// Smallest generator of the multiplicative group mod prime p.
std::uint64_t primitive_root_mod(std::uint64_t p);

} // namespace chartab

#endif
