#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "blockgraph/integer.hpp"

// Elementary number theory shared by the cyclotomic, table and Lie-type code.
namespace blockgraph::nt {

using u64 = std::uint64_t;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
u64 inverse_mod(u64 a, u64 m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(u64 n);
bool is_probable_prime(const Integer& n);

/// Prime factorisation with multiplicities, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);
std::vector<std::pair<Integer, unsigned>> factorize(const Integer& n);

std::vector<u64> prime_divisors(u64 n);
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);
u64 lcm(u64 a, u64 b);

/// Largest k with p^k | n (n != 0).
unsigned valuation(u64 n, u64 p);
unsigned valuation(const Integer& n, u64 p);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1.
u64 multiplicative_order(u64 a, u64 n);

/// Returns (p, f) with q = p^f, or (0, 0) when q is not a prime power.
std::pair<u64, unsigned> prime_power(u64 q);

Integer ipow(const Integer& base, unsigned exp);

}  // namespace blockgraph::nt
