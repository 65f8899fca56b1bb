#pragma once

// Dense polynomials over a prime field F_p, lowest degree first, no trailing zeros.

#include <cstdint>
#include <random>
#include <vector>

#include "blockgraph/integer.hpp"

namespace blockgraph::detail::gfp {

using u64 = std::uint64_t;
using Poly = std::vector<u64>;

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
/// Remainder of a modulo a nonzero m.
Poly rem(const Poly& a, const Poly& m, u64 p);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, u64 p);
Poly powmod(const Poly& a, const Integer& e, const Poly& m, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);

/// Ben-Or irreducibility test.
bool is_irreducible(const Poly& f, u64 p);

/// Distinct roots in F_p of a nonzero polynomial, ascending.
std::vector<u64> roots(const Poly& f, u64 p, std::mt19937_64& rng);

/// Solves A x = b over F_p for square nonsingular A (row-major, n x n); returns false if singular.
bool solve(std::vector<std::vector<u64>> a, std::vector<u64> b, u64 p, std::vector<u64>& x);

/// Basis of the null space of the n x n matrix a over F_p.
std::vector<std::vector<u64>> null_space(std::vector<std::vector<u64>> a, u64 p);

}  // namespace blockgraph::detail::gfp
