#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "blockgraph/cyclotomic.hpp"

namespace blockgraph {

/// Element of F_p[y]/(f) for the modulus f of a ReductionContext.
struct FiniteFieldElt {
  std::uint64_t characteristic = 0;
  /// Exactly deg f residues in [0, p), lowest power of y first.
  std::vector<std::uint64_t> coeffs;

  std::size_t degree() const noexcept { return coeffs.size(); }
  bool is_zero() const;

  friend bool operator==(const FiniteFieldElt&, const FiniteFieldElt&) = default;
  friend auto operator<=>(const FiniteFieldElt&, const FiniteFieldElt&) = default;
};

/// A maximal ideal over p in Z[zeta_m], realised as the map
/// zeta_m -> y^s into F_p[y]/(f) where f is an irreducible factor of Phi_{m'} mod p,
/// m' the p'-part of m, and y a root of f (so zeta_{m'} maps to y).
class ReductionContext {
 public:
  using Poly = std::vector<std::uint64_t>;

  /// Uses the smallest irreducible factor, comparing coefficients from the leading term down.
  static ReductionContext make(std::uint64_t m, std::uint64_t p);
  /// Uses the given monic factor f (lowest degree first); throws InvalidArgument if it is not
  /// an irreducible factor of Phi_{m'} mod p.
  ReductionContext(std::uint64_t m, std::uint64_t p, Poly f);

  /// All monic irreducible factors of Phi_{m'} mod p, in the order used by make().
  static std::vector<Poly> irreducible_factors(std::uint64_t m, std::uint64_t p);

  std::uint64_t p() const noexcept { return p_; }
  std::uint64_t m() const noexcept { return m_; }
  std::uint64_t m_prime() const noexcept { return m_prime_; }
  std::size_t degree() const noexcept { return k_; }
  const Poly& modulus() const noexcept { return f_; }

  /// Throws ConductorMismatch unless a.conductor() divides m.
  FiniteFieldElt reduce(const Cyclotomic& a) const;

  FiniteFieldElt zero() const;
  FiniteFieldElt one() const;
  /// The image of zeta_{m'}, i.e. y.
  FiniteFieldElt root() const;
  FiniteFieldElt add(const FiniteFieldElt& a, const FiniteFieldElt& b) const;
  FiniteFieldElt mul(const FiniteFieldElt& a, const FiniteFieldElt& b) const;

 private:
  ReductionContext(std::uint64_t m, std::uint64_t p, Poly f, bool trusted);
  void build_power_table();

  std::uint64_t p_ = 2;
  std::uint64_t m_ = 1;
  std::uint64_t m_prime_ = 1;
  std::uint64_t shift_ = 1;  // zeta_m -> y^shift_
  std::size_t k_ = 1;
  Poly f_;
  std::vector<std::uint64_t> powers_;  // y^e mod f for e < m', row-major m' x k
};

}  // namespace blockgraph
