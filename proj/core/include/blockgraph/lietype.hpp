#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "blockgraph/integer.hpp"

namespace blockgraph {

enum class Family {
  A, B, C, D, E6, E7, E8, F4, G2,
  A2,   // 2A_n, unitary
  D2,   // 2D_n
  E6_2, // 2E6
  D4_3, // 3D4
  B2_2, // 2B2, Suzuki
  F4_2, // 2F4, Ree
  G2_2, // 2G2, Ree
};

std::string family_name(Family f);
/// Accepts "A".."G2" and the twisted names "2A", "2D", "2E6", "3D4", "2B2", "2F4", "2G2"
/// (a leading '^' or superscript digit is also accepted). Throws InvalidDescriptor.
Family parse_family(std::string_view text);
const std::vector<Family>& all_families();
bool is_exceptional(Family f);
/// Rank for families where it is fixed, otherwise 0.
unsigned fixed_rank(Family f);

struct LieGroup {
  Family family = Family::A;
  unsigned rank = 1;
  std::uint64_t p = 2;
  unsigned f = 1;
  std::uint64_t q = 2;

  std::string name() const;
};

/// Validates rank bounds, q = p^f, the very twisted shapes q = 2^(2m+1) and 3^(2m+1) with m >= 1,
/// and rejects the non-simple cases A1(2), A1(3), B2(2), G2(2), 2A2(2).
/// rank may be 0 for families of fixed rank. Throws InvalidDescriptor, or TitsGroup for 2F4(2).
LieGroup make_lie_group(Family family, unsigned rank, std::uint64_t q);

struct FamilyData {
  /// Degrees of the Weyl group.
  std::vector<unsigned> degrees;
  /// Twist eigenvalue per degree (+1 or -1); empty for 3D4 and the very twisted families.
  std::vector<int> eps;
  unsigned positive_roots = 0;
  /// Generic order: x^positive_roots * prod Phi_k(x)^a_k, as k -> a_k.
  std::map<unsigned, unsigned> cyclotomic_factors;
};

FamilyData family_data(Family family, unsigned rank);

/// |A0 : S| for the adjoint group A0.
Integer diagonal_index(const LieGroup& s);

struct FactoredOrder {
  Integer value;
  std::vector<std::pair<Integer, unsigned>> factors;
};

FactoredOrder group_order(const LieGroup& s);

/// Order of q modulo ell for odd ell, modulo 4 for ell = 2. Throws BadPrime if ell | q or ell is not prime.
std::uint64_t e_of(std::uint64_t ell, std::uint64_t q);

/// Smallest prime dividing t^n - 1 but no t^m - 1 with 0 < m < n.
std::optional<Integer> zsigmondy(std::uint64_t t, std::uint64_t n);

/// Whether e is a regular number of the family at rank n.
bool is_regular(Family family, unsigned rank, std::uint64_t e);

/// Untwisted families: e divides as many degrees as codegrees.
bool regular_by_degree_criterion(const FamilyData& data, std::uint64_t e);

/// Whether the Steinberg character lies in the principal ell-block, via regularity of e_of(ell, q).
/// Throws DefiningPrime or NotADivisor.
bool steinberg_in_principal_block(const LieGroup& s, std::uint64_t ell);

/// Data on a cyclic torus T carrying a Sylow r-subgroup for a Zsigmondy prime r.
struct SylowTorusData {
  Integer d;
  Integer torus_order;
  Integer te_order;
  std::uint64_t e = 0;
  std::uint64_t normalizer_quotient = 0;  // |N(R)/C(R)|
  std::uint64_t ord_r_p = 0;
};

/// Throws ConditionViolated naming the failed condition.
SylowTorusData sylow_torus_data(const LieGroup& s);

/// Smallest prime r dividing |T_e| with ord_r(p) equal to the ord_r_p entry. Rows whose conditions
/// fail are still evaluated, so this never throws ConditionViolated.
std::optional<Integer> zsigmondy_prime_of_te(const LieGroup& s);

}  // namespace blockgraph
