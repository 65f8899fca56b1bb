#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockgraph/cyclotomic.hpp"
#include "blockgraph/integer.hpp"

namespace blockgraph {

struct ConjClass {
  Integer size;
  std::uint64_t element_order = 1;
  std::string label;

  friend bool operator==(const ConjClass&, const ConjClass&) = default;
};

/// Character table of a finite group: classes as columns, irreducible characters as rows.
struct CharacterTable {
  std::string name;
  Integer order;
  std::vector<ConjClass> classes;
  std::vector<std::vector<Cyclotomic>> irr;
  std::optional<std::string> provenance;

  std::size_t size() const noexcept { return classes.size(); }
  /// lcm of the element orders.
  std::uint64_t exponent() const;
  /// lcm of the conductors of all entries; divides exponent() in a valid table.
  std::uint64_t value_conductor() const;
  const Integer& degree(std::size_t row) const { return irr[row][0].rational(); }

  friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// Parses, canonically reorders and validates a JSON table document.
/// Throws SyntaxError or ValidationError.
CharacterTable parse_table(std::string_view document);
CharacterTable parse_table(std::istream& in);
CharacterTable load_table(const std::filesystem::path& path);

/// Canonical JSON text; parse_table(print_table(t)) == t for canonical t.
std::string print_table(const CharacterTable& t);

/// Names of the violated relations; empty when the table is consistent.
/// Possible names: shape, identity-class, trivial-character, size-sum, degree-sum,
/// row-orthogonality, column-orthogonality, central-character-integrality, conductor.
std::vector<std::string> validate(const CharacterTable& t);

/// Identity class first, then by element order and class size (stable); trivial character
/// first, then by degree, then by value sequence. Missing labels become order + letter.
CharacterTable canonicalize(CharacterTable t);

/// Ascending primes dividing the group order.
std::vector<std::uint64_t> prime_divisors(const CharacterTable& t);

/// The same table up to a permutation of rows and a permutation of columns.
bool tables_equivalent(const CharacterTable& a, const CharacterTable& b);

/// Row i of the result is row row_perm[i] of t, column j is column col_perm[j].
CharacterTable permuted(const CharacterTable& t, const std::vector<std::size_t>& row_perm,
                        const std::vector<std::size_t>& col_perm);

}  // namespace blockgraph
