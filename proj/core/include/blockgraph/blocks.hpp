#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blockgraph/chartab.hpp"
#include "blockgraph/finite_field.hpp"

namespace blockgraph {

/// omega(K) = |K| chi(g_K) / chi(1) for every class K.
struct CentralCharacter {
  std::vector<Cyclotomic> values;
};

struct BlockPartition {
  std::uint64_t prime = 0;
  /// Row indices per block, each ascending; blocks ordered by their smallest row.
  std::vector<std::vector<std::size_t>> blocks;
  /// Block holding the trivial character (row 0); always 0 given the ordering above.
  std::size_t principal_index = 0;
  std::vector<unsigned> defects;
  /// Block index of every row.
  std::vector<std::size_t> block_of;

  const std::vector<std::size_t>& principal() const { return blocks[principal_index]; }
  friend bool operator==(const BlockPartition&, const BlockPartition&) = default;
};

/// Throws NotAlgebraicInteger if the table is corrupt.
CentralCharacter central_character(const CharacterTable& t, std::size_t row);
std::vector<CentralCharacter> central_characters(const CharacterTable& t);

/// Partition by Brauer's congruence on central characters modulo the ideal of ctx.
/// ctx.m() must be a multiple of t.value_conductor().
BlockPartition block_partition(const CharacterTable& t, const std::vector<CentralCharacter>& omega,
                               const ReductionContext& ctx);
/// Uses the default context for the conductor of the table values.
BlockPartition block_partition(const CharacterTable& t, std::uint64_t p);

std::vector<std::size_t> principal_block_rows(const CharacterTable& t, std::uint64_t p);

/// Partitions for several primes, computed by at most `workers` threads (0: hardware default).
std::map<std::uint64_t, BlockPartition> block_partitions(const CharacterTable& t,
                                                         const std::vector<std::uint64_t>& primes,
                                                         unsigned workers = 0);

/// {"prime": p, "blocks": [{"rows": [...], "defect": d, "principal": bool}]}
std::string partition_json(const BlockPartition& b);

}  // namespace blockgraph
