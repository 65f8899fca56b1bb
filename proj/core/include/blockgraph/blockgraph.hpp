#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "blockgraph/blocks.hpp"
#include "blockgraph/chartab.hpp"

namespace blockgraph {

using PrimePair = std::pair<std::uint64_t, std::uint64_t>;
using PrimeTriple = std::array<std::uint64_t, 3>;

struct Witness {
  std::size_t row = 0;
  Integer degree;
};

/// Vertices are the primes dividing |G|; p and q are adjacent when their principal blocks
/// share a nontrivial irreducible character.
struct BlockGraph {
  std::string name;
  std::vector<std::uint64_t> vertices;
  /// Ascending pairs with first < second.
  std::vector<PrimePair> edges;
  /// Lowest nontrivial common row for every edge.
  std::map<PrimePair, Witness> witnesses;
  std::map<std::uint64_t, BlockPartition> partitions;

  bool has_vertex(std::uint64_t p) const;
  bool has_edge(std::uint64_t p, std::uint64_t q) const;
  std::size_t degree_of(std::uint64_t p) const;
};

BlockGraph build_block_graph(const CharacterTable& t, unsigned workers = 0);

bool is_complete(const BlockGraph& g);
std::vector<PrimePair> missing_edges(const BlockGraph& g);

/// Triangles through p, each ascending, in lexicographic order. Throws VertexNotFound.
std::vector<PrimeTriple> triangles_containing(const BlockGraph& g, std::uint64_t p);

struct SolvabilityReport {
  bool two_divides_order = false;
  std::vector<PrimeTriple> triangles;
  /// No triangle through 2 in the graph of G/S(G), so G is solvable.
  bool solvable = false;
  std::string summary;
};

/// Expects the table of G/S(G), S(G) the solvable radical of G.
SolvabilityReport solvability_criterion(const CharacterTable& quotient);

std::string export_dot(const BlockGraph& g);
/// {"name", "vertices", "edges", "witnesses", "complete"}
std::string graph_json(const BlockGraph& g);

}  // namespace blockgraph
