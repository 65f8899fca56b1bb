#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "blockgraph/blockgraph.hpp"
#include "blockgraph/errors.hpp"
#include "corpus.hpp"

using namespace blockgraph;
using testing_support::corpus_names;
using testing_support::corpus_table;

namespace {

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

CharacterTable trivial_group() {
  return parse_table(R"({"name":"1","order":1,"classes":[{"size":1,"order":1}],"irr":[[1]]})");
}

}  // namespace

TEST(BlockGraph, C6IsEdgeless) {
  const auto g = build_block_graph(corpus_table("C6"));
  EXPECT_EQ(g.vertices, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_TRUE(g.edges.empty());
  EXPECT_FALSE(is_complete(g));
  EXPECT_TRUE(triangles_containing(g, 3).empty());
}

TEST(BlockGraph, S3SingleEdgeWitnessedBySign) {
  const auto& t = corpus_table("S3");
  const auto g = build_block_graph(t);
  ASSERT_EQ(g.edges, (std::vector<PrimePair>{{2, 3}}));
  const auto& w = g.witnesses.at({2, 3});
  EXPECT_EQ(w.degree, Integer(1));
  EXPECT_NE(w.row, 0u);
  EXPECT_EQ(t.irr[w.row][1], Cyclotomic(-1));
}

TEST(BlockGraph, A5Complete) {
  const auto g = build_block_graph(corpus_table("A5"));
  EXPECT_TRUE(is_complete(g));
  EXPECT_EQ(triangles_containing(g, 2), (std::vector<PrimeTriple>{{2, 3, 5}}));
  const auto dot = export_dot(g);
  EXPECT_EQ(count(dot, " -- "), 3u);
  EXPECT_EQ(count(dot, "[label="), 6u);
}

TEST(BlockGraph, A6Complete) { EXPECT_TRUE(is_complete(build_block_graph(corpus_table("A6")))); }

TEST(BlockGraph, J1MissesThreeFive) {
  const auto g = build_block_graph(corpus_table("J1"));
  EXPECT_EQ(g.vertices.size(), 6u);
  EXPECT_EQ(g.edges.size(), 14u);
  EXPECT_FALSE(is_complete(g));
  EXPECT_EQ(missing_edges(g), (std::vector<PrimePair>{{3, 5}}));
  const auto dot = export_dot(g);
  EXPECT_EQ(count(dot, " -- "), 14u);
}

TEST(BlockGraph, S4HasNoTriangle) {
  const auto g = build_block_graph(corpus_table("S4"));
  EXPECT_TRUE(triangles_containing(g, 2).empty());
  EXPECT_THROW(triangles_containing(g, 5), VertexNotFound);
}

TEST(BlockGraph, EdgelessDot) {
  const auto dot = export_dot(build_block_graph(corpus_table("C6")));
  EXPECT_EQ(count(dot, " -- "), 0u);
  EXPECT_EQ(count(dot, "[label="), 2u);
  EXPECT_EQ(dot, export_dot(build_block_graph(corpus_table("C6"))));
}

TEST(BlockGraph, JsonShape) {
  const auto text = graph_json(build_block_graph(corpus_table("A5")));
  EXPECT_NE(text.find(R"("vertices":[2,3,5])"), std::string::npos);
  EXPECT_NE(text.find(R"("complete":true)"), std::string::npos);
}

TEST(Solvability, TrivialGroup) {
  const auto r = solvability_criterion(trivial_group());
  EXPECT_FALSE(r.two_divides_order);
  EXPECT_TRUE(r.triangles.empty());
  EXPECT_TRUE(r.solvable);
}

TEST(Solvability, A5NotCertified) {
  const auto r = solvability_criterion(corpus_table("A5"));
  EXPECT_FALSE(r.solvable);
  EXPECT_EQ(r.triangles, (std::vector<PrimeTriple>{{2, 3, 5}}));
}

TEST(Solvability, S3AndS4Solvable) {
  EXPECT_TRUE(solvability_criterion(corpus_table("S3")).solvable);
  EXPECT_TRUE(solvability_criterion(corpus_table("S4")).solvable);
}

TEST(BlockGraphProperty, NilpotentIffEdgeless) {
  for (const char* name : {"C2", "C6", "C12", "D8", "Q8", "D8xC3"}) {
    EXPECT_TRUE(build_block_graph(corpus_table(name)).edges.empty()) << name;
  }
  for (const char* name : {"S3", "S4", "A4", "SL(2,3)", "A5", "S5", "A6", "L2(7)", "L2(11)", "Sz(8)", "J1", "L5(2)"}) {
    EXPECT_FALSE(build_block_graph(corpus_table(name)).edges.empty()) << name;
  }
}

TEST(BlockGraphProperty, DefiningPrimeHasFullDegree) {
  for (auto [name, p] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"L2(7)", 7}, {"L2(11)", 11}, {"Sz(8)", 2}, {"L5(2)", 2}, {"A5", 2}, {"A6", 3}}) {
    const auto g = build_block_graph(corpus_table(name));
    EXPECT_EQ(g.degree_of(p), g.vertices.size() - 1) << name;
  }
}

TEST(BlockGraphProperty, WitnessesLieInBothPrincipalBlocks) {
  for (const auto& name : corpus_names()) {
    const auto& t = corpus_table(name);
    const auto g = build_block_graph(t);
    for (const auto& [edge, w] : g.witnesses) {
      EXPECT_NE(w.row, 0u);
      EXPECT_EQ(w.degree, t.degree(w.row));
      for (auto p : {edge.first, edge.second}) {
        const auto rows = principal_block_rows(t, p);
        EXPECT_NE(std::find(rows.begin(), rows.end(), w.row), rows.end()) << name;
        // lowest common nontrivial row
        const auto other = principal_block_rows(t, p == edge.first ? edge.second : edge.first);
        for (auto r : rows) {
          if (r == 0 || r >= w.row) continue;
          EXPECT_EQ(std::find(other.begin(), other.end(), r), other.end()) << name;
        }
      }
    }
    EXPECT_EQ(g.witnesses.size(), g.edges.size());
  }
}

TEST(BlockGraphProperty, InvariantUnderShuffles) {
  std::mt19937_64 rng(17);
  for (const char* name : {"S4", "SL(2,3)", "A6", "L2(11)", "J1"}) {
    const auto& t = corpus_table(name);
    const auto reference = build_block_graph(t);
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<std::size_t> rows(t.size()), cols(t.size());
      std::iota(rows.begin(), rows.end(), 0);
      std::iota(cols.begin(), cols.end(), 0);
      std::shuffle(rows.begin(), rows.end(), rng);
      std::shuffle(cols.begin(), cols.end(), rng);
      const auto g = build_block_graph(canonicalize(permuted(t, rows, cols)));
      EXPECT_EQ(g.vertices, reference.vertices) << name;
      EXPECT_EQ(g.edges, reference.edges) << name;
    }
  }
}
