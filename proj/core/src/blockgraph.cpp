#include "blockgraph/blockgraph.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blockgraph/errors.hpp"

namespace blockgraph {

using u64 = std::uint64_t;

bool BlockGraph::has_vertex(u64 p) const { return std::binary_search(vertices.begin(), vertices.end(), p); }

bool BlockGraph::has_edge(u64 p, u64 q) const {
  if (p > q) std::swap(p, q);
  return std::binary_search(edges.begin(), edges.end(), PrimePair{p, q});
}

std::size_t BlockGraph::degree_of(u64 p) const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [p](const PrimePair& e) { return e.first == p || e.second == p; }));
}

BlockGraph build_block_graph(const CharacterTable& t, unsigned workers) {
  BlockGraph g;
  g.name = t.name;
  g.vertices = prime_divisors(t);
  g.partitions = block_partitions(t, g.vertices, workers);
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      const u64 p = g.vertices[i];
      const u64 q = g.vertices[j];
      const auto& bp = g.partitions.at(p);
      const auto& bq = g.partitions.at(q);
      for (std::size_t row : bp.principal()) {
        if (row != 0 && bq.block_of[row] == bq.principal_index) {
          g.edges.emplace_back(p, q);
          g.witnesses[{p, q}] = Witness{row, t.degree(row)};
          break;
        }
      }
    }
  }
  return g;
}

bool is_complete(const BlockGraph& g) {
  const std::size_t v = g.vertices.size();
  return g.edges.size() == v * (v - (v > 0 ? 1 : 0)) / 2;
}

std::vector<PrimePair> missing_edges(const BlockGraph& g) {
  std::vector<PrimePair> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      if (!g.has_edge(g.vertices[i], g.vertices[j])) out.emplace_back(g.vertices[i], g.vertices[j]);
    }
  }
  return out;
}

std::vector<PrimeTriple> triangles_containing(const BlockGraph& g, u64 p) {
  if (!g.has_vertex(p)) throw VertexNotFound(std::to_string(p) + " does not divide the group order");
  std::vector<PrimeTriple> out;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
      const u64 a = g.vertices[i];
      const u64 b = g.vertices[j];
      if (a == p || b == p || !g.has_edge(a, b) || !g.has_edge(a, p) || !g.has_edge(b, p)) continue;
      PrimeTriple tri{a, b, p};
      std::sort(tri.begin(), tri.end());
      out.push_back(tri);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SolvabilityReport solvability_criterion(const CharacterTable& quotient) {
  SolvabilityReport r;
  const BlockGraph g = build_block_graph(quotient);
  r.two_divides_order = g.has_vertex(2);
  if (r.two_divides_order) r.triangles = triangles_containing(g, 2);
  r.solvable = r.triangles.empty();
  if (!r.two_divides_order) {
    r.summary = "2 does not divide the order of the quotient, so there is no triangle containing 2: G is solvable";
  } else if (r.solvable) {
    r.summary = "no triangle containing 2: G is solvable";
  } else {
    std::ostringstream s;
    s << "triangle containing 2 found";
    const auto& t = r.triangles.front();
    s << " {" << t[0] << ", " << t[1] << ", " << t[2] << "}: solvability not certified";
    r.summary = s.str();
  }
  return r;
}

std::string export_dot(const BlockGraph& g) {
  std::ostringstream out;
  out << "graph " << nlohmann::json(g.name.empty() ? std::string("G") : g.name).dump() << " {\n";
  for (u64 p : g.vertices) out << "  " << p << " [label=\"" << p << "\"];\n";
  for (const auto& e : g.edges) {
    out << "  " << e.first << " -- " << e.second << " [label=\"" << g.witnesses.at(e).degree.str() << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string graph_json(const BlockGraph& g) {
  nlohmann::ordered_json doc;
  doc["name"] = g.name;
  doc["vertices"] = g.vertices;
  doc["edges"] = nlohmann::ordered_json::array();
  doc["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& e : g.edges) {
    doc["edges"].push_back({e.first, e.second});
    const auto& w = g.witnesses.at(e);
    nlohmann::ordered_json item;
    item["edge"] = {e.first, e.second};
    item["row"] = w.row;
    item["degree"] = static_cast<u64>(w.degree);
    doc["witnesses"].push_back(std::move(item));
  }
  doc["complete"] = is_complete(g);
  return doc.dump();
}

}  // namespace blockgraph
