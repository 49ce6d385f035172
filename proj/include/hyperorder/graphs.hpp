#pragma once

#include <cstdint>
#include <vector>

#include "json.hpp"
#include "hyperorder/rational.hpp"

namespace hyperorder {

/// Largest vertex count accepted by the subset DP.
inline constexpr std::size_t kMaxDpVertices = 24;

struct Hypergraph {
  std::size_t vertex_count = 0;
  /// Each edge sorted; the edge list sorted lexicographically and deduplicated.
  std::vector<std::vector<std::size_t>> edges;

  /// Sorts and deduplicates; throws DomainError on an out-of-range vertex.
  void normalize();
};

struct Graph {
  std::size_t vertex_count = 0;
  /// Bit u of adjacency[v] is set iff u ~ v. Limited to 64 vertices.
  std::vector<std::uint64_t> adjacency;

  explicit Graph(std::size_t vertices = 0);
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  std::size_t edge_count() const;
};

/// All 3-subsets of {0..n-1} in lexicographic order.
Hypergraph complete_3uniform(std::int64_t n);
/// V1 = {0..m-1}, V2 = {m..m+n-1}; edges {a, b, c} with a in V1 and b < c in V2.
Hypergraph complete_bipartite_12(std::int64_t m, std::int64_t n);
/// Vertex i of the result is edge i of h.
Graph line_graph(const Hypergraph& h);

/// Number of vertex orderings whose every prefix induces a connected subgraph.
/// Throws CapacityError above kMaxDpVertices.
BigInt count_successive_orderings(const Graph& g);
/// count / |V|!.
Rational successive_probability(const Graph& g);

nlohmann::json to_json(const Hypergraph& h);
nlohmann::json to_json(const Graph& g);
/// Accepts {"vertex_count": n, "edges": [[...], ...]}; throws UsageError on bad input.
Hypergraph hypergraph_from_json(const nlohmann::json& j);
Graph graph_from_json(const nlohmann::json& j);

}  // namespace hyperorder
