#include "hyperorder/graphs.hpp"

#include <algorithm>
#include <bit>

#include "hyperorder/errors.hpp"

namespace hyperorder {

void Hypergraph::normalize() {
  for (auto& e : edges) {
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    for (const auto v : e) {
      if (v >= vertex_count) throw DomainError("edge vertex " + std::to_string(v) + " out of range");
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Graph::Graph(std::size_t vertices) : vertex_count(vertices), adjacency(vertices, 0) {
  if (vertices > 64) throw CapacityError("graphs are limited to 64 vertices");
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count || v >= vertex_count) throw DomainError("graph vertex out of range");
  if (u == v) return;
  adjacency[u] |= std::uint64_t{1} << v;
  adjacency[v] |= std::uint64_t{1} << u;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return (adjacency.at(u) >> v) & 1U; }

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto row : adjacency) twice += static_cast<std::size_t>(std::popcount(row));
  return twice / 2;
}

Hypergraph complete_3uniform(std::int64_t n) {
  if (n < 3) throw DomainError("K_n^(3) needs n >= 3");
  Hypergraph h;
  h.vertex_count = static_cast<std::size_t>(n);
  for (std::size_t a = 0; a < h.vertex_count; ++a)
    for (std::size_t b = a + 1; b < h.vertex_count; ++b)
      for (std::size_t c = b + 1; c < h.vertex_count; ++c) h.edges.push_back({a, b, c});
  return h;
}

Hypergraph complete_bipartite_12(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 2) throw DomainError("K_{m,n}^(1,2) needs m >= 1 and n >= 2");
  Hypergraph h;
  const auto mm = static_cast<std::size_t>(m);
  h.vertex_count = mm + static_cast<std::size_t>(n);
  for (std::size_t a = 0; a < mm; ++a)
    for (std::size_t b = mm; b < h.vertex_count; ++b)
      for (std::size_t c = b + 1; c < h.vertex_count; ++c) h.edges.push_back({a, b, c});
  return h;
}

Graph line_graph(const Hypergraph& h) {
  if (h.edges.size() > 64) {
    throw CapacityError("line graph would have " + std::to_string(h.edges.size()) + " vertices (limit 64)");
  }
  Graph g(h.edges.size());
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
      const auto& a = h.edges[i];
      const auto& b = h.edges[j];
      if (std::find_first_of(a.begin(), a.end(), b.begin(), b.end()) != a.end()) g.add_edge(i, j);
    }
  }
  return g;
}

namespace {

BigInt to_bigint(unsigned __int128 x) {
  const auto hi = static_cast<unsigned long>(x >> 64);
  const auto lo = static_cast<unsigned long>(x);
  BigInt out = hi;
  out <<= 64;
  out += lo;
  return out;
}

// f(S) = [S connected] * sum_{v in S} f(S \ v). S is connected iff some
// v in S has f(S \ v) > 0 and a neighbour in S \ v (for |S| >= 2).
template <class Count>
Count subset_dp(const Graph& g) {
  const std::size_t n = g.vertex_count;
  const std::uint32_t full = (1U << n) - 1;
  std::vector<Count> f(std::size_t{full} + 1, 0);
  f[0] = 1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    Count total = 0;
    bool connected = std::popcount(s) == 1;
    for (std::uint32_t rest = s; rest != 0; rest &= rest - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(rest));
      const std::uint32_t without = s & ~(1U << v);
      if (f[without] == 0) continue;
      total += f[without];
      if (!connected && (g.adjacency[v] & without) != 0) connected = true;
    }
    f[s] = connected ? total : 0;
  }
  return f[full];
}

}  // namespace

BigInt count_successive_orderings(const Graph& g) {
  if (g.vertex_count > kMaxDpVertices) {
    throw CapacityError("graph has " + std::to_string(g.vertex_count) + " vertices; the subset DP is capped at " +
                        std::to_string(kMaxDpVertices) + " (use the formula method)");
  }
  if (g.vertex_count == 0) return 1;
  // 20! < 2^64 and 24! < 2^128, so neither width overflows.
  if (g.vertex_count <= 20) {
    return BigInt(static_cast<unsigned long>(subset_dp<std::uint64_t>(g)));
  }
  return to_bigint(subset_dp<unsigned __int128>(g));
}

Rational successive_probability(const Graph& g) {
  const BigInt count = count_successive_orderings(g);
  return Rational(count, factorial(static_cast<unsigned>(g.vertex_count)));
}

nlohmann::json to_json(const Hypergraph& h) {
  return {{"vertex_count", h.vertex_count}, {"edges", h.edges}};
}

nlohmann::json to_json(const Graph& g) {
  std::vector<std::vector<std::size_t>> edges;
  for (std::size_t u = 0; u < g.vertex_count; ++u) {
    for (std::size_t v = u + 1; v < g.vertex_count; ++v) {
      if (g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return {{"vertex_count", g.vertex_count}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  try {
    Hypergraph h;
    h.vertex_count = j.at("vertex_count").get<std::size_t>();
    h.edges = j.at("edges").get<std::vector<std::vector<std::size_t>>>();
    h.normalize();
    return h;
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad hypergraph JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string("bad hypergraph JSON: ") + e.what());
  }
}

Graph graph_from_json(const nlohmann::json& j) {
  const Hypergraph h = hypergraph_from_json(j);
  Graph g(h.vertex_count);
  for (const auto& e : h.edges) {
    if (e.size() != 2) throw UsageError("graph edges must have two distinct endpoints");
    g.add_edge(e[0], e[1]);
  }
  return g;
}

}  // namespace hyperorder
