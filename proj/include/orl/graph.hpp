#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "orl/bitset.hpp"
#include "orl/errors.hpp"

namespace orl {

/// Vertex index; the linear order of an ordered graph is the integer order.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Deduplicated vertex set iterated in ascending (that is, ≺) order.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

  static VertexSet from_bitset(const Bitset& bits) {
    VertexSet s;
    s.members_.reserve(bits.count());
    bits.for_each([&](std::size_t i) { s.members_.push_back(static_cast<Vertex>(i)); });
    return s;
  }
  static VertexSet range(Vertex first, Vertex last) {
    VertexSet s;
    for (Vertex v = first; v < last; ++v) s.members_.push_back(v);
    return s;
  }

  Bitset to_bitset(std::size_t n) const {
    Bitset b(n);
    for (Vertex v : members_) b.set(v);
    return b;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const_iterator begin() const { return members_.begin(); }
  const_iterator end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

/// Simple ordered graph on vertices 0..n-1 stored as a dense bit matrix.
class OrderedGraph {
 public:
  static constexpr std::size_t kMaxVertices = std::size_t{1} << 16;

  OrderedGraph() = default;
  explicit OrderedGraph(std::size_t n) : n_(n) {
    if (n > kMaxVertices) throw InputError("graph too large: n = " + std::to_string(n));
    rows_.assign(n, Bitset(n));
  }

  static OrderedGraph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    OrderedGraph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }
  /// Builds the graph whose edges are {v, w} for w in fwd[v], w > v.
  static OrderedGraph from_forward_rows(const std::vector<Bitset>& fwd) {
    OrderedGraph g(fwd.size());
    for (std::size_t v = 0; v < fwd.size(); ++v) {
      Bitset r = fwd[v];
      r.reset_through(v);
      r.for_each([&](std::size_t w) { g.rows_[w].set(v); });
      g.rows_[v] |= r;
    }
    return g;
  }
  static OrderedGraph complete(std::size_t n) {
    OrderedGraph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
  }

  std::size_t n() const { return n_; }

  bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
  const Bitset& row(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return rows_[v].count(); }

  void add_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u].set(v);
    rows_[v].set(u);
  }
  void remove_edge(Vertex u, Vertex v) {
    check_pair(u, v);
    rows_[u].reset(v);
    rows_[v].reset(u);
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& r : rows_) twice += r.count();
    return twice / 2;
  }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      std::size_t v = rows_[u].find_from(u + 1);
      for (; v != Bitset::npos; v = rows_[u].find_next(v)) out.emplace_back(u, static_cast<Vertex>(v));
    }
    return out;
  }

  friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

 private:
  void check_pair(Vertex u, Vertex v) const {
    if (u >= n_ || v >= n_) throw InputError("vertex out of range");
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  }

  std::size_t n_ = 0;
  std::vector<Bitset> rows_;
};

/// Complement Ḡ: uv is an edge iff u != v and uv is not an edge of G.
inline OrderedGraph complement(const OrderedGraph& g) {
  OrderedGraph c(g.n());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.adjacent(u, v)) c.add_edge(u, v);
  return c;
}

struct InducedSubgraph {
  OrderedGraph graph;
  /// to_host[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> to_host;
};

/// G[U] relabeled 0..|U|-1, preserving the order.
inline InducedSubgraph induced_subgraph(const OrderedGraph& g, const VertexSet& u) {
  for (Vertex v : u)
    if (v >= g.n()) throw InputError("vertex " + std::to_string(v) + " not in graph");
  InducedSubgraph out{OrderedGraph(u.size()), u.members()};
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (g.adjacent(u[i], u[j])) out.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return out;
}

enum class NeighborhoodMode { open, closed };

/// N(U) (open) or N[U] = U ∪ N(U) (closed).
inline VertexSet neighborhood(const OrderedGraph& g, const VertexSet& u, NeighborhoodMode mode) {
  Bitset acc(g.n());
  for (Vertex v : u) acc |= g.row(v);
  Bitset members = u.to_bitset(g.n());
  if (mode == NeighborhoodMode::open)
    acc -= members;
  else
    acc |= members;
  return VertexSet::from_bitset(acc);
}

/// Bitset of the neighbors of v that come after v.
inline Bitset forward_row(const OrderedGraph& g, Vertex v) {
  Bitset r = g.row(v);
  r.reset_through(v);
  return r;
}

/// N⁺(v): neighbors w of v with v ≺ w.
inline VertexSet forward_neighborhood(const OrderedGraph& g, Vertex v) {
  if (v >= g.n()) throw InputError("vertex out of range");
  return VertexSet::from_bitset(forward_row(g, v));
}

/// Δ(G); 0 for the empty graph.
inline std::size_t max_degree(const OrderedGraph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.n(); ++v) best = std::max(best, g.degree(v));
  return best;
}

/// Δ(G[U]) for U given as a bitset over V(G).
inline std::size_t max_degree_within(const OrderedGraph& g, const Bitset& u) {
  std::size_t best = 0;
  u.for_each([&](std::size_t v) { best = std::max(best, g.row(static_cast<Vertex>(v)).count_and(u)); });
  return best;
}

/// Bipartite graph with classes A = {0..a_size-1} and B = {0..b_size-1} (local indices).
///
/// `a_labels`/`b_labels` optionally record which host vertices the classes came from.
class BipartiteOrderedGraph {
 public:
  BipartiteOrderedGraph() = default;
  BipartiteOrderedGraph(std::size_t a_size, std::size_t b_size)
      : a_rows_(a_size, Bitset(b_size)), b_rows_(b_size, Bitset(a_size)) {}

  /// Splits an ordered graph into the first `a_size` vertices and the rest.
  /// Throws InputError if an edge lies inside one class.
  static BipartiteOrderedGraph from_split(const OrderedGraph& g, std::size_t a_size) {
    if (a_size > g.n()) throw InputError("split point beyond vertex count");
    BipartiteOrderedGraph h(a_size, g.n() - a_size);
    for (auto [u, v] : g.edges()) {
      if ((u < a_size) == (v < a_size))
        throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " lies inside one class");
      h.add_edge(u, static_cast<Vertex>(v - a_size));
    }
    for (Vertex v = 0; v < g.n(); ++v) (v < a_size ? h.a_labels : h.b_labels).push_back(v);
    return h;
  }

  std::size_t a_size() const { return a_rows_.size(); }
  std::size_t b_size() const { return b_rows_.size(); }

  void add_edge(Vertex a, Vertex b) {
    if (a >= a_size() || b >= b_size()) throw InputError("bipartite vertex out of range");
    a_rows_[a].set(b);
    b_rows_[b].set(a);
  }
  bool adjacent(Vertex a, Vertex b) const { return a_rows_[a].test(b); }

  /// Neighbors in B of a vertex of A.
  const Bitset& a_row(Vertex a) const { return a_rows_[a]; }
  /// Neighbors in A of a vertex of B.
  const Bitset& b_row(Vertex b) const { return b_rows_[b]; }

  std::size_t edge_count() const {
    std::size_t e = 0;
    for (const auto& r : a_rows_) e += r.count();
    return e;
  }

  std::vector<Vertex> a_labels;
  std::vector<Vertex> b_labels;

 private:
  std::vector<Bitset> a_rows_;
  std::vector<Bitset> b_rows_;
};

}  // namespace orl
