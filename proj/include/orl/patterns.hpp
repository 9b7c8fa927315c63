#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orl/bitset.hpp"
#include "orl/errors.hpp"
#include "orl/graph.hpp"

namespace orl {

/// Small ordered pattern H on vertices 0..p-1 (p <= 12), order = index order.
class OrderedPattern {
 public:
  static constexpr std::size_t kMaxVertices = 12;

  OrderedPattern() = default;
  OrderedPattern(std::size_t p, const std::vector<Edge>& edges, std::string name = {})
      : p_(p), adj_(p, 0), name_(std::move(name)) {
    if (p > kMaxVertices) throw PreconditionError("pattern has more than 12 vertices");
    for (auto [u, v] : edges) {
      if (u >= p || v >= p || u == v) throw InputError("bad pattern edge");
      adj_[u] |= static_cast<std::uint16_t>(1u << v);
      adj_[v] |= static_cast<std::uint16_t>(1u << u);
    }
  }

  static OrderedPattern from_graph(const OrderedGraph& g, std::string name = {}) {
    return OrderedPattern(g.n(), g.edges(), std::move(name));
  }

  std::size_t size() const { return p_; }
  bool adjacent(std::size_t i, std::size_t j) const { return (adj_[i] >> j) & 1u; }
  const std::string& name() const { return name_; }
  std::size_t edge_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < p_; ++i)
      for (std::size_t j = i + 1; j < p_; ++j) c += adjacent(i, j);
    return c;
  }

 private:
  std::size_t p_ = 0;
  std::vector<std::uint16_t> adj_;
  std::string name_;
};

namespace patterns {

/// Monotone path of size k: edges {i, i+1}.
inline OrderedPattern monotone_path(std::size_t k) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
  return OrderedPattern(k, e, "mp:" + std::to_string(k));
}

/// S: vertex 1 joined to 2, 3 and 4 (1-based, in order).
inline OrderedPattern star_s() { return OrderedPattern(4, {{0, 1}, {0, 2}, {0, 3}}, "S"); }

/// P: edges 1-4, 1-3 and 2-3 (1-based, in order).
inline OrderedPattern pattern_p() { return OrderedPattern(4, {{0, 3}, {0, 2}, {1, 2}}, "P"); }

/// Resolves "mp:k", "S" or "P". Returns nullopt for anything else.
inline std::optional<OrderedPattern> by_name(const std::string& name) {
  if (name == "S") return star_s();
  if (name == "P") return pattern_p();
  if (name.rfind("mp:", 0) == 0) {
    try {
      std::size_t pos = 0;
      long k = std::stol(name.substr(3), &pos);
      if (pos + 3 != name.size() || k < 1) return std::nullopt;
      return monotone_path(static_cast<std::size_t>(k));
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace patterns

/// Order-preserving injection pattern vertex i -> host vertex map[i].
struct Embedding {
  std::vector<Vertex> map;
  friend bool operator==(const Embedding&, const Embedding&) = default;
};

/// Literal check: strictly increasing, edges to edges, non-edges to non-edges.
inline bool is_induced_embedding(const OrderedGraph& g, const OrderedPattern& p, const Embedding& e) {
  if (e.map.size() != p.size()) return false;
  for (std::size_t i = 0; i < e.map.size(); ++i) {
    if (e.map[i] >= g.n()) return false;
    if (i > 0 && e.map[i - 1] >= e.map[i]) return false;
  }
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (g.adjacent(e.map[i], e.map[j]) != p.adjacent(i, j)) return false;
  return true;
}

namespace detail {

class InducedMatcher {
 public:
  InducedMatcher(const OrderedGraph& g, const OrderedPattern& p)
      : g_(g), p_(p), chosen_(p.size()), candidates_(p.size() + 1, Bitset(g.n())) {}

  std::optional<Embedding> run() {
    if (p_.size() == 0) return Embedding{};
    if (p_.size() > g_.n()) return std::nullopt;
    candidates_[0].set_all();
    if (extend(0)) return Embedding{chosen_};
    return std::nullopt;
  }

 private:
  bool extend(std::size_t j) {
    const std::size_t remaining_after = p_.size() - j - 1;
    const Bitset& cand = candidates_[j];
    for (std::size_t h = cand.find_first(); h != Bitset::npos; h = cand.find_next(h)) {
      if (h + remaining_after >= g_.n()) return false;
      chosen_[j] = static_cast<Vertex>(h);
      if (j + 1 == p_.size()) return true;
      // Candidates for pattern vertex j+1 must come after h and agree with every
      // chosen vertex on adjacency.
      Bitset& next = candidates_[j + 1];
      next.set_all();
      next.reset_through(h);
      for (std::size_t i = 0; i <= j; ++i) {
        if (p_.adjacent(i, j + 1))
          next &= g_.row(chosen_[i]);
        else
          next -= g_.row(chosen_[i]);
        if (next.none()) break;
      }
      if (next.none()) continue;
      if (extend(j + 1)) return true;
    }
    return false;
  }

  const OrderedGraph& g_;
  const OrderedPattern& p_;
  std::vector<Vertex> chosen_;
  std::vector<Bitset> candidates_;
};

}  // namespace detail

/// Lexicographically smallest induced order-preserving embedding of p into g, if any.
inline std::optional<Embedding> find_induced(const OrderedGraph& g, const OrderedPattern& p) {
  if (p.size() > OrderedPattern::kMaxVertices) throw PreconditionError("pattern too large");
  return detail::InducedMatcher(g, p).run();
}

/// Lexicographically smallest induced monotone path on k vertices.
///
/// Depth-first search over increasing vertices; the candidates for the next vertex are
/// the forward neighbors of the last one minus the neighborhoods of all earlier path
/// vertices. Branches are cut when the longest (not necessarily induced) monotone path
/// from a candidate is too short to finish.
inline std::optional<Embedding> find_induced_monotone_path(const OrderedGraph& g, std::size_t k) {
  if (k == 0) throw PreconditionError("path size must be at least 1");
  const std::size_t n = g.n();
  if (k > n) return std::nullopt;
  if (k == 1) return Embedding{{0}};

  // reach_len[v]: vertices on the longest monotone path starting at v.
  std::vector<std::size_t> reach_len(n, 1);
  for (std::size_t v = n; v-- > 0;) {
    Bitset fwd = forward_row(g, static_cast<Vertex>(v));
    fwd.for_each([&](std::size_t w) { reach_len[v] = std::max(reach_len[v], reach_len[w] + 1); });
  }

  std::vector<Vertex> path;
  path.reserve(k);
  std::vector<Bitset> forbidden(k, Bitset(n));

  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (path.size() == k) return true;
    const Vertex last = path.back();
    Bitset cand = forward_row(g, last);
    cand -= forbidden[depth];
    for (std::size_t w = cand.find_first(); w != Bitset::npos; w = cand.find_next(w)) {
      if (reach_len[w] + path.size() < k) continue;
      path.push_back(static_cast<Vertex>(w));
      if (path.size() < k) {
        forbidden[depth + 1] = forbidden[depth];
        forbidden[depth + 1] |= g.row(last);
      }
      if (self(self, depth + 1)) return true;
      path.pop_back();
    }
    return false;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (reach_len[v] < k) continue;
    path.assign(1, v);
    forbidden[1].reset_all();
    if (dfs(dfs, 1)) return Embedding{path};
  }
  return std::nullopt;
}

/// G ∈ 𝒫_k: neither G nor Ḡ has an induced monotone path of size k.
inline bool is_family_member(const OrderedGraph& g, std::size_t k) {
  if (k < 2) throw PreconditionError("family index k must be at least 2");
  return !find_induced_monotone_path(g, k) && !find_induced_monotone_path(complement(g), k);
}

}  // namespace orl
