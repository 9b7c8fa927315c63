#pragma once

#include <vector>

#include "orl/bitset.hpp"
#include "orl/errors.hpp"
#include "orl/graph.hpp"

namespace orl {

/// Ordered transitive closure G′: xy is an edge iff a monotone path of G joins x and y.
using ClosureGraph = OrderedGraph;

/// Transitive closure by a dynamic program over vertices in ≺ order.
///
/// pred[v] collects every u ≺ v from which v is reachable along increasing edges;
/// it is the union of pred[u] ∪ {u} over backward neighbors u of v.
inline ClosureGraph transitive_closure(const OrderedGraph& g) {
  const std::size_t n = g.n();
  std::vector<Bitset> pred(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    g.row(v).for_each([&](std::size_t u) {
      if (u >= v) return;
      pred[v] |= pred[u];
      pred[v].set(u);
    });
  }
  // Transpose predecessor sets into forward rows.
  std::vector<Bitset> fwd(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) pred[v].for_each([&](std::size_t u) { fwd[u].set(v); });
  return OrderedGraph::from_forward_rows(fwd);
}

/// Vertices y ≻ x reachable from x by a monotone path whose vertices after x all lie in
/// `allowed`. Scans candidates in increasing order; no closure is materialized.
inline Bitset forward_reach(const OrderedGraph& g, Vertex x, const Bitset& allowed) {
  Bitset reached = forward_row(g, x);
  reached &= allowed;
  for (std::size_t v = reached.find_first(); v != Bitset::npos; v = reached.find_next(v)) {
    Bitset step = g.row(static_cast<Vertex>(v));
    step.reset_through(v);
    step &= allowed;
    reached |= step;
  }
  return reached;
}

/// Row of the closure for one vertex: N⁺ of v in transitive_closure(G).
inline VertexSet forward_closure_neighborhood(const OrderedGraph& g, Vertex v) {
  if (v >= g.n()) throw InputError("vertex out of range");
  return VertexSet::from_bitset(forward_reach(g, v, Bitset(g.n(), true)));
}

/// Endpoints of good monotone paths from x: paths whose vertices after the first avoid X.
inline VertexSet good_reachable(const OrderedGraph& g, Vertex x, const VertexSet& forbidden) {
  if (x >= g.n()) throw InputError("vertex out of range");
  Bitset allowed(g.n(), true);
  for (Vertex f : forbidden)
    if (f < g.n()) allowed.reset(f);
  return VertexSet::from_bitset(forward_reach(g, x, allowed));
}

/// Forward reach rows of every vertex of `mask` inside G[mask] (other rows are empty).
inline std::vector<Bitset> forward_reach_rows(const OrderedGraph& g, const Bitset& mask) {
  const std::size_t n = g.n();
  std::vector<Bitset> reach(n, Bitset(n));
  for (std::size_t v = n; v-- > 0;) {
    if (!mask.test(v)) continue;
    Bitset fwd = forward_row(g, static_cast<Vertex>(v));
    fwd &= mask;
    reach[v] = fwd;
    fwd.for_each([&](std::size_t w) { reach[v] |= reach[w]; });
  }
  return reach;
}

}  // namespace orl
