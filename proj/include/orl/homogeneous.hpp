#pragma once

// Clique or independent set extraction: low-degree side search plus qeh recursion.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "orl/bitset.hpp"
#include "orl/errors.hpp"
#include "orl/graph.hpp"
#include "orl/qeh.hpp"
#include "orl/rational.hpp"
#include "orl/rng.hpp"

namespace orl {

enum class Side { graph, complement };
enum class HomogeneousKind { clique, independent };

inline const char* side_name(Side s) { return s == Side::graph ? "graph" : "complement"; }
inline const char* kind_name(HomogeneousKind k) { return k == HomogeneousKind::clique ? "clique" : "independent"; }

struct TrimResult {
  VertexSet u;
  Side side = Side::graph;
};

struct HomogeneousResult {
  VertexSet vertices;
  HomogeneousKind kind = HomogeneousKind::independent;
};

struct HomogeneousOptions {
  std::size_t base_size = 16;
  std::size_t max_depth = 64;
};

struct HomogeneousDiagnostics {
  std::size_t qeh_calls = 0;
  std::size_t families = 0;
  std::size_t paths_found = 0;
  std::size_t qeh_errors = 0;
  std::size_t merges = 0;
  std::size_t base_cases = 0;
  std::vector<std::string> notes;
};

inline bool is_homogeneous(const OrderedGraph& g, const VertexSet& s, HomogeneousKind kind) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= g.n()) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j]) != (kind == HomogeneousKind::clique)) return false;
  }
  return true;
}

namespace detail {

inline bool side_adjacent(const OrderedGraph& g, Side side, Vertex u, Vertex v) {
  return g.adjacent(u, v) == (side == Side::graph);
}

/// Degree of v inside U in the chosen side.
inline std::size_t side_degree(const OrderedGraph& g, Side side, std::size_t v, const Bitset& u) {
  const std::size_t d = g.row(static_cast<Vertex>(v)).count_and(u);
  return side == Side::graph ? d : u.count() - 1 - d;
}

inline std::size_t side_edges(const OrderedGraph& g, Side side, const Bitset& u) {
  std::size_t twice = 0;
  u.for_each([&](std::size_t v) { twice += side_degree(g, side, v, u); });
  return twice / 2;
}

/// Maximum clique of a graph on <= 64 vertices given as neighbor masks (Bron–Kerbosch with pivot).
inline std::uint64_t max_clique_mask(const std::vector<std::uint64_t>& nbr) {
  std::uint64_t best = 0;
  auto rec = [&](auto&& self, std::uint64_t r, std::uint64_t p, std::uint64_t x) -> void {
    if (p == 0) {
      if (x == 0 && std::popcount(r) > std::popcount(best)) best = r;
      return;
    }
    if (std::popcount(r) + std::popcount(p) <= std::popcount(best)) return;
    const std::uint64_t px = p | x;
    int pivot = std::countr_zero(px);
    int pivot_hits = -1;
    for (std::uint64_t m = px; m; m &= m - 1) {
      const int u = std::countr_zero(m);
      const int hits = std::popcount(p & nbr[u]);
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    }
    for (std::uint64_t m = p & ~nbr[pivot]; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      const std::uint64_t bit = std::uint64_t{1} << v;
      self(self, r | bit, p & nbr[v], x & nbr[v]);
      p &= ~bit;
      x |= bit;
    }
  };
  const std::size_t n = nbr.size();
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  rec(rec, 0, all, 0);
  return best;
}

/// Best clique and independent set of G[sample] (|sample| <= 64), in host indices.
inline std::pair<VertexSet, VertexSet> solve_small(const OrderedGraph& g, const std::vector<Vertex>& sample) {
  if (sample.size() > 64) throw PreconditionError("base case larger than 64 vertices");
  const std::size_t m = sample.size();
  std::vector<std::uint64_t> nbr(m, 0), anti(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j) (g.adjacent(sample[i], sample[j]) ? nbr[i] : anti[i]) |= std::uint64_t{1} << j;
  auto to_set = [&](std::uint64_t mask) {
    std::vector<Vertex> out;
    for (; mask; mask &= mask - 1) out.push_back(sample[static_cast<std::size_t>(std::countr_zero(mask))]);
    return VertexSet(std::move(out));
  };
  return {to_set(max_clique_mask(nbr)), to_set(max_clique_mask(anti))};
}

inline std::size_t ceil_log2(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

}  // namespace detail

/// Removes from U0 the vertices whose degree in G[U0] exceeds 2·eps0·|U0|.
inline VertexSet trim_high_degree(const OrderedGraph& g, const VertexSet& u0, const Rational& eps0) {
  const Bitset u = u0.to_bitset(g.n());
  const long long size = static_cast<long long>(u0.size());
  const std::size_t edges = detail::side_edges(g, Side::graph, u);
  if (Rational(static_cast<long long>(edges)) > eps0 * (size * (size - 1) / 2))
    throw PreconditionError("edge density of G[U0] exceeds eps0");
  const Rational cap = eps0 * (2 * size);
  std::vector<Vertex> keep;
  std::size_t removed = 0;
  for (Vertex v : u0) {
    if (Rational(static_cast<long long>(g.row(v).count_and(u))) > cap) ++removed;
    else keep.push_back(v);
  }
  if (2 * removed > u0.size()) detail::fail_invariant("trim removed more than half of U0");
  return VertexSet(std::move(keep));
}

namespace detail {

/// Trims U on one side, then peels max-degree vertices until Δ(side[U]) <= eps|U|.
inline std::optional<TrimResult> try_side(const OrderedGraph& g, const Bitset& u, Side side, const Rational& eps) {
  const Rational eps0 = eps / 2;
  const long long size = static_cast<long long>(u.count());
  if (size == 0) return std::nullopt;
  if (Rational(static_cast<long long>(side_edges(g, side, u))) > eps0 * (size * (size - 1) / 2)) return std::nullopt;
  const Rational cap = eps0 * (2 * size);
  Bitset keep = u;
  u.for_each([&](std::size_t v) {
    if (Rational(static_cast<long long>(side_degree(g, side, v, u))) > cap) keep.reset(v);
  });
  if (2 * keep.count() < u.count()) fail_invariant("trim removed more than half of U");
  while (keep.any()) {
    std::size_t worst = Bitset::npos, worst_deg = 0;
    keep.for_each([&](std::size_t v) {
      const std::size_t d = side_degree(g, side, v, keep);
      if (worst == Bitset::npos || d > worst_deg) {
        worst = v;
        worst_deg = d;
      }
    });
    if (Rational(static_cast<long long>(worst_deg)) <= eps * static_cast<long long>(keep.count())) break;
    keep.reset(worst);
  }
  return TrimResult{VertexSet::from_bitset(keep), side};
}

inline TrimResult best_leaf(const OrderedGraph& g, const Bitset& u, std::size_t base_size) {
  std::vector<Vertex> sample;
  u.for_each([&](std::size_t v) {
    if (sample.size() < base_size) sample.push_back(static_cast<Vertex>(v));
  });
  auto [clique, indep] = solve_small(g, sample);
  if (indep.size() >= clique.size()) return {indep, Side::graph};
  return {clique, Side::complement};
}

inline bool trim_ok(const OrderedGraph& g, const TrimResult& t, const Rational& eps) {
  if (t.u.empty()) return false;
  const Bitset u = t.u.to_bitset(g.n());
  std::size_t worst = 0;
  u.for_each([&](std::size_t v) { worst = std::max(worst, side_degree(g, t.side, v, u)); });
  return Rational(static_cast<long long>(worst)) <= eps * static_cast<long long>(t.u.size());
}

}  // namespace detail

/// Every candidate found by the search (both sides when both density tests pass).
inline std::vector<TrimResult> low_degree_candidates(const OrderedGraph& g, const Rational& eps,
                                                     std::size_t base_size = 16) {
  if (g.n() == 0) throw InputError("graph has no vertices");
  Bitset u(g.n(), true);
  const std::size_t depth_cap = detail::ceil_log2(g.n());
  for (std::size_t depth = 0;; ++depth) {
    std::vector<TrimResult> found;
    for (Side side : {Side::graph, Side::complement})
      if (auto t = detail::try_side(g, u, side, eps)) found.push_back(std::move(*t));
    if (!found.empty()) return found;
    if (depth >= depth_cap || u.count() <= base_size) return {detail::best_leaf(g, u, base_size)};

    // Split on the vertex of median degree inside U.
    std::vector<std::pair<std::size_t, std::size_t>> by_degree;
    u.for_each([&](std::size_t v) { by_degree.emplace_back(g.row(static_cast<Vertex>(v)).count_and(u), v); });
    std::sort(by_degree.begin(), by_degree.end());
    const std::size_t pivot = by_degree[(by_degree.size() - 1) / 2].second;
    Bitset inside = g.row(static_cast<Vertex>(pivot)) & u;
    Bitset outside = u - g.row(static_cast<Vertex>(pivot));
    outside.reset(pivot);
    u = inside.count() >= outside.count() ? std::move(inside) : std::move(outside);
  }
}

/// A set U with Δ(G[U]) <= eps|U| or Δ(Ḡ[U]) <= eps|U|; the larger candidate wins, ties to G.
inline TrimResult find_low_degree_side(const OrderedGraph& g, const Rational& eps, std::size_t base_size = 16) {
  auto found = low_degree_candidates(g, eps, base_size);
  TrimResult best = found.front();
  for (const auto& t : found)
    if (t.u.size() > best.u.size()) best = t;
  if (!detail::trim_ok(g, best, eps)) detail::fail_invariant("low-degree side fails its degree bound");
  return best;
}

namespace detail {

class HomogeneousSearch {
 public:
  HomogeneousSearch(const OrderedGraph& g, const QehConstants& consts, std::uint64_t seed,
                    const HomogeneousOptions& opts, HomogeneousDiagnostics& diag)
      : g_(g), consts_(consts), rng_(Rng(seed).split("homogeneous")), opts_(opts), diag_(diag) {
    if (opts_.base_size == 0 || opts_.base_size > 64) throw InputError("base size must lie in [1, 64]");
  }

  struct Best {
    VertexSet clique, independent;
  };

  Best run() { return rec(VertexSet::range(0, static_cast<Vertex>(g_.n())), 0); }

 private:
  static void keep_larger(VertexSet& into, VertexSet cand) {
    if (cand.size() > into.size()) into = std::move(cand);
  }

  Best base_case(const VertexSet& host) {
    ++diag_.base_cases;
    std::vector<Vertex> sample = host.members();
    if (sample.size() > opts_.base_size) {
      rng_.shuffle(sample);
      sample.resize(opts_.base_size);
      std::sort(sample.begin(), sample.end());
    }
    auto [c, i] = solve_small(g_, sample);
    return {extend(c, host, true), extend(i, host, false)};
  }

  /// Greedily adds host vertices (in order) that keep the set a clique / independent set.
  VertexSet extend(const VertexSet& seed_set, const VertexSet& host, bool clique) const {
    std::vector<Vertex> members = seed_set.members();
    Bitset in = seed_set.to_bitset(g_.n());
    for (Vertex v : host) {
      if (in.test(v)) continue;
      const std::size_t hits = g_.row(v).count_and(in);
      if (clique ? hits == members.size() : hits == 0) {
        members.push_back(v);
        in.set(v);
      }
    }
    return VertexSet(std::move(members));
  }

  Best rec(const VertexSet& host, std::size_t depth) {
    if (host.size() <= opts_.base_size) return base_case(host);
    Best best = base_case(host);
    if (depth >= opts_.max_depth) return best;

    const auto sub = induced_subgraph(g_, host);
    for (const auto& trim : low_degree_candidates(sub.graph, consts_.eps, opts_.base_size)) {
      if (!trim_ok(sub.graph, trim, consts_.eps)) fail_invariant("low-degree side fails its degree bound");
      std::vector<Vertex> u_host;
      for (Vertex v : trim.u) u_host.push_back(sub.to_host[v]);
      const VertexSet u_set(u_host);
      // The trimmed side itself may already be homogeneous.
      if (is_homogeneous(g_, u_set, trim.side == Side::graph ? HomogeneousKind::independent : HomogeneousKind::clique))
        (trim.side == Side::graph ? keep_larger(best.independent, u_set) : keep_larger(best.clique, u_set));
      if (u_set.size() < 2) continue;

      const auto part = induced_subgraph(g_, u_set);
      const OrderedGraph work = trim.side == Side::graph ? part.graph : complement(part.graph);
      ++diag_.qeh_calls;
      QehResult res;
      try {
        res = qeh_decompose(work, consts_, rng_.next());
      } catch (const InvariantError& e) {
        ++diag_.qeh_errors;
        diag_.notes.push_back(std::string("qeh invariant: ") + e.what());
        continue;
      }
      if (const auto* p = std::get_if<QehPath>(&res)) {
        ++diag_.paths_found;
        std::string note = "induced monotone path in " + std::string(side_name(trim.side)) + " side:";
        for (Vertex v : p->vertices) note += " " + std::to_string(part.to_host[v]);
        diag_.notes.push_back(note);
        Best b = base_case(u_set);
        keep_larger(best.clique, std::move(b.clique));
        keep_larger(best.independent, std::move(b.independent));
        continue;
      }
      ++diag_.families;
      const auto& fam = std::get<QehFamily>(res);
      // No work-edges between the sets: union same-kind results across them.
      const bool graph_side = trim.side == Side::graph;
      std::vector<Vertex> merged;
      for (const auto& x : fam.sets) {
        std::vector<Vertex> xs;
        for (Vertex v : x) xs.push_back(part.to_host[v]);
        Best child = rec(VertexSet(std::move(xs)), depth + 1);
        keep_larger(best.clique, child.clique);
        keep_larger(best.independent, child.independent);
        const VertexSet& piece = graph_side ? child.independent : child.clique;
        merged.insert(merged.end(), piece.begin(), piece.end());
      }
      VertexSet merged_set(std::move(merged));
      const HomogeneousKind kind = graph_side ? HomogeneousKind::independent : HomogeneousKind::clique;
      ++diag_.merges;
      if (!is_homogeneous(g_, merged_set, kind)) fail_invariant("union of family results is not homogeneous");
      keep_larger(graph_side ? best.independent : best.clique, std::move(merged_set));
    }
    return best;
  }

  const OrderedGraph& g_;
  const QehConstants& consts_;
  Rng rng_;
  const HomogeneousOptions& opts_;
  HomogeneousDiagnostics& diag_;
};

}  // namespace detail

/// A verified clique or independent set of G; ties go to the clique.
inline HomogeneousResult extract_homogeneous(const OrderedGraph& g, std::size_t k, const EmbeddingConstants& profile,
                                             std::uint64_t seed, HomogeneousDiagnostics* diag_out = nullptr,
                                             const HomogeneousOptions& opts = {}) {
  if (g.n() == 0) return {};
  const QehConstants consts = QehConstants::make(k, profile);
  HomogeneousDiagnostics local;
  HomogeneousDiagnostics& diag = diag_out ? *diag_out : local;
  diag = HomogeneousDiagnostics{};
  detail::HomogeneousSearch search(g, consts, seed, opts, diag);
  auto best = search.run();
  HomogeneousResult out = best.clique.size() >= best.independent.size()
                              ? HomogeneousResult{std::move(best.clique), HomogeneousKind::clique}
                              : HomogeneousResult{std::move(best.independent), HomogeneousKind::independent};
  if (!is_homogeneous(g, out.vertices, out.kind)) detail::fail_invariant("homogeneous result fails verification");
  return out;
}

}  // namespace orl
