#pragma once

// Brute-force references. Deliberately slow; they share nothing with the fast paths
// beyond the graph type.

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orl/errors.hpp"
#include "orl/graph.hpp"
#include "orl/patterns.hpp"

namespace orl {

enum class OracleKind { closure, pattern, clique, biclique, expansion };

/// Input limits per oracle. ORL_BUDGET_OVERRIDE (any non-empty value except "0") lifts them.
struct OracleBudget {
  std::size_t closure = 10;
  std::size_t pattern = 14;
  std::size_t clique = 40;
  std::size_t biclique = 40;
  std::size_t expansion = 24;

  std::size_t limit(OracleKind kind) const {
    switch (kind) {
      case OracleKind::closure: return closure;
      case OracleKind::pattern: return pattern;
      case OracleKind::clique: return clique;
      case OracleKind::biclique: return biclique;
      default: return expansion;
    }
  }

  static bool overridden() {
    const char* v = std::getenv("ORL_BUDGET_OVERRIDE");
    return v != nullptr && *v != '\0' && std::string(v) != "0";
  }
};

inline const char* oracle_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::closure: return "closure";
    case OracleKind::pattern: return "pattern";
    case OracleKind::clique: return "clique";
    case OracleKind::biclique: return "biclique";
    default: return "expansion";
  }
}

inline void check_budget(OracleKind kind, std::size_t n, std::size_t hard_cap = SIZE_MAX) {
  if (n > hard_cap) throw BudgetError(std::string(oracle_name(kind)) + " oracle cannot handle n = " + std::to_string(n));
  const OracleBudget budget;
  if (n > budget.limit(kind) && !OracleBudget::overridden())
    throw BudgetError(std::string(oracle_name(kind)) + " oracle budget is n <= " +
                      std::to_string(budget.limit(kind)) + ", got " + std::to_string(n));
}

/// Closure by listing every strictly increasing walk along edges.
inline OrderedGraph brute_closure(const OrderedGraph& g) {
  const std::size_t n = g.n();
  check_budget(OracleKind::closure, n, 20);
  OrderedGraph out(n);
  // seq holds the current increasing sequence; every prefix of length >= 2 is a monotone path.
  std::vector<Vertex> seq;
  auto extend = [&](auto&& self) -> void {
    const Vertex last = seq.back();
    for (Vertex w = last + 1; w < n; ++w) {
      if (!g.adjacent(last, w)) continue;
      if (!out.adjacent(seq.front(), w)) out.add_edge(seq.front(), w);
      seq.push_back(w);
      self(self);
      seq.pop_back();
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    seq.assign(1, v);
    extend(extend);
  }
  return out;
}

/// Exact maximum clique of a graph given by an adjacency predicate on n <= 64 vertices.
/// Carraghan–Pardalos search ordered by index, bounded by a greedy coloring.
namespace detail {

template <typename Adj>
std::vector<Vertex> oracle_max_clique(std::size_t n, Adj&& adj) {
  std::vector<Vertex> best, cur;
  auto color_bound = [&](const std::vector<Vertex>& cand) {
    std::vector<std::vector<Vertex>> classes;
    for (Vertex v : cand) {
      bool placed = false;
      for (auto& cls : classes) {
        bool ok = true;
        for (Vertex u : cls)
          if (adj(u, v)) {
            ok = false;
            break;
          }
        if (ok) {
          cls.push_back(v);
          placed = true;
          break;
        }
      }
      if (!placed) classes.push_back({v});
    }
    return classes.size();
  };
  auto expand = [&](auto&& self, std::vector<Vertex> cand) -> void {
    if (cur.size() > best.size()) best = cur;
    while (!cand.empty()) {
      if (cur.size() + color_bound(cand) <= best.size()) return;
      const Vertex v = cand.front();
      cand.erase(cand.begin());
      std::vector<Vertex> next;
      for (Vertex u : cand)
        if (adj(v, u)) next.push_back(u);
      cur.push_back(v);
      self(self, std::move(next));
      cur.pop_back();
    }
  };
  std::vector<Vertex> all;
  for (Vertex v = 0; v < n; ++v) all.push_back(v);
  expand(expand, all);
  return best;
}

}  // namespace detail

struct HomogeneousOptimum {
  std::size_t clique = 0;
  std::size_t independent = 0;
  std::vector<Vertex> clique_witness;
  std::vector<Vertex> independent_witness;

  /// Larger of the two; ties go to the clique.
  std::size_t size() const { return std::max(clique, independent); }
  bool is_clique() const { return clique >= independent; }
};

inline HomogeneousOptimum brute_max_homogeneous(const OrderedGraph& g) {
  check_budget(OracleKind::clique, g.n(), 64);
  HomogeneousOptimum out;
  out.clique_witness = detail::oracle_max_clique(g.n(), [&](Vertex u, Vertex v) { return g.adjacent(u, v); });
  out.independent_witness = detail::oracle_max_clique(g.n(), [&](Vertex u, Vertex v) { return !g.adjacent(u, v); });
  out.clique = out.clique_witness.size();
  out.independent = out.independent_witness.size();
  return out;
}

/// First increasing p-tuple (lexicographic) inducing the pattern.
inline std::optional<Embedding> brute_pattern(const OrderedGraph& g, const OrderedPattern& p) {
  check_budget(OracleKind::pattern, g.n());
  if (p.size() > 5) throw BudgetError("pattern oracle handles patterns of at most 5 vertices");
  const std::size_t n = g.n(), k = p.size();
  if (k > n) return std::nullopt;
  if (k == 0) return Embedding{};
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i)
      for (std::size_t j = i + 1; j < k && ok; ++j)
        if (g.adjacent(idx[i], idx[j]) != p.adjacent(i, j)) ok = false;
    if (ok) return Embedding{idx};
    // Next combination.
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return std::nullopt;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace orl
