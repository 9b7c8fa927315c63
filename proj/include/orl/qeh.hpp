#pragma once

// Induced monotone path of size k, or a large family of pairwise non-adjacent sets.

#include <cmath>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orl/bitset.hpp"
#include "orl/closure.hpp"
#include "orl/embedding.hpp"
#include "orl/errors.hpp"
#include "orl/graph.hpp"
#include "orl/rational.hpp"

namespace orl {

/// c₁ = ε₁/2, c_{s+1} = ε₁c_s/4, eps = c_k/2, alpha = α₁·c_k^{1/2}/2 (stored squared).
struct QehConstants {
  std::size_t k = 0;
  EmbeddingConstants embedding;
  std::vector<Rational> c;  // c[s] for s = 1..k; c[0] unused
  Rational eps;
  Rational alpha_sq;

  static QehConstants make(std::size_t k, const EmbeddingConstants& emb) {
    if (k < 1) throw PreconditionError("qeh needs k >= 1");
    emb.validate();
    QehConstants q;
    q.k = k;
    q.embedding = emb;
    q.c.assign(k + 1, Rational(0));
    q.c[1] = emb.eps1 / 2;
    for (std::size_t s = 1; s < k; ++s) q.c[s + 1] = emb.eps1 * q.c[s] / 4;
    q.eps = q.c[k] / 2;
    q.alpha_sq = emb.alpha1 * emb.alpha1 * q.c[k] / 4;
    return q;
  }

  double alpha() const { return std::sqrt(to_double(alpha_sq)); }
};

/// c with t >= alpha (n/|X|)^beta and t >= 2 implying t >= (n/|X|)^c.
inline double quasi_constants_normalize(double alpha, double beta) {
  if (!(alpha > 0) || !(beta > 0)) throw InputError("alpha and beta must be positive");
  if (alpha > 1) return beta;
  return beta / (1.0 - std::log2(alpha));
}

struct QehPath {
  std::vector<Vertex> vertices;
};

struct QehFamily {
  std::vector<VertexSet> sets;
};

using QehResult = std::variant<QehPath, QehFamily>;

struct QehStep {
  std::size_t s = 0;          // path length before the step
  std::size_t z_size = 0;
  std::size_t side = 0;       // |A| of the bipartite instance (after padding)
  std::string outcome;
  std::size_t forward_degree = 0;  // of the new path vertex in the closure of G_{s+1}
};

struct QehTrace {
  std::vector<QehStep> steps;
  std::vector<EmbeddingTrace> embedding;
  std::size_t invariant_checks = 0;
};

namespace detail {

inline bool qeh_family_ok(const OrderedGraph& g, const std::vector<VertexSet>& sets, const Rational& alpha_sq) {
  const std::size_t n = g.n();
  const std::size_t t = sets.size();
  if (t < 2) return false;
  std::vector<Bitset> masks;
  Bitset seen(n);
  for (const auto& s : sets) {
    if (s.empty()) return false;
    Bitset m(n);
    for (Vertex v : s) {
      if (v >= n || seen.test(v)) return false;
      seen.set(v);
      m.set(v);
    }
    // t >= alpha (n/|X|)^{1/2}  <=>  t^2 |X| >= alpha^2 n
    if (Rational(static_cast<long long>(t * t * s.size())) < alpha_sq * static_cast<long long>(n)) return false;
    masks.push_back(std::move(m));
  }
  for (std::size_t i = 0; i < t; ++i) {
    Bitset others = seen;
    others -= masks[i];
    for (Vertex v : sets[i])
      if (g.row(v).intersects(others)) return false;
  }
  return true;
}

inline bool qeh_path_ok(const OrderedGraph& g, const std::vector<Vertex>& path, std::size_t k) {
  if (path.size() != k) return false;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] >= g.n()) return false;
    if (i > 0 && path[i - 1] >= path[i]) return false;
    for (std::size_t j = i + 1; j < path.size(); ++j)
      if (g.adjacent(path[i], path[j]) != (j == i + 1)) return false;
  }
  return true;
}

inline VertexSet strip(const VertexSet& local, const std::vector<Vertex>& to_host) {
  std::vector<Vertex> out;
  for (Vertex v : local)
    if (v < to_host.size()) out.push_back(to_host[v]);
  return VertexSet(std::move(out));
}

/// Bipartite instance over host vertices `a_side` and `b_side`, both padded with isolated
/// vertices to a common size of at least 2.
struct Instance {
  BipartiteOrderedGraph h;
  std::vector<Vertex> a_host, b_host;
};

template <typename EdgeFn>
Instance make_instance(std::vector<Vertex> a_host, std::vector<Vertex> b_host, EdgeFn&& edge) {
  const std::size_t side = std::max<std::size_t>({a_host.size(), b_host.size(), 2});
  Instance inst{BipartiteOrderedGraph(side, side), std::move(a_host), std::move(b_host)};
  for (std::size_t i = 0; i < inst.a_host.size(); ++i)
    for (std::size_t j = 0; j < inst.b_host.size(); ++j)
      if (edge(i, inst.b_host[j])) inst.h.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return inst;
}

}  // namespace detail

/// Runs the path-growing procedure.
///
/// Each step builds a bipartite graph between the two halves of Z = Y \ X and hands it to
/// embed_decompose; a dense vertex extends the path, the other outcomes become a family.
/// Every result is checked against G before it is returned.
inline QehResult qeh_decompose(const OrderedGraph& g, const QehConstants& consts, std::uint64_t seed,
                               QehTrace* trace_out = nullptr, const EmbeddingOptions& opts = {}) {
  const std::size_t n = g.n();
  const std::size_t k = consts.k;
  if (n < 2) throw InputError("qeh needs n >= 2");
  if (Rational(static_cast<long long>(max_degree(g))) > consts.eps * static_cast<long long>(n))
    throw PreconditionError("max degree " + std::to_string(max_degree(g)) + " exceeds eps*n = " +
                            to_string(consts.eps * static_cast<long long>(n)));
  QehTrace local_trace;
  QehTrace& trace = trace_out ? *trace_out : local_trace;
  trace = QehTrace{};
  const Rng rng(seed);

  auto finish_family = [&](std::vector<VertexSet> sets) -> QehResult {
    if (!detail::qeh_family_ok(g, sets, consts.alpha_sq)) detail::fail_invariant("qeh family fails its checker");
    return QehFamily{std::move(sets)};
  };

  // Maps an outcome that is not a dense vertex to a family of host sets.
  auto family_from = [&](const detail::Instance& inst, const EmbeddingOutcome& out) -> QehResult {
    std::vector<VertexSet> sets;
    if (const auto* sep = std::get_if<SeparatedFamilies>(&out)) {
      for (const auto& x : sep->x) sets.push_back(detail::strip(x, inst.b_host));
    } else {
      const auto& pair = std::get<SparsePair>(out);
      sets.push_back(detail::strip(pair.a_side, inst.a_host));
      sets.push_back(detail::strip(pair.b_side, inst.b_host));
    }
    return finish_family(std::move(sets));
  };

  if (k == 1) return QehPath{{0}};

  std::vector<Vertex> path;
  {
    const ClosureGraph closure = transitive_closure(g);
    const std::size_t half = (n + 1) / 2;
    std::vector<Vertex> a_host, b_host;
    for (Vertex v = 0; v < n; ++v) (v < half ? a_host : b_host).push_back(v);
    auto inst = detail::make_instance(a_host, b_host,
                                      [&](std::size_t i, Vertex y) { return closure.adjacent(a_host[i], y); });
    trace.embedding.emplace_back();
    auto out = embed_decompose(inst.h, consts.embedding, rng.split(std::uint64_t{0}).next(), &trace.embedding.back(),
                               opts);
    QehStep step{0, n, inst.h.a_size(), outcome_name(out), 0};
    if (!std::holds_alternative<DenseVertex>(out)) {
      trace.steps.push_back(step);
      return family_from(inst, out);
    }
    const Vertex v = std::get<DenseVertex>(out).v;
    if (v >= inst.a_host.size()) detail::fail_invariant("dense vertex is a padding vertex");
    path.push_back(inst.a_host[v]);
    step.forward_degree = forward_reach(g, path.back(), Bitset(n, true)).count();
    trace.steps.push_back(step);
    ++trace.invariant_checks;
    if (Rational(static_cast<long long>(step.forward_degree)) < consts.c[1] * static_cast<long long>(n))
      detail::fail_invariant("property (b) fails at s = 1");
  }

  Bitset u(n, true);  // U_s
  for (std::size_t s = 1; s < k; ++s) {
    const Vertex xs = path.back();
    ++trace.invariant_checks;
    if (!detail::qeh_path_ok(g, path, s)) detail::fail_invariant("property (a) fails");
    Bitset allowed = u;
    allowed.set(xs);
    Bitset x_set = forward_row(g, xs) & u;
    Bitset y_set = forward_reach(g, xs, allowed);
    if (Rational(static_cast<long long>(y_set.count())) < consts.c[s] * static_cast<long long>(n))
      detail::fail_invariant("property (b) fails at s = " + std::to_string(s));
    Bitset z_set = y_set - x_set;
    const std::size_t zsize = z_set.count();
    if (Rational(static_cast<long long>(2 * zsize)) < consts.c[s] * static_cast<long long>(n))
      detail::fail_invariant("|Z| < c_s n / 2 at s = " + std::to_string(s));
    if (zsize < 2) detail::fail_invariant("|Z| < 2 at s = " + std::to_string(s));

    // Good paths live in G_s and avoid X after their first vertex.
    Bitset good_mask = u - x_set;
    const std::vector<Vertex> z = [&] {
      std::vector<Vertex> out;
      z_set.for_each([&](std::size_t v) { out.push_back(static_cast<Vertex>(v)); });
      return out;
    }();
    const std::size_t a_count = (zsize + 1) / 2;
    std::vector<Vertex> a_host(z.begin(), z.begin() + static_cast<long>(a_count));
    std::vector<Vertex> b_host(z.begin() + static_cast<long>(a_count), z.end());

    // good[x] for x ∈ X: endpoints of good monotone paths from x.
    std::vector<Bitset> good(n);
    x_set.for_each([&](std::size_t x) { good[x] = forward_reach(g, static_cast<Vertex>(x), good_mask); });
    std::vector<Vertex> assigned(a_host.size());
    for (std::size_t i = 0; i < a_host.size(); ++i) {
      Vertex best = static_cast<Vertex>(n);
      x_set.for_each([&](std::size_t x) {
        if (good[x].test(a_host[i])) best = static_cast<Vertex>(x);
      });
      if (best == n) detail::fail_invariant("vertex of Z has no assigned vertex of X");
      assigned[i] = best;
    }

    auto inst = detail::make_instance(a_host, b_host,
                                      [&](std::size_t i, Vertex y) { return good[assigned[i]].test(y); });
    trace.embedding.emplace_back();
    auto out = embed_decompose(inst.h, consts.embedding, rng.split(std::uint64_t{s}).next(), &trace.embedding.back(),
                               opts);
    QehStep step{s, zsize, inst.h.a_size(), outcome_name(out), 0};
    if (!std::holds_alternative<DenseVertex>(out)) {
      trace.steps.push_back(step);
      return family_from(inst, out);
    }
    const Vertex v = std::get<DenseVertex>(out).v;
    if (v >= inst.a_host.size()) detail::fail_invariant("dense vertex is a padding vertex");
    const Vertex next = assigned[v];
    if (!x_set.test(next)) detail::fail_invariant("assigned vertex lies outside X");
    u -= g.row(xs);
    path.push_back(next);

    // Property (b) for s + 1, recomputed from scratch in G_{s+1} = G[U_{s+1} ∪ {x_{s+1}}].
    Bitset next_allowed = u;
    next_allowed.set(next);
    step.forward_degree = forward_reach(g, next, next_allowed).count();
    trace.steps.push_back(step);
    ++trace.invariant_checks;
    if (Rational(static_cast<long long>(step.forward_degree)) < consts.c[s + 1] * static_cast<long long>(n))
      detail::fail_invariant("property (b) fails at s = " + std::to_string(s + 1));
  }
  if (!detail::qeh_path_ok(g, path, k)) detail::fail_invariant("returned path is not an induced monotone path");
  return QehPath{std::move(path)};
}

/// Checks a result directly against G.
inline bool verify_qeh_result(const OrderedGraph& g, const QehResult& result, const QehConstants& consts) {
  if (const auto* p = std::get_if<QehPath>(&result)) return detail::qeh_path_ok(g, p->vertices, consts.k);
  return detail::qeh_family_ok(g, std::get<QehFamily>(result).sets, consts.alpha_sq);
}

}  // namespace orl
