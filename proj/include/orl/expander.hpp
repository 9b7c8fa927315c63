#pragma once

// Random regular graphs, vertex-expansion certificates, graph powers, and the
// expander pair bound.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "orl/bitset.hpp"
#include "orl/errors.hpp"
#include "orl/graph.hpp"
#include "orl/oracles.hpp"
#include "orl/rational.hpp"
#include "orl/rng.hpp"

namespace orl {

/// Simple d-regular graph on m vertices from the pairing model; rejected pairings are redrawn.
inline OrderedGraph random_regular(std::size_t m, std::size_t d, std::uint64_t seed, std::size_t max_tries = 10000) {
  if ((m * d) % 2 != 0) throw PreconditionError("d*m must be even");
  if (m <= d) throw PreconditionError("need m > d");
  Rng rng = Rng(seed).split("regular");
  std::vector<Vertex> points(m * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    rng.shuffle(points);
    OrderedGraph g(m);
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      const Vertex u = points[i], v = points[i + 1];
      if (u == v || g.adjacent(u, v)) ok = false;
      else g.add_edge(u, v);
    }
    if (ok) return g;
  }
  throw BudgetError("pairing model exceeded " + std::to_string(max_tries) + " attempts");
}

inline std::optional<std::size_t> regular_degree(const OrderedGraph& h) {
  if (h.n() == 0) return 0;
  const std::size_t d = h.degree(0);
  for (Vertex v = 1; v < h.n(); ++v)
    if (h.degree(v) != d) return std::nullopt;
  return d;
}

enum class ExpansionMode { exact, spectral, sampled };

inline const char* mode_name(ExpansionMode m) {
  switch (m) {
    case ExpansionMode::exact: return "exact";
    case ExpansionMode::spectral: return "spectral";
    default: return "sampled";
  }
}

inline ExpansionMode parse_mode(const std::string& s) {
  if (s == "exact") return ExpansionMode::exact;
  if (s == "spectral") return ExpansionMode::spectral;
  if (s == "sampled") return ExpansionMode::sampled;
  throw InputError("unknown certification mode '" + s + "'");
}

/// Regular graph with a vertex-expansion parameter λ: |N[U]| >= (1+λ)|U| for |U| <= n/2.
///
/// exact: λ is the true minimum (lambda_exact holds it as a fraction).
/// spectral: λ is a proven lower bound from the spectrum of A + I.
/// sampled: λ is the minimum over tried sets; an upper estimate, not a certificate.
struct CertifiedExpander {
  OrderedGraph h;
  std::size_t d = 0;
  double lambda = 0;
  std::optional<Rational> lambda_exact;
  ExpansionMode mode = ExpansionMode::exact;
  bool certifying = true;
  std::vector<Vertex> witness;  // a minimizing (or best-found) set, empty for spectral
  double second_eigenvalue = 0;
};

inline CertifiedExpander certify_expansion(const OrderedGraph& h, ExpansionMode mode, std::uint64_t seed = 0,
                                           std::size_t samples = 2000) {
  const auto d = regular_degree(h);
  if (!d) throw PreconditionError("graph is not regular");
  const std::size_t n = h.n();
  if (n < 2) throw PreconditionError("expander needs at least 2 vertices");
  CertifiedExpander out{h, *d, 0, std::nullopt, mode, mode != ExpansionMode::sampled, {}, 0};

  if (mode == ExpansionMode::exact) {
    check_budget(OracleKind::expansion, n, 32);
    // Minimize |N[U]| / |U| over nonempty U with |U| <= n/2, by include/exclude search.
    std::uint32_t closed[32];
    for (Vertex v = 0; v < n; ++v) {
      closed[v] = 0;
      for (Vertex w = 0; w < n; ++w)
        if (v == w || h.adjacent(v, w)) closed[v] |= std::uint32_t{1} << w;
    }
    std::size_t best_num = 1, best_den = 0;  // ratio best_num/best_den; den 0 = +inf
    std::uint32_t best_set = 0;
    const std::size_t cap = n / 2;
    auto rec = [&](auto&& self, Vertex next, std::uint32_t set, std::uint32_t nbr, std::size_t size) -> void {
      if (size > 0) {
        const std::size_t num = static_cast<std::size_t>(std::popcount(nbr));
        if (best_den == 0 || num * best_den < best_num * size) {
          best_num = num;
          best_den = size;
          best_set = set;
        }
      }
      if (size == cap) return;
      for (Vertex v = next; v < n; ++v) self(self, v + 1, set | (std::uint32_t{1} << v), nbr | closed[v], size + 1);
    };
    rec(rec, 0, 0, 0, 0);
    out.lambda_exact = Rational(static_cast<long long>(best_num), static_cast<long long>(best_den)) - 1;
    out.lambda = to_double(*out.lambda_exact);
    for (Vertex v = 0; v < n; ++v)
      if ((best_set >> v) & 1u) out.witness.push_back(v);
    return out;
  }

  if (mode == ExpansionMode::spectral) {
    // Tanner's bound for M = A + I (row sums D = d + 1, closed neighborhoods):
    //   |N[U]| / |U| >= D² / (μ² + (D² − μ²)|U|/n) >= 2D² / (D² + μ²)  for |U| <= n/2,
    // where μ is the largest absolute non-principal eigenvalue of M.
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (auto [u, v] : h.edges()) {
      m(u, v) = 1;
      m(v, u) = 1;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    const double big_d = static_cast<double>(*d + 1);
    const double mu = std::max(std::abs(ev(0)), std::abs(ev(static_cast<Eigen::Index>(n) - 2)));
    out.second_eigenvalue = mu;
    const double lam = (big_d * big_d - mu * mu) / (big_d * big_d + mu * mu);
    // Guard against round-off in the eigenvalues.
    out.lambda = std::max(0.0, lam - 1e-9);
    return out;
  }

  // Sampled: singletons, BFS balls, and random sets.
  Rng rng = Rng(seed).split("expansion-sample");
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const Bitset& u) {
    const std::size_t size = u.count();
    if (size == 0 || size > n / 2) return;
    Bitset nb = u;
    u.for_each([&](std::size_t v) { nb |= h.row(static_cast<Vertex>(v)); });
    const double r = static_cast<double>(nb.count()) / static_cast<double>(size) - 1.0;
    if (r < best) {
      best = r;
      out.witness.clear();
      u.for_each([&](std::size_t v) { out.witness.push_back(static_cast<Vertex>(v)); });
    }
  };
  for (Vertex v = 0; v < n; ++v) {
    Bitset ball(n);
    ball.set(v);
    while (true) {
      consider(ball);
      Bitset grown = ball;
      ball.for_each([&](std::size_t w) { grown |= h.row(static_cast<Vertex>(w)); });
      if (grown == ball || grown.count() > n / 2) break;
      ball = std::move(grown);
    }
  }
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t size = 1 + rng.below(n / 2);
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    rng.shuffle(all);
    Bitset u(n);
    for (std::size_t i = 0; i < size; ++i) u.set(all[i]);
    consider(u);
  }
  out.lambda = best;
  return out;
}

/// All-pairs BFS distances; unreachable pairs hold `unreachable`.
inline constexpr std::uint32_t unreachable = std::numeric_limits<std::uint32_t>::max();

inline std::vector<std::vector<std::uint32_t>> distance_matrix(const OrderedGraph& h) {
  const std::size_t n = h.n();
  std::vector<std::vector<std::uint32_t>> dist(n, std::vector<std::uint32_t>(n, unreachable));
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    auto& row = dist[s];
    row[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      h.row(u).for_each([&](std::size_t w) {
        if (row[w] == unreachable) {
          row[w] = row[u] + 1;
          queue.push_back(static_cast<Vertex>(w));
        }
      });
    }
  }
  return dist;
}

/// H^r without loops: uv is an edge iff 1 <= dist(u, v) <= r.
inline OrderedGraph graph_power(const OrderedGraph& h, std::size_t r) {
  if (r < 1) throw InputError("graph power needs r >= 1");
  const std::size_t n = h.n();
  std::vector<Bitset> fwd(n, Bitset(n));
  std::vector<std::uint32_t> depth(n);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    std::fill(depth.begin(), depth.end(), unreachable);
    depth[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      if (depth[u] == r) continue;
      h.row(u).for_each([&](std::size_t w) {
        if (depth[w] == unreachable) {
          depth[w] = depth[u] + 1;
          queue.push_back(static_cast<Vertex>(w));
        }
      });
    }
    for (Vertex w : queue)
      if (w > s) fwd[s].set(w);
  }
  return OrderedGraph::from_forward_rows(fwd);
}

/// (d+1)^r as an exact integer.
inline BigInt power_degree_bound(std::size_t d, std::size_t r) {
  BigInt b = 1;
  for (std::size_t i = 0; i < r; ++i) b *= static_cast<unsigned long long>(d + 1);
  return b;
}

/// |X||Y| <= n²(1+λ)^{-r}, i.e. |X||Y|(p+q)^r <= n² q^r for λ = p/q.
inline bool pair_product_within(std::size_t product, std::size_t n, const Rational& lambda, std::size_t r) {
  const BigInt p = numerator(lambda), q = denominator(lambda);
  BigInt lhs = static_cast<unsigned long long>(product), rhs = static_cast<unsigned long long>(n * n);
  for (std::size_t i = 0; i < r; ++i) {
    lhs *= (p + q);
    rhs *= q;
  }
  return lhs <= rhs;
}

struct PairBoundReport {
  std::size_t n = 0;
  std::size_t r = 0;
  Rational lambda;
  std::size_t sets_checked = 0;
  std::size_t max_product = 0;
  std::vector<Vertex> x, y;  // extremal pair
  double bound = 0;          // n²(1+λ)^{-r}
  bool holds = true;
};

/// Largest |X||Y| over disjoint X, Y with no H^r edge between them, checked against the bound.
/// For fixed X the best Y is V \ N_{H^r}[X], so enumerating X is exhaustive.
inline PairBoundReport check_pair_bound(const CertifiedExpander& ex, std::size_t r) {
  if (ex.mode != ExpansionMode::exact || !ex.lambda_exact)
    throw PreconditionError("pair bound needs an exact-mode expander");
  if (r < 1) throw InputError("pair bound needs r >= 1");
  const std::size_t n = ex.h.n();
  check_budget(OracleKind::expansion, n, 20);
  if (n > 14 && !OracleBudget::overridden()) throw BudgetError("pair bound check is limited to n <= 14");
  const OrderedGraph power = graph_power(ex.h, r);
  std::vector<std::uint32_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint32_t{1} << v;
    power.row(v).for_each([&](std::size_t w) { closed[v] |= std::uint32_t{1} << w; });
  }
  PairBoundReport rep;
  rep.n = n;
  rep.r = r;
  rep.lambda = *ex.lambda_exact;
  rep.bound = static_cast<double>(n * n) * std::pow(1.0 + ex.lambda, -static_cast<double>(r));
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  std::uint32_t best_x = 0, best_y = 0;
  for (std::uint32_t x = 1; x <= all; ++x) {
    std::uint32_t nb = 0;
    for (std::uint32_t m = x; m; m &= m - 1) nb |= closed[static_cast<std::size_t>(std::countr_zero(m))];
    const std::uint32_t y = all & ~nb;
    const std::size_t product = static_cast<std::size_t>(std::popcount(x)) * static_cast<std::size_t>(std::popcount(y));
    ++rep.sets_checked;
    if (product > rep.max_product) {
      rep.max_product = product;
      best_x = x;
      best_y = y;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if ((best_x >> v) & 1u) rep.x.push_back(v);
    if ((best_y >> v) & 1u) rep.y.push_back(v);
  }
  rep.holds = pair_product_within(rep.max_product, n, rep.lambda, r);
  return rep;
}

}  // namespace orl
