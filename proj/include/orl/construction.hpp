#pragma once

// Expander blow-up and the ordered counterexample with its certificate.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orl/bitset.hpp"
#include "orl/errors.hpp"
#include "orl/expander.hpp"
#include "orl/graph.hpp"
#include "orl/oracles.hpp"
#include "orl/patterns.hpp"
#include "orl/rational.hpp"
#include "orl/rng.hpp"

namespace orl {

/// k blocks of size m over one expander; cross threshold f·2^{a-1} for the earlier block a.
struct BlowupParams {
  std::size_t k = 2;
  std::size_t m = 10;
  std::size_t f = 1;
  std::size_t d = 3;
  bool theorem_mode = false;
  Rational eps;            // theorem mode only
  double f_formula = 0;    // log2(n) / (4·2^k) before rounding
  bool f_rounded = false;

  std::size_t n() const { return k * m; }

  static BlowupParams explicit_mode(std::size_t k, std::size_t m, std::size_t f, std::size_t d = 3) {
    BlowupParams p;
    p.k = k;
    p.m = m;
    p.f = f;
    p.d = d;
    p.validate();
    return p;
  }

  /// k = 2/eps, f = log2(n)/(4·2^k) rounded up, m = n/k.
  static BlowupParams theorem(const Rational& eps, std::size_t n, std::size_t d = 3) {
    if (!(eps > 0 && eps <= 2)) throw InputError("eps must lie in (0, 2]");
    const Rational kq = Rational(2) / eps;
    if (denominator(kq) != 1) throw InputError("2/eps must be an integer, got " + to_string(kq));
    BlowupParams p;
    p.theorem_mode = true;
    p.eps = eps;
    p.k = numerator(kq).convert_to<std::size_t>();
    if (p.k == 0 || n % p.k != 0)
      throw InputError("n = " + std::to_string(n) + " is not divisible by k = " + std::to_string(p.k));
    p.m = n / p.k;
    p.d = d;
    p.f_formula = std::log2(static_cast<double>(n)) / (4.0 * std::ldexp(1.0, static_cast<int>(p.k)));
    p.f = static_cast<std::size_t>(std::ceil(p.f_formula));
    if (p.f < 1 || static_cast<double>(p.f) != p.f_formula) p.f_rounded = true;
    p.f = std::max<std::size_t>(p.f, 1);
    p.validate();
    return p;
  }

  void validate() const {
    if (k < 1 || m < 1 || f < 1) throw InputError("k, m, f must be at least 1");
    if (k > 30) throw InputError("k is limited to 30");
    if (m <= d || (m * d) % 2 != 0) throw InputError("need m > d and m*d even for the regular expander");
    if (k * m > OrderedGraph::kMaxVertices) throw InputError("k*m exceeds the vertex limit");
  }
};

/// Cross-block edges of the blow-up. Vertex x lies in block x / m and carries label phi[x].
struct Blowup {
  OrderedGraph cross;
  std::size_t k = 0, m = 0, f = 0;
  std::vector<Vertex> phi;

  std::size_t block(Vertex v) const { return v / m; }
  /// f·2^{a-1} for 0-based block index a (1-based a+1).
  std::size_t threshold(std::size_t a) const { return f << a; }
};

/// x ∈ A_a, y ∈ A_b (a < b) adjacent iff dist_H(φx, φy) <= f·2^{a-1}; distance 0 counts.
/// phi_seed selects a random bijection per block instead of the identity labeling.
inline Blowup build_blowup(const OrderedGraph& h, std::size_t k, std::size_t f,
                           std::optional<std::uint64_t> phi_seed = std::nullopt) {
  if (k < 2) throw PreconditionError("blow-up needs k >= 2");
  if (f < 1) throw PreconditionError("blow-up needs f >= 1");
  const std::size_t m = h.n();
  Blowup b{OrderedGraph(k * m), k, m, f, std::vector<Vertex>(k * m)};
  Rng rng(phi_seed.value_or(0));
  Rng phi_rng = rng.split("phi");
  for (std::size_t a = 0; a < k; ++a) {
    std::vector<Vertex> labels(m);
    for (Vertex i = 0; i < m; ++i) labels[i] = i;
    if (phi_seed) phi_rng.shuffle(labels);
    for (std::size_t i = 0; i < m; ++i) b.phi[a * m + i] = labels[i];
  }
  const auto dist = distance_matrix(h);
  for (std::size_t a = 0; a < k; ++a) {
    const std::size_t r = b.threshold(a);
    for (std::size_t i = 0; i < m; ++i) {
      const Vertex x = static_cast<Vertex>(a * m + i);
      const auto& row = dist[b.phi[x]];
      for (Vertex y = static_cast<Vertex>((a + 1) * m); y < k * m; ++y)
        if (row[b.phi[y]] != unreachable && row[b.phi[y]] <= r) b.cross.add_edge(x, y);
    }
  }
  return b;
}

/// No x ∈ A_a, y ∈ A_b, z ∈ A_c (a < b < c) with xy, xz edges but yz not an edge.
inline bool blowup_no_bad_triple(const OrderedGraph& g, std::size_t m, std::size_t k) {
  const std::size_t n = g.n();
  std::vector<Bitset> after(k, Bitset(n));  // after[b]: vertices in blocks after b
  for (std::size_t b = 0; b < k; ++b)
    for (Vertex v = static_cast<Vertex>((b + 1) * m); v < n; ++v) after[b].set(v);
  for (Vertex x = 0; x < n; ++x) {
    const Bitset nx = g.row(x) & after[x / m];
    for (std::size_t y = nx.find_first(); y != Bitset::npos; y = nx.find_next(y)) {
      Bitset later = nx & after[y / m];
      if (!later.is_subset_of(g.row(static_cast<Vertex>(y)))) return false;
    }
  }
  return true;
}

struct BlockPairBound {
  std::size_t a = 0, b = 0;  // 0-based blocks, a < b
  std::size_t max_product = 0;
  double bound = 0;          // m²(1+λ)^{-f}
  bool holds = true;
};

struct ConstructionCertificate {
  std::size_t n = 0, k = 0, m = 0, f = 0;
  std::size_t max_degree = 0;
  std::string degree_target;    // m - 1 + 4^{f·2^k}
  bool max_degree_ok = false;
  bool property1_ok = false;    // Δ(cross) <= 4^{f·2^k}
  bool theorem_mode = false;
  bool eps_degree_ok = true;    // Δ(G) <= eps·n, theorem mode only
  bool f_rounded = false;
  double f_formula = 0;
  bool no_bad_triple_ok = false;
  bool pattern_s_free = false;
  bool pattern_p_free = false;
  bool pair_bound_checked = false;
  std::vector<BlockPairBound> pair_bound_report;
  double lambda = 0;
  std::string lambda_exact;     // empty unless exact mode
  ExpansionMode mode = ExpansionMode::exact;
  bool certifying = true;
  double delta = 0;             // log2(1+λ) / 2^k

  bool ok() const {
    bool pairs = true;
    for (const auto& p : pair_bound_report) pairs = pairs && p.holds;
    return max_degree_ok && property1_ok && eps_degree_ok && no_bad_triple_ok && pattern_s_free && pattern_p_free &&
           pairs;
  }
};

struct Counterexample {
  OrderedGraph g;
  BlowupParams params;
  CertifiedExpander expander;
  ConstructionCertificate cert;
};

namespace detail {

/// v <= 4^e without materializing huge powers.
inline bool within_pow4(std::size_t v, std::size_t e) {
  if (e >= 32) return true;
  return v <= (std::uint64_t{1} << (2 * e));
}

/// max |X||Y| over X ⊆ A_a, Y ⊆ A_b with no edge of g between them (m <= 20).
inline std::size_t block_pair_max_product(const OrderedGraph& g, std::size_t m, std::size_t a, std::size_t b) {
  std::vector<std::uint32_t> nbr(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (g.adjacent(static_cast<Vertex>(a * m + i), static_cast<Vertex>(b * m + j))) nbr[i] |= std::uint32_t{1} << j;
  if (m > 20) throw BudgetError("block pair search is limited to m <= 20");
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;
  std::size_t best = 0;
  for (std::uint32_t x = 1; x <= all; ++x) {
    std::uint32_t nb = 0;
    for (std::uint32_t s = x; s; s &= s - 1) nb |= nbr[static_cast<std::size_t>(std::countr_zero(s))];
    best = std::max(best, static_cast<std::size_t>(std::popcount(x)) * static_cast<std::size_t>(std::popcount(all & ~nb)));
  }
  return best;
}

}  // namespace detail

/// Builds G (blocks complete, cross edges from the blow-up) and certifies it.
/// `mode` defaults to exact for m <= 24 and spectral otherwise.
inline Counterexample build_counterexample(const BlowupParams& params, std::uint64_t seed,
                                           std::optional<ExpansionMode> mode = std::nullopt,
                                           std::optional<std::uint64_t> phi_seed = std::nullopt) {
  params.validate();
  const Rng rng(seed);
  const std::size_t k = params.k, m = params.m, f = params.f, n = params.n();
  const ExpansionMode chosen = mode.value_or(m <= 24 ? ExpansionMode::exact : ExpansionMode::spectral);
  OrderedGraph h = random_regular(m, params.d, rng.split("expander").next());
  Counterexample out{OrderedGraph(n), params, certify_expansion(h, chosen, rng.split("certify").next()), {}};

  OrderedGraph cross(n);
  if (k >= 2) cross = build_blowup(h, k, f, phi_seed).cross;
  std::vector<Bitset> fwd(n, Bitset(n));
  for (Vertex v = 0; v < n; ++v) {
    fwd[v] = forward_row(cross, v);
    for (Vertex w = v + 1; w < (v / m + 1) * m; ++w) fwd[v].set(w);
  }
  out.g = OrderedGraph::from_forward_rows(fwd);

  auto& c = out.cert;
  c.n = n;
  c.k = k;
  c.m = m;
  c.f = f;
  c.theorem_mode = params.theorem_mode;
  c.f_rounded = params.f_rounded;
  c.f_formula = params.f_formula;
  c.lambda = out.expander.lambda;
  c.mode = out.expander.mode;
  c.certifying = out.expander.certifying;
  if (out.expander.lambda_exact) c.lambda_exact = to_string(*out.expander.lambda_exact);
  c.delta = std::log2(1.0 + out.expander.lambda) / std::ldexp(1.0, static_cast<int>(k));

  c.max_degree = max_degree(out.g);
  const std::size_t exponent = f << k;
  c.degree_target = exponent < 32 ? std::to_string((m - 1) + (std::uint64_t{1} << (2 * exponent)))
                                  : std::to_string(m - 1) + "+4^" + std::to_string(exponent);
  c.max_degree_ok = c.max_degree < m || detail::within_pow4(c.max_degree - (m - 1), exponent);
  c.property1_ok = detail::within_pow4(max_degree(cross), exponent);
  if (params.theorem_mode)
    c.eps_degree_ok = Rational(static_cast<long long>(c.max_degree)) <= params.eps * static_cast<long long>(n);
  c.no_bad_triple_ok = blowup_no_bad_triple(cross, m, k);
  c.pattern_s_free = !find_induced(out.g, patterns::star_s()).has_value();
  c.pattern_p_free = !find_induced(out.g, patterns::pattern_p()).has_value();

  // Cross non-adjacent pairs between blocks a < b obey |X||Y| <= m²(1+λ)^{-f}.
  if (out.expander.lambda_exact && m <= 14) {
    c.pair_bound_checked = true;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        BlockPairBound p;
        p.a = a;
        p.b = b;
        p.max_product = detail::block_pair_max_product(out.g, m, a, b);
        p.bound = static_cast<double>(m * m) * std::pow(1.0 + out.expander.lambda, -static_cast<double>(f));
        p.holds = pair_product_within(p.max_product, m, *out.expander.lambda_exact, f);
        c.pair_bound_report.push_back(p);
      }
  }
  return out;
}

struct BicliqueResult {
  std::size_t b = 0;
  std::vector<Vertex> a_side, b_side;
};

/// Largest b with disjoint A, B, |A| = |B| = b and no G-edge between A and B
/// (a balanced bi-clique of the complement). Branch and bound over A with
/// B drawn from V \ N[A]; bound floor((|A| + |P ∪ C|) / 2).
inline BicliqueResult max_balanced_biclique_complement(const OrderedGraph& g) {
  check_budget(OracleKind::biclique, g.n(), 64);
  const std::size_t n = g.n();
  std::vector<std::uint64_t> closed(n);
  for (Vertex v = 0; v < n; ++v) {
    closed[v] = std::uint64_t{1} << v;
    g.row(v).for_each([&](std::size_t w) { closed[v] |= std::uint64_t{1} << w; });
  }
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  BicliqueResult best;
  std::uint64_t best_a = 0, best_c = 0;
  // a: chosen A, c: V \ N[A], p: vertices still eligible to join A (index above the last pick).
  auto rec = [&](auto&& self, std::uint64_t a, std::uint64_t c, std::uint64_t p) -> void {
    const std::size_t size_a = static_cast<std::size_t>(std::popcount(a));
    const std::size_t value = std::min(size_a, static_cast<std::size_t>(std::popcount(c)));
    if (value > best.b) {
      best.b = value;
      best_a = a;
      best_c = c;
    }
    while (p) {
      if ((size_a + static_cast<std::size_t>(std::popcount(p | c))) / 2 <= best.b) return;
      const int v = std::countr_zero(p);
      p &= p - 1;
      const std::uint64_t nc = c & ~closed[static_cast<std::size_t>(v)];
      if (static_cast<std::size_t>(std::popcount(nc)) <= best.b) continue;
      self(self, a | (std::uint64_t{1} << v), nc, p);
    }
  };
  rec(rec, 0, all, all);
  for (Vertex v = 0; v < n; ++v)
    if ((best_a >> v) & 1u) best.a_side.push_back(v);
  for (Vertex v = 0; v < n && best.b_side.size() < best.b; ++v)
    if ((best_c >> v) & 1u) best.b_side.push_back(v);
  best.a_side.resize(best.b);
  return best;
}

/// Largest s with X ⊆ A_a, Y ⊆ A_b, |X| = |Y| = s and no G-edge between X and Y (m <= 20).
inline std::size_t max_balanced_cross_pair(const OrderedGraph& g, std::size_t m, std::size_t a, std::size_t b) {
  if (m > 20) throw BudgetError("cross pair search is limited to m <= 20");
  std::vector<std::uint32_t> nbr(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (g.adjacent(static_cast<Vertex>(a * m + i), static_cast<Vertex>(b * m + j))) nbr[i] |= std::uint32_t{1} << j;
  const std::uint32_t all = (std::uint32_t{1} << m) - 1;
  std::size_t best = 0;
  for (std::uint32_t x = 1; x <= all; ++x) {
    std::uint32_t nb = 0;
    for (std::uint32_t s = x; s; s &= s - 1) nb |= nbr[static_cast<std::size_t>(std::countr_zero(s))];
    best = std::max(best, std::min<std::size_t>(static_cast<std::size_t>(std::popcount(x)),
                                                static_cast<std::size_t>(std::popcount(all & ~nb))));
  }
  return best;
}

}  // namespace orl
