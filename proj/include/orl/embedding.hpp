#pragma once

// Three-way decomposition of a balanced bipartite graph: separated families,
// a sparse pair, or a dense vertex.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orl/bitset.hpp"
#include "orl/errors.hpp"
#include "orl/graph.hpp"
#include "orl/rational.hpp"
#include "orl/rng.hpp"

namespace orl {

/// Constant profile (ε₁, α₁). The main algorithm works with ε = 4ε₁ and α = 2α₁.
struct EmbeddingConstants {
  Rational eps1;
  Rational alpha1;
  std::string profile;

  static EmbeddingConstants paper() { return {make_rational(1, 2000), make_rational(1, 200), "paper"}; }
  static EmbeddingConstants lab(Rational eps1 = make_rational(1, 8), Rational alpha1 = make_rational(1, 4)) {
    return {std::move(eps1), std::move(alpha1), "lab"};
  }

  Rational eps() const { return eps1 * 4; }
  Rational alpha() const { return alpha1 * 2; }

  /// Σ t_i < n/4 is guaranteed for every n once ε <= 1/500.
  bool sum_bound_guaranteed() const { return eps() <= make_rational(1, 500); }

  void validate() const {
    if (!(eps1 > 0 && eps1 < 1)) throw PreconditionError("eps1 must lie in (0, 1)");
    if (!(alpha1 > 0 && alpha1 < 1)) throw PreconditionError("alpha1 must lie in (0, 1)");
  }
};

/// (i): X_i ⊆ N(W_i), X_i ∩ N(W_j) = ∅ for i != j. W_i ⊆ A and X_i ⊆ B (local indices).
struct SeparatedFamilies {
  std::vector<VertexSet> w;
  std::vector<VertexSet> x;
  std::size_t t() const { return x.size(); }
};

/// (ii): no edge between a_side ⊆ A and b_side ⊆ B.
struct SparsePair {
  VertexSet a_side;
  VertexSet b_side;
};

/// (iii): v ∈ A with |N(v)| >= ε₁ n.
struct DenseVertex {
  Vertex v;
};

using EmbeddingOutcome = std::variant<SeparatedFamilies, SparsePair, DenseVertex>;

inline const char* outcome_name(const EmbeddingOutcome& o) {
  switch (o.index()) {
    case 0: return "separated";
    case 1: return "sparse-pair";
    default: return "dense-vertex";
  }
}

/// Bookkeeping recorded while the decomposition runs.
struct EmbeddingTrace {
  std::size_t n = 0;
  std::size_t n_trimmed = 0;
  long j0 = 0;
  double sum_t = 0;              // Σ_{i=1}^{J0} t_i
  bool sum_bound_holds = true;   // sum_t < n_trimmed / 4
  bool sum_bound_checked = false;
  std::size_t main_steps = 0;
  std::size_t sub_steps = 0;
  std::size_t condition_checks = 0;
  std::size_t condition_violations = 0;
  std::size_t heavy_violations = 0;
  std::size_t case1_samples = 0;
  bool derandomized = false;
  bool partition_fallback = false;
  bool pair_completion = false;  // greedy sparse pair replaced an undersized one
  bool case1_unresolved = false;
  std::vector<std::string> violations;
};

struct EmbeddingOptions {
  /// Throw InvariantError as soon as a bookkeeping condition fails.
  bool strict = true;
  std::size_t max_samples = 64;
};

namespace detail {

/// deg * den >= num * n, i.e. deg >= (num/den) * n.
inline bool at_least_fraction(std::size_t deg, const Rational& frac, std::size_t n) {
  return Rational(static_cast<long long>(deg)) >= frac * static_cast<long long>(n);
}

/// t >= alpha * sqrt(n / size), squared to stay exact.
inline bool family_size_ok(std::size_t t, std::size_t size, const Rational& alpha, std::size_t n) {
  if (size == 0) return false;
  Rational lhs = Rational(static_cast<long long>(t * t)) * static_cast<long long>(size);
  return lhs >= alpha * alpha * static_cast<long long>(n);
}

/// 2 > alpha * sqrt(n / size).
inline bool pair_size_ok(std::size_t size, const Rational& alpha, std::size_t n) {
  if (size == 0) return false;
  return Rational(static_cast<long long>(4 * size)) > alpha * alpha * static_cast<long long>(n);
}

class MainAlgorithm {
 public:
  MainAlgorithm(const BipartiteOrderedGraph& h, const EmbeddingConstants& c, std::size_t n_original,
                Rng rng, const EmbeddingOptions& opts, EmbeddingTrace& trace)
      : h_(h),
        c_(c),
        n_(h.a_size()),
        n_original_(n_original),
        rng_(std::move(rng)),
        opts_(opts),
        trace_(trace),
        a_(n_, true),
        b_(n_, true) {
    j0_ = floor_log2(c_.eps() * static_cast<long long>(n_)) + 1;
    trace_.j0 = j0_;
    trace_.sum_t = sum_t(1, j0_);
    trace_.sum_bound_holds = trace_.sum_t < static_cast<double>(n_) / 4.0;
    if (c_.sum_bound_guaranteed()) {
      trace_.sum_bound_checked = true;
      if (!trace_.sum_bound_holds) violation("sum of thresholds t_1..t_J0 is not below n/4");
    }
  }

  EmbeddingOutcome run() {
    long j = j0_;
    while (true) {
      ++trace_.main_steps;
      check_conditions(j);
      if (j <= 0) return SparsePair{VertexSet::from_bitset(a_), VertexSet::from_bitset(b_)};

      // Dyadic degree classes V_0..V_J of the active B.
      std::vector<std::size_t> level(n_, 0);
      std::vector<std::size_t> class_size(static_cast<std::size_t>(j) + 1, 0);
      Bitset v0(n_);
      b_.for_each([&](std::size_t b) {
        std::size_t d = h_.b_row(static_cast<Vertex>(b)).count_and(a_);
        std::size_t i = static_cast<std::size_t>(std::bit_width(d));
        if (i > static_cast<std::size_t>(j)) violation("B-vertex degree exceeds 2^J");
        i = std::min<std::size_t>(i, static_cast<std::size_t>(j));
        level[b] = i;
        ++class_size[i];
        if (i == 0) v0.set(b);
      });

      long k = 0;
      for (long i = j; i >= 1; --i)
        if (t(i) < static_cast<double>(class_size[static_cast<std::size_t>(i)])) {
          k = i;
          break;
        }
      if (k == 0) return SparsePair{VertexSet::from_bitset(a_), VertexSet::from_bitset(v0)};

      Bitset z(n_);
      b_.for_each([&](std::size_t b) {
        if (level[b] > static_cast<std::size_t>(k)) move_b(b);
        else if (level[b] == static_cast<std::size_t>(k)) z.set(b);
      });
      j = k;

      if (auto out = sub_algorithm(k, z)) return *out;
      j = k - 1;
    }
  }

 private:
  double t(long i) const { return std::sqrt(static_cast<double>(n_) * std::ldexp(1.0, static_cast<int>(i))); }
  double sum_t(long from, long to) const {
    double s = 0;
    for (long i = from; i <= to; ++i) s += t(i);
    return s;
  }

  void move_a(std::size_t a) {
    a_.reset(a);
    ++a_star_;
  }
  void move_b(std::size_t b) {
    b_.reset(b);
    ++b_star_;
  }

  void violation(const std::string& what) {
    ++trace_.condition_violations;
    trace_.violations.push_back(what);
    if (opts_.strict) fail_invariant(what);
  }

  void check_conditions(long j) {
    ++trace_.condition_checks;
    if (a_.count() + a_star_ != n_ || b_.count() + b_star_ != n_) violation("condition 1 (size accounting)");
    const double cap = 2.0 * sum_t(j + 1, j0_) + 1e-9;
    if (static_cast<double>(a_star_) > cap || static_cast<double>(b_star_) > cap)
      violation("condition 2 (leftover bound)");
    const double limit = std::ldexp(1.0, static_cast<int>(std::max<long>(j, -60)));
    bool ok = true;
    b_.for_each([&](std::size_t b) {
      if (static_cast<double>(h_.b_row(static_cast<Vertex>(b)).count_and(a_)) >= limit) ok = false;
    });
    if (!ok) violation("condition 3 (B-degree below 2^J)");
  }

  /// Returns an outcome if Case 1 fires; otherwise moves Z_r to B* and returns nullopt.
  std::optional<EmbeddingOutcome> sub_algorithm(long k, Bitset z) {
    const double tk = t(k);
    const std::size_t half_level = std::size_t{1} << (k - 1);
    std::size_t heavy_total = 0;
    while (true) {
      const std::size_t zsize = z.count();
      if (static_cast<double>(zsize) < 2.0 * tk) {
        z.for_each([&](std::size_t b) { move_b(b); });
        if (static_cast<double>(heavy_total) >= tk) {
          ++trace_.heavy_violations;
          violation("heavy vertices moved in one sub-algorithm run reach t_k");
        }
        return std::nullopt;
      }
      ++trace_.sub_steps;

      // Heavy: |N(v) ∩ Z| >= |Z|^2 / n.
      const std::size_t zz = zsize * zsize;
      std::size_t heavy = 0;
      std::vector<std::size_t> heavy_list;
      a_.for_each([&](std::size_t a) {
        if (h_.a_row(static_cast<Vertex>(a)).count_and(z) * n_ >= zz) heavy_list.push_back(a);
      });
      for (std::size_t a : heavy_list) {
        move_a(a);
        ++heavy;
      }
      heavy_total += heavy;
      // |H_l| < t_k / x_l = t_k^2 / |Z|.
      if (static_cast<double>(heavy) * static_cast<double>(zsize) >= tk * tk) {
        ++trace_.heavy_violations;
        violation("heavy set of a sub-step reaches t_k / x_l");
      }

      Bitset tset(n_);
      z.for_each([&](std::size_t b) {
        if (h_.b_row(static_cast<Vertex>(b)).count_and(a_) >= half_level) tset.set(b);
      });
      const std::size_t tsize = tset.count();
      if (2 * tsize >= zsize) return case_one(k, zsize, tset);
      z = std::move(tset);
    }
  }

  struct Block {
    Vertex v;
    std::vector<Vertex> ys;
  };

  /// Y_v blocks for a sample S, or empty when |Y| < |Z| / 12.
  std::vector<Block> good_blocks(const Bitset& s, const Bitset& tset, std::size_t zsize) {
    std::vector<std::vector<Vertex>> by_v(n_);
    std::size_t ysize = 0;
    tset.for_each([&](std::size_t b) {
      Bitset hit = h_.b_row(static_cast<Vertex>(b)) & s;
      if (hit.count() == 1) {
        by_v[hit.find_first()].push_back(static_cast<Vertex>(b));
        ++ysize;
      }
    });
    if (12 * ysize < zsize) return {};
    std::vector<Block> blocks;
    for (std::size_t v = 0; v < n_; ++v)
      if (!by_v[v].empty()) blocks.push_back({static_cast<Vertex>(v), std::move(by_v[v])});
    return blocks;
  }

  /// Greedy bin filling: a part closes once its X reaches `target`; an underfull tail
  /// merges into the previous part.
  static SeparatedFamilies assemble(const std::vector<Block>& blocks, std::size_t target) {
    std::vector<std::vector<Vertex>> ws, xs;
    std::vector<Vertex> cw, cx;
    for (const auto& blk : blocks) {
      cw.push_back(blk.v);
      cx.insert(cx.end(), blk.ys.begin(), blk.ys.end());
      if (cx.size() >= target) {
        ws.push_back(std::move(cw));
        xs.push_back(std::move(cx));
        cw.clear();
        cx.clear();
      }
    }
    if (!cx.empty()) {
      if (ws.empty()) {
        ws.push_back(std::move(cw));
        xs.push_back(std::move(cx));
      } else {
        ws.back().insert(ws.back().end(), cw.begin(), cw.end());
        xs.back().insert(xs.back().end(), cx.begin(), cx.end());
      }
    }
    SeparatedFamilies out;
    for (std::size_t i = 0; i < ws.size(); ++i) {
      out.w.emplace_back(std::move(ws[i]));
      out.x.emplace_back(std::move(xs[i]));
    }
    return out;
  }

  bool satisfies_bound(const SeparatedFamilies& f) const {
    if (f.t() < 2) return false;
    for (const auto& x : f.x)
      if (!family_size_ok(f.t(), x.size(), c_.alpha1, n_original_)) return false;
    return true;
  }

  /// Paper target Δ'_l first; smaller targets only if that assembly misses the bound.
  std::optional<SeparatedFamilies> partition(const std::vector<Block>& blocks, std::size_t zsize) {
    if (blocks.size() < 2) return std::nullopt;
    const Rational delta = Rational(static_cast<long long>(zsize * zsize), static_cast<long long>(n_));
    const Rational eps_n = c_.eps() * static_cast<long long>(n_);
    const Rational dprime = delta < eps_n ? delta : eps_n;
    const std::size_t target = std::max<std::size_t>(1, ceil_rational(dprime).convert_to<std::size_t>());
    auto fam = assemble(blocks, target);
    if (satisfies_bound(fam)) return fam;
    for (std::size_t s = target; s-- > 1;) {
      fam = assemble(blocks, s);
      if (satisfies_bound(fam)) {
        trace_.partition_fallback = true;
        return fam;
      }
    }
    return std::nullopt;
  }

  /// Conditional-expectation choice of S maximizing E|Y| for p = 2^-k.
  Bitset derandomized_sample(long k, const Bitset& tset) {
    const double p = std::ldexp(1.0, static_cast<int>(-k));
    std::vector<std::size_t> in(n_, 0), undecided(n_, 0);
    tset.for_each([&](std::size_t b) { undecided[b] = h_.b_row(static_cast<Vertex>(b)).count_and(a_); });
    auto prob = [&](std::size_t c, std::size_t u) {
      if (c == 0) return u == 0 ? 0.0 : static_cast<double>(u) * p * std::pow(1 - p, static_cast<double>(u - 1));
      if (c == 1) return std::pow(1 - p, static_cast<double>(u));
      return 0.0;
    };
    Bitset s(n_);
    a_.for_each([&](std::size_t a) {
      Bitset nb = h_.a_row(static_cast<Vertex>(a)) & tset;
      double gain_in = 0, gain_out = 0;
      nb.for_each([&](std::size_t b) {
        gain_in += prob(in[b] + 1, undecided[b] - 1);
        gain_out += prob(in[b], undecided[b] - 1);
      });
      const bool take = gain_in > gain_out;
      if (take) s.set(a);
      nb.for_each([&](std::size_t b) {
        --undecided[b];
        if (take) ++in[b];
      });
    });
    return s;
  }

  EmbeddingOutcome case_one(long k, std::size_t zsize, const Bitset& tset) {
    for (std::size_t attempt = 0; attempt < opts_.max_samples; ++attempt) {
      ++trace_.case1_samples;
      Bitset s(n_);
      a_.for_each([&](std::size_t a) {
        if (rng_.coin_pow2(static_cast<unsigned>(k))) s.set(a);
      });
      auto blocks = good_blocks(s, tset, zsize);
      if (blocks.empty()) continue;
      if (auto fam = partition(blocks, zsize)) return *fam;
    }
    trace_.derandomized = true;
    Bitset s = derandomized_sample(k, tset);
    auto blocks = good_blocks(s, tset, zsize);
    if (!blocks.empty())
      if (auto fam = partition(blocks, zsize)) return *fam;

    trace_.case1_unresolved = true;
    violation("case 1 found no sample with a valid separated family");
    // Non-strict mode: hand back the best-effort assembly so the checker can reject it.
    return assemble(blocks, 1);
  }

  const BipartiteOrderedGraph& h_;
  const EmbeddingConstants& c_;
  std::size_t n_;
  std::size_t n_original_;
  Rng rng_;
  const EmbeddingOptions& opts_;
  EmbeddingTrace& trace_;
  Bitset a_, b_;
  std::size_t a_star_ = 0, b_star_ = 0;
  long j0_ = 0;
};

inline VertexSet map_set(const VertexSet& local, const std::vector<Vertex>& to_original) {
  std::vector<Vertex> out;
  out.reserve(local.size());
  for (Vertex v : local) out.push_back(to_original[v]);
  return VertexSet(std::move(out));
}

/// Indices 0..n-1 sorted by key descending, ties by index; first `keep` returned ascending.
/// Sparse pair (X_1, X_2) with X_1 = A \ N(X_2), both sides of size s where 4s > alpha1^2 n.
inline std::optional<SparsePair> greedy_sparse_pair(const BipartiteOrderedGraph& h, const EmbeddingConstants& c) {
  const std::size_t n = h.a_size();
  std::size_t need = 1;
  while (!pair_size_ok(need, c.alpha1, n)) ++need;
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return h.b_row(x).count() < h.b_row(y).count(); });
  Bitset avail(n, true);
  std::vector<Vertex> xs;
  for (Vertex b : order) {
    const std::size_t left = avail.count() - h.b_row(b).count_and(avail);
    if (left < std::max(need, xs.size() + 1)) continue;
    avail -= h.b_row(b);
    xs.push_back(b);
  }
  if (xs.size() < need || avail.count() < need) return std::nullopt;
  return SparsePair{VertexSet::from_bitset(avail), VertexSet(std::move(xs))};
}

inline std::vector<Vertex> top_by_degree(const std::vector<std::size_t>& key, const std::vector<Vertex>& pool,
                                         std::size_t keep) {
  std::vector<Vertex> order = pool;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return key[a] > key[b]; });
  order.resize(std::min(keep, order.size()));
  std::sort(order.begin(), order.end());
  return order;
}

}  // namespace detail

bool verify_outcome(const BipartiteOrderedGraph& h, const EmbeddingOutcome& outcome,
                    const EmbeddingConstants& constants);

/// Decomposes a balanced bipartite graph (|A| = |B| = n >= 2).
///
/// Order of work: a dense A-vertex exits immediately; otherwise A and B are trimmed to
/// n' = ⌊n/2⌋ vertices each with B-degrees at most εn', and the leveled main algorithm
/// runs on the trimmed graph. Outcome sets are reported in the input's local indices.
inline EmbeddingOutcome embed_decompose(const BipartiteOrderedGraph& h, const EmbeddingConstants& constants,
                                        std::uint64_t seed, EmbeddingTrace* trace_out = nullptr,
                                        const EmbeddingOptions& opts = {}) {
  constants.validate();
  if (h.a_size() != h.b_size())
    throw InputError("classes have unequal size: " + std::to_string(h.a_size()) + " vs " +
                     std::to_string(h.b_size()));
  const std::size_t n = h.a_size();
  if (n < 2) throw InputError("embedding needs n >= 2");
  EmbeddingTrace local_trace;
  EmbeddingTrace& trace = trace_out ? *trace_out : local_trace;
  trace = EmbeddingTrace{};
  trace.n = n;

  std::vector<std::size_t> a_deg(n);
  for (Vertex a = 0; a < n; ++a) a_deg[a] = h.a_row(a).count();
  Vertex best = 0;
  for (Vertex a = 1; a < n; ++a)
    if (a_deg[a] > a_deg[best]) best = a;
  if (detail::at_least_fraction(a_deg[best], constants.eps1, n)) return DenseVertex{best};

  const std::size_t half = n / 2;
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), Vertex{0});
  const std::vector<Vertex> a_keep = detail::top_by_degree(a_deg, all, half);
  Bitset a_mask(n);
  for (Vertex a : a_keep) a_mask.set(a);

  std::vector<std::size_t> b_deg(n);
  std::vector<Vertex> b_pool;
  for (Vertex b = 0; b < n; ++b) {
    b_deg[b] = h.b_row(b).count_and(a_mask);
    // Drop B-vertices whose degree into A' exceeds εn'.
    if (Rational(static_cast<long long>(b_deg[b])) <= constants.eps() * static_cast<long long>(half))
      b_pool.push_back(b);
  }
  if (b_pool.size() < half) detail::fail_invariant("trimming left fewer than n/2 low-degree B-vertices");
  const std::vector<Vertex> b_keep = detail::top_by_degree(b_deg, b_pool, half);

  BipartiteOrderedGraph trimmed(half, half);
  {
    std::vector<long> b_pos(n, -1);
    for (std::size_t i = 0; i < half; ++i) b_pos[b_keep[i]] = static_cast<long>(i);
    for (std::size_t i = 0; i < half; ++i)
      h.a_row(a_keep[i]).for_each([&](std::size_t b) {
        if (b_pos[b] >= 0) trimmed.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(b_pos[b]));
      });
  }
  trace.n_trimmed = half;

  detail::MainAlgorithm algo(trimmed, constants, n, Rng(seed).split("embedding"), opts, trace);
  EmbeddingOutcome local = algo.run();

  EmbeddingOutcome result;
  if (auto* sep = std::get_if<SeparatedFamilies>(&local)) {
    SeparatedFamilies out;
    for (std::size_t i = 0; i < sep->t(); ++i) {
      out.w.push_back(detail::map_set(sep->w[i], a_keep));
      out.x.push_back(detail::map_set(sep->x[i], b_keep));
    }
    result = std::move(out);
  } else {
    auto& pair = std::get<SparsePair>(local);
    result = SparsePair{detail::map_set(pair.a_side, a_keep), detail::map_set(pair.b_side, b_keep)};
  }
  if (std::holds_alternative<SparsePair>(result) && !constants.sum_bound_guaranteed() &&
      !verify_outcome(h, result, constants)) {
    // Without the sum bound V_0 may come out too small. Grow X_2 from low-degree B-vertices
    // while A \ N(X_2) stays large enough; this runs only when the pair above fails.
    if (auto pair = detail::greedy_sparse_pair(h, constants)) {
      result = std::move(*pair);
      trace.pair_completion = true;
    }
  }
  if (!verify_outcome(h, result, constants)) {
    trace.violations.push_back(std::string(outcome_name(result)) + " outcome fails its invariant block");
    if (opts.strict) detail::fail_invariant(trace.violations.back());
  }
  return result;
}

/// Checks the invariant block of an outcome by direct set arithmetic against H.
inline bool verify_outcome(const BipartiteOrderedGraph& h, const EmbeddingOutcome& outcome,
                           const EmbeddingConstants& constants) {
  if (h.a_size() != h.b_size()) return false;
  const std::size_t n = h.a_size();
  auto in_range = [](const VertexSet& s, std::size_t limit) {
    return std::all_of(s.begin(), s.end(), [&](Vertex v) { return v < limit; });
  };

  if (const auto* d = std::get_if<DenseVertex>(&outcome))
    return d->v < n && detail::at_least_fraction(h.a_row(d->v).count(), constants.eps1, n);

  if (const auto* p = std::get_if<SparsePair>(&outcome)) {
    if (!in_range(p->a_side, n) || !in_range(p->b_side, n)) return false;
    if (!detail::pair_size_ok(p->a_side.size(), constants.alpha1, n)) return false;
    if (!detail::pair_size_ok(p->b_side.size(), constants.alpha1, n)) return false;
    const Bitset bside = p->b_side.to_bitset(n);
    for (Vertex a : p->a_side)
      if (h.a_row(a).intersects(bside)) return false;
    return true;
  }

  const auto& f = std::get<SeparatedFamilies>(outcome);
  const std::size_t t = f.t();
  if (t < 2 || f.w.size() != t) return false;
  Bitset seen_w(n), seen_x(n);
  std::vector<Bitset> nbr(t, Bitset(n));
  for (std::size_t i = 0; i < t; ++i) {
    if (!in_range(f.w[i], n) || !in_range(f.x[i], n)) return false;
    for (Vertex a : f.w[i]) {
      if (seen_w.test(a)) return false;
      seen_w.set(a);
      nbr[i] |= h.a_row(a);
    }
    for (Vertex b : f.x[i]) {
      if (seen_x.test(b)) return false;
      seen_x.set(b);
    }
    if (!detail::family_size_ok(t, f.x[i].size(), constants.alpha1, n)) return false;
  }
  for (std::size_t i = 0; i < t; ++i) {
    const Bitset xi = f.x[i].to_bitset(n);
    for (std::size_t j = 0; j < t; ++j) {
      if (i == j) {
        if (!xi.is_subset_of(nbr[j])) return false;
      } else if (xi.intersects(nbr[j])) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace orl
