// orl: command-line front end.
//
// Exit codes: 0 success and all checks passed, 1 checks ran and failed, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orl/orl.hpp"

namespace {

using namespace orl;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Output {
  std::string path;

  void emit(const std::string& text) const {
    if (path.empty() || path == "-") {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << text;
  }
};

OrderedGraph load(const std::string& path) { return ogf::read_file(path); }

EmbeddingConstants make_profile(const std::string& profile, const std::string& eps1, const std::string& alpha1) {
  if (profile == "paper") {
    if (!eps1.empty() || !alpha1.empty()) throw InputError("--eps1/--alpha1 apply to the lab profile only");
    return EmbeddingConstants::paper();
  }
  if (profile != "lab") throw InputError("unknown profile '" + profile + "'");
  auto c = EmbeddingConstants::lab();
  if (!eps1.empty()) c.eps1 = parse_rational(eps1);
  if (!alpha1.empty()) c.alpha1 = parse_rational(alpha1);
  c.validate();
  return c;
}

/// key -> value from the trailer of a report file.
std::map<std::string, std::string> read_trailer(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::map<std::string, std::string> kv;
  std::string line;
  bool in_trailer = false;
  while (std::getline(in, line)) {
    if (line == "--") {
      in_trailer = true;
      kv.clear();
      continue;
    }
    if (!in_trailer) continue;
    auto colon = line.find(": ");
    if (colon == std::string::npos) {
      if (!line.empty() && line.back() == ':') kv[line.substr(0, line.size() - 1)] = "";
      continue;
    }
    kv[line.substr(0, colon)] = line.substr(colon + 2);
  }
  if (!in_trailer) throw InputError("'" + path + "' has no key: value trailer");
  return kv;
}

std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> out;
  std::istringstream s(text);
  long long v;
  while (s >> v) {
    if (v < 0) throw InputError("negative vertex in list");
    out.push_back(static_cast<Vertex>(v));
  }
  if (!s.eof()) throw InputError("malformed vertex list '" + text + "'");
  return out;
}

const std::string& need(const std::map<std::string, std::string>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw InputError("result is missing key '" + key + "'");
  return it->second;
}

std::size_t need_count(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto& v = need(kv, key);
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw InputError("key '" + key + "' is not a count");
  }
}

OrderedPattern load_pattern(const std::string& name, const std::string& file) {
  if (!file.empty()) return OrderedPattern::from_graph(load(file), file);
  auto p = patterns::by_name(name);
  if (!p) throw InputError("unknown pattern '" + name + "' (use mp:k, S, P or --pattern-file)");
  return *p;
}

// ---------------------------------------------------------------- commands

struct GenRandomArgs {
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t max_degree = 0;  // 0: no cap
  std::size_t split = 0;       // 0: ordinary graph
  Output out;
};

int gen_random(const GenRandomArgs& a) {
  if (!(a.p >= 0 && a.p <= 1)) throw InputError("--p must lie in [0, 1]");
  if (a.split > a.n) throw InputError("--split exceeds --n");
  Rng rng = Rng(a.seed).split("gen-random");
  OrderedGraph g(a.n);
  for (Vertex u = 0; u < a.n; ++u)
    for (Vertex v = u + 1; v < a.n; ++v) {
      if (!rng.bernoulli(a.p)) continue;
      if (a.split && (u < a.split) == (v < a.split)) continue;
      if (a.max_degree && (g.degree(u) >= a.max_degree || g.degree(v) >= a.max_degree)) continue;
      g.add_edge(u, v);
    }
  std::vector<std::string> comments{"gen-random n=" + std::to_string(a.n) + " p=" + std::to_string(a.p),
                                    "seed: " + std::to_string(a.seed)};
  if (a.split) comments.push_back("split: " + std::to_string(a.split));
  if (a.max_degree) comments.push_back("max-degree: " + std::to_string(a.max_degree));
  a.out.emit(ogf::to_string(g, comments));
  return kOk;
}

/// Closure checks: oracle equality within budget; otherwise E(G) ⊆ E(G') and idempotence.
bool closure_checks(const OrderedGraph& g, const OrderedGraph& c, std::string& how) {
  if (g.n() <= OracleBudget{}.closure) {
    how = "brute-force oracle";
    return brute_closure(g) == c;
  }
  how = "containment and idempotence";
  for (auto [u, v] : g.edges())
    if (!c.adjacent(u, v)) return false;
  return transitive_closure(c) == c;
}

int cmd_closure(const std::string& input, const Output& out) {
  const auto g = load(input);
  const auto c = transitive_closure(g);
  std::string how;
  const bool ok = closure_checks(g, c, how);
  out.emit(ogf::to_string(c, {"closure of " + std::to_string(g.n()) + "-vertex graph",
                              std::string("check: ") + (ok ? "pass" : "FAIL") + " (" + how + ")"}));
  return ok ? kOk : kFailed;
}

int cmd_find_pattern(const std::string& input, const std::string& name, const std::string& file) {
  const auto g = load(input);
  const auto p = load_pattern(name, file);
  const auto e = p.size() >= 1 && p.edge_count() == p.size() - 1 && p.name().rfind("mp:", 0) == 0
                     ? find_induced_monotone_path(g, p.size())
                     : find_induced(g, p);
  Report r;
  bool ok = true;
  std::string check;
  if (e) {
    ok = is_induced_embedding(g, p, *e);
    check = "embedding re-verified";
    r.body() << "pattern " << p.name() << " found at " << join(e->map) << "\n";
  } else {
    r.body() << "pattern " << p.name() << " absent\n";
    if (g.n() <= OracleBudget{}.pattern && p.size() <= 5) {
      ok = !brute_pattern(g, p).has_value();
      check = "absence confirmed by brute-force oracle";
    } else {
      check = "absence not cross-checked (over oracle budget)";
    }
  }
  r.set("command", "find-pattern").set("pattern", p.name()).set("n", g.n());
  r.set("found", e.has_value());
  if (e) r.set("embedding", join(e->map));
  r.set("check", check).set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

struct EmbedArgs {
  std::string input;
  std::optional<std::size_t> split;
  std::string profile = "lab";
  std::string eps1, alpha1;
  std::uint64_t seed = 0;
};

void write_outcome(Report& r, const EmbeddingOutcome& out) {
  r.set("outcome", outcome_name(out));
  if (const auto* d = std::get_if<DenseVertex>(&out)) {
    r.body() << "dense vertex " << d->v << " (class A)\n";
    r.set("dense", d->v);
  } else if (const auto* p = std::get_if<SparsePair>(&out)) {
    r.body() << "sparse pair |X1| = " << p->a_side.size() << " (A), |X2| = " << p->b_side.size() << " (B)\n";
    r.set("pair.a", join(p->a_side)).set("pair.b", join(p->b_side));
  } else {
    const auto& f = std::get<SeparatedFamilies>(out);
    r.body() << "separated families, t = " << f.t() << "\n";
    for (std::size_t i = 0; i < f.t(); ++i)
      r.body() << "  part " << i + 1 << ": |W| = " << f.w[i].size() << ", |X| = " << f.x[i].size() << "\n";
    r.set("t", f.t());
    for (std::size_t i = 0; i < f.t(); ++i)
      r.set("w." + std::to_string(i + 1), join(f.w[i])).set("x." + std::to_string(i + 1), join(f.x[i]));
  }
}

BipartiteOrderedGraph load_bipartite(const std::string& input, std::optional<std::size_t> split) {
  const auto g = load(input);
  const std::size_t a = split.value_or(g.n() / 2);
  auto h = BipartiteOrderedGraph::from_split(g, a);
  if (h.a_size() != h.b_size())
    throw InputError("classes have unequal size " + std::to_string(h.a_size()) + " and " + std::to_string(h.b_size()));
  return h;
}

int cmd_embed(const EmbedArgs& a) {
  const auto constants = make_profile(a.profile, a.eps1, a.alpha1);
  const auto h = load_bipartite(a.input, a.split);
  EmbeddingTrace trace;
  EmbeddingOptions opts;
  opts.strict = false;
  const auto out = embed_decompose(h, constants, a.seed, &trace, opts);
  const bool ok = verify_outcome(h, out, constants) && trace.condition_violations == 0;
  Report r;
  r.set("command", "embed").set("seed", a.seed).set("profile", constants.profile);
  r.set("eps1", to_string(constants.eps1)).set("alpha1", to_string(constants.alpha1)).set("n", h.a_size());
  write_outcome(r, out);
  r.set("n_trimmed", trace.n_trimmed).set("j0", trace.j0).set("main_steps", trace.main_steps);
  r.set("sub_steps", trace.sub_steps).set("case1_samples", trace.case1_samples);
  r.set("derandomized", trace.derandomized).set("partition_fallback", trace.partition_fallback);
  r.set("pair_completion", trace.pair_completion);
  r.set("condition_checks", trace.condition_checks).set("condition_violations", trace.condition_violations);
  r.set("sum_bound_checked", trace.sum_bound_checked).set("sum_bound_holds", trace.sum_bound_holds);
  for (const auto& v : trace.violations) r.body() << "violation: " << v << "\n";
  r.set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

struct QehArgs {
  std::string input;
  std::size_t k = 3;
  std::string profile = "lab";
  std::string eps1, alpha1;
  std::uint64_t seed = 0;
};

int cmd_qeh(const QehArgs& a) {
  const auto g = load(a.input);
  const auto consts = QehConstants::make(a.k, make_profile(a.profile, a.eps1, a.alpha1));
  QehTrace trace;
  Report r;
  r.set("command", "qeh").set("seed", a.seed).set("profile", consts.embedding.profile).set("k", a.k).set("n", g.n());
  r.set("eps", to_string(consts.eps)).set("alpha_sq", to_string(consts.alpha_sq)).set("max_degree", max_degree(g));
  QehResult res;
  try {
    res = qeh_decompose(g, consts, a.seed, &trace);
  } catch (const InvariantError& e) {
    r.body() << "invariant breach: " << e.what() << "\n";
    r.set("result", "error").set("verified", false);
    std::cout << r.str();
    return kFailed;
  }
  for (const auto& s : trace.steps)
    r.body() << "step s=" << s.s << " |Z|=" << s.z_size << " side=" << s.side << " outcome=" << s.outcome << "\n";
  const bool ok = verify_qeh_result(g, res, consts);
  if (const auto* p = std::get_if<QehPath>(&res)) {
    r.body() << "induced monotone path: " << join(p->vertices) << "\n";
    r.set("result", "path").set("path", join(p->vertices));
  } else {
    const auto& f = std::get<QehFamily>(res);
    r.body() << "family of " << f.sets.size() << " pairwise non-adjacent sets\n";
    r.set("result", "family").set("t", f.sets.size());
    for (std::size_t i = 0; i < f.sets.size(); ++i) r.set("set." + std::to_string(i + 1), join(f.sets[i]));
  }
  r.set("steps", trace.steps.size()).set("invariant_checks", trace.invariant_checks).set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

struct HomogeneousArgs {
  std::string input;
  std::size_t k = 3;
  std::string profile = "lab";
  std::string eps1, alpha1;
  std::uint64_t seed = 0;
  std::size_t base_size = 16;
};

int cmd_homogeneous(const HomogeneousArgs& a) {
  const auto g = load(a.input);
  const auto profile = make_profile(a.profile, a.eps1, a.alpha1);
  HomogeneousDiagnostics diag;
  HomogeneousOptions opts;
  opts.base_size = a.base_size;
  const auto res = extract_homogeneous(g, a.k, profile, a.seed, &diag, opts);
  const bool ok = is_homogeneous(g, res.vertices, res.kind);
  Report r;
  r.body() << kind_name(res.kind) << " of size " << res.vertices.size() << "\n";
  for (const auto& note : diag.notes) r.body() << "note: " << note << "\n";
  r.set("command", "homogeneous").set("seed", a.seed).set("profile", profile.profile).set("k", a.k).set("n", g.n());
  r.set("base_size", a.base_size).set("kind", kind_name(res.kind)).set("size", res.vertices.size());
  r.set("vertices", join(res.vertices));
  r.set("qeh_calls", diag.qeh_calls).set("families", diag.families).set("paths_found", diag.paths_found);
  r.set("qeh_errors", diag.qeh_errors);
  if (g.n() <= 24) {
    const auto opt = brute_max_homogeneous(g);
    r.set("oracle_optimum", opt.size());
    std::ostringstream ratio;
    ratio << static_cast<double>(res.vertices.size()) / static_cast<double>(std::max<std::size_t>(opt.size(), 1));
    r.set("oracle_ratio", ratio.str());
  }
  r.set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

struct ConstructArgs {
  std::optional<std::size_t> k, m, f, n;
  std::string eps;
  std::uint64_t seed = 0;
  std::string certify;
  std::optional<std::uint64_t> phi_seed;
  Output out;
  std::string cert_path;
};

Report certificate_report(const Counterexample& ce, std::uint64_t seed) {
  const auto& c = ce.cert;
  Report r;
  r.body() << "ordered counterexample: k=" << c.k << " m=" << c.m << " f=" << c.f << " n=" << c.n << "\n";
  if (c.f_rounded) r.body() << "note: f formula gave " << c.f_formula << ", rounded up to " << c.f << "\n";
  for (const auto& p : c.pair_bound_report)
    r.body() << "block pair " << p.a + 1 << "," << p.b + 1 << ": max |X||Y| = " << p.max_product
             << " vs bound " << p.bound << (p.holds ? "" : "  FAIL") << "\n";
  r.set("command", "construct").set("seed", seed).set("k", c.k).set("m", c.m).set("f", c.f).set("n", c.n);
  r.set("theorem_mode", c.theorem_mode);
  if (c.theorem_mode) r.set("eps", to_string(ce.params.eps));
  r.set("f_rounded", c.f_rounded).set("f_formula", c.f_formula);
  r.set("expander_mode", mode_name(c.mode)).set("expander_certifying", c.certifying).set("lambda", c.lambda);
  if (!c.lambda_exact.empty()) r.set("lambda_exact", c.lambda_exact);
  r.set("delta", c.delta);
  r.set("max_degree", c.max_degree).set("degree_target", c.degree_target).set("max_degree_ok", c.max_degree_ok);
  r.set("property1_ok", c.property1_ok);
  if (c.theorem_mode) r.set("eps_degree_ok", c.eps_degree_ok);
  r.set("no_bad_triple_ok", c.no_bad_triple_ok).set("pattern_S_free", c.pattern_s_free);
  r.set("pattern_P_free", c.pattern_p_free).set("pair_bound_checked", c.pair_bound_checked);
  r.set("certificate_ok", c.ok());
  return r;
}

int cmd_construct(const ConstructArgs& a) {
  BlowupParams params;
  const bool theorem = !a.eps.empty() || a.n;
  if (theorem) {
    if (a.k || a.m || a.f) throw InputError("use either --k/--m/--f or --eps/--n");
    if (a.eps.empty() || !a.n) throw InputError("theorem mode needs both --eps and --n");
    params = BlowupParams::theorem(parse_rational(a.eps), *a.n);
  } else {
    if (!a.k || !a.m || !a.f) throw InputError("explicit mode needs --k, --m and --f");
    params = BlowupParams::explicit_mode(*a.k, *a.m, *a.f);
  }
  std::optional<ExpansionMode> mode;
  if (!a.certify.empty()) mode = parse_mode(a.certify);
  const auto ce = build_counterexample(params, a.seed, mode, a.phi_seed);
  const Report rep = certificate_report(ce, a.seed);
  // The certificate trailer travels with the graph as comment lines.
  std::vector<std::string> comments;
  {
    std::istringstream lines(rep.str());
    std::string line;
    bool trailer = false;
    while (std::getline(lines, line)) {
      if (line == "--") trailer = true;
      else if (trailer) comments.push_back(line);
    }
  }
  a.out.emit(ogf::to_string(ce.g, comments));
  if (!a.cert_path.empty()) {
    Output{a.cert_path}.emit(rep.str());
  } else if (!a.out.path.empty() && a.out.path != "-") {
    std::cout << rep.str();
  }
  return ce.cert.ok() ? kOk : kFailed;
}

int cmd_expander_gen(std::size_t m, std::size_t d, std::uint64_t seed, const Output& out) {
  const auto h = random_regular(m, d, seed);
  out.emit(ogf::to_string(h, {"random " + std::to_string(d) + "-regular graph", "seed: " + std::to_string(seed)}));
  return regular_degree(h) == d ? kOk : kFailed;
}

int cmd_expander_certify(const std::string& input, const std::string& mode, std::uint64_t seed) {
  const auto h = load(input);
  const auto ex = certify_expansion(h, parse_mode(mode), seed);
  Report r;
  r.body() << "expansion (" << mode_name(ex.mode) << "): lambda = " << ex.lambda
           << (ex.certifying ? "" : " (estimate, not a certificate)") << "\n";
  r.set("command", "expander-certify").set("seed", seed).set("n", h.n()).set("d", ex.d);
  r.set("mode", mode_name(ex.mode)).set("certifying", ex.certifying).set("lambda", ex.lambda);
  if (ex.lambda_exact) r.set("lambda_exact", to_string(*ex.lambda_exact));
  if (ex.mode == ExpansionMode::spectral) r.set("second_eigenvalue", ex.second_eigenvalue);
  if (!ex.witness.empty()) r.set("witness", join(ex.witness));
  // Re-derive the witness ratio.
  bool ok = true;
  if (ex.mode == ExpansionMode::exact) {
    Bitset u(h.n()), nb(h.n());
    for (Vertex v : ex.witness) u.set(v);
    nb = u;
    for (Vertex v : ex.witness) nb |= h.row(v);
    ok = Rational(static_cast<long long>(nb.count()), static_cast<long long>(ex.witness.size())) - 1 ==
         *ex.lambda_exact;
  }
  r.set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

int cmd_expander_power(const std::string& input, std::size_t r, const Output& out) {
  const auto h = load(input);
  const auto p = graph_power(h, r);
  const auto d = regular_degree(h);
  bool ok = true;
  if (d) ok = BigInt(static_cast<unsigned long long>(max_degree(p))) <= power_degree_bound(*d, r);
  out.emit(ogf::to_string(p, {"power r=" + std::to_string(r),
                              std::string("degree bound (d+1)^r: ") + (d ? (ok ? "pass" : "FAIL") : "n/a")}));
  return ok ? kOk : kFailed;
}

int cmd_expander_pair_bound(const std::string& input, std::size_t r) {
  const auto h = load(input);
  const auto ex = certify_expansion(h, ExpansionMode::exact);
  const auto rep = check_pair_bound(ex, r);
  Report out;
  out.body() << "max |X||Y| = " << rep.max_product << " vs n^2(1+lambda)^-r = " << rep.bound << "\n";
  out.set("command", "expander-pair-bound").set("n", rep.n).set("r", r).set("lambda_exact", to_string(rep.lambda));
  out.set("sets_checked", rep.sets_checked).set("max_product", rep.max_product).set("bound", rep.bound);
  out.set("x", join(rep.x)).set("y", join(rep.y)).set("holds", rep.holds);
  std::cout << out.str();
  return rep.holds ? kOk : kFailed;
}

// ---------------------------------------------------------------- verify

int verify_closure(const std::string& input) {
  const auto g = load(input);
  const bool ok = brute_closure(g) == transitive_closure(g);
  Report r;
  r.set("command", "verify-closure").set("n", g.n()).set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

int verify_pattern(const std::string& input, const std::string& name, const std::string& file) {
  const auto g = load(input);
  const auto p = load_pattern(name, file);
  const auto fast = find_induced(g, p);
  const auto slow = brute_pattern(g, p);
  const bool ok = fast.has_value() == slow.has_value() && (!fast || *fast == *slow);
  Report r;
  r.set("command", "verify-pattern").set("pattern", p.name()).set("n", g.n());
  r.set("fast", fast ? join(fast->map) : std::string("absent"));
  r.set("oracle", slow ? join(slow->map) : std::string("absent"));
  r.set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

int verify_qeh(const std::string& input, const std::string& result, std::size_t k, const std::string& profile,
               const std::string& eps1, const std::string& alpha1) {
  const auto g = load(input);
  const auto consts = QehConstants::make(k, make_profile(profile, eps1, alpha1));
  const auto kv = read_trailer(result);
  QehResult res;
  if (need(kv, "result") == "path") {
    res = QehPath{parse_list(need(kv, "path"))};
  } else {
    QehFamily f;
    const std::size_t t = need_count(kv, "t");
    for (std::size_t i = 1; i <= t; ++i) f.sets.emplace_back(parse_list(need(kv, "set." + std::to_string(i))));
    res = f;
  }
  const bool ok = verify_qeh_result(g, res, consts);
  Report r;
  r.set("command", "verify-qeh").set("k", k).set("n", g.n()).set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

int verify_embedding(const std::string& input, std::optional<std::size_t> split, const std::string& result,
                     const std::string& profile, const std::string& eps1, const std::string& alpha1) {
  const auto h = load_bipartite(input, split);
  const auto constants = make_profile(profile, eps1, alpha1);
  const auto kv = read_trailer(result);
  const auto& kind = need(kv, "outcome");
  EmbeddingOutcome out;
  if (kind == "dense-vertex") {
    out = DenseVertex{static_cast<Vertex>(need_count(kv, "dense"))};
  } else if (kind == "sparse-pair") {
    out = SparsePair{VertexSet(parse_list(need(kv, "pair.a"))), VertexSet(parse_list(need(kv, "pair.b")))};
  } else if (kind == "separated") {
    SeparatedFamilies f;
    const std::size_t t = need_count(kv, "t");
    for (std::size_t i = 1; i <= t; ++i) {
      f.w.emplace_back(parse_list(need(kv, "w." + std::to_string(i))));
      f.x.emplace_back(parse_list(need(kv, "x." + std::to_string(i))));
    }
    out = f;
  } else {
    throw InputError("unknown outcome '" + kind + "'");
  }
  const bool ok = verify_outcome(h, out, constants);
  Report r;
  r.set("command", "verify-embedding").set("n", h.a_size()).set("outcome", kind).set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

int verify_homogeneous(const std::string& input, const std::string& result) {
  const auto g = load(input);
  const auto kv = read_trailer(result);
  const auto& kind_text = need(kv, "kind");
  HomogeneousKind kind;
  if (kind_text == "clique") kind = HomogeneousKind::clique;
  else if (kind_text == "independent") kind = HomogeneousKind::independent;
  else throw InputError("unknown kind '" + kind_text + "'");
  const VertexSet vs(parse_list(need(kv, "vertices")));
  const bool ok = is_homogeneous(g, vs, kind);
  Report r;
  r.set("command", "verify-homogeneous").set("n", g.n()).set("kind", kind_text).set("size", vs.size());
  if (g.n() <= OracleBudget{}.clique || OracleBudget::overridden()) {
    const auto opt = brute_max_homogeneous(g);
    r.set("oracle_optimum", opt.size()).set("oracle_kind", opt.is_clique() ? "clique" : "independent");
  }
  r.set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

int verify_biclique(const std::string& input) {
  const auto g = load(input);
  const auto res = max_balanced_biclique_complement(g);
  bool ok = res.a_side.size() == res.b && res.b_side.size() == res.b;
  for (Vertex a : res.a_side)
    for (Vertex b : res.b_side)
      if (a == b || g.adjacent(a, b)) ok = false;
  Report r;
  r.body() << "largest balanced bi-clique of the complement: " << res.b << "\n";
  r.set("command", "verify-biclique").set("n", g.n()).set("b", res.b);
  r.set("a", join(res.a_side)).set("b_side", join(res.b_side)).set("verified", ok);
  std::cout << r.str();
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered graphs without induced monotone paths: decompositions, constructions, oracles"};
  app.require_subcommand(1);
  std::function<int()> action;

  GenRandomArgs gen;
  auto* c_gen = app.add_subcommand("gen-random", "Random ordered graph G(n, p) in OGF");
  c_gen->add_option("--n", gen.n, "vertex count")->required();
  c_gen->add_option("--p", gen.p, "edge probability");
  c_gen->add_option("--seed", gen.seed, "random seed");
  c_gen->add_option("--max-degree", gen.max_degree, "skip edges that would exceed this degree");
  c_gen->add_option("--split", gen.split, "only edges between the first SPLIT vertices and the rest");
  c_gen->add_option("-o,--output", gen.out.path, "output file (default stdout)");
  c_gen->callback([&] { action = [&] { return gen_random(gen); }; });

  std::string input;
  Output out;
  auto* c_closure = app.add_subcommand("closure", "Ordered transitive closure");
  c_closure->add_option("input", input, "OGF graph")->required();
  c_closure->add_option("-o,--output", out.path, "output file (default stdout)");
  c_closure->callback([&] { action = [&] { return cmd_closure(input, out); }; });

  std::string pattern_name = "mp:3", pattern_file;
  auto* c_find = app.add_subcommand("find-pattern", "Find an induced ordered pattern");
  c_find->add_option("input", input, "OGF graph")->required();
  c_find->add_option("--pattern", pattern_name, "mp:k, S or P");
  c_find->add_option("--pattern-file", pattern_file, "pattern as an OGF file");
  c_find->callback([&] { action = [&] { return cmd_find_pattern(input, pattern_name, pattern_file); }; });

  EmbedArgs emb;
  std::size_t split_value = 0;
  auto* c_embed = app.add_subcommand("embed", "Three-way decomposition of a bipartite graph");
  c_embed->add_option("input", emb.input, "OGF graph with classes [0, split) and [split, n)")->required();
  auto* split_opt = c_embed->add_option("--split", split_value, "size of class A (default n/2)");
  c_embed->add_option("--profile", emb.profile, "paper or lab");
  c_embed->add_option("--eps1", emb.eps1, "lab eps1, e.g. 1/8");
  c_embed->add_option("--alpha1", emb.alpha1, "lab alpha1, e.g. 1/4");
  c_embed->add_option("--seed", emb.seed, "random seed");
  c_embed->callback([&] {
    if (split_opt->count()) emb.split = split_value;
    action = [&] { return cmd_embed(emb); };
  });

  QehArgs qa;
  auto* c_qeh = app.add_subcommand("qeh", "Induced monotone path or non-adjacent family");
  c_qeh->add_option("input", qa.input, "OGF graph")->required();
  c_qeh->add_option("--k", qa.k, "path size");
  c_qeh->add_option("--profile", qa.profile, "paper or lab");
  c_qeh->add_option("--eps1", qa.eps1, "lab eps1");
  c_qeh->add_option("--alpha1", qa.alpha1, "lab alpha1");
  c_qeh->add_option("--seed", qa.seed, "random seed");
  c_qeh->callback([&] { action = [&] { return cmd_qeh(qa); }; });

  HomogeneousArgs ha;
  auto* c_hom = app.add_subcommand("homogeneous", "Verified clique or independent set");
  c_hom->add_option("input", ha.input, "OGF graph")->required();
  c_hom->add_option("--k", ha.k, "monotone path parameter");
  c_hom->add_option("--profile", ha.profile, "paper or lab");
  c_hom->add_option("--eps1", ha.eps1, "lab eps1");
  c_hom->add_option("--alpha1", ha.alpha1, "lab alpha1");
  c_hom->add_option("--seed", ha.seed, "random seed");
  c_hom->add_option("--base-size", ha.base_size, "brute-force base case size (<= 64)");
  c_hom->callback([&] { action = [&] { return cmd_homogeneous(ha); }; });

  ConstructArgs ca;
  std::size_t k_value = 0, m_value = 0, f_value = 0, n_value = 0;
  std::uint64_t phi_value = 0;
  auto* c_con = app.add_subcommand("construct", "Expander blow-up counterexample with certificate");
  auto* k_opt = c_con->add_option("--k", k_value, "block count");
  auto* m_opt = c_con->add_option("--m", m_value, "block size");
  auto* f_opt = c_con->add_option("--f", f_value, "path-length scale");
  c_con->add_option("--eps", ca.eps, "theorem mode: target degree fraction (2/eps integer)");
  auto* n_opt = c_con->add_option("--n", n_value, "theorem mode: vertex count");
  c_con->add_option("--seed", ca.seed, "random seed");
  c_con->add_option("--certify", ca.certify, "exact, spectral or sampled");
  auto* phi_opt = c_con->add_option("--phi-seed", phi_value, "random per-block labeling instead of identity");
  c_con->add_option("-o,--output", ca.out.path, "graph output file (default stdout)");
  c_con->add_option("--cert", ca.cert_path, "certificate output file");
  c_con->callback([&] {
    if (k_opt->count()) ca.k = k_value;
    if (m_opt->count()) ca.m = m_value;
    if (f_opt->count()) ca.f = f_value;
    if (n_opt->count()) ca.n = n_value;
    if (phi_opt->count()) ca.phi_seed = phi_value;
    action = [&] { return cmd_construct(ca); };
  });

  auto* c_exp = app.add_subcommand("expander", "Regular expanders");
  c_exp->require_subcommand(1);
  std::size_t em = 0, ed = 3, er = 1;
  std::uint64_t eseed = 0;
  std::string emode = "exact";
  auto* e_gen = c_exp->add_subcommand("gen", "Random regular graph (pairing model)");
  e_gen->add_option("--m", em, "vertex count")->required();
  e_gen->add_option("--d", ed, "degree");
  e_gen->add_option("--seed", eseed, "random seed");
  e_gen->add_option("-o,--output", out.path, "output file (default stdout)");
  e_gen->callback([&] { action = [&] { return cmd_expander_gen(em, ed, eseed, out); }; });
  auto* e_cert = c_exp->add_subcommand("certify", "Vertex-expansion parameter");
  e_cert->add_option("input", input, "OGF regular graph")->required();
  e_cert->add_option("--mode", emode, "exact, spectral or sampled");
  e_cert->add_option("--seed", eseed, "seed for sampled mode");
  e_cert->callback([&] { action = [&] { return cmd_expander_certify(input, emode, eseed); }; });
  auto* e_pow = c_exp->add_subcommand("power", "Graph power H^r");
  e_pow->add_option("input", input, "OGF graph")->required();
  e_pow->add_option("--r", er, "distance bound")->required();
  e_pow->add_option("-o,--output", out.path, "output file (default stdout)");
  e_pow->callback([&] { action = [&] { return cmd_expander_power(input, er, out); }; });
  auto* e_pair = c_exp->add_subcommand("pair-bound", "Exhaustive |X||Y| <= n^2(1+lambda)^-r check");
  e_pair->add_option("input", input, "OGF regular graph (n <= 14)")->required();
  e_pair->add_option("--r", er, "distance bound")->required();
  e_pair->callback([&] { action = [&] { return cmd_expander_pair_bound(input, er); }; });

  auto* c_ver = app.add_subcommand("verify", "Cross-check against brute-force oracles");
  c_ver->require_subcommand(1);
  std::string result;
  auto* v_clo = c_ver->add_subcommand("closure", "DP closure vs brute force");
  v_clo->add_option("input", input, "OGF graph")->required();
  v_clo->callback([&] { action = [&] { return verify_closure(input); }; });
  auto* v_pat = c_ver->add_subcommand("pattern", "Fast matcher vs brute force");
  v_pat->add_option("input", input, "OGF graph")->required();
  v_pat->add_option("--pattern", pattern_name, "mp:k, S or P");
  v_pat->add_option("--pattern-file", pattern_file, "pattern as an OGF file");
  v_pat->callback([&] { action = [&] { return verify_pattern(input, pattern_name, pattern_file); }; });
  auto* v_qeh = c_ver->add_subcommand("qeh", "Check a qeh report against the graph");
  v_qeh->add_option("input", input, "OGF graph")->required();
  v_qeh->add_option("--result", result, "report written by qeh")->required();
  v_qeh->add_option("--k", qa.k, "path size");
  v_qeh->add_option("--profile", qa.profile, "paper or lab");
  v_qeh->add_option("--eps1", qa.eps1, "lab eps1");
  v_qeh->add_option("--alpha1", qa.alpha1, "lab alpha1");
  v_qeh->callback([&] {
    action = [&] { return verify_qeh(input, result, qa.k, qa.profile, qa.eps1, qa.alpha1); };
  });
  auto* v_emb = c_ver->add_subcommand("embedding", "Check an embed report against the graph");
  v_emb->add_option("input", input, "OGF bipartite graph")->required();
  v_emb->add_option("--result", result, "report written by embed")->required();
  auto* v_split = v_emb->add_option("--split", split_value, "size of class A (default n/2)");
  v_emb->add_option("--profile", emb.profile, "paper or lab");
  v_emb->add_option("--eps1", emb.eps1, "lab eps1");
  v_emb->add_option("--alpha1", emb.alpha1, "lab alpha1");
  v_emb->callback([&] {
    std::optional<std::size_t> split;
    if (v_split->count()) split = split_value;
    action = [&, split] { return verify_embedding(input, split, result, emb.profile, emb.eps1, emb.alpha1); };
  });
  auto* v_hom = c_ver->add_subcommand("homogeneous", "Check a homogeneous report against the graph");
  v_hom->add_option("input", input, "OGF graph")->required();
  v_hom->add_option("--result", result, "report written by homogeneous")->required();
  v_hom->callback([&] { action = [&] { return verify_homogeneous(input, result); }; });
  auto* v_bic = c_ver->add_subcommand("biclique", "Largest balanced bi-clique of the complement (n <= 40)");
  v_bic->add_option("input", input, "OGF graph")->required();
  v_bic->callback([&] { action = [&] { return verify_biclique(input); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  if (!action) return kUsage;
  try {
    return action();
  } catch (const InvariantError& e) {
    std::cerr << "orl: check failed: " << e.what() << "\n";
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "orl: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "orl: " << e.what() << "\n";
    return kUsage;
  }
}
