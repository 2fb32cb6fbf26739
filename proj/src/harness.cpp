#include "widthlab/harness.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <functional>
#include <optional>

#include "widthlab/binary.hpp"
#include "widthlab/decomposition.hpp"
#include "widthlab/solvers.hpp"
#include "widthlab/unary.hpp"

namespace widthlab {

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t SplitMix64::below(std::uint64_t n) {
  if (n == 0) throw ParameterError("below: empty range");
  return next() % n;
}

Graph random_graph(SplitMix64& rng, int min_n, int max_n) {
  if (min_n < 0 || max_n < min_n) throw ParameterError("random_graph: bad size range");
  int n = min_n + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_n - min_n + 1)));
  static constexpr double kDensity[] = {0.2, 0.5, 0.8};
  double p = kDensity[rng.below(3)];
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.unit() < p) es.emplace_back(u, v);
    }
  }
  return Graph::with_order(n, es);
}

Graph random_tree(SplitMix64& rng, int n) {
  if (n < 1) throw ParameterError("random_tree: needs a vertex");
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(static_cast<int>(rng.below(i)), i);
  return Graph::with_order(n, es);
}

std::string to_string(Relation r) {
  switch (r) {
    case Relation::le: return "<=";
    case Relation::eq: return "==";
    case Relation::ge: return ">=";
  }
  return "?";
}

bool BoundCheck::passed() const {
  switch (relation) {
    case Relation::le: return lhs <= rhs;
    case Relation::eq: return lhs == rhs;
    case Relation::ge: return lhs >= rhs;
  }
  return false;
}

std::size_t count_failures(const std::vector<BoundCheck>& checks) {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(),
                                                [](const BoundCheck& c) { return !c.advisory && !c.passed(); }));
}

namespace {

using WitnessFn = std::function<std::vector<WitnessFile>()>;

struct Recorder {
  std::vector<BoundCheck> checks;

  void add(std::string name, long long lhs, Relation rel, long long rhs, const WitnessFn& witness) {
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.relation = rel;
    c.rhs = rhs;
    if (!c.passed() && witness) c.witness = witness();
    checks.push_back(std::move(c));
  }
};

int tw_of(const Graph& g) { return exact_treewidth(g).value.value_or(-1); }
int pw_of(const Graph& g) { return exact_pathwidth(g).value.value_or(-1); }

void check_config(const SweepConfig& cfg, int guard, const char* suite) {
  if (cfg.samples < 0) throw ParameterError(std::string(suite) + ": negative sample count");
  if (cfg.max_n < 2) throw ParameterError(std::string(suite) + ": max_n must be at least 2");
  if (cfg.max_n > guard) {
    throw CapabilityError(std::string(suite) + ": max_n " + std::to_string(cfg.max_n) + " exceeds the guard " +
                          std::to_string(guard));
  }
}

bool selected(const SweepConfig& cfg, const std::string& op) {
  return cfg.ops.empty() || std::find(cfg.ops.begin(), cfg.ops.end(), op) != cfg.ops.end();
}

// Independent stream per named table row so that filtering rows does not
// change the samples of the others.
std::uint64_t stream_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : name) h = (h ^ ch) * 1099511628211ULL;
  return seed ^ h;
}

std::string idx(int i) { return "#" + std::to_string(i); }

// 1-based script ids.
std::string id1(Vertex v) { return std::to_string(v + 1); }

// Graph samples for the relation and Nordhaus-Gaddum suites.
std::vector<std::pair<std::string, Graph>> sample_graphs(const SweepConfig& cfg, const std::string& suite) {
  std::vector<std::pair<std::string, Graph>> out;
  if (cfg.exhaustive) {
    for (int n = 1; n <= cfg.max_n; ++n) {
      auto graphs = exhaustive_graphs(n);
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        out.emplace_back("#n" + std::to_string(n) + "-" + std::to_string(i), graphs[i]);
      }
    }
    return out;
  }
  SplitMix64 rng(stream_seed(cfg.seed, suite));
  for (int i = 0; i < cfg.samples; ++i) out.emplace_back(idx(i), random_graph(rng, 2, cfg.max_n));
  return out;
}

std::vector<WitnessFile> graph_witness(const Graph& g) { return {{"input.gr", format_gr(g)}}; }

Graph complement_of(const Graph& g) { return edge_complement(g).graph; }

}  // namespace

// ---------------------------------------------------------------------------
// Relations

std::vector<BoundCheck> run_relation_suite(const SweepConfig& cfg) {
  check_config(cfg, cfg.exhaustive ? kExhaustiveGuard : kInvariantGuard, "relations");
  Recorder rec;
  long long ratio_excess = LLONG_MIN;
  for (const auto& [tag, g] : sample_graphs(cfg, "relations")) {
    const long long n = static_cast<long long>(g.order());
    const long long m = static_cast<long long>(g.size());
    const long long tw = tw_of(g), pw = pw_of(g);
    GraphInvariants inv = graph_invariants(g);
    auto w = [&g = g] { return graph_witness(g); };
    rec.add("relations/tw<=pw/" + tag, tw, Relation::le, pw, w);
    rec.add("relations/omega-1<=tw/" + tag, inv.omega - 1, Relation::le, tw, w);
    rec.add("relations/chi<=tw+1/" + tag, inv.chi, Relation::le, tw + 1, w);
    rec.add("relations/alpha+tw<=n/" + tag, inv.alpha + tw, Relation::le, n, w);
    rec.add("relations/kappa<=tw/" + tag, inv.connectivity, Relation::le, tw, w);
    rec.add("relations/edges-tw/" + tag, m, Relation::le, tw * n - tw * (tw + 1) / 2, w);
    rec.add("relations/edges-pw/" + tag, m, Relation::le, pw * n - pw * (pw + 1) / 2, w);
    ratio_excess = std::max(ratio_excess, pw - static_cast<long long>(std::floor(m / 5.769)));
  }
  if (ratio_excess != LLONG_MIN) {
    // pw <= |E|/5.769 + O(log n): the additive term is unspecified.
    BoundCheck c;
    c.name = "relations/edge-ratio-advisory/max(pw-floor(m/5.769))";
    c.lhs = ratio_excess;
    c.relation = Relation::le;
    c.rhs = 0;
    c.advisory = true;
    rec.checks.push_back(c);
  }
  return rec.checks;
}

// ---------------------------------------------------------------------------
// Nordhaus-Gaddum

std::vector<BoundCheck> run_nordhaus_gaddum(const SweepConfig& cfg) {
  check_config(cfg, cfg.exhaustive ? kExhaustiveGuard : kSubsetDpGuard, "ng");
  Recorder rec;
  for (const auto& [tag, g] : sample_graphs(cfg, "ng")) {
    Graph co = complement_of(g);
    const long long n = static_cast<long long>(g.order());
    auto w = [&g = g] { return graph_witness(g); };
    rec.add("ng/tw/" + tag, tw_of(g) + tw_of(co), Relation::ge, n - 2, w);
    rec.add("ng/pw/" + tag, pw_of(g) + pw_of(co), Relation::ge, n - 2, w);
  }
  Graph p4 = generate(GraphKind::path, {4});
  rec.add("ng/tight/P4-pw", pw_of(p4) + pw_of(complement_of(p4)), Relation::eq, 2,
          [&] { return graph_witness(p4); });
  Graph k5 = generate(GraphKind::complete, {5});
  rec.add("ng/fixture/K5-tw", tw_of(k5) + tw_of(complement_of(k5)), Relation::ge, 3,
          [&] { return graph_witness(k5); });
  Graph c5 = generate(GraphKind::cycle, {5});
  rec.add("ng/fixture/C5-self-complementary", is_isomorphic(c5, complement_of(c5)) ? 1 : 0, Relation::eq, 1,
          [&] { return graph_witness(c5); });
  rec.add("ng/fixture/C5-tw", tw_of(c5) + tw_of(complement_of(c5)), Relation::ge, 3,
          [&] { return graph_witness(c5); });
  return rec.checks;
}

// ---------------------------------------------------------------------------
// Logarithmic path-width bound

std::vector<BoundCheck> run_logbound(const SweepConfig& cfg) {
  check_config(cfg, kSubsetDpGuard, "logbound");
  if (cfg.tree_max_n < 1) throw ParameterError("logbound: tree_max_n must be positive");
  Recorder rec;
  SplitMix64 rng(stream_seed(cfg.seed, "logbound"));
  for (int i = 0; i < cfg.samples; ++i) {
    Graph g = random_graph(rng, 2, cfg.max_n);
    TreewidthReport t = exact_treewidth(g);
    const int tw = t.value.value_or(-1);
    const double n = static_cast<double>(g.order());
    const double bound = (tw + 1) * (std::log(2 * n + 1) / std::log(3.0) + 1) - 1;
    const long long cap = static_cast<long long>(std::floor(bound + 1e-9));
    PathDecomposition z = tree_to_path(g, t.certificate);
    auto w = [&] {
      return std::vector<WitnessFile>{{"input.gr", format_gr(g)},
                                      {"input.td", format_td(t.certificate)},
                                      {"output.td", format_td(z)}};
    };
    rec.add("logbound/tree_to_path/valid/" + idx(i), z.valid() ? 1 : 0, Relation::eq, 1, w);
    rec.add("logbound/tree_to_path/width/" + idx(i), width(z).value_or(-1), Relation::le, cap, w);
    rec.add("logbound/pw/" + idx(i), pw_of(g), Relation::le, cap, w);
  }
  for (int i = 0; i < cfg.samples; ++i) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(cfg.tree_max_n)));
    Graph t = random_tree(rng, n);
    PathDecomposition p = tree_path_decomposition(t);
    long long cap = 0;
    for (long long pow3 = 1; pow3 < 2LL * n + 1; pow3 *= 3) ++cap;
    auto w = [&] {
      return std::vector<WitnessFile>{{"input.gr", format_gr(t)}, {"output.td", format_td(p)}};
    };
    rec.add("logbound/tree/valid/" + idx(i), p.valid() ? 1 : 0, Relation::eq, 1, w);
    rec.add("logbound/tree/width/" + idx(i), width(p).value_or(-1), Relation::le, cap, w);
  }
  return rec.checks;
}

// ---------------------------------------------------------------------------
// Unary table

namespace {

struct Sandwich {
  std::optional<long long> lo, hi;
};

struct UnaryCase {
  std::string script;
  Graph result;
  std::optional<CarriedTree> td;
  std::optional<CarriedPath> pd;
  Sandwich tw, pw;
};

struct Sample {
  const Graph& g;
  const TreeDecomposition& td;
  const PathDecomposition& pd;
  long long tw, pw;
};

struct UnaryRow {
  std::string name;
  std::function<bool(const Graph&)> accepts;
  std::function<UnaryCase(SplitMix64&, const Sample&)> make;
};

Vertex pick_vertex(SplitMix64& rng, const Graph& g) {
  return g.vertices()[rng.below(g.order())];
}

Edge pick_edge(SplitMix64& rng, const Graph& g) {
  auto es = g.edges();
  return es[rng.below(es.size())];
}

Edge pick_non_edge(SplitMix64& rng, const Graph& g) {
  std::vector<Edge> non;
  for (Vertex a : g.vertices()) {
    for (Vertex b : g.vertices()) {
      if (a < b && !g.adjacent(a, b)) non.emplace_back(a, b);
    }
  }
  return non[rng.below(non.size())];
}

bool has_edge(const Graph& g) { return g.size() > 0; }
bool has_non_edge(const Graph& g) {
  return g.size() < g.order() * (g.order() - 1) / 2;
}

std::string join_ids(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) s += " " + id1(v);
  return s;
}

const std::vector<UnaryRow>& unary_rows() {
  static const std::vector<UnaryRow> rows = {
      {"delete_vertex", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         Vertex v = pick_vertex(rng, s.g);
         return UnaryCase{"delv " + id1(v), delete_vertex(s.g, v).graph, delete_vertex(s.td, v),
                          delete_vertex(s.pd, v), {s.tw - 1, s.tw}, {s.pw - 1, s.pw}};
       }},
      {"add_vertex", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         std::vector<Vertex> nbrs;
         for (Vertex x : s.g.vertices()) {
           if (rng.next() & 1) nbrs.push_back(x);
         }
         return UnaryCase{"addv" + join_ids(nbrs), add_vertex(s.g, nbrs).graph, add_vertex(s.td, nbrs),
                          add_vertex(s.pd, nbrs), {s.tw, s.tw + 1}, {s.pw, s.pw + 1}};
       }},
      {"add_pendant", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         Vertex u = pick_vertex(rng, s.g);
         return UnaryCase{"addv " + id1(u), add_vertex(s.g, {u}).graph, add_vertex(s.td, {u}),
                          add_vertex(s.pd, {u}), {s.tw, std::max(s.tw, 1LL)}, {s.pw, s.pw + 1}};
       }},
      {"delete_edge", has_edge,
       [](SplitMix64& rng, const Sample& s) {
         Edge e = pick_edge(rng, s.g);
         return UnaryCase{"dele " + id1(e.u) + " " + id1(e.v), delete_edge(s.g, e.u, e.v).graph,
                          delete_edge(s.td, e.u, e.v), delete_edge(s.pd, e.u, e.v), {s.tw - 1, s.tw},
                          {s.pw - 1, s.pw}};
       }},
      {"add_edge", has_non_edge,
       [](SplitMix64& rng, const Sample& s) {
         Edge e = pick_non_edge(rng, s.g);
         return UnaryCase{"adde " + id1(e.u) + " " + id1(e.v), add_edge(s.g, e.u, e.v).graph,
                          add_edge(s.td, e.u, e.v), add_edge(s.pd, e.u, e.v), {s.tw, s.tw + 1},
                          {s.pw, s.pw + 1}};
       }},
      {"identify", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         Vertex v = pick_vertex(rng, s.g), w = v;
         while (w == v) w = pick_vertex(rng, s.g);
         return UnaryCase{"ident " + id1(v) + " " + id1(w), identify_vertices(s.g, v, w).graph,
                          identify_vertices(s.td, v, w), identify_vertices(s.pd, v, w),
                          {s.tw - 1, s.tw + 1}, {s.pw - 1, s.pw + 1}};
       }},
      {"contract", has_edge,
       [](SplitMix64& rng, const Sample& s) {
         Edge e = pick_edge(rng, s.g);
         return UnaryCase{"contract " + id1(e.u) + " " + id1(e.v), contract_edge(s.g, e.u, e.v).graph,
                          contract_edge(s.td, e.u, e.v), contract_edge(s.pd, e.u, e.v), {s.tw - 1, s.tw},
                          {s.pw - 1, s.pw}};
       }},
      {"subdivide", has_edge,
       [](SplitMix64& rng, const Sample& s) {
         Edge e = pick_edge(rng, s.g);
         return UnaryCase{"subdiv " + id1(e.u) + " " + id1(e.v), subdivide_edge(s.g, e.u, e.v).graph,
                          subdivide_edge(s.td, e.u, e.v), subdivide_edge(s.pd, e.u, e.v), {s.tw, s.tw},
                          {s.pw, s.pw + 1}};
       }},
      {"incidence", [](const Graph& g) { return g.order() + g.size() <= kSubsetDpGuard; },
       [](SplitMix64&, const Sample& s) {
         long long t = std::max(s.tw, std::min(1LL, static_cast<long long>(s.g.size())));
         return UnaryCase{"incidence", incidence_graph(s.g).graph, incidence_graph(s.td),
                          incidence_graph(s.pd), {t, t}, {s.pw, s.pw + 1}};
       }},
      {"minor", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         // one to three random deletions and contractions
         MinorScript script;
         Graph cur = s.g;
         std::string text;
         int steps = 1 + static_cast<int>(rng.below(3));
         for (int i = 0; i < steps && cur.order() > 1; ++i) {
           std::uint64_t kind = cur.size() > 0 ? rng.below(3) : 0;
           MinorStep st{};
           if (kind == 0) {
             st = {MinorStep::Kind::delete_vertex, pick_vertex(rng, cur), 0};
             text += "delv " + id1(st.u) + "\n";
           } else {
             Edge e = pick_edge(rng, cur);
             st = {kind == 1 ? MinorStep::Kind::delete_edge : MinorStep::Kind::contract_edge, e.u, e.v};
             text += (kind == 1 ? "dele " : "contract ") + id1(e.u) + " " + id1(e.v) + "\n";
           }
           script.steps.push_back(st);
           cur = apply_minor_script(cur, MinorScript{{st}}).graph;
         }
         if (!text.empty()) text.pop_back();
         return UnaryCase{text, cur, apply_minor_script(s.td, script), apply_minor_script(s.pd, script),
                          {std::nullopt, s.tw}, {std::nullopt, s.pw}};
       }},
      {"power", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         int d = 1 + static_cast<int>(rng.below(3));
         long long f = 1 + power_degree_bound(s.g, d);
         return UnaryCase{"power " + std::to_string(d), graph_power(s.g, d).graph, graph_power(s.td, d),
                          graph_power(s.pd, d), {s.tw, (s.tw + 1) * f - 1}, {s.pw, (s.pw + 1) * f - 1}};
       }},
      {"line_graph", [](const Graph& g) { return g.size() >= 1 && g.size() <= kSubsetDpGuard; },
       [](SplitMix64&, const Sample& s) {
         long long delta = max_degree(s.g);
         return UnaryCase{"linegraph",
                          line_graph(s.g).graph,
                          line_graph(s.td),
                          line_graph(s.pd),
                          {std::max(s.tw - 1, delta - 1), (s.tw + 1) * delta - 1},
                          {std::max(s.pw / 2, delta - 1), (s.pw + 1) * delta - 1}};
       }},
      {"switch", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         Vertex v = pick_vertex(rng, s.g);
         return UnaryCase{"switch " + id1(v), seidel_switch(s.g, v).graph, seidel_switch(s.td, v),
                          seidel_switch(s.pd, v), {s.tw - 1, s.tw + 1}, {s.pw - 1, s.pw + 1}};
       }},
      {"switch_sequence", [](const Graph&) { return true; },
       [](SplitMix64& rng, const Sample& s) {
         std::vector<Vertex> seq;
         int l = 1 + static_cast<int>(rng.below(3));
         for (int i = 0; i < l; ++i) seq.push_back(pick_vertex(rng, s.g));
         return UnaryCase{"switchseq" + join_ids(seq), switch_sequence(s.g, seq).graph,
                          switch_sequence(s.td, seq), switch_sequence(s.pd, seq), {s.tw - l, s.tw + l},
                          {s.pw - l, s.pw + l}};
       }},
  };
  return rows;
}

template <class D>
void check_carried(Recorder& rec, const std::string& base, const Carried<D>& c, const Graph& expected,
                   const WitnessFn& w) {
  bool ok = c.decomposition.host() == expected && c.decomposition.valid();
  rec.add(base + "/valid", ok ? 1 : 0, Relation::eq, 1, w);
  rec.add(base + "/width", width(c.decomposition).value_or(-1), Relation::le, c.claimed_bound, w);
}

void check_sandwich(Recorder& rec, const std::string& base, long long value, const Sandwich& s,
                    const WitnessFn& w) {
  if (s.lo) rec.add(base + "/lower", value, Relation::ge, *s.lo, w);
  if (s.hi) rec.add(base + "/upper", value, Relation::le, *s.hi, w);
}

}  // namespace

const std::vector<std::string>& unary_table_ops() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : unary_rows()) out.push_back(r.name);
    return out;
  }();
  return names;
}

std::vector<BoundCheck> run_unary_table(const SweepConfig& cfg) {
  check_config(cfg, kSubsetDpGuard, "unary");
  Recorder rec;
  for (const UnaryRow& row : unary_rows()) {
    if (!selected(cfg, row.name)) continue;
    SplitMix64 rng(stream_seed(cfg.seed, "unary/" + row.name));
    for (int i = 0; i < cfg.samples; ++i) {
      Graph g = random_graph(rng, 2, cfg.max_n);
      while (!row.accepts(g)) g = random_graph(rng, 2, cfg.max_n);
      TreewidthReport t = exact_treewidth(g);
      PathwidthReport p = exact_pathwidth(g);
      Sample s{g, t.certificate, p.certificate, *t.value, *p.value};
      UnaryCase c = row.make(rng, s);
      auto w = [&] {
        std::vector<WitnessFile> files{{"input.gr", format_gr(g)},
                                       {"input.td", format_td(t.certificate)},
                                       {"input_path.td", format_td(p.certificate)},
                                       {"script.ops", c.script + "\n"},
                                       {"output.gr", format_gr(c.result)}};
        if (c.td) files.push_back({"output.td", format_td(c.td->decomposition)});
        if (c.pd) files.push_back({"output_path.td", format_td(c.pd->decomposition)});
        return files;
      };
      std::string base = "unary/" + row.name + "/" + idx(i);
      if (c.td) check_carried(rec, base + "/td", *c.td, c.result, w);
      if (c.pd) check_carried(rec, base + "/pd", *c.pd, c.result, w);
      check_sandwich(rec, base + "/tw", tw_of(c.result), c.tw, w);
      check_sandwich(rec, base + "/pw", pw_of(c.result), c.pw, w);
    }
  }
  return rec.checks;
}

// ---------------------------------------------------------------------------
// Binary table

namespace {

struct Pair {
  const Graph& g1;
  const Graph& g2;
  const TreeDecomposition& t1;
  const TreeDecomposition& t2;
  const PathDecomposition& p1;
  const PathDecomposition& p2;
  long long tw1, tw2, pw1, pw2, n1, n2;
};

struct BinaryCase {
  std::string script;
  Graph result;
  std::optional<CarriedTree> td;
  std::optional<CarriedPath> pd;
  Sandwich tw, pw;
};

struct BinaryRow {
  std::string name;
  std::function<bool(const Graph&, const Graph&)> accepts;
  std::function<BinaryCase(SplitMix64&, const Pair&)> make;
};

const std::vector<BinaryRow>& binary_rows() {
  static const std::vector<BinaryRow> rows = {
      {"disjoint_union", [](const Graph&, const Graph&) { return true; },
       [](SplitMix64&, const Pair& p) {
         long long t = std::max(p.tw1, p.tw2), q = std::max(p.pw1, p.pw2);
         return BinaryCase{"dunion", disjoint_union(p.g1, p.g2).graph, disjoint_union(p.t1, p.t2),
                           disjoint_union(p.p1, p.p2), {t, t}, {q, q}};
       }},
      {"join", [](const Graph&, const Graph&) { return true; },
       [](SplitMix64&, const Pair& p) {
         long long t = std::min(p.tw1 + p.n2, p.tw2 + p.n1), q = std::min(p.pw1 + p.n2, p.pw2 + p.n1);
         return BinaryCase{"join", join(p.g1, p.g2).graph, join(p.t1, p.t2), join(p.p1, p.p2), {t, t}, {q, q}};
       }},
      {"substitute", [](const Graph&, const Graph&) { return true; },
       [](SplitMix64& rng, const Pair& p) {
         Vertex v = pick_vertex(rng, p.g1);
         return BinaryCase{"subst " + id1(v),
                           substitute(p.g1, v, p.g2).graph,
                           substitute(p.t1, v, p.t2),
                           substitute(p.p1, v, p.p2),
                           {std::max(p.tw1, p.tw2), std::min(p.tw1 + p.n2, p.tw2 + p.n1) - 1},
                           {std::max(p.pw1, p.pw2), std::min(p.pw1 + p.n2, p.pw2 + p.n1) - 1}};
       }},
      {"substitute_by_neighbors", [](const Graph& g1, const Graph&) { return g1.size() > 0; },
       [](SplitMix64& rng, const Pair& p) {
         Vertex v = pick_vertex(rng, p.g1);
         while (p.g1.degree(v) == 0) v = pick_vertex(rng, p.g1);
         long long nb = p.g1.degree(v);
         return BinaryCase{"subst " + id1(v),
                           substitute(p.g1, v, p.g2).graph,
                           substitute_by_neighbors(p.t1, v, p.t2),
                           std::nullopt,
                           {std::max(p.tw1, p.tw2), std::max(p.tw1 - 1, p.tw2) + nb},
                           {std::max(p.pw1, p.pw2), std::nullopt}};
       }},
      {"lexicographic",
       [](const Graph& g1, const Graph& g2) { return g1.order() * g2.order() <= kSubsetDpGuard; },
       [](SplitMix64&, const Pair& p) {
         return BinaryCase{"prod lexicographic",
                           product(ProductKind::lexicographic, p.g1, p.g2).graph,
                           lexicographic_product(p.t1, p.g2),
                           lexicographic_product(p.p1, p.g2),
                           {std::max(p.tw1, p.tw2), (p.tw1 + 1) * p.n2 - 1},
                           {std::max(p.pw1, p.pw2), (p.pw1 + 1) * p.n2 - 1}};
       }},
      {"one_sum", [](const Graph&, const Graph&) { return true; },
       [](SplitMix64& rng, const Pair& p) {
         Vertex v = pick_vertex(rng, p.g1), w = pick_vertex(rng, p.g2);
         long long t = std::max(p.tw1, p.tw2), q = std::max(p.pw1, p.pw2);
         return BinaryCase{"onesum " + id1(v) + " " + id1(w), one_sum(p.g1, v, p.g2, w).graph,
                           one_sum(p.t1, v, p.t2, w), one_sum(p.p1, v, p.p2, w), {t, t}, {q, q + 1}};
       }},
      {"corona",
       [](const Graph& g1, const Graph& g2) { return g1.order() * (1 + g2.order()) <= kSubsetDpGuard; },
       [](SplitMix64&, const Pair& p) {
         long long t = std::max(p.tw1, p.tw2), q = std::max(p.pw1, p.pw2);
         return BinaryCase{"corona", corona(p.g1, p.g2).graph, corona(p.t1, p.t2), corona(p.p1, p.p2),
                           {t, t + 1}, {q, q + p.n1}};
       }},
  };
  return rows;
}

}  // namespace

const std::vector<std::string>& binary_table_ops() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& r : binary_rows()) out.push_back(r.name);
    return out;
  }();
  return names;
}

std::vector<BoundCheck> run_binary_table(const SweepConfig& cfg) {
  check_config(cfg, kSubsetDpGuard, "binary");
  Recorder rec;
  for (const BinaryRow& row : binary_rows()) {
    if (!selected(cfg, row.name)) continue;
    SplitMix64 rng(stream_seed(cfg.seed, "binary/" + row.name));
    for (int i = 0; i < cfg.samples; ++i) {
      Graph g1 = random_graph(rng, 2, cfg.max_n);
      Graph g2 = random_graph(rng, 2, cfg.max_n);
      while (!row.accepts(g1, g2)) {
        g1 = random_graph(rng, 2, cfg.max_n);
        g2 = random_graph(rng, 2, cfg.max_n);
      }
      TreewidthReport t1 = exact_treewidth(g1), t2 = exact_treewidth(g2);
      PathwidthReport p1 = exact_pathwidth(g1), p2 = exact_pathwidth(g2);
      Pair pr{g1,        g2,        t1.certificate,
              t2.certificate, p1.certificate, p2.certificate,
              *t1.value, *t2.value, *p1.value,
              *p2.value, static_cast<long long>(g1.order()), static_cast<long long>(g2.order())};
      BinaryCase c = row.make(rng, pr);
      auto w = [&] {
        std::vector<WitnessFile> files{{"input1.gr", format_gr(g1)},
                                       {"input2.gr", format_gr(g2)},
                                       {"input1.td", format_td(t1.certificate)},
                                       {"input2.td", format_td(t2.certificate)},
                                       {"input1_path.td", format_td(p1.certificate)},
                                       {"input2_path.td", format_td(p2.certificate)},
                                       {"script.ops", c.script + "\n"},
                                       {"output.gr", format_gr(c.result)}};
        if (c.td) files.push_back({"output.td", format_td(c.td->decomposition)});
        if (c.pd) files.push_back({"output_path.td", format_td(c.pd->decomposition)});
        return files;
      };
      std::string base = "binary/" + row.name + "/" + idx(i);
      if (c.td) check_carried(rec, base + "/td", *c.td, c.result, w);
      if (c.pd) check_carried(rec, base + "/pd", *c.pd, c.result, w);
      check_sandwich(rec, base + "/tw", tw_of(c.result), c.tw, w);
      check_sandwich(rec, base + "/pw", pw_of(c.result), c.pw, w);
    }
  }
  return rec.checks;
}

// ---------------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"relations", "unary", "binary", "ng", "logbound"};
  return names;
}

std::vector<BoundCheck> run_suite(const std::string& name, const SweepConfig& cfg) {
  if (name == "relations") return run_relation_suite(cfg);
  if (name == "unary") return run_unary_table(cfg);
  if (name == "binary") return run_binary_table(cfg);
  if (name == "ng") return run_nordhaus_gaddum(cfg);
  if (name == "logbound") return run_logbound(cfg);
  throw ParameterError("unknown suite '" + name + "'");
}

}  // namespace widthlab
