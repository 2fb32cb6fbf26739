#include "widthlab/binary.hpp"

#include <algorithm>
#include <array>

#include "decomp_util.hpp"

namespace widthlab {

using detail::insert_sorted;
using detail::TreeShape;
using detail::usable_width;

namespace {

using IdMap = std::map<Vertex, Vertex>;

IdMap rank_map(const Graph& g, Vertex offset) {
  IdMap m;
  for (std::size_t i = 0; i < g.order(); ++i) m[g.vertices()[i]] = offset + static_cast<Vertex>(i);
  return m;
}

Bag mapped(const Bag& b, const IdMap& m) {
  Bag out;
  for (Vertex x : b) out.push_back(m.at(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Bag> mapped(const std::vector<Bag>& bags, const IdMap& m) {
  std::vector<Bag> out;
  for (const Bag& b : bags) out.push_back(mapped(b, m));
  return out;
}

Bag with_all(Bag b, const std::vector<Vertex>& extra) {
  for (Vertex x : extra) insert_sorted(b, x);
  return b;
}

std::vector<Bag> with_all(const std::vector<Bag>& bags, const std::vector<Vertex>& extra) {
  std::vector<Bag> out;
  for (const Bag& b : bags) out.push_back(with_all(b, extra));
  return out;
}

std::vector<Vertex> images(const IdMap& m) {
  std::vector<Vertex> out;
  for (auto [from, to] : m) out.push_back(to);
  std::sort(out.begin(), out.end());
  return out;
}

// Appends the nodes of `td` with the given bags; returns the node offset.
int append_tree(TreeShape& s, const TreeDecomposition& td, std::vector<Bag> bags) {
  int base = static_cast<int>(s.bags.size());
  for (Bag& b : bags) s.add(std::move(b));
  for (const Edge& e : td.tree().edges()) s.link(base + e.u, base + e.v);
  return base;
}

TreeShape shape_with(const TreeDecomposition& td, std::vector<Bag> bags) {
  TreeShape s;
  append_tree(s, td, std::move(bags));
  return s;
}

void require_vertex(const Graph& g, Vertex v, const char* op) {
  if (!g.has_vertex(v)) throw ParameterError(std::string(op) + ": unknown vertex " + std::to_string(v));
}

std::vector<Edge> mapped_edges(const Graph& g, const IdMap& m) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) es.emplace_back(m.at(e.u), m.at(e.v));
  return es;
}

CombineResult side_by_side(const Graph& g1, const Graph& g2) {
  CombineResult r;
  r.left = rank_map(g1, 0);
  r.right = rank_map(g2, static_cast<Vertex>(g1.order()));
  std::vector<Vertex> vs = images(r.left);
  for (Vertex x : images(r.right)) vs.push_back(x);
  std::vector<Edge> es = mapped_edges(g1, r.left);
  for (const Edge& e : mapped_edges(g2, r.right)) es.push_back(e);
  r.graph = Graph(std::move(vs), es);
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

CombineResult disjoint_union(const Graph& g1, const Graph& g2) { return side_by_side(g1, g2); }

CarriedTree disjoint_union(const TreeDecomposition& d1, const TreeDecomposition& d2) {
  int w = std::max(usable_width(d1, "disjoint_union"), usable_width(d2, "disjoint_union"));
  CombineResult r = disjoint_union(d1.host(), d2.host());
  TreeShape s = shape_with(d1, mapped(d1.bags(), r.left));
  int base = append_tree(s, d2, mapped(d2.bags(), r.right));
  s.link(0, base);
  return {s.build(r.graph), w};
}

CarriedPath disjoint_union(const PathDecomposition& d1, const PathDecomposition& d2) {
  int w = std::max(usable_width(d1, "disjoint_union"), usable_width(d2, "disjoint_union"));
  CombineResult r = disjoint_union(d1.host(), d2.host());
  std::vector<Bag> bags = mapped(d1.bags(), r.left);
  for (Bag& b : mapped(d2.bags(), r.right)) bags.push_back(std::move(b));
  return {PathDecomposition(r.graph, std::move(bags)), w};
}

CombineResult join(const Graph& g1, const Graph& g2) {
  CombineResult r = side_by_side(g1, g2);
  std::vector<Edge> es = r.graph.edges();
  for (Vertex a : images(r.left)) {
    for (Vertex b : images(r.right)) es.emplace_back(a, b);
  }
  r.graph = Graph(r.graph.vertices(), es);
  return r;
}

namespace {

struct JoinPlan {
  bool left_side;
  int bound;
};

template <class D>
JoinPlan plan_join(const D& d1, const D& d2) {
  int w1 = usable_width(d1, "join"), w2 = usable_width(d2, "join");
  long long a = w1 + static_cast<long long>(d2.host().order());
  long long b = w2 + static_cast<long long>(d1.host().order());
  return {a <= b, static_cast<int>(std::min(a, b))};
}

}  // namespace

CarriedTree join(const TreeDecomposition& d1, const TreeDecomposition& d2) {
  JoinPlan p = plan_join(d1, d2);
  CombineResult r = join(d1.host(), d2.host());
  if (p.left_side) {
    return {TreeDecomposition(r.graph, d1.tree(), with_all(mapped(d1.bags(), r.left), images(r.right))),
            p.bound};
  }
  return {TreeDecomposition(r.graph, d2.tree(), with_all(mapped(d2.bags(), r.right), images(r.left))),
          p.bound};
}

CarriedPath join(const PathDecomposition& d1, const PathDecomposition& d2) {
  JoinPlan p = plan_join(d1, d2);
  CombineResult r = join(d1.host(), d2.host());
  if (p.left_side) {
    return {PathDecomposition(r.graph, with_all(mapped(d1.bags(), r.left), images(r.right))), p.bound};
  }
  return {PathDecomposition(r.graph, with_all(mapped(d2.bags(), r.right), images(r.left))), p.bound};
}

Graph union_same_vertices(const Graph& g1, const Graph& g2) {
  if (g1.vertices() != g2.vertices()) {
    throw ParameterError("union_same_vertices: the vertex sets differ");
  }
  std::vector<Edge> es = g1.edges();
  for (const Edge& e : g2.edges()) es.push_back(e);
  return Graph(g1.vertices(), es);
}

// ---------------------------------------------------------------------------
// Substitution

CombineResult substitute(const Graph& g1, Vertex v, const Graph& g2) {
  require_vertex(g1, v, "substitute");
  CombineResult r = side_by_side(g1, g2);
  Vertex gone = r.left.at(v);
  r.left.erase(v);
  std::vector<Vertex> vs;
  for (Vertex x : r.graph.vertices()) {
    if (x != gone) vs.push_back(x);
  }
  std::vector<Edge> es;
  for (const Edge& e : r.graph.edges()) {
    if (e.u != gone && e.v != gone) es.push_back(e);
  }
  std::vector<Vertex> module = images(r.right);
  for (Vertex u : g1.neighbors(v)) {
    for (Vertex x : module) es.emplace_back(r.left.at(u), x);
  }
  r.graph = Graph(std::move(vs), es);
  return r;
}

namespace {

// G1 side with v replaced by `by`; the substituted vertex is absent from
// the map so it is handled one bag at a time.
std::vector<Bag> replace_in_bags(const std::vector<Bag>& bags, Vertex v, const IdMap& left,
                                 const std::vector<Vertex>& by) {
  std::vector<Bag> out;
  for (const Bag& b : bags) {
    Bag nb;
    for (Vertex x : b) {
      if (x == v) {
        nb.insert(nb.end(), by.begin(), by.end());
      } else {
        nb.push_back(left.at(x));
      }
    }
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    out.push_back(std::move(nb));
  }
  return out;
}

int max_bag(const std::vector<Bag>& bags) {
  std::size_t m = 0;
  for (const Bag& b : bags) m = std::max(m, b.size());
  return static_cast<int>(m) - 1;
}

}  // namespace

CarriedTree substitute(const TreeDecomposition& d1, Vertex v, const TreeDecomposition& d2) {
  int w1 = usable_width(d1, "substitute"), w2 = usable_width(d2, "substitute");
  CombineResult r = substitute(d1.host(), v, d2.host());
  int n1 = static_cast<int>(d1.host().order()), n2 = static_cast<int>(d2.host().order());
  int bound = std::min(w1 + n2, w2 + n1) - 1;
  std::vector<Bag> a = replace_in_bags(d1.bags(), v, r.left, images(r.right));
  std::vector<Bag> b = with_all(mapped(d2.bags(), r.right), images(r.left));
  if (max_bag(a) <= max_bag(b)) return {TreeDecomposition(r.graph, d1.tree(), std::move(a)), bound};
  return {TreeDecomposition(r.graph, d2.tree(), std::move(b)), bound};
}

CarriedPath substitute(const PathDecomposition& d1, Vertex v, const PathDecomposition& d2) {
  int w1 = usable_width(d1, "substitute"), w2 = usable_width(d2, "substitute");
  CombineResult r = substitute(d1.host(), v, d2.host());
  int n1 = static_cast<int>(d1.host().order()), n2 = static_cast<int>(d2.host().order());
  int bound = std::min(w1 + n2, w2 + n1) - 1;
  std::vector<Bag> a = replace_in_bags(d1.bags(), v, r.left, images(r.right));
  std::vector<Bag> b = with_all(mapped(d2.bags(), r.right), images(r.left));
  if (max_bag(a) <= max_bag(b)) return {PathDecomposition(r.graph, std::move(a)), bound};
  return {PathDecomposition(r.graph, std::move(b)), bound};
}

CarriedTree substitute_by_neighbors(const TreeDecomposition& d1, Vertex v, const TreeDecomposition& d2) {
  int w1 = usable_width(d1, "substitute_by_neighbors");
  int w2 = usable_width(d2, "substitute_by_neighbors");
  require_vertex(d1.host(), v, "substitute_by_neighbors");
  const auto& nb = d1.host().neighbors(v);
  if (nb.empty()) throw ParameterError("substitute_by_neighbors: vertex " + std::to_string(v) + " is isolated");
  CombineResult r = substitute(d1.host(), v, d2.host());
  std::vector<Vertex> nbr_ids;
  for (Vertex u : nb) nbr_ids.push_back(r.left.at(u));
  std::sort(nbr_ids.begin(), nbr_ids.end());
  std::vector<Bag> left_bags = replace_in_bags(d1.bags(), v, r.left, nbr_ids);
  TreeShape s = shape_with(d1, left_bags);
  int base = append_tree(s, d2, with_all(mapped(d2.bags(), r.right), nbr_ids));
  s.link(detail::lowest_bag(left_bags, nbr_ids), base);
  return {s.build(r.graph), std::max(w1 - 1, w2) + static_cast<int>(nb.size())};
}

// ---------------------------------------------------------------------------
// Products

std::string to_string(ProductKind kind) {
  switch (kind) {
    case ProductKind::cartesian: return "cartesian";
    case ProductKind::categorical: return "categorical";
    case ProductKind::conormal: return "conormal";
    case ProductKind::lexicographic: return "lexicographic";
    case ProductKind::normal: return "normal";
    case ProductKind::symmetric_difference: return "symmetric-difference";
    case ProductKind::rejection: return "rejection";
  }
  return "?";
}

const std::vector<ProductKind>& all_product_kinds() {
  static const std::vector<ProductKind> kinds{ProductKind::cartesian,    ProductKind::categorical,
                                              ProductKind::conormal,     ProductKind::lexicographic,
                                              ProductKind::normal,       ProductKind::symmetric_difference,
                                              ProductKind::rejection};
  return kinds;
}

ProductKind parse_product_kind(const std::string& name) {
  for (ProductKind k : all_product_kinds()) {
    if (to_string(k) == name) return k;
  }
  throw ParameterError("unknown product kind '" + name + "'");
}

namespace {

bool product_edge(ProductKind kind, bool eq1, bool e1, bool eq2, bool e2) {
  switch (kind) {
    case ProductKind::cartesian: return (eq1 && e2) || (eq2 && e1);
    case ProductKind::categorical: return e1 && e2;
    case ProductKind::conormal: return e1 || e2;
    case ProductKind::lexicographic: return e1 || (eq1 && e2);
    case ProductKind::normal: return (eq1 && e2) || (e1 && eq2) || (e1 && e2);
    case ProductKind::symmetric_difference: return e1 != e2;
    case ProductKind::rejection: return !e1 && !e2;
  }
  return false;
}

}  // namespace

CombineResult product(ProductKind kind, const Graph& g1, const Graph& g2) {
  const int n1 = static_cast<int>(g1.order()), n2 = static_cast<int>(g2.order());
  const int n = n1 * n2;
  const auto& v1 = g1.vertices();
  const auto& v2 = g2.vertices();
  std::vector<Edge> es;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int i1 = a / n2, j1 = a % n2, i2 = b / n2, j2 = b % n2;
      bool eq1 = i1 == i2, eq2 = j1 == j2;
      bool e1 = !eq1 && g1.adjacent(v1[i1], v1[i2]);
      bool e2 = !eq2 && g2.adjacent(v2[j1], v2[j2]);
      if (product_edge(kind, eq1, e1, eq2, e2)) es.emplace_back(a, b);
    }
  }
  return {Graph::with_order(n, es), {}, {}, {}};
}

namespace {

std::vector<Bag> blown_up(const std::vector<Bag>& bags, const Graph& g1, int n2) {
  std::vector<Bag> out;
  for (const Bag& b : bags) {
    Bag nb;
    for (Vertex x : b) {
      Vertex i = static_cast<Vertex>(g1.index_of(x));
      for (int j = 0; j < n2; ++j) nb.push_back(i * n2 + j);
    }
    std::sort(nb.begin(), nb.end());
    out.push_back(std::move(nb));
  }
  return out;
}

}  // namespace

CarriedTree lexicographic_product(const TreeDecomposition& d1, const Graph& g2) {
  int w = usable_width(d1, "lexicographic_product");
  if (g2.empty()) throw PreconditionError("lexicographic_product: second graph is empty");
  Graph h = product(ProductKind::lexicographic, d1.host(), g2).graph;
  int n2 = static_cast<int>(g2.order());
  return {TreeDecomposition(h, d1.tree(), blown_up(d1.bags(), d1.host(), n2)), (w + 1) * n2 - 1};
}

CarriedPath lexicographic_product(const PathDecomposition& d1, const Graph& g2) {
  int w = usable_width(d1, "lexicographic_product");
  if (g2.empty()) throw PreconditionError("lexicographic_product: second graph is empty");
  Graph h = product(ProductKind::lexicographic, d1.host(), g2).graph;
  int n2 = static_cast<int>(g2.order());
  return {PathDecomposition(h, blown_up(d1.bags(), d1.host(), n2)), (w + 1) * n2 - 1};
}

// ---------------------------------------------------------------------------
// 1-sum

CombineResult one_sum(const Graph& g1, Vertex v, const Graph& g2, Vertex w) {
  require_vertex(g1, v, "one_sum");
  require_vertex(g2, w, "one_sum");
  CombineResult r = side_by_side(g1, g2);
  Vertex a = r.left.at(v), b = r.right.at(w);
  Vertex z = static_cast<Vertex>(g1.order() + g2.order());
  r.left.erase(v);
  r.right.erase(w);
  std::vector<Vertex> vs;
  for (Vertex x : r.graph.vertices()) {
    if (x != a && x != b) vs.push_back(x);
  }
  vs.push_back(z);
  std::vector<Edge> es;
  for (const Edge& e : r.graph.edges()) {
    Vertex p = (e.u == a || e.u == b) ? z : e.u;
    Vertex q = (e.v == a || e.v == b) ? z : e.v;
    es.emplace_back(p, q);
  }
  r.graph = Graph(std::move(vs), es);
  r.new_ids = {z};
  return r;
}

namespace {

// Maps every id through `m`, sending `gone` to z.
std::vector<Bag> mapped_with(const std::vector<Bag>& bags, IdMap m, Vertex gone, Vertex z) {
  m[gone] = z;
  return mapped(bags, m);
}

}  // namespace

CarriedTree one_sum(const TreeDecomposition& d1, Vertex v, const TreeDecomposition& d2, Vertex w) {
  int width0 = std::max(usable_width(d1, "one_sum"), usable_width(d2, "one_sum"));
  CombineResult r = one_sum(d1.host(), v, d2.host(), w);
  Vertex z = r.new_ids.front();
  std::vector<Bag> b1 = mapped_with(d1.bags(), r.left, v, z);
  std::vector<Bag> b2 = mapped_with(d2.bags(), r.right, w, z);
  int u1 = detail::lowest_bag(b1, {z}), u2 = detail::lowest_bag(b2, {z});
  TreeShape s = shape_with(d1, std::move(b1));
  int base = append_tree(s, d2, std::move(b2));
  s.link(u1, base + u2);
  return {s.build(r.graph), width0};
}

CarriedPath one_sum(const PathDecomposition& d1, Vertex v, const PathDecomposition& d2, Vertex w) {
  int width0 = std::max(usable_width(d1, "one_sum"), usable_width(d2, "one_sum"));
  CombineResult r = one_sum(d1.host(), v, d2.host(), w);
  Vertex z = r.new_ids.front();
  std::vector<Bag> b1 = mapped_with(d1.bags(), r.left, v, z);
  std::vector<Bag> b2 = mapped_with(d2.bags(), r.right, w, z);
  auto interval = [z](const std::vector<Bag>& bs) {
    int first = -1, last = -1;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      if (detail::bag_has(bs[i], z)) {
        if (first < 0) first = static_cast<int>(i);
        last = static_cast<int>(i);
      }
    }
    return std::array<int, 2>{first, last};
  };
  // Put the z-interval of b1 as late and that of b2 as early as possible.
  auto [f1, l1] = interval(b1);
  if (f1 < static_cast<int>(b1.size()) - 1 - l1) std::reverse(b1.begin(), b1.end());
  auto [f2, l2] = interval(b2);
  if (static_cast<int>(b2.size()) - 1 - l2 < f2) std::reverse(b2.begin(), b2.end());
  std::vector<Bag> bags = std::move(b1);
  bags.insert(bags.end(), b2.begin(), b2.end());
  auto [first, last] = interval(bags);
  for (int i = first; i <= last; ++i) insert_sorted(bags[i], z);
  return {PathDecomposition(r.graph, std::move(bags)), width0 + 1};
}

// ---------------------------------------------------------------------------
// Corona

CombineResult corona(const Graph& g1, const Graph& g2) {
  const Vertex n1 = static_cast<Vertex>(g1.order()), n2 = static_cast<Vertex>(g2.order());
  Graph copy = compacted(g2);
  std::vector<Vertex> all(n2);
  for (Vertex j = 0; j < n2; ++j) all[j] = j;
  Graph dominated = add_vertex(copy, all).graph;  // dominating vertex n2

  // where[f] = current id of the vertex with final id f
  std::map<Vertex, Vertex> where;
  for (Vertex i = 0; i < n1; ++i) where[i] = i;
  Graph cur = compacted(g1);
  for (Vertex i = 0; i < n1; ++i) {
    CombineResult step = one_sum(cur, where.at(i), dominated, n2);
    Vertex z = step.new_ids.front();
    for (auto& [f, now] : where) now = (f == i) ? z : step.left.at(now);
    for (Vertex j = 0; j < n2; ++j) where[n1 + i * n2 + j] = step.right.at(j);
    cur = std::move(step.graph);
  }
  std::vector<Vertex> final_of(cur.order());
  for (auto [f, now] : where) final_of[cur.index_of(now)] = f;

  CombineResult r;
  r.graph = relabeled(cur, final_of);
  r.left = rank_map(g1, 0);
  if (n1 > 0) r.right = rank_map(g2, n1);
  for (Vertex x = n1; x < n1 + n1 * n2; ++x) {
    if (x >= n1 + n2) r.new_ids.push_back(x);
  }
  return r;
}

CarriedTree corona(const TreeDecomposition& d1, const TreeDecomposition& d2) {
  int w = std::max(usable_width(d1, "corona"), usable_width(d2, "corona"));
  CombineResult r = corona(d1.host(), d2.host());
  const Vertex n1 = static_cast<Vertex>(d1.host().order()), n2 = static_cast<Vertex>(d2.host().order());
  std::vector<Bag> left = mapped(d1.bags(), r.left);
  TreeShape s = shape_with(d1, left);
  for (Vertex i = 0; i < n1; ++i) {
    std::vector<Bag> copy = mapped(d2.bags(), rank_map(d2.host(), n1 + i * n2));
    int base = append_tree(s, d2, with_all(copy, {i}));
    s.link(detail::lowest_bag(left, {i}), base);
  }
  return {s.build(r.graph), w + 1};
}

CarriedPath corona(const PathDecomposition& d1, const PathDecomposition& d2) {
  int w = std::max(usable_width(d1, "corona"), usable_width(d2, "corona"));
  CombineResult r = corona(d1.host(), d2.host());
  const Vertex n1 = static_cast<Vertex>(d1.host().order()), n2 = static_cast<Vertex>(d2.host().order());
  std::vector<Vertex> core = images(r.left);
  std::vector<Bag> bags{core};
  for (Vertex i = 0; i < n1; ++i) {
    for (Bag& b : with_all(mapped(d2.bags(), rank_map(d2.host(), n1 + i * n2)), core)) {
      bags.push_back(std::move(b));
    }
  }
  return {PathDecomposition(r.graph, std::move(bags)), w + n1};
}

int corona_pw_complete(int n, int m) {
  if (n < 1 || m < 1) throw ParameterError("corona_pw_complete: sizes must be positive");
  if (n == 1) return m;
  return n + std::max(0, m - n / 2) - 1;
}

}  // namespace widthlab
