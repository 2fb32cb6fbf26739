#include "widthlab/unary.hpp"

#include <algorithm>
#include <climits>
#include <set>

#include "decomp_util.hpp"

namespace widthlab {

using detail::bag_has;
using detail::insert_sorted;
using detail::TreeShape;
using detail::usable_width;

namespace {

void require_vertex(const Graph& g, Vertex v, const char* op) {
  if (!g.has_vertex(v)) {
    throw ParameterError(std::string(op) + ": unknown vertex " + std::to_string(v));
  }
}

UnaryResult identity_result(Graph g, const Graph& source) {
  UnaryResult r{std::move(g), {}, {}, {}};
  for (Vertex v : source.vertices()) {
    if (r.graph.has_vertex(v)) r.vertex_map[v] = v;
  }
  return r;
}

template <class D>
std::vector<Bag> with_vertex_everywhere(const D& d, Vertex v) {
  std::vector<Bag> bags = d.bags();
  for (Bag& b : bags) insert_sorted(b, v);
  return bags;
}

TreeDecomposition same_tree(const TreeDecomposition& td, const Graph& host, std::vector<Bag> bags) {
  return TreeDecomposition(host, td.tree(), std::move(bags));
}

std::vector<Bag> renamed_bags(const std::vector<Bag>& bags, Vertex v, Vertex w, Vertex z) {
  std::vector<Bag> out;
  out.reserve(bags.size());
  for (const Bag& b : bags) out.push_back(detail::renamed(b, v, w, z));
  return out;
}

// Nodes of the smallest subtree spanning every node whose bag holds z.
std::vector<char> steiner_nodes(const TreeDecomposition& td, const std::vector<Bag>& bags, Vertex z) {
  const std::size_t k = bags.size();
  std::vector<char> keep(k, 1);
  std::vector<int> degree(k);
  std::vector<int> leaves;
  for (std::size_t x = 0; x < k; ++x) {
    degree[x] = td.tree().degree(static_cast<Vertex>(x));
    if (degree[x] <= 1 && !bag_has(bags[x], z)) leaves.push_back(static_cast<int>(x));
  }
  std::size_t remaining = k;
  while (!leaves.empty() && remaining > 1) {
    int x = leaves.back();
    leaves.pop_back();
    if (!keep[x]) continue;
    keep[x] = 0;
    --remaining;
    for (Vertex y : td.tree().neighbors(x)) {
      if (!keep[y]) continue;
      if (--degree[y] <= 1 && !bag_has(bags[y], z)) leaves.push_back(y);
    }
  }
  return keep;
}

std::vector<Edge> edges_without(const Graph& g, Edge gone) {
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    if (!(e == gone)) es.push_back(e);
  }
  return es;
}

long long saturating_add(long long a, long long b) { return a > LLONG_MAX - b ? LLONG_MAX : a + b; }
long long saturating_mul(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  return a > LLONG_MAX / b ? LLONG_MAX : a * b;
}

int clamp_int(long long x) { return x > INT_MAX ? INT_MAX : static_cast<int>(x); }

}  // namespace

// ---------------------------------------------------------------------------
// Vertex deletion

UnaryResult delete_vertex(const Graph& g, Vertex v) {
  require_vertex(g, v, "delete_vertex");
  std::vector<Vertex> keep;
  for (Vertex x : g.vertices()) {
    if (x != v) keep.push_back(x);
  }
  return identity_result(induced_subgraph(g, keep), g);
}

CarriedTree delete_vertex(const TreeDecomposition& td, Vertex v) {
  int w = usable_width(td, "delete_vertex");
  Graph h = delete_vertex(td.host(), v).graph;
  TreeShape s = TreeShape::of(td);
  for (Bag& b : s.bags) detail::erase_sorted(b, v);
  s.drop_empty();
  return {s.build(h), w};
}

CarriedPath delete_vertex(const PathDecomposition& pd, Vertex v) {
  int w = usable_width(pd, "delete_vertex");
  Graph h = delete_vertex(pd.host(), v).graph;
  std::vector<Bag> bags;
  for (Bag b : pd.bags()) {
    detail::erase_sorted(b, v);
    if (!b.empty()) bags.push_back(std::move(b));
  }
  if (bags.empty()) bags.push_back({});
  return {PathDecomposition(h, std::move(bags)), w};
}

// ---------------------------------------------------------------------------
// Vertex addition

UnaryResult add_vertex(const Graph& g, const std::vector<Vertex>& nbrs, std::optional<Vertex> v) {
  Vertex id = v.value_or(g.fresh_id());
  if (id < 0 || g.has_vertex(id)) {
    throw ParameterError("add_vertex: id " + std::to_string(id) + " is already a vertex");
  }
  for (Vertex u : nbrs) require_vertex(g, u, "add_vertex");
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(id);
  std::vector<Edge> es = g.edges();
  for (Vertex u : nbrs) es.emplace_back(u, id);
  UnaryResult r = identity_result(Graph(std::move(vs), es), g);
  r.new_ids = {id};
  return r;
}

CarriedTree add_vertex(const TreeDecomposition& td, const std::vector<Vertex>& nbrs,
                       std::optional<Vertex> v) {
  int w = usable_width(td, "add_vertex");
  UnaryResult r = add_vertex(td.host(), nbrs, v);
  Vertex id = r.new_ids.front();
  std::set<Vertex> distinct(nbrs.begin(), nbrs.end());
  if (distinct.size() == 1) {
    Vertex u = *distinct.begin();
    TreeShape s = TreeShape::of(td);
    int at = detail::lowest_bag(td.bags(), {u});
    s.link(s.add({std::min(u, id), std::max(u, id)}), at);
    return {s.build(r.graph), std::max(w, 1)};
  }
  return {same_tree(td, r.graph, with_vertex_everywhere(td, id)), w + 1};
}

CarriedPath add_vertex(const PathDecomposition& pd, const std::vector<Vertex>& nbrs,
                       std::optional<Vertex> v) {
  int w = usable_width(pd, "add_vertex");
  UnaryResult r = add_vertex(pd.host(), nbrs, v);
  return {PathDecomposition(r.graph, with_vertex_everywhere(pd, r.new_ids.front())), w + 1};
}

// ---------------------------------------------------------------------------
// Edge deletion and addition

UnaryResult delete_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.adjacent(u, v)) {
    throw ParameterError("delete_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                         "} is not an edge");
  }
  return identity_result(Graph(g.vertices(), edges_without(g, Edge(u, v))), g);
}

CarriedTree delete_edge(const TreeDecomposition& td, Vertex u, Vertex v) {
  int w = usable_width(td, "delete_edge");
  Graph h = delete_edge(td.host(), u, v).graph;
  return {same_tree(td, h, td.bags()), w};
}

CarriedPath delete_edge(const PathDecomposition& pd, Vertex u, Vertex v) {
  int w = usable_width(pd, "delete_edge");
  Graph h = delete_edge(pd.host(), u, v).graph;
  return {PathDecomposition(h, pd.bags()), w};
}

UnaryResult add_edge(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u, "add_edge");
  require_vertex(g, v, "add_edge");
  if (u == v) throw ParameterError("add_edge: endpoints coincide");
  if (g.adjacent(u, v)) throw ParameterError("add_edge: edge already present");
  std::vector<Edge> es = g.edges();
  es.emplace_back(u, v);
  return identity_result(Graph(g.vertices(), es), g);
}

CarriedTree add_edge(const TreeDecomposition& td, Vertex u, Vertex v) {
  int w = usable_width(td, "add_edge");
  Graph h = add_edge(td.host(), u, v).graph;
  return {same_tree(td, h, with_vertex_everywhere(td, v)), w + 1};
}

CarriedPath add_edge(const PathDecomposition& pd, Vertex u, Vertex v) {
  int w = usable_width(pd, "add_edge");
  Graph h = add_edge(pd.host(), u, v).graph;
  return {PathDecomposition(h, with_vertex_everywhere(pd, v)), w + 1};
}

// ---------------------------------------------------------------------------
// Identification and contraction

UnaryResult identify_vertices(const Graph& g, Vertex v, Vertex w) {
  require_vertex(g, v, "identify_vertices");
  require_vertex(g, w, "identify_vertices");
  if (v == w) throw ParameterError("identify_vertices: the two vertices coincide");
  Vertex z = g.fresh_id();
  std::vector<Vertex> vs;
  for (Vertex x : g.vertices()) {
    if (x != v && x != w) vs.push_back(x);
  }
  vs.push_back(z);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    Vertex a = (e.u == v || e.u == w) ? z : e.u;
    Vertex b = (e.v == v || e.v == w) ? z : e.v;
    if (a != b) es.emplace_back(a, b);
  }
  UnaryResult r = identity_result(Graph(std::move(vs), es), g);
  r.new_ids = {z};
  return r;
}

CarriedTree identify_vertices(const TreeDecomposition& td, Vertex v, Vertex w) {
  int width0 = usable_width(td, "identify_vertices");
  UnaryResult r = identify_vertices(td.host(), v, w);
  Vertex z = r.new_ids.front();
  std::vector<Bag> bags = renamed_bags(td.bags(), v, w, z);
  std::vector<char> span = steiner_nodes(td, bags, z);
  for (std::size_t x = 0; x < bags.size(); ++x) {
    if (span[x]) insert_sorted(bags[x], z);
  }
  return {same_tree(td, r.graph, std::move(bags)), width0 + 1};
}

CarriedPath identify_vertices(const PathDecomposition& pd, Vertex v, Vertex w) {
  int width0 = usable_width(pd, "identify_vertices");
  UnaryResult r = identify_vertices(pd.host(), v, w);
  Vertex z = r.new_ids.front();
  std::vector<Bag> bags = renamed_bags(pd.bags(), v, w, z);
  int first = -1, last = -1;
  for (std::size_t i = 0; i < bags.size(); ++i) {
    if (bag_has(bags[i], z)) {
      if (first < 0) first = static_cast<int>(i);
      last = static_cast<int>(i);
    }
  }
  for (int i = first; i <= last; ++i) insert_sorted(bags[i], z);
  return {PathDecomposition(r.graph, std::move(bags)), width0 + 1};
}

UnaryResult contract_edge(const Graph& g, Vertex v, Vertex w) {
  if (!g.adjacent(v, w)) {
    throw ParameterError("contract_edge: {" + std::to_string(v) + "," + std::to_string(w) +
                         "} is not an edge");
  }
  return identify_vertices(g, v, w);
}

CarriedTree contract_edge(const TreeDecomposition& td, Vertex v, Vertex w) {
  int width0 = usable_width(td, "contract_edge");
  UnaryResult r = contract_edge(td.host(), v, w);
  return {same_tree(td, r.graph, renamed_bags(td.bags(), v, w, r.new_ids.front())), width0};
}

CarriedPath contract_edge(const PathDecomposition& pd, Vertex v, Vertex w) {
  int width0 = usable_width(pd, "contract_edge");
  UnaryResult r = contract_edge(pd.host(), v, w);
  return {PathDecomposition(r.graph, renamed_bags(pd.bags(), v, w, r.new_ids.front())), width0};
}

// ---------------------------------------------------------------------------
// Subdivision and incidence graphs

UnaryResult subdivide_edge(const Graph& g, Vertex v, Vertex w, std::optional<Vertex> u) {
  if (!g.adjacent(v, w)) {
    throw ParameterError("subdivide_edge: {" + std::to_string(v) + "," + std::to_string(w) +
                         "} is not an edge");
  }
  Vertex id = u.value_or(g.fresh_id());
  if (id < 0 || g.has_vertex(id)) {
    throw ParameterError("subdivide_edge: id " + std::to_string(id) + " is already a vertex");
  }
  std::vector<Vertex> vs = g.vertices();
  vs.push_back(id);
  std::vector<Edge> es = edges_without(g, Edge(v, w));
  es.emplace_back(v, id);
  es.emplace_back(w, id);
  UnaryResult r = identity_result(Graph(std::move(vs), es), g);
  r.new_ids = {id};
  return r;
}

CarriedTree subdivide_edge(const TreeDecomposition& td, Vertex v, Vertex w, std::optional<Vertex> u) {
  int width0 = usable_width(td, "subdivide_edge");
  UnaryResult r = subdivide_edge(td.host(), v, w, u);
  if (is_forest(td.host())) return {detail::forest_decomposition(r.graph), 1};
  // The host has a cycle, so the width is at least 2 and {u, v, w} fits.
  TreeShape s = TreeShape::of(td);
  int at = detail::lowest_bag(td.bags(), {v, w});
  s.link(s.add({v, w, r.new_ids.front()}), at);
  return {s.build(r.graph), width0};
}

CarriedPath subdivide_edge(const PathDecomposition& pd, Vertex v, Vertex w, std::optional<Vertex> u) {
  int width0 = usable_width(pd, "subdivide_edge");
  UnaryResult r = subdivide_edge(pd.host(), v, w, u);
  std::vector<Bag> bags = pd.bags();
  insert_sorted(bags[detail::lowest_bag(bags, {v, w})], r.new_ids.front());
  return {PathDecomposition(r.graph, std::move(bags)), width0 + 1};
}

UnaryResult incidence_graph(const Graph& g) {
  Vertex base = g.fresh_id();
  std::vector<Vertex> vs = g.vertices();
  std::vector<Edge> es;
  UnaryResult r;
  Vertex next = base;
  for (const Edge& e : g.edges()) {
    vs.push_back(next);
    es.emplace_back(e.u, next);
    es.emplace_back(e.v, next);
    r.new_ids.push_back(next);
    ++next;
  }
  UnaryResult out = identity_result(Graph(std::move(vs), es), g);
  out.new_ids = std::move(r.new_ids);
  return out;
}

CarriedTree incidence_graph(const TreeDecomposition& td) {
  int width0 = usable_width(td, "incidence_graph");
  UnaryResult r = incidence_graph(td.host());
  if (is_forest(td.host())) return {detail::forest_decomposition(r.graph), 1};
  TreeShape s = TreeShape::of(td);
  auto edges = td.host().edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int at = detail::lowest_bag(td.bags(), {edges[i].u, edges[i].v});
    s.link(s.add({edges[i].u, edges[i].v, r.new_ids[i]}), at);
  }
  return {s.build(r.graph), std::max(width0, 1)};
}

CarriedPath incidence_graph(const PathDecomposition& pd) {
  int width0 = usable_width(pd, "incidence_graph");
  UnaryResult r = incidence_graph(pd.host());
  auto edges = pd.host().edges();
  std::vector<std::vector<Vertex>> after(pd.size());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    after[detail::lowest_bag(pd.bags(), {edges[i].u, edges[i].v})].push_back(r.new_ids[i]);
  }
  std::vector<Bag> bags;
  for (std::size_t i = 0; i < pd.size(); ++i) {
    bags.push_back(pd.bag(static_cast<int>(i)));
    for (Vertex x : after[i]) {
      Bag b = pd.bag(static_cast<int>(i));
      insert_sorted(b, x);
      bags.push_back(std::move(b));
    }
  }
  return {PathDecomposition(r.graph, std::move(bags)), width0 + 1};
}

// ---------------------------------------------------------------------------
// Minors

namespace {

template <class D, class DeleteV, class DeleteE, class Contract>
Carried<D> replay_script(const D& d, const MinorScript& script, DeleteV del_v, DeleteE del_e,
                         Contract contract) {
  int w = usable_width(d, "apply_minor_script");
  D cur = d;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const MinorStep& st = script.steps[i];
    try {
      if (cur.host().empty()) throw ParameterError("graph is already empty");
      switch (st.kind) {
        case MinorStep::Kind::delete_vertex: cur = del_v(cur, st.u).decomposition; break;
        case MinorStep::Kind::delete_edge: cur = del_e(cur, st.u, st.v).decomposition; break;
        case MinorStep::Kind::contract_edge: cur = contract(cur, st.u, st.v).decomposition; break;
      }
    } catch (const ParameterError& e) {
      throw ScriptError(i + 1, e.what());
    }
  }
  return {std::move(cur), w};
}

}  // namespace

UnaryResult apply_minor_script(const Graph& g, const MinorScript& script) {
  Graph cur = g;
  std::map<Vertex, Vertex> where;  // original -> current
  for (Vertex v : g.vertices()) where[v] = v;
  std::vector<Vertex> created;
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    const MinorStep& st = script.steps[i];
    try {
      switch (st.kind) {
        case MinorStep::Kind::delete_vertex:
          cur = delete_vertex(cur, st.u).graph;
          break;
        case MinorStep::Kind::delete_edge:
          cur = delete_edge(cur, st.u, st.v).graph;
          break;
        case MinorStep::Kind::contract_edge: {
          UnaryResult r = contract_edge(cur, st.u, st.v);
          for (auto& [orig, now] : where) {
            if (now == st.u || now == st.v) now = r.new_ids.front();
          }
          created.push_back(r.new_ids.front());
          cur = std::move(r.graph);
          break;
        }
      }
    } catch (const ParameterError& e) {
      throw ScriptError(i + 1, e.what());
    }
  }
  UnaryResult out{cur, {}, {}, {}};
  for (auto [orig, now] : where) {
    if (orig == now && cur.has_vertex(now)) out.vertex_map[orig] = now;
  }
  for (Vertex c : created) {
    if (cur.has_vertex(c)) out.new_ids.push_back(c);
  }
  return out;
}

CarriedTree apply_minor_script(const TreeDecomposition& td, const MinorScript& script) {
  return replay_script(
      td, script, [](const TreeDecomposition& d, Vertex v) { return delete_vertex(d, v); },
      [](const TreeDecomposition& d, Vertex u, Vertex v) { return delete_edge(d, u, v); },
      [](const TreeDecomposition& d, Vertex u, Vertex v) { return contract_edge(d, u, v); });
}

CarriedPath apply_minor_script(const PathDecomposition& pd, const MinorScript& script) {
  return replay_script(
      pd, script, [](const PathDecomposition& d, Vertex v) { return delete_vertex(d, v); },
      [](const PathDecomposition& d, Vertex u, Vertex v) { return delete_edge(d, u, v); },
      [](const PathDecomposition& d, Vertex u, Vertex v) { return contract_edge(d, u, v); });
}

// ---------------------------------------------------------------------------
// Powers

namespace {

// Vertices at distance 1..d from each vertex, indexed by position.
std::vector<std::vector<Vertex>> balls(const Graph& g, int d) {
  std::vector<std::vector<Vertex>> out(g.order());
  for (std::size_t s = 0; s < g.order(); ++s) {
    std::vector<int> dist(g.order(), -1);
    std::vector<Vertex> queue{g.vertices()[s]};
    dist[s] = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      std::size_t x = g.index_of(queue[q]);
      if (dist[x] == d) continue;
      for (Vertex y : g.neighbors(queue[q])) {
        std::size_t iy = g.index_of(y);
        if (dist[iy] >= 0) continue;
        dist[iy] = dist[x] + 1;
        queue.push_back(y);
        out[s].push_back(y);
      }
    }
    std::sort(out[s].begin(), out[s].end());
  }
  return out;
}

template <class D>
std::vector<Bag> power_bags(const D& d, const std::vector<std::vector<Vertex>>& ball) {
  std::vector<Bag> bags;
  for (const Bag& b : d.bags()) {
    Bag grown = b;
    for (Vertex v : b) {
      const auto& nb = ball[d.host().index_of(v)];
      grown.insert(grown.end(), nb.begin(), nb.end());
    }
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    bags.push_back(std::move(grown));
  }
  return bags;
}

int power_claim(const Graph& g, int w, int d) {
  long long factor = saturating_add(1, power_degree_bound(g, d));
  return clamp_int(saturating_mul(w + 1, factor) - 1);
}

}  // namespace

UnaryResult graph_power(const Graph& g, int d) {
  if (d < 1) throw ParameterError("graph_power: exponent must be at least 1");
  auto ball = balls(g, d);
  std::vector<Edge> es;
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (Vertex y : ball[i]) {
      if (g.vertices()[i] < y) es.emplace_back(g.vertices()[i], y);
    }
  }
  return identity_result(Graph(g.vertices(), es), g);
}

long long power_degree_bound(const Graph& g, int d) {
  if (d < 1) throw ParameterError("power_degree_bound: exponent must be at least 1");
  long long delta = max_degree(g);
  long long sum = 0, term = 1;
  for (int i = 0; i < d; ++i) {
    sum = saturating_add(sum, term);
    term = saturating_mul(term, delta - 1);
  }
  return saturating_mul(delta, sum);
}

CarriedTree graph_power(const TreeDecomposition& td, int d) {
  int w = usable_width(td, "graph_power");
  Graph h = graph_power(td.host(), d).graph;
  return {same_tree(td, h, power_bags(td, balls(td.host(), d))), power_claim(td.host(), w, d)};
}

CarriedPath graph_power(const PathDecomposition& pd, int d) {
  int w = usable_width(pd, "graph_power");
  Graph h = graph_power(pd.host(), d).graph;
  return {PathDecomposition(h, power_bags(pd, balls(pd.host(), d))), power_claim(pd.host(), w, d)};
}

// ---------------------------------------------------------------------------
// Line graphs

UnaryResult line_graph(const Graph& g) {
  auto edges = g.edges();
  std::vector<Edge> es;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
        es.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  UnaryResult r{Graph::with_order(static_cast<int>(edges.size()), es), {}, {}, edges};
  for (std::size_t i = 0; i < edges.size(); ++i) r.new_ids.push_back(static_cast<Vertex>(i));
  return r;
}

namespace {

template <class D>
std::vector<Bag> incident_edge_bags(const D& d) {
  auto edges = d.host().edges();
  std::vector<Bag> bags;
  for (const Bag& b : d.bags()) {
    Bag out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (bag_has(b, edges[i].u) || bag_has(b, edges[i].v)) out.push_back(static_cast<Vertex>(i));
    }
    bags.push_back(std::move(out));
  }
  return bags;
}

}  // namespace

CarriedTree line_graph(const TreeDecomposition& td) {
  int w = usable_width(td, "line_graph");
  Graph h = line_graph(td.host()).graph;
  return {same_tree(td, h, incident_edge_bags(td)), (w + 1) * max_degree(td.host()) - 1};
}

CarriedPath line_graph(const PathDecomposition& pd) {
  int w = usable_width(pd, "line_graph");
  Graph h = line_graph(pd.host()).graph;
  return {PathDecomposition(h, incident_edge_bags(pd)), (w + 1) * max_degree(pd.host()) - 1};
}

// ---------------------------------------------------------------------------
// Complements and switching

UnaryResult edge_complement(const Graph& g) {
  std::vector<Edge> es;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) es.emplace_back(vs[i], vs[j]);
    }
  }
  return identity_result(Graph(vs, es), g);
}

namespace {

// Toggles every pair {a, b} with a in `left`, b in `right`, a != b.
Graph toggled(const Graph& g, const std::vector<Vertex>& left, const std::vector<Vertex>& right) {
  std::set<Edge> es;
  for (const Edge& e : g.edges()) es.insert(e);
  std::set<Edge> flip;
  for (Vertex a : left) {
    for (Vertex b : right) {
      if (a != b) flip.insert(Edge(a, b));
    }
  }
  for (const Edge& e : flip) {
    if (!es.erase(e)) es.insert(e);
  }
  return Graph(g.vertices(), {es.begin(), es.end()});
}

}  // namespace

UnaryResult local_complement(const Graph& g, Vertex v) {
  require_vertex(g, v, "local_complement");
  const auto& nb = g.neighbors(v);
  return identity_result(toggled(g, nb, nb), g);
}

UnaryResult seidel_complement(const Graph& g, Vertex v) {
  require_vertex(g, v, "seidel_complement");
  const auto& nb = g.neighbors(v);
  std::vector<Vertex> rest;
  for (Vertex x : g.vertices()) {
    if (x != v && !std::binary_search(nb.begin(), nb.end(), x)) rest.push_back(x);
  }
  return identity_result(toggled(g, nb, rest), g);
}

UnaryResult seidel_switch(const Graph& g, Vertex v) {
  require_vertex(g, v, "seidel_switch");
  return identity_result(toggled(g, {v}, g.vertices()), g);
}

CarriedTree seidel_switch(const TreeDecomposition& td, Vertex v) {
  int w = usable_width(td, "seidel_switch");
  Graph h = seidel_switch(td.host(), v).graph;
  return {same_tree(td, h, with_vertex_everywhere(td, v)), w + 1};
}

CarriedPath seidel_switch(const PathDecomposition& pd, Vertex v) {
  int w = usable_width(pd, "seidel_switch");
  Graph h = seidel_switch(pd.host(), v).graph;
  return {PathDecomposition(h, with_vertex_everywhere(pd, v)), w + 1};
}

UnaryResult switch_sequence(const Graph& g, const std::vector<Vertex>& seq) {
  Graph cur = g;
  for (Vertex v : seq) cur = seidel_switch(cur, v).graph;
  return identity_result(cur, g);
}

CarriedTree switch_sequence(const TreeDecomposition& td, const std::vector<Vertex>& seq) {
  int w = usable_width(td, "switch_sequence");
  TreeDecomposition cur = td;
  for (Vertex v : seq) cur = seidel_switch(cur, v).decomposition;
  return {std::move(cur), w + static_cast<int>(seq.size())};
}

CarriedPath switch_sequence(const PathDecomposition& pd, const std::vector<Vertex>& seq) {
  int w = usable_width(pd, "switch_sequence");
  PathDecomposition cur = pd;
  for (Vertex v : seq) cur = seidel_switch(cur, v).decomposition;
  return {std::move(cur), w + static_cast<int>(seq.size())};
}

}  // namespace widthlab
