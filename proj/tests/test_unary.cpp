#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "widthlab/solvers.hpp"
#include "widthlab/unary.hpp"

using namespace widthlab;

namespace {

Graph random_graph(std::mt19937& rng, int n, int percent) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (static_cast<int>(rng() % 100) < percent) es.emplace_back(u, v);
    }
  }
  return Graph::with_order(n, es);
}

TreeDecomposition td_of(const Graph& g) { return exact_treewidth(g).certificate; }
PathDecomposition pd_of(const Graph& g) { return exact_pathwidth(g).certificate; }

template <class D>
void check_carried(const Carried<D>& c, const Graph& expected) {
  REQUIRE(c.decomposition.host() == expected);
  REQUIRE(c.decomposition.valid());
  Width w = width(c.decomposition);
  CHECK(within(w, c.claimed_bound));
}

int tw(const Graph& g) { return oracle::treewidth(g); }
int pw(const Graph& g) { return oracle::pathwidth(g); }

Graph fig1() { return Graph::with_order(7, {{0, 1}, {1, 2}, {2, 5}, {5, 6}, {2, 3}, {3, 4}}); }

}  // namespace

TEST_CASE("vertex deletion") {
  Graph k3 = generate(GraphKind::complete, {3});
  auto r = delete_vertex(k3, 1);
  CHECK(r.graph.order() == 2);
  CHECK(r.graph.size() == 1);
  CHECK(r.vertex_map.size() == 2);
  check_carried(delete_vertex(td_of(k3), 1), r.graph);

  Graph p3 = generate(GraphKind::path, {3});
  auto c = delete_vertex(td_of(p3), 1);
  check_carried(c, delete_vertex(p3, 1).graph);
  CHECK(width(c.decomposition) == 0);

  // deleting g from the Fig. 1 graph gives the caterpillar
  Graph cat = delete_vertex(fig1(), 6).graph;
  CHECK(cat == generate(GraphKind::caterpillar));
  auto cp = delete_vertex(pd_of(fig1()), 6);
  check_carried(cp, cat);
  CHECK(*width(cp.decomposition) <= 2);
  CHECK(pw(cat) == 1);

  CHECK_THROWS_AS(delete_vertex(k3, 7), ParameterError);
}

TEST_CASE("vertex addition") {
  Graph c4 = generate(GraphKind::cycle, {4});
  auto wheel = add_vertex(c4, {0, 1, 2, 3});
  CHECK(wheel.new_ids == std::vector<Vertex>{4});
  CHECK(tw(wheel.graph) == 3);
  check_carried(add_vertex(td_of(c4), {0, 1, 2, 3}), wheel.graph);
  check_carried(add_vertex(pd_of(c4), {0, 1, 2, 3}), wheel.graph);

  Graph cat = generate(GraphKind::caterpillar);
  auto pend = add_vertex(td_of(cat), {5});
  CHECK(pend.decomposition.host() == fig1());
  CHECK(pend.claimed_bound == 1);
  check_carried(pend, fig1());
  CHECK(pw(cat) == 1);
  CHECK(pw(fig1()) == 2);
  auto pend_pd = add_vertex(pd_of(cat), {5});
  check_carried(pend_pd, fig1());
  CHECK(pend_pd.claimed_bound == 2);

  CHECK_THROWS_AS(add_vertex(c4, {0}, 2), ParameterError);
  CHECK_THROWS_AS(add_vertex(c4, {9}), ParameterError);
}

TEST_CASE("edge deletion and addition") {
  Graph k3 = generate(GraphKind::complete, {3});
  auto p3 = delete_edge(k3, 1, 2).graph;
  CHECK(tw(p3) == 1);
  auto c = delete_edge(td_of(k3), 1, 2);
  CHECK(c.claimed_bound == 2);
  check_carried(c, p3);
  CHECK_THROWS_AS(delete_edge(p3, 1, 2), ParameterError);

  Graph c4 = generate(GraphKind::cycle, {4});
  auto chord = add_edge(td_of(c4), 0, 2);
  CHECK(chord.claimed_bound == 3);
  check_carried(chord, add_edge(c4, 0, 2).graph);
  CHECK(tw(chord.decomposition.host()) == 2);

  Graph p4 = generate(GraphKind::path, {4});
  auto closed = add_edge(pd_of(p4), 0, 3);
  check_carried(closed, c4);
  CHECK(pw(c4) == 2);
  CHECK_THROWS_AS(add_edge(p4, 0, 1), ParameterError);
  CHECK_THROWS_AS(add_edge(p4, 2, 2), ParameterError);
}

TEST_CASE("identification and contraction") {
  Graph p4 = generate(GraphKind::path, {4});
  auto c3 = identify_vertices(p4, 0, 3);
  CHECK(c3.new_ids == std::vector<Vertex>{4});
  CHECK(c3.vertex_map.count(0) == 0);
  CHECK(c3.vertex_map.count(3) == 0);
  CHECK(tw(c3.graph) == 2);
  auto t = identify_vertices(td_of(p4), 0, 3);
  check_carried(t, c3.graph);
  CHECK(*width(t.decomposition) == t.claimed_bound);

  Graph i2 = generate(GraphKind::isolated, {2});
  auto one = identify_vertices(td_of(i2), 0, 1);
  check_carried(one, Graph({2}, {}));
  CHECK(width(one.decomposition) == 0);

  Graph p5 = generate(GraphKind::path, {5});
  auto c4 = identify_vertices(pd_of(p5), 0, 4);
  check_carried(c4, identify_vertices(p5, 0, 4).graph);
  CHECK(pw(c4.decomposition.host()) == 2);
  CHECK_THROWS_AS(identify_vertices(p5, 1, 1), ParameterError);

  for (int n = 3; n <= 6; ++n) {
    Graph kn = generate(GraphKind::complete, {n});
    auto r = contract_edge(td_of(kn), 0, 1);
    check_carried(r, contract_edge(kn, 0, 1).graph);
    CHECK(width(r.decomposition) == n - 2);
  }
  Graph cyc = generate(GraphKind::cycle, {4});
  auto cc = contract_edge(pd_of(cyc), 0, 1);
  CHECK(is_isomorphic(cc.decomposition.host(), generate(GraphKind::cycle, {3})));
  check_carried(cc, cc.decomposition.host());
  CHECK_THROWS_AS(contract_edge(cyc, 0, 2), ParameterError);
}

TEST_CASE("subdivision") {
  // {c, f} of the caterpillar
  Graph cat = generate(GraphKind::caterpillar);
  auto sub = subdivide_edge(cat, 2, 5);
  CHECK(is_isomorphic(sub.graph, generate(GraphKind::incidence_of_star)));
  CHECK(pw(sub.graph) == 2);
  auto sp = subdivide_edge(pd_of(cat), 2, 5);
  check_carried(sp, sub.graph);
  CHECK(sp.claimed_bound == 2);
  auto st = subdivide_edge(td_of(cat), 2, 5);
  check_carried(st, sub.graph);
  CHECK(st.claimed_bound == 1);

  Graph k4 = generate(GraphKind::complete, {4});
  auto sk = subdivide_edge(td_of(k4), 0, 1);
  check_carried(sk, subdivide_edge(k4, 0, 1).graph);
  CHECK(sk.claimed_bound == 3);
  CHECK(tw(sk.decomposition.host()) == 3);

  Graph p2 = generate(GraphKind::path, {2});
  auto sp2 = subdivide_edge(td_of(p2), 0, 1, 7);
  CHECK(sp2.decomposition.host() == Graph({0, 1, 7}, {{0, 7}, {1, 7}}));
  check_carried(sp2, sp2.decomposition.host());
  CHECK_THROWS_AS(subdivide_edge(p2, 0, 1, 1), ParameterError);
  CHECK_THROWS_AS(subdivide_edge(k4, 0, 0), ParameterError);
}

TEST_CASE("incidence graph") {
  Graph star = generate(GraphKind::star, {3});
  auto ig = incidence_graph(star);
  CHECK(ig.new_ids == std::vector<Vertex>{4, 5, 6});
  CHECK(is_isomorphic(ig.graph, generate(GraphKind::incidence_of_star)));
  CHECK(tw(ig.graph) == 1);
  CHECK(pw(ig.graph) == 2);
  check_carried(incidence_graph(td_of(star)), ig.graph);
  check_carried(incidence_graph(pd_of(star)), ig.graph);

  Graph k3 = generate(GraphKind::complete, {3});
  auto c6 = incidence_graph(td_of(k3));
  CHECK(is_isomorphic(c6.decomposition.host(), generate(GraphKind::cycle, {6})));
  check_carried(c6, c6.decomposition.host());
  CHECK(c6.claimed_bound == 2);

  Graph p2 = generate(GraphKind::path, {2});
  auto p3 = incidence_graph(pd_of(p2));
  check_carried(p3, incidence_graph(p2).graph);
  CHECK(pw(p3.decomposition.host()) == 1);
}

TEST_CASE("minor scripts") {
  Graph c5 = generate(GraphKind::cycle, {5});
  MinorScript one{{{MinorStep::Kind::contract_edge, 0, 1}}};
  auto r = apply_minor_script(c5, one);
  CHECK(is_isomorphic(r.graph, generate(GraphKind::cycle, {4})));
  CHECK(r.new_ids == std::vector<Vertex>{5});
  check_carried(apply_minor_script(td_of(c5), one), r.graph);
  check_carried(apply_minor_script(pd_of(c5), one), r.graph);

  CHECK(apply_minor_script(c5, MinorScript{}).graph == c5);

  Graph k4 = generate(GraphKind::complete, {4});
  MinorScript two{{{MinorStep::Kind::contract_edge, 0, 1}, {MinorStep::Kind::delete_edge, 2, 4}}};
  auto m = apply_minor_script(td_of(k4), two);
  check_carried(m, apply_minor_script(k4, two).graph);
  CHECK(tw(m.decomposition.host()) <= 3);

  MinorScript bad{{{MinorStep::Kind::delete_vertex, 3, 0}, {MinorStep::Kind::delete_edge, 0, 3}}};
  try {
    apply_minor_script(k4, bad);
    FAIL("expected a script error");
  } catch (const ScriptError& e) {
    CHECK(e.step() == 2);
  }
  CHECK_THROWS_AS(apply_minor_script(td_of(k4), bad), ScriptError);
}

TEST_CASE("graph powers") {
  Graph p5 = generate(GraphKind::path, {5});
  auto sq = graph_power(p5, 2).graph;
  CHECK(sq.degree(2) == 4);
  CHECK(power_degree_bound(p5, 2) == 4);
  auto d = oracle::distances(p5);
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) CHECK(sq.adjacent(u, v) == (d[u][v] <= 2));
  }
  CHECK(graph_power(p5, 1).graph == p5);
  check_carried(graph_power(td_of(p5), 1), p5);
  check_carried(graph_power(pd_of(p5), 3), graph_power(p5, 3).graph);

  // root with three complete binary subtrees of depth 2
  std::vector<Edge> es;
  int next = 1;
  for (int b = 0; b < 3; ++b) {
    int top = next++;
    es.emplace_back(0, top);
    for (int c = 0; c < 2; ++c) {
      int mid = next++;
      es.emplace_back(top, mid);
      for (int l = 0; l < 2; ++l) es.emplace_back(mid, next++);
    }
  }
  Graph t = Graph::with_order(next, es);
  CHECK(max_degree(t) == 3);
  CHECK(graph_power(t, 2).graph.degree(0) == 9);
  CHECK(power_degree_bound(t, 2) == 9);
  CHECK_THROWS_AS(graph_power(p5, 0), ParameterError);
  CHECK_THROWS_AS(graph_power(td_of(p5), 0), ParameterError);
}

TEST_CASE("line graphs") {
  Graph k3 = generate(GraphKind::complete, {3});
  auto l3 = line_graph(k3);
  CHECK(is_isomorphic(l3.graph, k3));
  CHECK(l3.origin_edges == k3.edges());
  check_carried(line_graph(td_of(k3)), l3.graph);

  Graph k4 = generate(GraphKind::complete, {4});
  auto l4 = line_graph(k4).graph;
  CHECK(exact_treewidth(l4).value == 4);
  CHECK(exact_pathwidth(l4).value == 4);
  CHECK(tw(l4) == 4);
  check_carried(line_graph(td_of(k4)), l4);
  check_carried(line_graph(pd_of(k4)), l4);

  Graph star = generate(GraphKind::star, {4});
  auto ls = line_graph(star).graph;
  CHECK(is_isomorphic(ls, generate(GraphKind::complete, {4})));
}

TEST_CASE("complements") {
  for (int l = 2; l <= 5; ++l) {
    Graph star = generate(GraphKind::star, {l});
    Graph co = edge_complement(star).graph;
    CHECK(co.degree(0) == 0);
    CHECK(exact_treewidth(co).value == l - 1);
    CHECK(edge_complement(co).graph == star);
    CHECK(is_isomorphic(local_complement(star, 0).graph, generate(GraphKind::complete, {l + 1})));

    std::vector<Vertex> vs;
    for (int i = 0; i <= 2 * l; ++i) vs.push_back(i);
    std::vector<Edge> spokes;
    for (int i = 1; i <= l; ++i) spokes.emplace_back(0, i);
    Graph sc = seidel_complement(Graph(vs, spokes), 0).graph;
    for (int a = 1; a <= l; ++a) {
      for (int b = l + 1; b <= 2 * l; ++b) CHECK(sc.adjacent(a, b));
    }
    CHECK(*exact_treewidth(sc).value >= l - 1);
  }
  CHECK_THROWS_AS(local_complement(generate(GraphKind::path, {3}), 5), ParameterError);
}

TEST_CASE("Seidel switching") {
  Graph p5 = generate(GraphKind::path, {5});
  auto s = seidel_switch(td_of(p5), 0);
  Graph sp = seidel_switch(p5, 0).graph;
  check_carried(s, sp);
  CHECK(s.claimed_bound == 2);
  CHECK(tw(sp) == 2);
  CHECK(find_minor(generate(GraphKind::complete, {3}), sp).has_value());

  std::mt19937 rng(5);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 6), 50);
    Vertex v = static_cast<Vertex>(rng() % g.order());
    CHECK(seidel_switch(seidel_switch(g, v).graph, v).graph == g);
  }
  CHECK(switch_sequence(p5, {}).graph == p5);
  auto seq = switch_sequence(pd_of(p5), {0, 3, 0});
  check_carried(seq, switch_sequence(p5, {0, 3, 0}).graph);
  CHECK(seq.claimed_bound == 1 + 3);
}

TEST_CASE("transformers require a usable decomposition") {
  Graph p3 = generate(GraphKind::path, {3});
  TreeDecomposition bad(p3, Graph::with_order(1, {}), {{0, 1}});
  CHECK_THROWS_AS(delete_vertex(bad, 0), PreconditionError);
  CHECK_THROWS_AS(add_edge(bad, 0, 2), PreconditionError);
  TreeDecomposition none(Graph(), Graph::with_order(1, {}), {{}});
  CHECK_THROWS_AS(line_graph(none), PreconditionError);
}

TEST_CASE("random sandwich checks") {
  std::mt19937 rng(11);
  for (int it = 0; it < 60; ++it) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = random_graph(rng, n, 20 + 30 * static_cast<int>(rng() % 3));
    TreeDecomposition t = td_of(g);
    PathDecomposition p = pd_of(g);
    int t0 = tw(g), p0 = pw(g);
    Vertex v = static_cast<Vertex>(rng() % n);
    Vertex w = static_cast<Vertex>((v + 1 + rng() % (n - 1)) % n);

    auto dv = delete_vertex(t, v);
    check_carried(dv, delete_vertex(g, v).graph);
    check_carried(delete_vertex(p, v), delete_vertex(g, v).graph);
    int t1 = tw(dv.decomposition.host());
    CHECK(t0 - 1 <= t1);
    CHECK(t1 <= t0);

    auto iv = identify_vertices(t, v, w);
    check_carried(iv, identify_vertices(g, v, w).graph);
    check_carried(identify_vertices(p, v, w), identify_vertices(g, v, w).graph);
    int ti = tw(iv.decomposition.host());
    CHECK(t0 - 1 <= ti);
    CHECK(ti <= t0 + 1);

    auto sw = seidel_switch(p, v);
    check_carried(sw, seidel_switch(g, v).graph);
    check_carried(seidel_switch(t, v), seidel_switch(g, v).graph);
    int ps = pw(sw.decomposition.host());
    CHECK(p0 - 1 <= ps);
    CHECK(ps <= p0 + 1);

    if (g.adjacent(v, w)) {
      auto sd = subdivide_edge(t, v, w);
      check_carried(sd, subdivide_edge(g, v, w).graph);
      CHECK(tw(sd.decomposition.host()) == t0);
      auto sdp = subdivide_edge(p, v, w);
      check_carried(sdp, subdivide_edge(g, v, w).graph);
      int pz = pw(sdp.decomposition.host());
      CHECK((pz == p0 || pz == p0 + 1));
      check_carried(contract_edge(t, v, w), contract_edge(g, v, w).graph);
      check_carried(delete_edge(p, v, w), delete_edge(g, v, w).graph);
    } else {
      auto ae = add_edge(t, v, w);
      check_carried(ae, add_edge(g, v, w).graph);
      int te = tw(ae.decomposition.host());
      CHECK(t0 <= te);
      CHECK(te <= t0 + 1);
    }
    if (g.size() > 0 && g.size() <= 9) {
      check_carried(line_graph(t), line_graph(g).graph);
      check_carried(line_graph(p), line_graph(g).graph);
    }
    if (g.order() + g.size() <= 9) {
      auto inc = incidence_graph(t);
      check_carried(inc, incidence_graph(g).graph);
      CHECK(tw(inc.decomposition.host()) == std::max(t0, std::min(1, static_cast<int>(g.size()))));
      check_carried(incidence_graph(p), incidence_graph(g).graph);
    }
    int d = 1 + static_cast<int>(rng() % 3);
    check_carried(graph_power(t, d), graph_power(g, d).graph);
    check_carried(graph_power(p, d), graph_power(g, d).graph);
    std::vector<Vertex> nbrs;
    for (Vertex x = 0; x < n; ++x) {
      if (rng() % 2) nbrs.push_back(x);
    }
    check_carried(add_vertex(t, nbrs), add_vertex(g, nbrs).graph);
    check_carried(add_vertex(p, nbrs), add_vertex(g, nbrs).graph);
  }
}
