#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "widthlab/binary.hpp"
#include "widthlab/solvers.hpp"

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
  CHECK(within(width(c.decomposition), c.claimed_bound));
}

int tw(const Graph& g) { return oracle::treewidth(g); }
int pw(const Graph& g) { return oracle::pathwidth(g); }

Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (Vertex a : g.vertices()) {
    for (Vertex b : g.vertices()) {
      if (a < b && !g.adjacent(a, b)) es.emplace_back(a, b);
    }
  }
  return Graph(g.vertices(), es);
}

// Corona straight from the definition.
Graph corona_by_definition(int n1, const Graph& g1, int n2, const Graph& g2) {
  std::vector<Edge> es = g1.edges();
  for (int i = 0; i < n1; ++i) {
    int base = n1 + i * n2;
    for (const Edge& e : g2.edges()) es.emplace_back(base + e.u, base + e.v);
    for (int j = 0; j < n2; ++j) es.emplace_back(i, base + j);
  }
  return Graph::with_order(n1 + n1 * n2, es);
}

Graph edge_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.push_back(e);
  return Graph(a.vertices(), es);
}

}  // namespace

TEST_CASE("disjoint union and join") {
  Graph k3 = generate(GraphKind::complete, {3});
  Graph p2 = generate(GraphKind::path, {2});
  auto du = disjoint_union(td_of(k3), td_of(p2));
  check_carried(du, disjoint_union(k3, p2).graph);
  CHECK(du.claimed_bound == 2);
  CHECK(tw(du.decomposition.host()) == 2);
  CHECK(disjoint_union(k3, Graph()).graph == k3);

  Graph p5 = generate(GraphKind::path, {5});
  auto pp = disjoint_union(pd_of(p5), pd_of(p5));
  check_carried(pp, disjoint_union(p5, p5).graph);
  CHECK(width(pp.decomposition) == 1);

  Graph c4 = generate(GraphKind::cycle, {4});
  Graph k1 = generate(GraphKind::complete, {1});
  auto wheel = join(td_of(k1), td_of(c4));
  check_carried(wheel, join(k1, c4).graph);
  CHECK(wheel.claimed_bound == 3);
  CHECK(tw(wheel.decomposition.host()) == 3);

  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      Graph ka = generate(GraphKind::complete, {a}), kb = generate(GraphKind::complete, {b});
      CHECK(join(ka, kb).graph == generate(GraphKind::complete, {a + b}));
      CHECK(join(pd_of(ka), pd_of(kb)).claimed_bound == a + b - 1);
    }
  }
  Graph k4 = join(p2, p2).graph;
  CHECK(k4 == generate(GraphKind::complete, {4}));
  CHECK(exact_treewidth(k4).value == 3);
}

TEST_CASE("union over the same vertices") {
  // rows and columns of a 3x3 grid
  std::vector<Edge> rows, cols;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (c + 1 < 3) rows.emplace_back(r * 3 + c, r * 3 + c + 1);
      if (r + 1 < 3) cols.emplace_back(r * 3 + c, (r + 1) * 3 + c);
    }
  }
  Graph g1 = Graph::with_order(9, rows), g2 = Graph::with_order(9, cols);
  CHECK(exact_treewidth(g1).value == 1);
  CHECK(exact_treewidth(g2).value == 1);
  Graph grid = union_same_vertices(g1, g2);
  CHECK(grid == generate(GraphKind::grid, {3, 3}));
  CHECK(exact_treewidth(grid).value == 3);
  CHECK(union_same_vertices(grid, grid) == grid);
  Graph p3 = generate(GraphKind::path, {3});
  CHECK(union_same_vertices(p3, generate(GraphKind::isolated, {3})) == p3);
  CHECK_THROWS_AS(union_same_vertices(p3, generate(GraphKind::path, {4})), ParameterError);
}

TEST_CASE("substitution") {
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 3; ++m) {
      Graph kn = generate(GraphKind::complete, {n}), km = generate(GraphKind::complete, {m});
      auto r = substitute(kn, 0, km);
      CHECK(is_isomorphic(r.graph, generate(GraphKind::complete, {n + m - 1})));
      auto c = substitute(td_of(kn), 0, td_of(km));
      check_carried(c, r.graph);
      CHECK(c.claimed_bound == n + m - 2);
      check_carried(substitute(pd_of(kn), 0, pd_of(km)), r.graph);
    }
  }
  Graph c5 = generate(GraphKind::cycle, {5});
  Graph k1 = generate(GraphKind::complete, {1});
  auto one = substitute(c5, 2, k1);
  CHECK(is_isomorphic(one.graph, c5));
  CHECK(width(substitute(td_of(c5), 2, td_of(k1)).decomposition) == 2);

  Graph c4 = generate(GraphKind::cycle, {4});
  Graph p2 = generate(GraphKind::path, {2});
  auto b = substitute_by_neighbors(td_of(c4), 0, td_of(p2));
  check_carried(b, substitute(c4, 0, p2).graph);
  CHECK(b.claimed_bound == 3);
  // contracting the vertex opposite v gives K4
  CHECK(tw(b.decomposition.host()) == 3);
  CHECK(exact_treewidth(b.decomposition.host()).value == 3);

  CHECK_THROWS_AS(substitute(c4, 9, p2), ParameterError);
  Graph lonely = generate(GraphKind::isolated, {2});
  CHECK_THROWS_AS(substitute_by_neighbors(td_of(lonely), 0, td_of(p2)), ParameterError);
}

TEST_CASE("product kinds") {
  for (ProductKind k : all_product_kinds()) CHECK(parse_product_kind(to_string(k)) == k);
  CHECK_THROWS_AS(parse_product_kind("tensor"), ParameterError);

  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      Graph g = product(ProductKind::cartesian, generate(GraphKind::path, {n}), generate(GraphKind::path, {m})).graph;
      CHECK(g == generate(GraphKind::grid, {n, m}));
    }
  }
  Graph p3 = generate(GraphKind::path, {3});
  Graph k2 = generate(GraphKind::complete, {2});
  Graph lex = product(ProductKind::lexicographic, p3, k2).graph;
  CHECK(exact_treewidth(lex).value == 3);
  CHECK(tw(lex) == 3);
  auto lc = lexicographic_product(td_of(p3), k2);
  check_carried(lc, lex);
  CHECK(lc.claimed_bound == 3);
  check_carried(lexicographic_product(pd_of(p3), k2), lex);

  for (int n = 1; n <= 3; ++n) {
    for (int m = 1; m <= 3; ++m) {
      Graph in = generate(GraphKind::isolated, {n}), im = generate(GraphKind::isolated, {m});
      Graph rej = product(ProductKind::rejection, in, im).graph;
      CHECK(rej == product(ProductKind::normal, generate(GraphKind::complete, {n}),
                           generate(GraphKind::complete, {m}))
                       .graph);
      CHECK(rej == generate(GraphKind::complete, {n * m}));
    }
  }
}

TEST_CASE("products match the edge predicates") {
  std::mt19937 rng(3);
  for (int it = 0; it < 30; ++it) {
    Graph g1 = random_graph(rng, 1 + static_cast<int>(rng() % 4), 50);
    Graph g2 = random_graph(rng, 1 + static_cast<int>(rng() % 4), 50);
    const int n2 = static_cast<int>(g2.order());
    for (ProductKind k : all_product_kinds()) {
      Graph p = product(k, g1, g2).graph;
      REQUIRE(p.order() == g1.order() * g2.order());
      for (Vertex a : p.vertices()) {
        for (Vertex b : p.vertices()) {
          if (a >= b) continue;
          int u1 = a / n2, u2 = a % n2, v1 = b / n2, v2 = b % n2;
          bool in1 = g1.adjacent(u1, v1), in2 = g2.adjacent(u2, v2);
          bool expect = false;
          switch (k) {
            case ProductKind::cartesian: expect = (u1 == v1 && in2) || (u2 == v2 && in1); break;
            case ProductKind::categorical: expect = in1 && in2; break;
            case ProductKind::conormal: expect = in1 || in2; break;
            case ProductKind::lexicographic: expect = in1 || (u1 == v1 && in2); break;
            case ProductKind::normal:
              expect = (u1 == v1 && in2) || (in1 && u2 == v2) || (in1 && in2);
              break;
            case ProductKind::symmetric_difference: expect = in1 != in2; break;
            case ProductKind::rejection: expect = !in1 && !in2; break;
          }
          CHECK(p.adjacent(a, b) == expect);
        }
      }
    }
  }
}

TEST_CASE("product identities") {
  std::mt19937 rng(9);
  for (int it = 0; it < 50; ++it) {
    Graph g1 = random_graph(rng, 1 + static_cast<int>(rng() % 4), 50);
    Graph g2 = random_graph(rng, 1 + static_cast<int>(rng() % 4), 50);
    Graph c1 = complement(g1), c2 = complement(g2);
    CHECK(product(ProductKind::rejection, g1, g2).graph == product(ProductKind::normal, c1, c2).graph);
    CHECK(product(ProductKind::normal, g1, g2).graph ==
          complement(product(ProductKind::conormal, c1, c2).graph));
    Graph sd = edge_union(edge_union(product(ProductKind::cartesian, g1, g2).graph,
                                     product(ProductKind::categorical, g1, c2).graph),
                          product(ProductKind::categorical, c1, g2).graph);
    CHECK(product(ProductKind::symmetric_difference, g1, g2).graph == sd);
  }
}

TEST_CASE("one-sum") {
  Graph p3 = generate(GraphKind::path, {3});
  Graph p5 = generate(GraphKind::path, {5});
  // end of P3 with the centre of P5
  auto r = one_sum(p3, 2, p5, 2);
  CHECK(r.new_ids == std::vector<Vertex>{8});
  CHECK(is_isomorphic(r.graph, generate(GraphKind::incidence_of_star)));
  auto t = one_sum(td_of(p3), 2, td_of(p5), 2);
  check_carried(t, r.graph);
  CHECK(width(t.decomposition) == 1);
  auto p = one_sum(pd_of(p3), 2, pd_of(p5), 2);
  check_carried(p, r.graph);
  CHECK(p.claimed_bound == 2);
  CHECK(pw(r.graph) == 2);

  Graph k3 = generate(GraphKind::complete, {3});
  auto kk = one_sum(td_of(k3), 0, td_of(k3), 1);
  check_carried(kk, one_sum(k3, 0, k3, 1).graph);
  CHECK(tw(kk.decomposition.host()) == 2);

  Graph c5 = generate(GraphKind::cycle, {5});
  CHECK(is_isomorphic(one_sum(c5, 3, generate(GraphKind::complete, {1}), 0).graph, c5));
  CHECK_THROWS_AS(one_sum(c5, 9, p3, 0), ParameterError);
}

TEST_CASE("corona") {
  Graph k2 = generate(GraphKind::complete, {2}), k1 = generate(GraphKind::complete, {1});
  Graph p4 = corona(k2, k1).graph;
  CHECK(is_isomorphic(p4, generate(GraphKind::path, {4})));
  CHECK(corona_pw_complete(2, 1) == 1);
  CHECK(pw(p4) == 1);

  Graph k3 = generate(GraphKind::complete, {3});
  Graph k32 = corona(k3, k2).graph;
  CHECK(k32.order() == 9);
  CHECK(corona_pw_complete(3, 2) == 3);
  CHECK(exact_pathwidth(k32).value == 3);

  for (int m = 1; m <= 4; ++m) {
    Graph km = generate(GraphKind::complete, {m});
    CHECK(corona(k1, km).graph == generate(GraphKind::complete, {m + 1}));
    CHECK(corona_pw_complete(1, m) == m);
  }
  CHECK_THROWS_AS(corona_pw_complete(0, 2), ParameterError);
  CHECK_THROWS_AS(corona_pw_complete(2, 0), ParameterError);

  std::mt19937 rng(21);
  for (int it = 0; it < 40; ++it) {
    int n1 = 1 + static_cast<int>(rng() % 4), n2 = 1 + static_cast<int>(rng() % 3);
    Graph g1 = random_graph(rng, n1, 50), g2 = random_graph(rng, n2, 50);
    CombineResult r = corona(g1, g2);
    REQUIRE(r.graph == corona_by_definition(n1, g1, n2, g2));
    auto t = corona(td_of(g1), td_of(g2));
    check_carried(t, r.graph);
    auto p = corona(pd_of(g1), pd_of(g2));
    check_carried(p, r.graph);
    int t1 = exact_treewidth(g1).value.value(), t2 = exact_treewidth(g2).value.value();
    int tc = exact_treewidth(r.graph).value.value();
    CHECK(std::max(t1, t2) <= tc);
    CHECK(tc <= std::max(t1, t2) + 1);
  }
}

TEST_CASE("random combiner checks") {
  std::mt19937 rng(17);
  for (int it = 0; it < 60; ++it) {
    int n1 = 1 + static_cast<int>(rng() % 5), n2 = 1 + static_cast<int>(rng() % 4);
    Graph g1 = random_graph(rng, n1, 50), g2 = random_graph(rng, n2, 50);
    auto t1 = td_of(g1), t2 = td_of(g2);
    auto p1 = pd_of(g1), p2 = pd_of(g2);
    int tw1 = tw(g1), tw2 = tw(g2), pw1 = pw(g1), pw2 = pw(g2);

    Graph du = disjoint_union(g1, g2).graph;
    check_carried(disjoint_union(t1, t2), du);
    check_carried(disjoint_union(p1, p2), du);
    CHECK(tw(du) == std::max(tw1, tw2));
    CHECK(pw(du) == std::max(pw1, pw2));

    Graph jn = join(g1, g2).graph;
    check_carried(join(t1, t2), jn);
    check_carried(join(p1, p2), jn);
    CHECK(tw(jn) == std::min(tw1 + n2, tw2 + n1));
    CHECK(pw(jn) == std::min(pw1 + n2, pw2 + n1));

    Vertex v = static_cast<Vertex>(rng() % n1), w = static_cast<Vertex>(rng() % n2);
    Graph sub = substitute(g1, v, g2).graph;
    check_carried(substitute(t1, v, t2), sub);
    check_carried(substitute(p1, v, p2), sub);
    if (g1.degree(v) > 0) check_carried(substitute_by_neighbors(t1, v, t2), sub);
    int ts = tw(sub);
    CHECK(std::max(tw1, tw2) <= ts);

    Graph os = one_sum(g1, v, g2, w).graph;
    check_carried(one_sum(t1, v, t2, w), os);
    check_carried(one_sum(p1, v, p2, w), os);
    CHECK(tw(os) == std::max(tw1, tw2));
    int po = pw(os);
    CHECK(std::max(pw1, pw2) <= po);
    CHECK(po <= std::max(pw1, pw2) + 1);

    if (n1 * n2 <= 9) {
      Graph lex = product(ProductKind::lexicographic, g1, g2).graph;
      check_carried(lexicographic_product(t1, g2), lex);
      check_carried(lexicographic_product(p1, g2), lex);
      CHECK(std::max(tw1, tw2) <= tw(lex));
    }
  }
}

TEST_CASE("treewidth of blocks") {
  std::mt19937 rng(4);
  for (int it = 0; it < 40; ++it) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 7), 30);
    int best = 0;
    for (const auto& block : biconnected_components(g)) {
      best = std::max(best, exact_treewidth(induced_subgraph(g, block)).value.value());
    }
    CHECK(exact_treewidth(g).value == best);
  }
  Graph star = generate(GraphKind::incidence_of_star);
  for (const auto& block : biconnected_components(star)) {
    CHECK(exact_pathwidth(induced_subgraph(star, block)).value == 1);
  }
  CHECK(exact_pathwidth(star).value == 2);
}
