#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "widthlab/decomposition.hpp"
#include "widthlab/solvers.hpp"

using namespace widthlab;

namespace {

enum : Vertex { a, b, c, d, e, f, g };

TreeDecomposition ik13_td() {
  Graph host = generate(GraphKind::incidence_of_star);
  Graph tree = Graph::with_order(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {4, 5}});
  return TreeDecomposition(host, tree, {{a, b}, {b, c}, {c, f}, {f, g}, {c, d}, {d, e}});
}

PathDecomposition ik13_pd() {
  return PathDecomposition(generate(GraphKind::incidence_of_star), {{a, b, c}, {c, f, g}, {c, d, e}});
}

Graph random_tree(std::mt19937& rng, int n) {
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back(static_cast<Vertex>(rng() % i), i);
  return Graph::with_order(n, es);
}

}  // namespace

TEST_CASE("width") {
  CHECK(width(ik13_td()) == 1);
  CHECK(width(trivial_decomposition(generate(GraphKind::complete, {4}))) == 3);
  CHECK(width(ik13_pd()) == 2);
  CHECK_THROWS_AS(width(PathDecomposition(Graph(), {})), DomainError);
}

TEST_CASE("validation of the I(K1,3) decompositions") {
  Graph host = generate(GraphKind::incidence_of_star);
  CHECK(validate(host, ik13_td()).passed());
  CHECK(validate(host, ik13_pd()).passed());
  CHECK(ik13_td().valid());
  CHECK_THROWS_AS(validate(generate(GraphKind::path, {7}), ik13_td()), ParameterError);
}

TEST_CASE("validation witnesses") {
  Graph k3 = generate(GraphKind::complete, {3});
  PathDecomposition missing(k3, {{0, 1}, {1, 2}});
  auto r = validate(k3, missing);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].axiom == Axiom::pw2);
  CHECK(r.violations[0].vertices == std::vector<Vertex>{0, 2});
  CHECK(r.violations[0].describe(k3) == "(pw-2) edge 1 3");
  CHECK(missing.as_tree().report().violations.at(0).describe(k3) == "(tw-2) edge 1 3");

  Graph p3 = generate(GraphKind::path, {3});
  PathDecomposition gap(p3, {{0, 1}, {2}, {1, 2}});
  auto r3 = validate(p3, gap);
  REQUIRE(r3.violations.size() == 1);
  CHECK(r3.violations[0].axiom == Axiom::pw3);
  CHECK(r3.violations[0].vertices == std::vector<Vertex>{1});
  CHECK(r3.violations[0].bags == std::vector<int>{0, 2});

  // the same bags as a path-shaped tree fail (tw-3)
  CHECK(gap.as_tree().report().violations.at(0).axiom == Axiom::tw3);

  // uncovered vertex, foreign vertex
  PathDecomposition short_pd(p3, {{0, 1}, {1, 9}});
  auto r4 = validate(p3, short_pd);
  CHECK(r4.violations.size() == 3);  // 9 foreign, 2 uncovered, {1,2} uncovered

  // a cycle of bags is not a tree
  TreeDecomposition cyc(p3, Graph::with_order(3, {{0, 1}, {1, 2}, {0, 2}}), {{0, 1}, {1, 2}, {1}});
  CHECK_FALSE(cyc.valid());
  CHECK(cyc.report().violations.at(0).axiom == Axiom::tree_shape);
  CHECK_THROWS_AS(TreeDecomposition(p3, Graph::with_order(2, {}), {{0}}), ParameterError);
}

TEST_CASE("trivial decomposition") {
  CHECK(width(trivial_decomposition(generate(GraphKind::path, {4}))) == 3);
  auto empty = trivial_decomposition(Graph());
  CHECK(empty.valid());
  CHECK(empty.size() == 1);
  CHECK_FALSE(width(empty).has_value());
  CHECK(within(width(empty), -5));
}

TEST_CASE("remove_redundant_bags") {
  Graph p3 = generate(GraphKind::path, {3});
  TreeDecomposition dup(p3, Graph::with_order(3, {{0, 1}, {1, 2}}), {{0, 1}, {0, 1}, {1, 2}});
  auto r = remove_redundant_bags(dup);
  CHECK(r.size() == 2);
  CHECK(r.valid());
  CHECK(width(r) == width(dup));

  auto fig = remove_redundant_bags(ik13_td());
  CHECK(fig.bags() == ik13_td().bags());
  CHECK(fig.tree() == ik13_td().tree());

  auto k3 = remove_redundant_bags(trivial_decomposition(generate(GraphKind::complete, {3})));
  CHECK(k3.size() == 1);

  TreeDecomposition bad(p3, Graph::with_order(1, {}), {{0, 1}});
  CHECK_THROWS_AS(remove_redundant_bags(bad), PreconditionError);

  // exact-solver certificates shrink to at most n nodes
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 9);
    std::vector<Edge> es;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (rng() % 3 == 0) es.emplace_back(u, v);
      }
    }
    Graph gr = Graph::with_order(n, es);
    auto td = exact_treewidth(gr).certificate;
    auto red = remove_redundant_bags(td);
    CHECK(red.valid());
    CHECK(red.size() <= gr.order());
    CHECK(width(red) == width(td));
    for (const Edge& te : red.tree().edges()) {
      const Bag& x = red.bag(te.u);
      const Bag& y = red.bag(te.v);
      CHECK_FALSE(std::includes(y.begin(), y.end(), x.begin(), x.end()));
      CHECK_FALSE(std::includes(x.begin(), x.end(), y.begin(), y.end()));
    }
  }
}

TEST_CASE("tree_path_decomposition") {
  auto p7 = tree_path_decomposition(generate(GraphKind::path, {7}));
  CHECK(p7.valid());
  CHECK(*width(p7) <= 2);
  CHECK(oracle::pathwidth(generate(GraphKind::path, {7})) == 1);

  auto single = tree_path_decomposition(Graph::with_order(1, {}));
  CHECK(single.valid());
  CHECK(width(single) == 0);

  Graph bt = complete_binary_tree(4);
  auto pd = tree_path_decomposition(bt);
  CHECK(pd.valid());
  CHECK(*width(pd) <= oracle::ceil_log3(31));
  CHECK(exact_pathwidth(bt).value == 2);

  CHECK_THROWS_AS(tree_path_decomposition(generate(GraphKind::cycle, {4})), ParameterError);
  CHECK_THROWS_AS(tree_path_decomposition(Graph()), ParameterError);

  // long paths and random trees, including sizes past 3^k thresholds
  for (int n : {13, 32, 40, 41, 121, 200}) {
    auto pp = tree_path_decomposition(generate(GraphKind::path, {n}));
    CHECK(pp.valid());
    CHECK(*width(pp) <= oracle::ceil_log3(2 * n + 1));
  }
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 120);
    Graph tr = random_tree(rng, n);
    auto tp = tree_path_decomposition(tr);
    CHECK(tp.valid());
    CHECK(*width(tp) <= oracle::ceil_log3(2 * n + 1));
  }
}

TEST_CASE("tree_to_path") {
  Graph host = generate(GraphKind::incidence_of_star);
  auto pd = tree_to_path(host, ik13_td());
  CHECK(pd.valid());
  CHECK(*width(pd) <= 2 * (3 + 1) - 1);
  CHECK(oracle::pathwidth(host) == 2);

  Graph k3 = generate(GraphKind::complete, {3});
  auto one = tree_to_path(k3, trivial_decomposition(k3));
  CHECK(one.size() == 1);
  CHECK(width(one) == 2);

  Graph p15 = generate(GraphKind::path, {15});
  std::vector<Bag> bags;
  std::vector<Edge> tes;
  for (int i = 0; i < 14; ++i) {
    bags.push_back({i, i + 1});
    if (i > 0) tes.emplace_back(i - 1, i);
  }
  TreeDecomposition natural(p15, Graph::with_order(14, tes), bags);
  auto conv = tree_to_path(p15, natural);
  CHECK(conv.valid());
  CHECK(*width(conv) <= 2 * (oracle::ceil_log3(31) + 1) - 1);

  TreeDecomposition bad(k3, Graph::with_order(1, {}), {{0, 1}});
  CHECK_THROWS_AS(tree_to_path(k3, bad), PreconditionError);
}

TEST_CASE("find_clique_bag") {
  Graph k4 = generate(GraphKind::complete, {4});
  CHECK(find_clique_bag(trivial_decomposition(k4), {0, 1, 2, 3}) == 0);
  CHECK(find_clique_bag(ik13_td(), {c, f}) == 2);
  CHECK(ik13_td().bag(2) == Bag{c, f});
  CHECK(find_clique_bag(ik13_pd(), {c, d}) == 2);
  CHECK_THROWS_AS(find_clique_bag(ik13_td(), {a, c}), ParameterError);
  Graph p3 = generate(GraphKind::path, {3});
  PathDecomposition invalid(p3, {{0, 1}});
  CHECK_THROWS_AS(find_clique_bag(invalid, {1, 2}), PreconditionError);
}

TEST_CASE("every path-decomposition is a tree-decomposition") {
  auto pd = ik13_pd();
  CHECK(pd.as_tree().valid());
  auto back = as_path(pd.as_tree());
  REQUIRE(back.has_value());
  CHECK(back->bags() == pd.bags());
  CHECK_FALSE(as_path(ik13_td()).has_value());
}

TEST_CASE(".td round trip and rejection") {
  Graph host = generate(GraphKind::incidence_of_star);
  std::string text = format_td(ik13_td());
  CHECK(text.rfind("s td 6 2 7\n", 0) == 0);
  auto back = parse_td(text, host);
  CHECK(back.bags() == ik13_td().bags());
  CHECK(back.tree() == ik13_td().tree());
  CHECK(format_td(back) == text);

  CHECK(format_td(ik13_pd()) == "s td 3 3 7\nb 1 1 2 3\nb 2 3 6 7\nb 3 3 4 5\n1 2\n2 3\n");

  Graph p2 = generate(GraphKind::path, {2});
  CHECK_THROWS_AS(parse_td("s td 1 3 2\nb 1 1 2\n", p2), ParseError);   // max bag size
  CHECK_THROWS_AS(parse_td("s td 2 2 2\nb 1 1 2\n", p2), ParseError);   // missing bag
  CHECK_THROWS_AS(parse_td("s td 1 2 3\nb 1 1 2\n", p2), ParseError);   // vertex count
  CHECK_THROWS_AS(parse_td("s td 1 1 2\nb 1 5\n", p2), ParseError);     // vertex range
  CHECK_THROWS_AS(parse_td("s td 2 2 2\nb 1 1 2\nb 2 1\n1 3\n", p2), ParseError);
  CHECK_THROWS_AS(parse_td("b 1 1\n", p2), ParseError);
  // structurally wrong but well formed: parses, fails validation
  auto cyc = parse_td("s td 3 2 2\nb 1 1 2\nb 2 1\nb 3 2\n1 2\n2 3\n3 1\n", p2);
  CHECK_FALSE(cyc.valid());
}
