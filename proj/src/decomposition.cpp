#include "widthlab/decomposition.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace widthlab {

std::string to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::tree_shape: return "(tree)";
    case Axiom::tw1: return "(tw-1)";
    case Axiom::tw2: return "(tw-2)";
    case Axiom::tw3: return "(tw-3)";
    case Axiom::pw1: return "(pw-1)";
    case Axiom::pw2: return "(pw-2)";
    case Axiom::pw3: return "(pw-3)";
  }
  return "(?)";
}

std::string Violation::describe(const Graph& host) const {
  auto pos = [&](Vertex v) {
    return host.has_vertex(v) ? static_cast<long>(host.index_of(v)) + 1 : static_cast<long>(v) + 1;
  };
  std::ostringstream out;
  out << to_string(axiom);
  switch (axiom) {
    case Axiom::tree_shape:
      out << " bags do not form a tree";
      break;
    case Axiom::tw1:
    case Axiom::pw1:
      if (bags.empty()) {
        out << " vertex " << pos(vertices.at(0)) << " in no bag";
      } else {
        out << " vertex " << pos(vertices.at(0)) << " in bag " << bags[0] + 1
            << " is not a graph vertex";
      }
      break;
    case Axiom::tw2:
    case Axiom::pw2:
      out << " edge " << pos(vertices.at(0)) << ' ' << pos(vertices.at(1));
      break;
    case Axiom::tw3:
    case Axiom::pw3:
      out << " vertex " << pos(vertices.at(0)) << " bags";
      for (int b : bags) out << ' ' << b + 1;
      break;
  }
  return out.str();
}

namespace {

Bag normalized(Bag bag) {
  std::sort(bag.begin(), bag.end());
  bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
  return bag;
}

// Occurrence lists (bag ids, ascending) indexed by host position. Foreign
// vertices are reported under `cover`.
std::vector<std::vector<int>> occurrences(const Graph& host, const std::vector<Bag>& bags,
                                          Axiom cover, ValidationReport& report) {
  std::vector<std::vector<int>> occ(host.order());
  for (std::size_t b = 0; b < bags.size(); ++b) {
    for (Vertex v : bags[b]) {
      if (!host.has_vertex(v)) {
        report.violations.push_back({cover, {v}, {static_cast<int>(b)}});
        continue;
      }
      occ[host.index_of(v)].push_back(static_cast<int>(b));
    }
  }
  return occ;
}

void check_cover(const Graph& host, const std::vector<std::vector<int>>& occ, Axiom vertex_axiom,
                 Axiom edge_axiom, ValidationReport& report) {
  for (std::size_t i = 0; i < host.order(); ++i) {
    if (occ[i].empty()) report.violations.push_back({vertex_axiom, {host.vertices()[i]}, {}});
  }
  for (const Edge& e : host.edges()) {
    const auto& a = occ[host.index_of(e.u)];
    const auto& b = occ[host.index_of(e.v)];
    std::vector<int> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    if (common.empty()) report.violations.push_back({edge_axiom, {e.u, e.v}, {}});
  }
}

ValidationReport check_tree(const Graph& host, const Graph& tree, const std::vector<Bag>& bags) {
  ValidationReport report;
  if (!bags.empty() && !is_tree(tree)) {
    report.violations.push_back({Axiom::tree_shape, {}, {}});
  }
  auto occ = occurrences(host, bags, Axiom::tw1, report);
  check_cover(host, occ, Axiom::tw1, Axiom::tw2, report);
  // (tw-3): the nodes holding v must induce a connected subtree.
  std::vector<char> holds(bags.size(), 0), seen(bags.size(), 0);
  for (std::size_t i = 0; i < host.order(); ++i) {
    const auto& nodes = occ[i];
    if (nodes.size() <= 1) continue;
    for (int b : nodes) holds[b] = 1;
    std::vector<int> stack{nodes[0]};
    seen[nodes[0]] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      ++reached;
      for (Vertex y : tree.neighbors(x)) {
        if (holds[y] && !seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    for (int b : nodes) holds[b] = seen[b] = 0;
    if (reached != nodes.size()) {
      report.violations.push_back({Axiom::tw3, {host.vertices()[i]}, nodes});
    }
  }
  return report;
}

ValidationReport check_path(const Graph& host, const std::vector<Bag>& bags) {
  ValidationReport report;
  auto occ = occurrences(host, bags, Axiom::pw1, report);
  check_cover(host, occ, Axiom::pw1, Axiom::pw2, report);
  for (std::size_t i = 0; i < host.order(); ++i) {
    const auto& idx = occ[i];
    if (!idx.empty() && idx.back() - idx.front() + 1 != static_cast<int>(idx.size())) {
      report.violations.push_back({Axiom::pw3, {host.vertices()[i]}, idx});
    }
  }
  return report;
}

Width max_width(const std::vector<Bag>& bags) {
  if (bags.empty()) throw DomainError("width: decomposition has no bags");
  std::size_t most = 0;
  for (const Bag& b : bags) most = std::max(most, b.size());
  if (most == 0) return std::nullopt;
  return static_cast<int>(most) - 1;
}

int find_containing(const Graph& host, const std::vector<Bag>& bags, bool valid,
                    std::vector<Vertex> c) {
  if (!is_clique(host, c)) throw ParameterError("find_clique_bag: vertex set is not a clique");
  if (!valid) throw PreconditionError("find_clique_bag: decomposition is not valid");
  c = normalized(std::move(c));
  for (std::size_t b = 0; b < bags.size(); ++b) {
    if (std::includes(bags[b].begin(), bags[b].end(), c.begin(), c.end())) {
      return static_cast<int>(b);
    }
  }
  throw InconsistencyError("find_clique_bag: no bag contains the clique");
}

}  // namespace

TreeDecomposition::TreeDecomposition(Graph host, Graph tree, std::vector<Bag> bags)
    : host_(std::move(host)), tree_(std::move(tree)) {
  if (tree_.order() != bags.size() ||
      (!tree_.empty() && tree_.max_id() != static_cast<Vertex>(bags.size()) - 1)) {
    throw ParameterError("tree decomposition: tree nodes must be 0..#bags-1");
  }
  bags_.reserve(bags.size());
  for (auto& b : bags) bags_.push_back(normalized(std::move(b)));
  report_ = check_tree(host_, tree_, bags_);
}

PathDecomposition::PathDecomposition(Graph host, std::vector<Bag> bags) : host_(std::move(host)) {
  bags_.reserve(bags.size());
  for (auto& b : bags) bags_.push_back(normalized(std::move(b)));
  report_ = check_path(host_, bags_);
}

TreeDecomposition PathDecomposition::as_tree() const {
  std::vector<Edge> es;
  for (std::size_t i = 1; i < bags_.size(); ++i) {
    es.emplace_back(static_cast<Vertex>(i - 1), static_cast<Vertex>(i));
  }
  return TreeDecomposition(host_, Graph::with_order(static_cast<int>(bags_.size()), es), bags_);
}

ValidationReport validate(const Graph& g, const TreeDecomposition& d) {
  if (!(g == d.host())) throw ParameterError("validate: graph is not the decomposition host");
  return check_tree(g, d.tree(), d.bags());
}

ValidationReport validate(const Graph& g, const PathDecomposition& d) {
  if (!(g == d.host())) throw ParameterError("validate: graph is not the decomposition host");
  return check_path(g, d.bags());
}

Width width(const TreeDecomposition& d) { return max_width(d.bags()); }
Width width(const PathDecomposition& d) { return max_width(d.bags()); }

TreeDecomposition trivial_decomposition(const Graph& g) {
  return TreeDecomposition(g, Graph::with_order(1, {}), {g.vertices()});
}

TreeDecomposition remove_redundant_bags(const TreeDecomposition& td) {
  if (!td.valid()) throw PreconditionError("remove_redundant_bags: decomposition is not valid");
  const std::size_t k = td.size();
  std::vector<std::set<int>> adj(k);
  for (const Edge& e : td.tree().edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> alive(k, 1);
  const auto& bags = td.bags();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < k; ++a) {
      if (!alive[a]) continue;
      for (int b : adj[a]) {
        if (!std::includes(bags[b].begin(), bags[b].end(), bags[a].begin(), bags[a].end())) {
          continue;
        }
        // Contract a into b.
        for (int c : adj[a]) {
          if (c == b) continue;
          adj[c].erase(static_cast<int>(a));
          adj[c].insert(b);
          adj[b].insert(c);
        }
        adj[b].erase(static_cast<int>(a));
        adj[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }
  std::vector<int> rank(k, -1);
  std::vector<Bag> kept;
  for (std::size_t a = 0; a < k; ++a) {
    if (!alive[a]) continue;
    rank[a] = static_cast<int>(kept.size());
    kept.push_back(bags[a]);
  }
  std::vector<Edge> es;
  for (std::size_t a = 0; a < k; ++a) {
    for (int b : adj[a]) {
      if (static_cast<int>(a) < b) es.emplace_back(rank[a], rank[b]);
    }
  }
  Graph tree = Graph::with_order(static_cast<int>(kept.size()), es);
  return TreeDecomposition(td.host(), std::move(tree), std::move(kept));
}

// ---------------------------------------------------------------------------
// Path-decompositions of trees.
//
// With f(B) = (3^B - 1)/2 and B the largest value with f(B) <= n, a tree on
// n vertices is split along a path P such that every component of T - P
// has fewer than f(B) vertices. Edges whose both sides hold at least f(B)
// vertices lie on a common path (three of them meeting would need
// 3 f(B) + 1 = f(B+1) > n vertices); that path, or a single vertex whose
// branches are all light when there is no such edge, serves as P. The
// components recurse with budget B - 1 and p_i is added to their bags,
// followed by the bag {p_i, p_{i+1}}. Width stays at most B.

namespace {

struct TreeSplitter {
  const std::vector<std::vector<int>>& adj;
  std::vector<char> blocked;
  std::vector<int> parent, size;

  explicit TreeSplitter(const std::vector<std::vector<int>>& a)
      : adj(a), blocked(a.size(), 0), parent(a.size(), -1), size(a.size(), 0) {}

  // Preorder of the component of `root` avoiding blocked vertices; fills
  // parent and subtree sizes.
  std::vector<int> explore(int root) {
    std::vector<int> order{root};
    parent[root] = -1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      int x = order[i];
      for (int y : adj[x]) {
        if (!blocked[y] && y != parent[x]) {
          parent[y] = x;
          order.push_back(y);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      size[*it] = 1;
      for (int y : adj[*it]) {
        if (!blocked[y] && y != parent[*it]) size[*it] += size[y];
      }
    }
    return order;
  }

  void decompose(int root, std::vector<std::vector<int>>& out) {
    std::vector<int> order = explore(root);
    const long n = static_cast<long>(order.size());
    if (n == 1) {
      out.push_back({root});
      return;
    }
    long light = 1;  // f(B)
    while (3 * light + 1 <= n) light = 3 * light + 1;

    // Heavy edges, each named by its lower endpoint x (edge x - parent[x]).
    std::vector<int> heavy_degree(adj.size(), 0);
    std::vector<char> heavy(adj.size(), 0);
    bool any = false;
    for (int x : order) {
      if (parent[x] >= 0 && size[x] >= light && n - size[x] >= light) {
        heavy[x] = 1;
        ++heavy_degree[x];
        ++heavy_degree[parent[x]];
        any = true;
      }
    }
    std::vector<int> path;
    if (any) {
      int start = -1;
      for (int x : order) {
        if (heavy_degree[x] == 1 && (start < 0 || x < start)) start = x;
      }
      int prev = -1, cur = start;
      while (cur >= 0) {
        path.push_back(cur);
        int next = -1;
        for (int y : adj[cur]) {
          if (blocked[y] || y == prev) continue;
          bool on = (parent[y] == cur && heavy[y]) || (parent[cur] == y && heavy[cur]);
          if (on) next = y;
        }
        prev = cur;
        cur = next;
      }
    } else {
      int cur = root;
      for (;;) {
        int next = -1;
        for (int y : adj[cur]) {
          if (!blocked[y] && parent[y] == cur && size[y] >= light) next = y;
        }
        if (next < 0) break;
        cur = next;
      }
      path.push_back(cur);
    }

    for (int p : path) blocked[p] = 1;
    for (std::size_t i = 0; i < path.size(); ++i) {
      int p = path[i];
      std::vector<int> roots;
      for (int y : adj[p]) {
        if (!blocked[y]) roots.push_back(y);
      }
      std::sort(roots.begin(), roots.end());
      for (int r : roots) {
        std::vector<std::vector<int>> sub;
        decompose(r, sub);
        for (auto& bag : sub) {
          bag.push_back(p);
          out.push_back(std::move(bag));
        }
      }
      if (i + 1 < path.size()) out.push_back({p, path[i + 1]});
    }
    if (path.size() == 1 && out.empty()) out.push_back({path[0]});
  }
};

}  // namespace

PathDecomposition tree_path_decomposition(const Graph& t) {
  if (!is_tree(t)) throw ParameterError("tree_path_decomposition: input is not a tree");
  std::vector<std::vector<int>> adj(t.order());
  for (const Edge& e : t.edges()) {
    int a = static_cast<int>(t.index_of(e.u)), b = static_cast<int>(t.index_of(e.v));
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  TreeSplitter splitter(adj);
  std::vector<std::vector<int>> raw;
  splitter.decompose(0, raw);
  std::vector<Bag> bags;
  bags.reserve(raw.size());
  for (const auto& r : raw) {
    Bag b;
    for (int i : r) b.push_back(t.vertices()[i]);
    bags.push_back(std::move(b));
  }
  return PathDecomposition(t, std::move(bags));
}

PathDecomposition tree_to_path(const Graph& g, const TreeDecomposition& td) {
  if (!(g == td.host())) throw ParameterError("tree_to_path: graph is not the decomposition host");
  if (!td.valid()) throw PreconditionError("tree_to_path: decomposition is not valid");
  TreeDecomposition reduced = remove_redundant_bags(td);
  PathDecomposition nodes = tree_path_decomposition(reduced.tree());
  std::vector<Bag> z;
  z.reserve(nodes.size());
  for (const Bag& y : nodes.bags()) {
    Bag merged;
    for (Vertex u : y) merged.insert(merged.end(), reduced.bag(u).begin(), reduced.bag(u).end());
    z.push_back(std::move(merged));
  }
  return PathDecomposition(g, std::move(z));
}

int find_clique_bag(const TreeDecomposition& d, const std::vector<Vertex>& c) {
  return find_containing(d.host(), d.bags(), d.valid(), c);
}

int find_clique_bag(const PathDecomposition& d, const std::vector<Vertex>& c) {
  return find_containing(d.host(), d.bags(), d.valid(), c);
}

std::optional<PathDecomposition> as_path(const TreeDecomposition& td) {
  const Graph& t = td.tree();
  if (td.size() == 0 || !is_tree(t)) return std::nullopt;
  if (td.size() == 1) return PathDecomposition(td.host(), td.bags());
  int start = -1;
  for (Vertex x : t.vertices()) {
    if (t.degree(x) > 2) return std::nullopt;
    if (t.degree(x) == 1 && start < 0) start = x;
  }
  std::vector<Bag> seq;
  int prev = -1, cur = start;
  while (cur >= 0) {
    seq.push_back(td.bag(cur));
    int next = -1;
    for (Vertex y : t.neighbors(cur)) {
      if (y != prev) next = y;
    }
    prev = cur;
    cur = next;
  }
  return PathDecomposition(td.host(), std::move(seq));
}

}  // namespace widthlab
