// Internal helpers shared by the decomposition transformers.
#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "widthlab/decomposition.hpp"

namespace widthlab::detail {

inline void insert_sorted(Bag& bag, Vertex v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it == bag.end() || *it != v) bag.insert(it, v);
}

inline void erase_sorted(Bag& bag, Vertex v) {
  auto it = std::lower_bound(bag.begin(), bag.end(), v);
  if (it != bag.end() && *it == v) bag.erase(it);
}

inline bool bag_has(const Bag& bag, Vertex v) { return std::binary_search(bag.begin(), bag.end(), v); }

inline Bag renamed(const Bag& bag, Vertex v, Vertex w, Vertex z) {
  Bag out;
  for (Vertex x : bag) out.push_back(x == v || x == w ? z : x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Lowest index of a bag containing every vertex of `need`.
inline int lowest_bag(const std::vector<Bag>& bags, Bag need) {
  std::sort(need.begin(), need.end());
  for (std::size_t i = 0; i < bags.size(); ++i) {
    if (std::includes(bags[i].begin(), bags[i].end(), need.begin(), need.end())) {
      return static_cast<int>(i);
    }
  }
  throw InconsistencyError("no bag contains the required vertices");
}

template <class D>
int usable_width(const D& d, const char* op) {
  if (!d.valid()) throw PreconditionError(std::string(op) + ": decomposition is not valid");
  if (d.host().empty()) throw PreconditionError(std::string(op) + ": graph is empty");
  return *width(d);
}

/// Mutable tree of bags; build() renumbers the surviving nodes in order.
struct TreeShape {
  std::vector<Bag> bags;
  std::vector<std::set<int>> adj;
  std::vector<char> alive;

  static TreeShape of(const TreeDecomposition& td) {
    TreeShape s;
    s.bags = td.bags();
    s.adj.resize(td.size());
    s.alive.assign(td.size(), 1);
    for (const Edge& e : td.tree().edges()) s.link(e.u, e.v);
    return s;
  }

  int add(Bag bag) {
    bags.push_back(std::move(bag));
    adj.emplace_back();
    alive.push_back(1);
    return static_cast<int>(bags.size()) - 1;
  }

  void link(int a, int b) {
    adj[a].insert(b);
    adj[b].insert(a);
  }

  /// Removes x; its other neighbours are attached to its neighbour y.
  void merge_into(int x, int y) {
    for (int c : adj[x]) {
      adj[c].erase(x);
      if (c != y) link(c, y);
    }
    adj[x].clear();
    alive[x] = 0;
  }

  /// Contracts every empty bag into a neighbour, keeping at least one node.
  void drop_empty() {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t x = 0; x < bags.size(); ++x) {
        if (!alive[x] || !bags[x].empty() || adj[x].empty()) continue;
        merge_into(static_cast<int>(x), *adj[x].begin());
        changed = true;
      }
    }
    // Isolated empty nodes only remain when everything is empty.
    int keep = -1;
    for (std::size_t x = 0; x < bags.size(); ++x) {
      if (!alive[x]) continue;
      if (bags[x].empty() && adj[x].empty()) {
        if (keep < 0) {
          keep = static_cast<int>(x);
        } else {
          alive[x] = 0;
        }
      }
    }
  }

  TreeDecomposition build(const Graph& host) const {
    std::vector<int> rank(bags.size(), -1);
    std::vector<Bag> kept;
    for (std::size_t x = 0; x < bags.size(); ++x) {
      if (!alive[x]) continue;
      rank[x] = static_cast<int>(kept.size());
      kept.push_back(bags[x]);
    }
    std::vector<Edge> es;
    for (std::size_t x = 0; x < bags.size(); ++x) {
      if (!alive[x]) continue;
      for (int y : adj[x]) {
        if (static_cast<int>(x) < y && alive[y]) es.emplace_back(rank[x], rank[y]);
      }
    }
    Graph tree = Graph::with_order(static_cast<int>(kept.size()), es);
    return TreeDecomposition(host, std::move(tree), std::move(kept));
  }
};

/// Width <= 1 decomposition of a forest: one bag per edge {child, parent},
/// linked along the rooted trees; isolated vertices get singleton bags and
/// components are chained through their first bags.
inline TreeDecomposition forest_decomposition(const Graph& forest) {
  TreeShape s;
  std::vector<int> first_of_component;
  for (const auto& comp : connected_components(forest)) {
    if (comp.size() == 1) {
      first_of_component.push_back(s.add({comp[0]}));
      continue;
    }
    // BFS from the smallest vertex; node of a vertex = bag {vertex, parent}
    std::vector<int> node(forest.order(), -1);
    std::vector<Vertex> queue{comp[0]};
    std::vector<Vertex> parent(forest.order(), -1);
    int root_node = -1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      Vertex x = queue[q];
      for (Vertex y : forest.neighbors(x)) {
        std::size_t iy = forest.index_of(y);
        if (y == comp[0] || node[iy] >= 0) continue;
        parent[iy] = x;
        node[iy] = s.add({std::min(x, y), std::max(x, y)});
        if (x == comp[0]) {
          if (root_node < 0) {
            root_node = node[iy];
          } else {
            s.link(node[iy], root_node);
          }
        } else {
          s.link(node[iy], node[forest.index_of(x)]);
        }
        queue.push_back(y);
      }
    }
    first_of_component.push_back(root_node);
  }
  for (std::size_t i = 1; i < first_of_component.size(); ++i) {
    s.link(first_of_component[i], first_of_component[0]);
  }
  if (s.bags.empty()) s.add({});
  return s.build(forest);
}

}  // namespace widthlab::detail
