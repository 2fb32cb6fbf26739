#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>

#include "widthlab/solvers.hpp"

namespace widthlab {

std::string format_minor_script(const MinorScript& script) {
  std::ostringstream out;
  for (const MinorStep& s : script.steps) {
    switch (s.kind) {
      case MinorStep::Kind::delete_edge: out << "d " << s.u + 1 << ' ' << s.v + 1 << '\n'; break;
      case MinorStep::Kind::contract_edge: out << "c " << s.u + 1 << ' ' << s.v + 1 << '\n'; break;
      case MinorStep::Kind::delete_vertex: out << "dv " << s.u + 1 << '\n'; break;
    }
  }
  return out.str();
}

namespace {

using Mask = std::uint32_t;

Graph merge_pair(const Graph& g, Vertex u, Vertex v) {
  Vertex z = g.fresh_id();
  std::vector<Vertex> vs;
  for (Vertex x : g.vertices()) {
    if (x != u && x != v) vs.push_back(x);
  }
  vs.push_back(z);
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    Vertex a = (e.u == u || e.u == v) ? z : e.u;
    Vertex b = (e.v == u || e.v == v) ? z : e.v;
    if (a != b) es.emplace_back(a, b);
  }
  return Graph(std::move(vs), es);
}

Graph without_vertex(const Graph& g, Vertex v) {
  std::vector<Vertex> vs;
  for (Vertex x : g.vertices()) {
    if (x != v) vs.push_back(x);
  }
  return induced_subgraph(g, vs);
}

Graph without_edge(const Graph& g, Vertex u, Vertex v) {
  std::vector<Edge> es;
  Edge gone(u, v);
  for (const Edge& e : g.edges()) {
    if (!(e == gone)) es.push_back(e);
  }
  return Graph(g.vertices(), es);
}

class BranchSetSearch {
 public:
  BranchSetSearch(const Graph& h, const Graph& g) : h_(h), g_(g) {
    const std::size_t n = g.order();
    adj_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (Vertex w : g.neighbors(g.vertices()[i])) adj_[i] |= Mask{1} << g.index_of(w);
    }
    order_h();
    sets_.assign(h.order(), 0);
  }

  std::optional<std::vector<Mask>> run() {
    if (place(0, (Mask{1} << g_.order()) - 1)) return sets_;
    return std::nullopt;
  }

  const std::vector<std::vector<int>>& earlier() const { return earlier_; }
  const std::vector<int>& order() const { return order_; }

 private:
  // BFS order from a maximum-degree vertex, component by component.
  void order_h() {
    const std::size_t k = h_.order();
    std::vector<char> seen(k, 0);
    std::vector<int> rank(k, -1);
    while (order_.size() < k) {
      int start = -1;
      for (std::size_t i = 0; i < k; ++i) {
        if (!seen[i] && (start < 0 || h_.degree(h_.vertices()[i]) > h_.degree(h_.vertices()[start]))) {
          start = static_cast<int>(i);
        }
      }
      std::vector<int> queue{start};
      seen[start] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        int x = queue[q];
        rank[x] = static_cast<int>(order_.size());
        order_.push_back(x);
        for (Vertex w : h_.neighbors(h_.vertices()[x])) {
          int y = static_cast<int>(h_.index_of(w));
          if (!seen[y]) {
            seen[y] = 1;
            queue.push_back(y);
          }
        }
      }
    }
    earlier_.assign(k, {});
    for (std::size_t p = 0; p < k; ++p) {
      int x = order_[p];
      for (Vertex w : h_.neighbors(h_.vertices()[x])) {
        int y = static_cast<int>(h_.index_of(w));
        if (rank[y] < static_cast<int>(p)) earlier_[p].push_back(y);
      }
    }
  }

  Mask neighbourhood(Mask s) const {
    Mask out = 0;
    for (Mask r = s; r; r &= r - 1) out |= adj_[std::countr_zero(r)];
    return out & ~s;
  }

  bool place(std::size_t p, Mask free) {
    if (p == order_.size()) return true;
    if (static_cast<std::size_t>(std::popcount(free)) < order_.size() - p) return false;
    const int x = order_[p];
    const auto& need = earlier_[p];
    Mask roots = free;
    if (!need.empty()) roots &= neighbourhood(sets_[need.front()]);
    Mask excluded = 0;
    for (Mask r = roots; r; r &= r - 1) {
      int root = std::countr_zero(r);
      Mask bit = Mask{1} << root;
      // Sets whose lowest vertex among `roots` is `root`.
      Mask allowed = free & ~excluded;
      bool found = grow(bit, adj_[root] & allowed & ~bit, allowed, 0, [&](Mask set) {
        for (int y : need) {
          if (!(neighbourhood(sets_[y]) & set)) return false;
        }
        sets_[x] = set;
        return place(p + 1, free & ~set);
      });
      if (found) return true;
      excluded |= bit;
    }
    sets_[x] = 0;
    return false;
  }

  // Enumerates each connected superset of `set` inside `allowed` once.
  bool grow(Mask set, Mask ext, Mask allowed, Mask banned, const std::function<bool(Mask)>& visit) {
    if (visit(set)) return true;
    Mask cand = ext;
    while (cand) {
      Mask w = cand & (0 - cand);
      cand &= ~w;
      Mask grown = set | w;
      Mask next_ext = (cand | neighbourhood(grown)) & allowed & ~grown & ~banned;
      if (grow(grown, next_ext, allowed, banned, visit)) return true;
      banned |= w;
    }
    return false;
  }

  const Graph& h_;
  const Graph& g_;
  std::vector<Mask> adj_;
  std::vector<int> order_;
  std::vector<std::vector<int>> earlier_;
  std::vector<Mask> sets_;
};

std::vector<Vertex> spanning_order(const Graph& g, const std::vector<Vertex>& set) {
  // BFS inside the branch set from its smallest vertex.
  std::vector<Vertex> out{set.front()};
  std::vector<char> in(set.size(), 0);
  in[0] = 1;
  for (std::size_t q = 0; q < out.size(); ++q) {
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (!in[i] && g.adjacent(out[q], set[i])) {
        in[i] = 1;
        out.push_back(set[i]);
      }
    }
  }
  return out;
}

}  // namespace

std::optional<MinorModel> find_minor(const Graph& h, const Graph& g) {
  if (g.order() > kMinorGuard) {
    throw CapabilityError("find_minor: host limited to " + std::to_string(kMinorGuard) + " vertices");
  }
  if (h.order() > g.order()) return std::nullopt;
  BranchSetSearch search(h, g);
  auto sets = search.run();
  if (!sets) return std::nullopt;

  MinorModel model;
  std::vector<char> used(g.order(), 0);
  for (Mask m : *sets) {
    std::vector<Vertex> bs;
    for (Mask r = m; r; r &= r - 1) {
      int i = std::countr_zero(r);
      used[i] = 1;
      bs.push_back(g.vertices()[i]);
    }
    model.branch_sets.push_back(std::move(bs));
  }
  Graph cur = g;
  auto& steps = model.script.steps;
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (used[i]) continue;
    steps.push_back({MinorStep::Kind::delete_vertex, g.vertices()[i], 0});
    cur = without_vertex(cur, g.vertices()[i]);
  }
  model.image.assign(h.order(), 0);
  for (std::size_t x = 0; x < h.order(); ++x) {
    auto seq = spanning_order(g, model.branch_sets[x]);
    Vertex rep = seq.front();
    for (std::size_t k = 1; k < seq.size(); ++k) {
      steps.push_back({MinorStep::Kind::contract_edge, rep, seq[k]});
      Vertex z = cur.fresh_id();
      cur = merge_pair(cur, rep, seq[k]);
      rep = z;
    }
    model.image[x] = rep;
  }
  for (std::size_t a = 0; a < h.order(); ++a) {
    for (std::size_t b = a + 1; b < h.order(); ++b) {
      Vertex ra = model.image[a], rb = model.image[b];
      if (cur.adjacent(ra, rb) && !h.adjacent(h.vertices()[a], h.vertices()[b])) {
        steps.push_back({MinorStep::Kind::delete_edge, ra, rb});
        cur = without_edge(cur, ra, rb);
      }
    }
  }
  std::vector<Vertex> onto(model.image);
  if (!(relabeled(h, onto) == cur)) {
    throw InconsistencyError("find_minor: witness script does not reproduce H");
  }
  return model;
}

bool is_minor(const Graph& h, const Graph& g) { return find_minor(h, g).has_value(); }

bool classify_pathwidth_le_1(const Graph& g) {
  return !is_minor(generate(GraphKind::complete, {3}), g) &&
         !is_minor(generate(GraphKind::incidence_of_star), g);
}

bool classify_treewidth_le(const Graph& g, int k) {
  if (k != 1 && k != 2) throw ParameterError("classify_treewidth_le: k must be 1 or 2");
  if (g.order() > kMinorGuard) {
    throw CapabilityError("classify_treewidth_le: limited to " + std::to_string(kMinorGuard) +
                          " vertices");
  }
  return !is_minor(generate(GraphKind::complete, {k + 2}), g);
}

}  // namespace widthlab
