#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>

#include "widthlab/solvers.hpp"

namespace widthlab {

std::string to_string(WidthParameter p) {
  return p == WidthParameter::treewidth ? "tw" : "pw";
}

std::string to_string(SolverMethod m) {
  return m == SolverMethod::subset_dp ? "subset-dp" : "ordering-enumeration";
}

WidthParameter parse_width_parameter(const std::string& name) {
  if (name == "tw") return WidthParameter::treewidth;
  if (name == "pw") return WidthParameter::pathwidth;
  throw ParameterError("unknown width parameter '" + name + "' (tw|pw)");
}

namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    for (Vertex w : g.neighbors(g.vertices()[i])) adj[i] |= Mask{1} << g.index_of(w);
  }
  return adj;
}

void guard(const Graph& g, std::size_t limit, const char* what) {
  if (g.order() > limit) {
    throw CapabilityError(std::string(what) + ": limited to " + std::to_string(limit) +
                          " vertices, got " + std::to_string(g.order()));
  }
}

// Vertices outside s and v that are reachable from v through s.
int q_value(const std::vector<Mask>& adj, Mask s, int v) {
  Mask reach = Mask{1} << v;
  Mask frontier = reach;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= s & ~reach;
    reach |= next;
    frontier = next;
  }
  Mask out = 0;
  for (Mask r = reach; r; r &= r - 1) out |= adj[std::countr_zero(r)];
  return std::popcount(out & ~s & ~(Mask{1} << v));
}

Mask boundary(const std::vector<Mask>& adj, Mask s) {
  Mask out = 0;
  for (Mask r = s; r; r &= r - 1) {
    int u = std::countr_zero(r);
    if (adj[u] & ~s) out |= Mask{1} << u;
  }
  return out;
}

TreewidthReport treewidth_dp(const Graph& g) {
  const int n = static_cast<int>(g.order());
  auto adj = adjacency_masks(g);
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<std::int8_t> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  for (Mask s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (Mask r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      Mask rest = s & ~(Mask{1} << v);
      int c = std::max<int>(tw[rest], q_value(adj, rest, v));
      best = std::min(best, c);
    }
    tw[s] = static_cast<std::int8_t>(best);
  }
  // Backtrack: the chosen v is eliminated last among s.
  std::vector<Vertex> order(n);
  Mask s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    for (Mask r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      Mask rest = s & ~(Mask{1} << v);
      if (std::max<int>(tw[rest], q_value(adj, rest, v)) == tw[s]) {
        order[pos] = g.vertices()[v];
        s = rest;
        break;
      }
    }
  }
  Width value = n == 0 ? Width{} : Width{tw[full]};
  return {WidthParameter::treewidth, value, decomposition_from_elimination(g, order),
          SolverMethod::subset_dp};
}

PathwidthReport pathwidth_dp(const Graph& g) {
  const int n = static_cast<int>(g.order());
  auto adj = adjacency_masks(g);
  const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
  std::vector<std::int8_t> vs(std::size_t{1} << n, 0);
  for (Mask s = 1; s <= full; ++s) {
    int best = std::numeric_limits<int>::max();
    for (Mask r = s; r; r &= r - 1) best = std::min<int>(best, vs[s & ~(r & (0 - r))]);
    vs[s] = static_cast<std::int8_t>(std::max(best, std::popcount(boundary(adj, s))));
  }
  std::vector<Vertex> layout(n);
  Mask s = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    int target = vs[s];
    for (Mask r = s; r; r &= r - 1) {
      int v = std::countr_zero(r);
      Mask rest = s & ~(Mask{1} << v);
      if (std::max<int>(vs[rest], std::popcount(boundary(adj, s))) == target) {
        layout[pos] = g.vertices()[v];
        s = rest;
        break;
      }
    }
  }
  Width value = n == 0 ? Width{} : Width{vs[full]};
  return {WidthParameter::pathwidth, value, decomposition_from_layout(g, layout),
          SolverMethod::subset_dp};
}

int elimination_width(const std::vector<Mask>& adj, const std::vector<int>& order) {
  std::vector<Mask> fill = adj;
  Mask gone = 0;
  int w = -1;
  for (int v : order) {
    Mask nb = fill[v] & ~gone;
    w = std::max(w, std::popcount(nb));
    for (Mask r = nb; r; r &= r - 1) fill[std::countr_zero(r)] |= nb & ~(Mask{1} << std::countr_zero(r));
    gone |= Mask{1} << v;
  }
  return w;
}

int layout_width(const std::vector<Mask>& adj, const std::vector<int>& layout) {
  Mask prefix = 0;
  int w = 0;
  for (int v : layout) {
    prefix |= Mask{1} << v;
    w = std::max(w, std::popcount(boundary(adj, prefix)));
  }
  return w;
}

template <class WidthOf>
std::vector<Vertex> best_permutation(const Graph& g, WidthOf width_of) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = perm;
  int best_w = std::numeric_limits<int>::max();
  do {
    int w = width_of(perm);
    if (w < best_w) {
      best_w = w;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<Vertex> out;
  for (int i : best) out.push_back(g.vertices()[i]);
  return out;
}

template <class Report>
Report checked(Report r, const char* what) {
  if (!r.certificate.valid() || width(r.certificate) != r.value) {
    throw InconsistencyError(std::string(what) + ": certificate does not match the value");
  }
  return r;
}

}  // namespace

TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order) {
  const std::size_t n = g.order();
  if (order.size() != n) throw ParameterError("elimination order must list every vertex once");
  std::vector<int> pos(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t idx = g.index_of(order[i]);
    if (pos[idx] >= 0) throw ParameterError("elimination order repeats a vertex");
    pos[idx] = static_cast<int>(i);
  }
  if (n == 0) return trivial_decomposition(g);
  // Later neighbours in the fill graph, by elimination position.
  std::vector<std::vector<int>> later(n);
  for (const Edge& e : g.edges()) {
    int a = pos[g.index_of(e.u)], b = pos[g.index_of(e.v)];
    later[std::min(a, b)].push_back(std::max(a, b));
  }
  std::vector<Bag> bags(n);
  std::vector<Edge> tree;
  for (std::size_t i = 0; i < n; ++i) {
    auto& nb = later[i];
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    Bag bag{order[i]};
    for (int j : nb) bag.push_back(order[j]);
    bags[i] = std::move(bag);
    if (!nb.empty()) {
      int parent = nb.front();
      for (std::size_t k = 1; k < nb.size(); ++k) later[parent].push_back(nb[k]);
      tree.emplace_back(static_cast<Vertex>(i), parent);
    } else if (i + 1 < n) {
      tree.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(n - 1));
    }
  }
  return TreeDecomposition(g, Graph::with_order(static_cast<int>(n), tree), std::move(bags));
}

PathDecomposition decomposition_from_layout(const Graph& g, const std::vector<Vertex>& layout) {
  const std::size_t n = g.order();
  if (layout.size() != n) throw ParameterError("layout must list every vertex once");
  std::vector<char> placed(n, 0);
  std::vector<int> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = g.degree(g.vertices()[i]);
  std::vector<Bag> bags;
  Bag frontier;  // placed vertices with an unplaced neighbour
  for (Vertex v : layout) {
    std::size_t idx = g.index_of(v);
    if (placed[idx]) throw ParameterError("layout repeats a vertex");
    Bag bag = frontier;
    bag.push_back(v);
    bags.push_back(std::move(bag));
    placed[idx] = 1;
    for (Vertex w : g.neighbors(v)) {
      if (placed[g.index_of(w)]) --remaining[g.index_of(w)];
    }
    remaining[idx] = 0;
    for (Vertex w : g.neighbors(v)) {
      if (!placed[g.index_of(w)]) ++remaining[idx];
    }
    frontier.push_back(v);
    std::erase_if(frontier, [&](Vertex u) { return remaining[g.index_of(u)] == 0; });
  }
  if (n == 0) bags.push_back({});
  return PathDecomposition(g, std::move(bags));
}

TreewidthReport exact_treewidth(const Graph& g, SolverMethod method) {
  if (method == SolverMethod::subset_dp) {
    guard(g, kSubsetDpGuard, "exact_treewidth");
    return checked(treewidth_dp(g), "exact_treewidth");
  }
  guard(g, kEnumerationGuard, "exact_treewidth (enumeration)");
  auto adj = adjacency_masks(g);
  auto order = best_permutation(g, [&](const std::vector<int>& p) { return elimination_width(adj, p); });
  auto td = decomposition_from_elimination(g, order);
  Width value = width(td);
  return checked(TreewidthReport{WidthParameter::treewidth, value, std::move(td), method},
                 "exact_treewidth");
}

PathwidthReport exact_pathwidth(const Graph& g, SolverMethod method) {
  if (method == SolverMethod::subset_dp) {
    guard(g, kSubsetDpGuard, "exact_pathwidth");
    return checked(pathwidth_dp(g), "exact_pathwidth");
  }
  guard(g, kEnumerationGuard, "exact_pathwidth (enumeration)");
  auto adj = adjacency_masks(g);
  auto layout = best_permutation(g, [&](const std::vector<int>& p) { return layout_width(adj, p); });
  auto pd = decomposition_from_layout(g, layout);
  Width value = width(pd);
  return checked(PathwidthReport{WidthParameter::pathwidth, value, std::move(pd), method},
                 "exact_pathwidth");
}

}  // namespace widthlab
