#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>

#include "widthlab/solvers.hpp"

namespace widthlab {

namespace {

using Mask = std::uint32_t;

std::vector<Mask> masks(const Graph& g, bool complement) {
  const std::size_t n = g.order();
  std::vector<Mask> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex w : g.neighbors(g.vertices()[i])) adj[i] |= Mask{1} << g.index_of(w);
  }
  if (complement) {
    const Mask full = n == 0 ? 0 : (Mask{1} << n) - 1;
    for (std::size_t i = 0; i < n; ++i) adj[i] = ~adj[i] & full & ~(Mask{1} << i);
  }
  return adj;
}

int max_clique(const std::vector<Mask>& adj, Mask cand, int size) {
  if (!cand) return size;
  int best = size;
  while (cand) {
    if (size + std::popcount(cand) <= best) break;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    best = std::max(best, max_clique(adj, cand & adj[v], size + 1));
  }
  return best;
}

bool colorable(const std::vector<Mask>& adj, const std::vector<int>& order, std::size_t pos,
               std::vector<int>& color, int k) {
  if (pos == order.size()) return true;
  int v = order[pos];
  for (int c = 0; c < k; ++c) {
    bool clash = false;
    for (Mask r = adj[v]; r && !clash; r &= r - 1) clash = color[std::countr_zero(r)] == c;
    if (clash) continue;
    color[v] = c;
    if (colorable(adj, order, pos + 1, color, k)) return true;
    color[v] = -1;
    // colors above the largest used so far are interchangeable
    if (c > *std::max_element(color.begin(), color.end())) break;
  }
  return false;
}

bool connected_after_removal(const std::vector<Mask>& adj, Mask keep) {
  if (!keep) return true;
  Mask reach = keep & (0 - keep);
  Mask frontier = reach;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    next &= keep & ~reach;
    reach |= next;
    frontier = next;
  }
  return reach == keep;
}

}  // namespace

GraphInvariants graph_invariants(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kInvariantGuard) {
    throw CapabilityError("graph_invariants: limited to " + std::to_string(kInvariantGuard) +
                          " vertices");
  }
  GraphInvariants out;
  if (n == 0) return out;
  const Mask full = (Mask{1} << n) - 1;
  auto adj = masks(g, false);
  auto co = masks(g, true);
  out.omega = max_clique(adj, full, 0);
  out.alpha = max_clique(co, full, 0);

  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return std::popcount(adj[a]) > std::popcount(adj[b]); });
  for (int k = std::max(out.omega, 1);; ++k) {
    std::vector<int> color(n, -1);
    if (colorable(adj, order, 0, color, k)) {
      out.chi = k;
      break;
    }
  }

  if (g.size() == n * (n - 1) / 2) {
    out.connectivity = static_cast<int>(n) - 1;
  } else {
    // Smallest separator: removal leaves a disconnected graph.
    int best = static_cast<int>(n);
    for (Mask s = 0; s <= full; ++s) {
      int size = std::popcount(s);
      if (size >= best || size > static_cast<int>(n) - 2) continue;
      if (!connected_after_removal(adj, full & ~s)) best = size;
    }
    out.connectivity = best;
  }
  return out;
}

std::vector<Graph> exhaustive_graphs(int n) {
  if (n < 0) throw ParameterError("exhaustive_graphs: negative order");
  if (static_cast<std::size_t>(n) > kExhaustiveGuard) {
    throw CapabilityError("exhaustive_graphs: limited to " + std::to_string(kExhaustiveGuard) +
                          " vertices");
  }
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  std::vector<Graph> out;
  std::map<std::vector<int>, std::vector<std::size_t>> buckets;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::vector<Edge> es;
    std::vector<int> key(n + 1, 0);
    for (std::size_t b = 0; b < slots.size(); ++b) {
      if ((mask >> b) & 1u) {
        es.emplace_back(slots[b].first, slots[b].second);
        ++key[slots[b].first];
        ++key[slots[b].second];
      }
    }
    std::sort(key.begin(), key.end() - 1);
    key.back() = static_cast<int>(es.size());
    Graph g = Graph::with_order(n, es);
    auto& bucket = buckets[key];
    bool seen = std::any_of(bucket.begin(), bucket.end(),
                            [&](std::size_t i) { return is_isomorphic(out[i], g); });
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace widthlab
