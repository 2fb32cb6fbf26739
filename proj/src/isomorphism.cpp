#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

#include "widthlab/graph.hpp"

namespace widthlab {

namespace {

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out;
  for (Vertex v : g.vertices()) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kIsomorphismGuard || b.order() > kIsomorphismGuard) {
    throw CapabilityError("is_isomorphic: graphs limited to " +
                          std::to_string(kIsomorphismGuard) + " vertices");
  }
  if (a.order() != b.order() || a.size() != b.size()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;

  const std::size_t n = a.order();
  std::vector<std::uint32_t> adj_a(n, 0), adj_b(n, 0);
  std::vector<int> deg_a(n), deg_b(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Vertex w : a.neighbors(a.vertices()[i])) adj_a[i] |= 1u << a.index_of(w);
    for (Vertex w : b.neighbors(b.vertices()[i])) adj_b[i] |= 1u << b.index_of(w);
    deg_a[i] = a.degree(a.vertices()[i]);
    deg_b[i] = b.degree(b.vertices()[i]);
  }

  // Map vertices of `a` in decreasing degree order; each candidate image
  // must match the degree and the adjacency to every vertex mapped so far.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return deg_a[x] > deg_a[y]; });

  std::vector<int> image(n, -1);
  std::uint32_t used = 0;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    std::size_t x = order[depth];
    for (std::size_t y = 0; y < n; ++y) {
      if ((used >> y) & 1u || deg_b[y] != deg_a[x]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth && ok; ++d) {
        std::size_t px = order[d];
        bool ea = (adj_a[x] >> px) & 1u;
        bool eb = (adj_b[y] >> image[px]) & 1u;
        ok = ea == eb;
      }
      if (!ok) continue;
      image[x] = static_cast<int>(y);
      used |= 1u << y;
      if (extend(depth + 1)) return true;
      used &= ~(1u << y);
      image[x] = -1;
    }
    return false;
  };
  return extend(0);
}

}  // namespace widthlab
