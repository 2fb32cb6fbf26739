#include "widthlab/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace widthlab {

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph::Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
  auto data = std::make_shared<Data>();
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    throw ParameterError("graph: repeated vertex id");
  }
  if (!vertices.empty() && vertices.front() < 0) {
    throw ParameterError("graph: negative vertex id");
  }
  data->vertices = std::move(vertices);
  data->adjacency.resize(data->vertices.size());
  auto position = [&](Vertex v) -> std::size_t {
    auto it = std::lower_bound(data->vertices.begin(), data->vertices.end(), v);
    if (it == data->vertices.end() || *it != v) {
      throw ParameterError("graph: edge endpoint " + std::to_string(v) +
                           " is not a vertex");
    }
    return static_cast<std::size_t>(it - data->vertices.begin());
  };
  for (const Edge& e : edges) {
    if (e.u == e.v) {
      throw ParameterError("graph: loop at vertex " + std::to_string(e.u));
    }
    data->adjacency[position(e.u)].push_back(e.v);
    data->adjacency[position(e.v)].push_back(e.u);
  }
  std::size_t degree_sum = 0;
  for (auto& row : data->adjacency) {
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
    degree_sum += row.size();
  }
  data->edge_count = degree_sum / 2;
  data_ = std::move(data);
}

Graph Graph::with_order(int n, const std::vector<Edge>& edges) {
  if (n < 0) throw ParameterError("graph: negative order");
  std::vector<Vertex> vs(static_cast<std::size_t>(n));
  std::iota(vs.begin(), vs.end(), 0);
  return Graph(std::move(vs), edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(size());
  for (std::size_t i = 0; i < order(); ++i) {
    Vertex u = data_->vertices[i];
    for (Vertex v : data_->adjacency[i]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool Graph::has_vertex(Vertex v) const {
  return std::binary_search(data_->vertices.begin(), data_->vertices.end(), v);
}

std::size_t Graph::index_of(Vertex v) const {
  auto it = std::lower_bound(data_->vertices.begin(), data_->vertices.end(), v);
  if (it == data_->vertices.end() || *it != v) {
    throw ParameterError("unknown vertex " + std::to_string(v));
  }
  return static_cast<std::size_t>(it - data_->vertices.begin());
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return false;
  const auto& row = data_->adjacency[index_of(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  return data_->adjacency[index_of(v)];
}

Vertex Graph::max_id() const {
  return data_->vertices.empty() ? -1 : data_->vertices.back();
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->vertices == b.data_->vertices &&
         a.data_->adjacency == b.data_->adjacency;
}

// ---------------------------------------------------------------------------
// Generators

namespace {

struct KindInfo {
  GraphKind kind;
  const char* name;
  std::size_t arity;
};

constexpr KindInfo kKinds[] = {
    {GraphKind::path, "path", 1},
    {GraphKind::cycle, "cycle", 1},
    {GraphKind::complete, "complete", 1},
    {GraphKind::star, "star", 1},
    {GraphKind::complete_bipartite, "kab", 2},
    {GraphKind::grid, "grid", 2},
    {GraphKind::isolated, "isolated", 1},
    {GraphKind::caterpillar, "caterpillar", 0},
    {GraphKind::incidence_of_star, "ik13", 0},
    {GraphKind::empty, "empty", 0},
};

const KindInfo& info(GraphKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw ParameterError("unknown graph kind");
}

Graph path_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph::with_order(n, es);
}

Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  }
  return Graph::with_order(n, es);
}

}  // namespace

GraphKind parse_graph_kind(const std::string& name) {
  for (const auto& k : kKinds) {
    if (name == k.name) return k.kind;
  }
  throw ParameterError("unknown graph kind '" + name + "'");
}

std::string to_string(GraphKind kind) { return info(kind).name; }

std::size_t graph_kind_arity(GraphKind kind) { return info(kind).arity; }

Graph generate(GraphKind kind, const std::vector<int>& params) {
  const KindInfo& k = info(kind);
  if (params.size() != k.arity) {
    throw ParameterError(std::string(k.name) + " expects " +
                         std::to_string(k.arity) + " parameter(s), got " +
                         std::to_string(params.size()));
  }
  for (int p : params) {
    if (p <= 0) {
      throw ParameterError(std::string(k.name) + ": parameters must be positive");
    }
  }
  switch (kind) {
    case GraphKind::path:
      return path_graph(params[0]);
    case GraphKind::cycle: {
      int n = params[0];
      if (n < 3) throw ParameterError("cycle: needs at least 3 vertices");
      std::vector<Edge> es;
      for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
      return Graph::with_order(n, es);
    }
    case GraphKind::complete:
      return complete_graph(params[0]);
    case GraphKind::star: {
      std::vector<Edge> es;
      for (int i = 1; i <= params[0]; ++i) es.emplace_back(0, i);
      return Graph::with_order(params[0] + 1, es);
    }
    case GraphKind::complete_bipartite: {
      int a = params[0], b = params[1];
      std::vector<Edge> es;
      for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
      }
      return Graph::with_order(a + b, es);
    }
    case GraphKind::grid: {
      int rows = params[0], cols = params[1];
      std::vector<Edge> es;
      for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
          int id = r * cols + c;
          if (c + 1 < cols) es.emplace_back(id, id + 1);
          if (r + 1 < rows) es.emplace_back(id, id + cols);
        }
      }
      return Graph::with_order(rows * cols, es);
    }
    case GraphKind::isolated:
      return Graph::with_order(params[0], {});
    case GraphKind::caterpillar:
      // a-b-c-d-e with c-f
      return Graph::with_order(6, {{0, 1}, {1, 2}, {2, 5}, {2, 3}, {3, 4}});
    case GraphKind::incidence_of_star:
      // a-b-c-d-e with c-f-g
      return Graph::with_order(7,
                               {{0, 1}, {1, 2}, {2, 5}, {5, 6}, {2, 3}, {3, 4}});
    case GraphKind::empty:
      return Graph();
  }
  throw ParameterError("unknown graph kind");
}

Graph complete_binary_tree(int levels) {
  if (levels <= 0) throw ParameterError("binary tree: levels must be positive");
  int n = (1 << levels) - 1;
  std::vector<Edge> es;
  for (int i = 1; i < n; ++i) es.emplace_back((i - 1) / 2, i);
  return Graph::with_order(n, es);
}

// ---------------------------------------------------------------------------
// Queries

std::vector<Vertex> neighborhood(const Graph& g, Vertex v) {
  return g.neighbors(v);
}

int max_degree(const Graph& g) {
  if (g.empty()) throw DomainError("max_degree: empty graph");
  int best = 0;
  for (Vertex v : g.vertices()) best = std::max(best, g.degree(v));
  return best;
}

int min_degree(const Graph& g) {
  if (g.empty()) throw DomainError("min_degree: empty graph");
  int best = static_cast<int>(g.order());
  for (Vertex v : g.vertices()) best = std::min(best, g.degree(v));
  return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (seen[i]) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{g.vertices()[i]};
    seen[i] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        std::size_t j = g.index_of(y);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == g.order();
}

bool is_tree(const Graph& g) {
  return !g.empty() && is_connected(g) && g.size() + 1 == g.order();
}

bool is_clique(const Graph& g, const std::vector<Vertex>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!g.has_vertex(vs[i])) return false;
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.adjacent(vs[i], vs[j])) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs) {
  std::vector<Vertex> keep = vs;
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<Edge> es;
  for (Vertex u : keep) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && std::binary_search(keep.begin(), keep.end(), v)) {
        es.emplace_back(u, v);
      }
    }
  }
  return Graph(std::move(keep), es);
}

std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
  // Hopcroft-Tarjan with an explicit edge stack.
  const std::size_t n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Edge> edge_stack;
  int timer = 0;

  std::function<void(std::size_t, int)> dfs = [&](std::size_t i, int parent) {
    disc[i] = low[i] = timer++;
    Vertex u = g.vertices()[i];
    for (Vertex w : g.neighbors(u)) {
      std::size_t j = g.index_of(w);
      if (disc[j] == -1) {
        edge_stack.emplace_back(u, w);
        dfs(j, static_cast<int>(i));
        low[i] = std::min(low[i], low[j]);
        if (low[j] >= disc[i]) {
          std::vector<Vertex> block;
          Edge top;
          do {
            top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top.u);
            block.push_back(top.v);
          } while (!(top == Edge(u, w)));
          std::sort(block.begin(), block.end());
          block.erase(std::unique(block.begin(), block.end()), block.end());
          blocks.push_back(std::move(block));
        }
      } else if (static_cast<int>(j) != parent && disc[j] < disc[i]) {
        edge_stack.emplace_back(u, w);
        low[i] = std::min(low[i], disc[j]);
      }
    }
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (disc[i] != -1) continue;
    if (g.neighbors(g.vertices()[i]).empty()) {
      disc[i] = timer++;
      blocks.push_back({g.vertices()[i]});
      continue;
    }
    dfs(i, -1);
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

Graph relabeled(const Graph& g, const std::vector<Vertex>& mapping) {
  if (mapping.size() != g.order()) {
    throw ParameterError("relabel: mapping size differs from graph order");
  }
  std::vector<Edge> es;
  for (const Edge& e : g.edges()) {
    es.emplace_back(mapping[g.index_of(e.u)], mapping[g.index_of(e.v)]);
  }
  return Graph(mapping, es);
}

Graph compacted(const Graph& g) {
  std::vector<Vertex> mapping(g.order());
  std::iota(mapping.begin(), mapping.end(), 0);
  return relabeled(g, mapping);
}

}  // namespace widthlab
