#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "widthlab/errors.hpp"

namespace widthlab {

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u;
  Vertex v;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph over non-negative integer ids.
///
/// Copies share storage. Duplicate edges passed to the constructor are
/// merged; loops, negative ids, repeated vertices and edges with an unknown
/// endpoint are rejected with ParameterError.
class Graph {
 public:
  Graph();
  Graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges);

  /// Vertices 0..n-1 with the given edges.
  static Graph with_order(int n, const std::vector<Edge>& edges);

  const std::vector<Vertex>& vertices() const { return data_->vertices; }
  std::vector<Edge> edges() const;
  std::size_t order() const { return data_->vertices.size(); }
  std::size_t size() const { return data_->edge_count; }
  bool empty() const { return data_->vertices.empty(); }

  bool has_vertex(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;
  /// Sorted neighbors; ParameterError for an unknown vertex.
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  /// Position of v in vertices(); ParameterError for an unknown vertex.
  std::size_t index_of(Vertex v) const;

  /// Largest id, or -1 for the empty graph.
  Vertex max_id() const;
  /// max_id() + 1: the id given to vertices created by transformations.
  Vertex fresh_id() const { return max_id() + 1; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data {
    std::vector<Vertex> vertices;
    std::vector<std::vector<Vertex>> adjacency;
    std::size_t edge_count = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// Named special graphs. Parameter arity per kind is fixed, see generate().
enum class GraphKind {
  path,                // P_n: n
  cycle,               // C_n: n >= 3
  complete,            // K_n: n
  star,                // K_{1,l}: l; center 0
  complete_bipartite,  // K_{a,b}: a b; parts 0..a-1 and a..a+b-1
  grid,                // n x m grid: n m; row-major ids r*m + c
  isolated,            // I_n: n
  caterpillar,         // fixed 6-vertex caterpillar C (a..f = 0..5)
  incidence_of_star,   // I(K_{1,3}) (a..g = 0..6)
  empty,               // no vertices
};

/// Ids are always 0..n-1. ParameterError on arity mismatch or a
/// nonpositive parameter.
Graph generate(GraphKind kind, const std::vector<int>& params = {});
GraphKind parse_graph_kind(const std::string& name);
std::string to_string(GraphKind kind);
std::size_t graph_kind_arity(GraphKind kind);

/// Complete binary tree with the given number of levels (2^levels - 1
/// vertices, heap order: children of i are 2i+1 and 2i+2).
Graph complete_binary_tree(int levels);

/// Set of neighbors of v, v itself excluded.
std::vector<Vertex> neighborhood(const Graph& g, Vertex v);
/// DomainError for the empty graph.
int max_degree(const Graph& g);
/// DomainError for the empty graph.
int min_degree(const Graph& g);

std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_forest(const Graph& g);
/// Connected forest with at least one vertex.
bool is_tree(const Graph& g);
bool is_clique(const Graph& g, const std::vector<Vertex>& vs);

/// Subgraph induced by the given vertices (ids kept).
Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& vs);
/// Vertex sets of the blocks; bridges give 2-vertex blocks and isolated
/// vertices singleton blocks. Sorted.
std::vector<std::vector<Vertex>> biconnected_components(const Graph& g);

/// Same graph with vertex i of vertices() renamed to i.
Graph compacted(const Graph& g);
/// Renames vertices by `mapping` (indexed by position in vertices()).
Graph relabeled(const Graph& g, const std::vector<Vertex>& mapping);

inline constexpr std::size_t kIsomorphismGuard = 10;

/// Exact test by backtracking with degree pruning. CapabilityError when
/// either graph has more than kIsomorphismGuard vertices.
bool is_isomorphic(const Graph& a, const Graph& b);

/// PACE `.gr` text. Reading yields ids 0..n-1; writing maps the i-th vertex
/// to file id i+1 and emits edges sorted lexicographically.
Graph read_gr(std::istream& in);
Graph parse_gr(const std::string& text);
void write_gr(std::ostream& out, const Graph& g);
std::string format_gr(const Graph& g);

}  // namespace widthlab
