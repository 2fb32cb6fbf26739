#pragma once

#include <map>
#include <optional>
#include <vector>

#include "widthlab/decomposition.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/solvers.hpp"

namespace widthlab {

/// Result graph of a unary operation. Surviving vertices keep their ids
/// unless listed in vertex_map with a different image; vertices created by
/// the operation get fresh ids (max id + 1, + 2, ... of the input) and are
/// listed in new_ids.
struct UnaryResult {
  Graph graph;
  std::map<Vertex, Vertex> vertex_map;  // old id -> new id, survivors only
  std::vector<Vertex> new_ids;
  std::vector<Edge> origin_edges;  // line graph: vertex i stands for origin_edges[i]
};

/// A decomposition of an operation's result together with the width the
/// corresponding theorem guarantees for it.
template <class Decomposition>
struct Carried {
  Decomposition decomposition;
  int claimed_bound;
};

using CarriedTree = Carried<TreeDecomposition>;
using CarriedPath = Carried<PathDecomposition>;

// Every transformer below takes a valid decomposition of a nonempty graph
// (PreconditionError otherwise), computes the result graph itself and
// returns a decomposition of it. Parameter checks match the graph-only
// overload.

UnaryResult delete_vertex(const Graph& g, Vertex v);
CarriedTree delete_vertex(const TreeDecomposition& td, Vertex v);
CarriedPath delete_vertex(const PathDecomposition& pd, Vertex v);

/// G +_N v. v defaults to the fresh id.
UnaryResult add_vertex(const Graph& g, const std::vector<Vertex>& nbrs,
                       std::optional<Vertex> v = std::nullopt);
/// With a single neighbour u the tree transformer attaches {v, u} to the
/// lowest bag containing u (bound max(width, 1)); otherwise v joins every bag.
CarriedTree add_vertex(const TreeDecomposition& td, const std::vector<Vertex>& nbrs,
                       std::optional<Vertex> v = std::nullopt);
CarriedPath add_vertex(const PathDecomposition& pd, const std::vector<Vertex>& nbrs,
                       std::optional<Vertex> v = std::nullopt);

UnaryResult delete_edge(const Graph& g, Vertex u, Vertex v);
CarriedTree delete_edge(const TreeDecomposition& td, Vertex u, Vertex v);
CarriedPath delete_edge(const PathDecomposition& pd, Vertex u, Vertex v);

UnaryResult add_edge(const Graph& g, Vertex u, Vertex v);
CarriedTree add_edge(const TreeDecomposition& td, Vertex u, Vertex v);
CarriedPath add_edge(const PathDecomposition& pd, Vertex u, Vertex v);

/// Ident(G, v, w): v and w replaced by a fresh vertex z adjacent to both
/// neighbourhoods.
UnaryResult identify_vertices(const Graph& g, Vertex v, Vertex w);
CarriedTree identify_vertices(const TreeDecomposition& td, Vertex v, Vertex w);
CarriedPath identify_vertices(const PathDecomposition& pd, Vertex v, Vertex w);

/// Identification of adjacent vertices.
UnaryResult contract_edge(const Graph& g, Vertex v, Vertex w);
CarriedTree contract_edge(const TreeDecomposition& td, Vertex v, Vertex w);
CarriedPath contract_edge(const PathDecomposition& pd, Vertex v, Vertex w);

/// Subdiv(G, v, w): the edge vw replaced by the path v u w.
UnaryResult subdivide_edge(const Graph& g, Vertex v, Vertex w, std::optional<Vertex> u = std::nullopt);
CarriedTree subdivide_edge(const TreeDecomposition& td, Vertex v, Vertex w,
                           std::optional<Vertex> u = std::nullopt);
CarriedPath subdivide_edge(const PathDecomposition& pd, Vertex v, Vertex w,
                           std::optional<Vertex> u = std::nullopt);

/// I(G): every edge subdivided once. The vertex on the i-th edge (sorted
/// order) gets id max_id + 1 + i.
UnaryResult incidence_graph(const Graph& g);
CarriedTree incidence_graph(const TreeDecomposition& td);
CarriedPath incidence_graph(const PathDecomposition& pd);

/// Replays the steps; ScriptError names the 1-based step that does not apply.
UnaryResult apply_minor_script(const Graph& g, const MinorScript& script);
CarriedTree apply_minor_script(const TreeDecomposition& td, const MinorScript& script);
CarriedPath apply_minor_script(const PathDecomposition& pd, const MinorScript& script);

/// G^d: u, v adjacent iff their distance is at most d. ParameterError for d < 1.
UnaryResult graph_power(const Graph& g, int d);
CarriedTree graph_power(const TreeDecomposition& td, int d);
CarriedPath graph_power(const PathDecomposition& pd, int d);
/// Delta * sum_{i<d} (Delta-1)^i, an upper bound on the degree in G^d.
long long power_degree_bound(const Graph& g, int d);

/// L(G) on vertices 0..m-1, one per edge in sorted edge order.
UnaryResult line_graph(const Graph& g);
CarriedTree line_graph(const TreeDecomposition& td);
CarriedPath line_graph(const PathDecomposition& pd);

// No width bound exists for these three, so there is no transformer.
UnaryResult edge_complement(const Graph& g);
UnaryResult local_complement(const Graph& g, Vertex v);
UnaryResult seidel_complement(const Graph& g, Vertex v);

/// S(G, v): adjacency between v and every other vertex toggled.
UnaryResult seidel_switch(const Graph& g, Vertex v);
CarriedTree seidel_switch(const TreeDecomposition& td, Vertex v);
CarriedPath seidel_switch(const PathDecomposition& pd, Vertex v);

UnaryResult switch_sequence(const Graph& g, const std::vector<Vertex>& seq);
CarriedTree switch_sequence(const TreeDecomposition& td, const std::vector<Vertex>& seq);
CarriedPath switch_sequence(const PathDecomposition& pd, const std::vector<Vertex>& seq);

}  // namespace widthlab
