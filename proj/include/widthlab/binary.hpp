#pragma once

#include <map>
#include <string>
#include <vector>

#include "widthlab/decomposition.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/unary.hpp"

namespace widthlab {

/// Result of combining two graphs. Unless noted otherwise the vertex of
/// rank i in G1 becomes i and the vertex of rank j in G2 becomes n1 + j.
struct CombineResult {
  Graph graph;
  std::map<Vertex, Vertex> left;   // G1 id -> result id
  std::map<Vertex, Vertex> right;  // G2 id -> result id
  std::vector<Vertex> new_ids;
};

// Combiners take valid decompositions of nonempty graphs
// (PreconditionError otherwise) and decompose the graph the matching
// graph-only operation returns.

/// G1 + G2. The combiner has width max(w1, w2).
CombineResult disjoint_union(const Graph& g1, const Graph& g2);
CarriedTree disjoint_union(const TreeDecomposition& d1, const TreeDecomposition& d2);
CarriedPath disjoint_union(const PathDecomposition& d1, const PathDecomposition& d2);

/// G1 (x) G2. The combiner extends the side reaching min(w1 + n2, w2 + n1).
CombineResult join(const Graph& g1, const Graph& g2);
CarriedTree join(const TreeDecomposition& d1, const TreeDecomposition& d2);
CarriedPath join(const PathDecomposition& d1, const PathDecomposition& d2);

/// Edge union over a common vertex set, ids unchanged. ParameterError if
/// the vertex sets differ. Widths of the result are not bounded by the
/// inputs, so there is no combiner.
Graph union_same_vertices(const Graph& g1, const Graph& g2);

/// G1[v/G2]. The G1 vertex of rank i keeps id i (the slot of v stays unused).
CombineResult substitute(const Graph& g1, Vertex v, const Graph& g2);
/// The better of the two constructions, bound min(w1 + n2, w2 + n1) - 1.
CarriedTree substitute(const TreeDecomposition& d1, Vertex v, const TreeDecomposition& d2);
CarriedPath substitute(const PathDecomposition& d1, Vertex v, const PathDecomposition& d2);
/// v replaced by N(v) on the G1 side, N(v) added to the G2 side, one
/// bridging tree edge. Bound max(w1 - 1, w2) + |N(v)|; v must not be isolated.
CarriedTree substitute_by_neighbors(const TreeDecomposition& d1, Vertex v, const TreeDecomposition& d2);

enum class ProductKind { cartesian, categorical, conormal, lexicographic, normal, symmetric_difference, rejection };

std::string to_string(ProductKind kind);
/// Accepts the names printed by to_string ("symmetric-difference" etc.).
ProductKind parse_product_kind(const std::string& name);
const std::vector<ProductKind>& all_product_kinds();

/// Vertex (rank i of G1, rank j of G2) becomes i * n2 + j.
CombineResult product(ProductKind kind, const Graph& g1, const Graph& g2);
/// Each vertex of G1 replaced by its n2 pairs; bound (w1 + 1) n2 - 1.
CarriedTree lexicographic_product(const TreeDecomposition& d1, const Graph& g2);
CarriedPath lexicographic_product(const PathDecomposition& d1, const Graph& g2);

/// G1 (+)_{v,w} G2: disjoint union with v and w identified into z = n1 + n2.
CombineResult one_sum(const Graph& g1, Vertex v, const Graph& g2, Vertex w);
/// Bridges a z-bag of each side; width max(w1, w2).
CarriedTree one_sum(const TreeDecomposition& d1, Vertex v, const TreeDecomposition& d2, Vertex w);
/// Concatenation in the best orientation; z is added to the bags between
/// its two intervals only if they do not touch. Bound max(w1, w2) + 1.
CarriedPath one_sum(const PathDecomposition& d1, Vertex v, const PathDecomposition& d2, Vertex w);

/// G1 ^ G2, built as the fold of 1-sums of G1 with copies of G2 plus a
/// dominating vertex. Vertex of rank i in G1 becomes i, vertex of rank j in
/// copy i becomes n1 + i * n2 + j. `right` maps G2 onto copy 0; new_ids
/// lists the vertices of the other copies.
CombineResult corona(const Graph& g1, const Graph& g2);
/// Bound max(w1, w2) + 1.
CarriedTree corona(const TreeDecomposition& d1, const TreeDecomposition& d2);
/// Bound max(w1, w2) + n1.
CarriedPath corona(const PathDecomposition& d1, const PathDecomposition& d2);
/// pw(K_n ^ K_m). ParameterError unless n, m >= 1.
int corona_pw_complete(int n, int m);

}  // namespace widthlab
