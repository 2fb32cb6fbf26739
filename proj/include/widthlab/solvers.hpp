#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthlab/decomposition.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

enum class WidthParameter { treewidth, pathwidth };
enum class SolverMethod { subset_dp, ordering_enumeration };

std::string to_string(WidthParameter p);  // "tw" / "pw"
std::string to_string(SolverMethod m);    // "subset-dp" / "ordering-enumeration"
WidthParameter parse_width_parameter(const std::string& name);

/// Exact width with a certificate of exactly that width. `value` is empty
/// only for the empty graph.
template <class Decomposition>
struct WidthReport {
  WidthParameter parameter;
  Width value;
  Decomposition certificate;
  SolverMethod method;
};

using TreewidthReport = WidthReport<TreeDecomposition>;
using PathwidthReport = WidthReport<PathDecomposition>;

inline constexpr std::size_t kSubsetDpGuard = 16;
inline constexpr std::size_t kEnumerationGuard = 8;
inline constexpr std::size_t kMinorGuard = 12;
inline constexpr std::size_t kInvariantGuard = 12;
inline constexpr std::size_t kExhaustiveGuard = 6;

/// Elimination-ordering DP over vertex subsets (or, for cross-checks,
/// enumeration of all orderings). CapabilityError above the method's guard.
TreewidthReport exact_treewidth(const Graph& g, SolverMethod method = SolverMethod::subset_dp);
/// Vertex-separation DP over vertex subsets (or layout enumeration).
PathwidthReport exact_pathwidth(const Graph& g, SolverMethod method = SolverMethod::subset_dp);

/// Tree-decomposition built from an elimination ordering (fill-in bags).
TreeDecomposition decomposition_from_elimination(const Graph& g, const std::vector<Vertex>& order);
/// Path-decomposition from a layout: bag i = boundary of the first i-1
/// vertices plus the i-th vertex.
PathDecomposition decomposition_from_layout(const Graph& g, const std::vector<Vertex>& layout);

struct MinorStep {
  enum class Kind { delete_edge, contract_edge, delete_vertex };
  Kind kind;
  Vertex u;
  Vertex v;  // unused for delete_vertex
};

/// Contracting u and v yields the fresh id max_id + 1 of the current graph.
struct MinorScript {
  std::vector<MinorStep> steps;
};

/// One line per step, `d u v`, `c u v` or `dv v`, ids written 1-based.
std::string format_minor_script(const MinorScript& script);

/// H realized as a minor of G.
struct MinorModel {
  std::vector<std::vector<Vertex>> branch_sets;  // indexed by position in H
  MinorScript script;                            // replays G to a copy of H
  std::vector<Vertex> image;                     // H position -> id after replay
};

/// Branch-set search. CapabilityError when G has more than kMinorGuard
/// vertices; nullopt when H has more vertices than G or is not a minor.
std::optional<MinorModel> find_minor(const Graph& h, const Graph& g);
bool is_minor(const Graph& h, const Graph& g);

/// Neither K3 nor I(K_{1,3}) is a minor.
bool classify_pathwidth_le_1(const Graph& g);
/// K3-free minors for k = 1, K4-free for k = 2; ParameterError for other k.
bool classify_treewidth_le(const Graph& g, int k);

struct GraphInvariants {
  int omega = 0;         // clique number
  int alpha = 0;         // independence number
  int chi = 0;           // chromatic number
  int connectivity = 0;  // vertex connectivity; n-1 for K_n
};

/// Brute force; CapabilityError above kInvariantGuard vertices.
GraphInvariants graph_invariants(const Graph& g);

/// All graphs on n vertices (ids 0..n-1) up to isomorphism, in edge-mask
/// order of their first representative. CapabilityError for n > kExhaustiveGuard.
std::vector<Graph> exhaustive_graphs(int n);

}  // namespace widthlab
