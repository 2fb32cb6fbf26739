#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

/// Sorted, duplicate-free vertex set.
using Bag = std::vector<Vertex>;

/// Width of a decomposition; empty when every bag is empty (the empty graph).
using Width = std::optional<int>;

/// True when w is undefined or w <= bound.
inline bool within(Width w, int bound) { return !w || *w <= bound; }

enum class Axiom { tree_shape, tw1, tw2, tw3, pw1, pw2, pw3 };

/// "(tw-2)" etc; the tree-shape check reports as "(tree)".
std::string to_string(Axiom axiom);

struct Violation {
  Axiom axiom;
  std::vector<Vertex> vertices;  // offending vertex, or both ends of an edge
  std::vector<int> bags;         // offending bag ids

  /// One line with 1-based vertex positions and bag numbers, e.g.
  /// "(tw-2) edge 1 3".
  std::string describe(const Graph& host) const;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool passed() const { return violations.empty(); }
};

class TreeDecomposition {
 public:
  /// `tree` must have vertex ids 0..bags.size()-1 (ParameterError
  /// otherwise). Bags are normalized to sorted sets. The tree shape and
  /// the three axioms are checked once here; see valid().
  TreeDecomposition(Graph host, Graph tree, std::vector<Bag> bags);

  const Graph& host() const { return host_; }
  const Graph& tree() const { return tree_; }
  const std::vector<Bag>& bags() const { return bags_; }
  const Bag& bag(int node) const { return bags_.at(node); }
  std::size_t size() const { return bags_.size(); }

  bool valid() const { return report_.passed(); }
  const ValidationReport& report() const { return report_; }

 private:
  Graph host_;
  Graph tree_;
  std::vector<Bag> bags_;
  ValidationReport report_;
};

class PathDecomposition {
 public:
  PathDecomposition(Graph host, std::vector<Bag> bags);

  const Graph& host() const { return host_; }
  const std::vector<Bag>& bags() const { return bags_; }
  const Bag& bag(int i) const { return bags_.at(i); }
  std::size_t size() const { return bags_.size(); }

  bool valid() const { return report_.passed(); }
  const ValidationReport& report() const { return report_; }

  /// Same bags on the path 0-1-...-(r-1).
  TreeDecomposition as_tree() const;

 private:
  Graph host_;
  std::vector<Bag> bags_;
  ValidationReport report_;
};

/// Rechecks d against G. ParameterError when G is not d's host.
ValidationReport validate(const Graph& g, const TreeDecomposition& d);
ValidationReport validate(const Graph& g, const PathDecomposition& d);

/// Max bag size - 1. DomainError when there are no bags.
Width width(const TreeDecomposition& d);
Width width(const PathDecomposition& d);

/// A single bag holding V(G).
TreeDecomposition trivial_decomposition(const Graph& g);

/// Contracts tree edges whose one end bag is a subset of the other until
/// none remain. PreconditionError for an invalid input.
TreeDecomposition remove_redundant_bags(const TreeDecomposition& td);

/// Path-decomposition of a tree with width at most floor(log3(2n+1)).
/// ParameterError when t is not a tree.
PathDecomposition tree_path_decomposition(const Graph& t);

/// Z_i = union of the bags X_u over the i-th bag of a path-decomposition of
/// the (non-redundant) decomposition tree.
PathDecomposition tree_to_path(const Graph& g, const TreeDecomposition& td);

/// Lowest bag id whose bag contains c. ParameterError when c is not a
/// clique of the host, PreconditionError for an invalid d.
int find_clique_bag(const TreeDecomposition& d, const std::vector<Vertex>& c);
int find_clique_bag(const PathDecomposition& d, const std::vector<Vertex>& c);

/// Bags in path order when the tree is a path, walked from its
/// lower-numbered end; nullopt otherwise.
std::optional<PathDecomposition> as_path(const TreeDecomposition& td);

/// PACE `.td`. Vertex ids in the file are positions in host.vertices()
/// plus one; bag numbers are node ids plus one.
TreeDecomposition read_td(std::istream& in, const Graph& host);
TreeDecomposition parse_td(const std::string& text, const Graph& host);
void write_td(std::ostream& out, const TreeDecomposition& td);
void write_td(std::ostream& out, const PathDecomposition& pd);
std::string format_td(const TreeDecomposition& td);
std::string format_td(const PathDecomposition& pd);

}  // namespace widthlab
