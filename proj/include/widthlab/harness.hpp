#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "widthlab/graph.hpp"

namespace widthlab {

/// SplitMix64 (Steele, Lea, Flood). next():
///   state += 0x9E3779B97F4A7C15
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  /// (next() >> 11) * 2^-53, in [0, 1).
  double unit();
  /// next() % n.
  std::uint64_t below(std::uint64_t n);

 private:
  std::uint64_t state_;
};

/// n = min_n + below(max_n - min_n + 1) on ids 0..n-1; p = {0.2, 0.5, 0.8}[below(3)];
/// then for u < v in lexicographic order the edge is present iff unit() < p.
Graph random_graph(SplitMix64& rng, int min_n, int max_n);
/// Vertex i >= 1 gets the parent below(i).
Graph random_tree(SplitMix64& rng, int n);

enum class Relation { le, eq, ge };
std::string to_string(Relation r);

struct WitnessFile {
  std::string name;  // e.g. "input.gr", "script.ops"
  std::string content;
};

struct BoundCheck {
  std::string name;
  long long lhs = 0;
  Relation relation = Relation::le;
  long long rhs = 0;
  /// Printed as a comment and never counted as a failure.
  bool advisory = false;
  std::vector<WitnessFile> witness;  // filled only on failure

  bool passed() const;
};

struct SweepConfig {
  int max_n = 8;
  int samples = 200;
  std::uint64_t seed = 20240101;
  /// Operation names to run in the unary/binary tables; empty means all.
  std::vector<std::string> ops;
  /// Relations and Nordhaus-Gaddum suites: every non-isomorphic graph on
  /// 1..max_n vertices instead of random samples.
  bool exhaustive = false;
  /// Largest random tree in the log-bound suite.
  int tree_max_n = 30;
};

const std::vector<std::string>& unary_table_ops();
const std::vector<std::string>& binary_table_ops();

// CapabilityError when max_n exceeds the guard of the solvers a suite
// needs; ParameterError for max_n < 2 or samples < 0.

std::vector<BoundCheck> run_relation_suite(const SweepConfig& cfg);
std::vector<BoundCheck> run_unary_table(const SweepConfig& cfg);
std::vector<BoundCheck> run_binary_table(const SweepConfig& cfg);
std::vector<BoundCheck> run_nordhaus_gaddum(const SweepConfig& cfg);
std::vector<BoundCheck> run_logbound(const SweepConfig& cfg);

/// Runs a suite by name: relations, unary, binary, ng, logbound.
std::vector<BoundCheck> run_suite(const std::string& name, const SweepConfig& cfg);
const std::vector<std::string>& suite_names();

std::size_t count_failures(const std::vector<BoundCheck>& checks);

}  // namespace widthlab
