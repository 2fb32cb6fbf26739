#pragma once

#include <optional>
#include <string>
#include <vector>

#include "widthlab/decomposition.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

/// One `opcode arg...` line. Vertex arguments are 1-based integers or the
/// letters a..z (a = 1); both name the internal id value - 1.
struct OpLine {
  std::size_t line = 0;
  std::string opcode;
  std::vector<std::string> args;
};

struct OpScript {
  std::vector<OpLine> lines;
  std::string source;
};

/// Unary: delv v | addv [n...] | dele u v | adde u v | ident v w |
/// contract v w | subdiv v w | incidence | power d | linegraph |
/// complement | lc v | sc v | switch v | switchseq v...
/// Binary (first line only, needs a second graph): dunion | join | union |
/// subst v | prod <kind> | onesum v w | corona
/// `#` starts a comment. ParseError on unknown opcodes or bad arity.
OpScript parse_opscript(const std::string& text, const std::string& source = "");
std::string format_opscript(const OpScript& script);

bool is_binary_opcode(const std::string& opcode);
/// Script token to internal vertex id; ParseError when malformed.
Vertex parse_script_vertex(const std::string& token, std::size_t line);

/// Decomposition carried through a script; at most one of the two is set.
struct CarryInput {
  std::optional<TreeDecomposition> tree;
  std::optional<PathDecomposition> path;
};

struct StepReport {
  std::size_t line = 0;
  std::string opcode;
  Width width;
  long long claimed_bound = 0;
};

struct ApplyResult {
  Graph graph;
  std::optional<TreeDecomposition> tree;
  std::optional<PathDecomposition> path;
  std::vector<StepReport> steps;  // only when carrying
};

/// Runs the script on g (and g2 for a binary first line). Failing steps
/// raise ScriptError with the script line; CapabilityError passes through;
/// a carried decomposition that stops validating raises InconsistencyError.
ApplyResult run_opscript(const OpScript& script, const Graph& g, const std::optional<Graph>& g2 = std::nullopt,
                         const CarryInput& carry = {}, const CarryInput& carry2 = {});

}  // namespace widthlab
