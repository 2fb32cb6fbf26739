#include "widthlab/opscript.hpp"

#include <map>
#include <sstream>

#include "text_util.hpp"
#include "widthlab/binary.hpp"
#include "widthlab/unary.hpp"

namespace widthlab {

namespace {

enum class Arg { vertex, count, product };

struct OpcodeSpec {
  bool binary;
  Arg arg;
  std::size_t min_args;
  std::size_t max_args;  // SIZE_MAX for variadic
};

constexpr std::size_t kMany = static_cast<std::size_t>(-1);

const std::map<std::string, OpcodeSpec>& opcodes() {
  static const std::map<std::string, OpcodeSpec> table{
      {"delv", {false, Arg::vertex, 1, 1}},      {"addv", {false, Arg::vertex, 0, kMany}},
      {"dele", {false, Arg::vertex, 2, 2}},      {"adde", {false, Arg::vertex, 2, 2}},
      {"ident", {false, Arg::vertex, 2, 2}},     {"contract", {false, Arg::vertex, 2, 2}},
      {"subdiv", {false, Arg::vertex, 2, 2}},    {"incidence", {false, Arg::vertex, 0, 0}},
      {"power", {false, Arg::count, 1, 1}},      {"linegraph", {false, Arg::vertex, 0, 0}},
      {"complement", {false, Arg::vertex, 0, 0}}, {"lc", {false, Arg::vertex, 1, 1}},
      {"sc", {false, Arg::vertex, 1, 1}},        {"switch", {false, Arg::vertex, 1, 1}},
      {"switchseq", {false, Arg::vertex, 1, kMany}},
      {"dunion", {true, Arg::vertex, 0, 0}},     {"join", {true, Arg::vertex, 0, 0}},
      {"union", {true, Arg::vertex, 0, 0}},      {"subst", {true, Arg::vertex, 1, 1}},
      {"prod", {true, Arg::product, 1, 1}},      {"onesum", {true, Arg::vertex, 2, 2}},
      {"corona", {true, Arg::vertex, 0, 0}},
  };
  return table;
}

struct State {
  Graph graph;
  std::optional<TreeDecomposition> tree;
  std::optional<PathDecomposition> path;
  bool carrying() const { return tree.has_value() || path.has_value(); }
};

[[noreturn]] void no_transformer(const std::string& op) {
  throw ParameterError("'" + op + "' has no decomposition transformer; drop --carry");
}

template <class Unary, class Tree, class Path>
void step_unary(State& s, long long& claim, Unary&& on_graph, Tree&& on_tree, Path&& on_path) {
  Graph next = on_graph(s.graph);
  if (s.tree) {
    CarriedTree c = on_tree(*s.tree);
    claim = c.claimed_bound;
    s.tree = std::move(c.decomposition);
  } else if (s.path) {
    CarriedPath c = on_path(*s.path);
    claim = c.claimed_bound;
    s.path = std::move(c.decomposition);
  }
  s.graph = std::move(next);
}

template <class F>
void step_graph_only(State& s, const std::string& op, F&& on_graph) {
  if (s.carrying()) no_transformer(op);
  s.graph = on_graph(s.graph);
}

std::vector<Vertex> vertices_of(const OpLine& l) {
  std::vector<Vertex> out;
  for (const auto& a : l.args) out.push_back(parse_script_vertex(a, l.line));
  return out;
}

void apply_unary(State& s, const OpLine& l, long long& claim) {
  const std::string& op = l.opcode;
  if (op == "power") {
    int d = static_cast<int>(detail::parse_count(l.args[0], l.line));
    step_unary(
        s, claim, [&](const Graph& g) { return graph_power(g, d).graph; },
        [&](const TreeDecomposition& t) { return graph_power(t, d); },
        [&](const PathDecomposition& p) { return graph_power(p, d); });
    return;
  }
  std::vector<Vertex> v = vertices_of(l);
  auto run = [&](auto fn) {
    step_unary(
        s, claim, [&](const Graph& g) { return fn(g).graph; }, [&](const TreeDecomposition& t) { return fn(t); },
        [&](const PathDecomposition& p) { return fn(p); });
  };
  if (op == "delv") {
    run([&](const auto& x) { return delete_vertex(x, v[0]); });
  } else if (op == "addv") {
    run([&](const auto& x) { return add_vertex(x, v); });
  } else if (op == "dele") {
    run([&](const auto& x) { return delete_edge(x, v[0], v[1]); });
  } else if (op == "adde") {
    run([&](const auto& x) { return add_edge(x, v[0], v[1]); });
  } else if (op == "ident") {
    run([&](const auto& x) { return identify_vertices(x, v[0], v[1]); });
  } else if (op == "contract") {
    run([&](const auto& x) { return contract_edge(x, v[0], v[1]); });
  } else if (op == "subdiv") {
    run([&](const auto& x) { return subdivide_edge(x, v[0], v[1]); });
  } else if (op == "incidence") {
    run([&](const auto& x) { return incidence_graph(x); });
  } else if (op == "linegraph") {
    run([&](const auto& x) { return line_graph(x); });
  } else if (op == "switch") {
    run([&](const auto& x) { return seidel_switch(x, v[0]); });
  } else if (op == "switchseq") {
    run([&](const auto& x) { return switch_sequence(x, v); });
  } else if (op == "complement") {
    step_graph_only(s, op, [](const Graph& g) { return edge_complement(g).graph; });
  } else if (op == "lc") {
    step_graph_only(s, op, [&](const Graph& g) { return local_complement(g, v[0]).graph; });
  } else if (op == "sc") {
    step_graph_only(s, op, [&](const Graph& g) { return seidel_complement(g, v[0]).graph; });
  } else {
    throw ParameterError("unknown opcode '" + op + "'");
  }
}

void require_carry2(const State& s, const State& s2, const std::string& op) {
  if (s.tree && !s2.tree) throw ParameterError("'" + op + "' needs a tree-decomposition of the second graph");
  if (s.path && !s2.path) throw ParameterError("'" + op + "' needs a path-decomposition of the second graph");
}

void apply_binary(State& s, const State& s2, const OpLine& l, long long& claim) {
  const std::string& op = l.opcode;
  auto run = [&](auto on_graph, auto on_decomp) {
    require_carry2(s, s2, op);
    Graph next = on_graph(s.graph, s2.graph);
    if (s.tree) {
      CarriedTree c = on_decomp(*s.tree, *s2.tree);
      claim = c.claimed_bound;
      s.tree = std::move(c.decomposition);
    } else if (s.path) {
      CarriedPath c = on_decomp(*s.path, *s2.path);
      claim = c.claimed_bound;
      s.path = std::move(c.decomposition);
    }
    s.graph = std::move(next);
  };
  if (op == "dunion") {
    run([](const Graph& a, const Graph& b) { return disjoint_union(a, b).graph; },
        [](const auto& a, const auto& b) { return disjoint_union(a, b); });
  } else if (op == "join") {
    run([](const Graph& a, const Graph& b) { return join(a, b).graph; },
        [](const auto& a, const auto& b) { return join(a, b); });
  } else if (op == "corona") {
    run([](const Graph& a, const Graph& b) { return corona(a, b).graph; },
        [](const auto& a, const auto& b) { return corona(a, b); });
  } else if (op == "subst") {
    Vertex v = parse_script_vertex(l.args[0], l.line);
    run([&](const Graph& a, const Graph& b) { return substitute(a, v, b).graph; },
        [&](const auto& a, const auto& b) { return substitute(a, v, b); });
  } else if (op == "onesum") {
    Vertex v = parse_script_vertex(l.args[0], l.line);
    Vertex w = parse_script_vertex(l.args[1], l.line);
    run([&](const Graph& a, const Graph& b) { return one_sum(a, v, b, w).graph; },
        [&](const auto& a, const auto& b) { return one_sum(a, v, b, w); });
  } else if (op == "union") {
    if (s.carrying()) no_transformer(op);
    s.graph = union_same_vertices(s.graph, s2.graph);
  } else if (op == "prod") {
    ProductKind kind = parse_product_kind(l.args[0]);
    if (kind != ProductKind::lexicographic) {
      if (s.carrying()) no_transformer(op + " " + l.args[0]);
      s.graph = product(kind, s.graph, s2.graph).graph;
      return;
    }
    Graph next = product(kind, s.graph, s2.graph).graph;
    if (s.tree) {
      CarriedTree c = lexicographic_product(*s.tree, s2.graph);
      claim = c.claimed_bound;
      s.tree = std::move(c.decomposition);
    } else if (s.path) {
      CarriedPath c = lexicographic_product(*s.path, s2.graph);
      claim = c.claimed_bound;
      s.path = std::move(c.decomposition);
    }
    s.graph = std::move(next);
  } else {
    throw ParameterError("unknown opcode '" + op + "'");
  }
}

}  // namespace

bool is_binary_opcode(const std::string& opcode) {
  auto it = opcodes().find(opcode);
  return it != opcodes().end() && it->second.binary;
}

Vertex parse_script_vertex(const std::string& token, std::size_t line) {
  if (token.size() == 1 && token[0] >= 'a' && token[0] <= 'z') return token[0] - 'a';
  long v = detail::parse_count(token, line);
  if (v < 1) throw ParseError(line, "vertex ids are 1-based, got '" + token + "'");
  return static_cast<Vertex>(v - 1);
}

OpScript parse_opscript(const std::string& text, const std::string& source) {
  OpScript script;
  script.source = source;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    auto tokens = detail::split_ws(raw);
    if (tokens.empty()) continue;
    auto it = opcodes().find(tokens[0]);
    if (it == opcodes().end()) throw ParseError(line_no, "unknown opcode '" + tokens[0] + "'");
    const OpcodeSpec& spec = it->second;
    std::size_t n = tokens.size() - 1;
    if (n < spec.min_args || n > spec.max_args) {
      throw ParseError(line_no, "wrong number of arguments for '" + tokens[0] + "'");
    }
    if (spec.binary && !script.lines.empty()) {
      throw ParseError(line_no, "binary operation '" + tokens[0] + "' must be the first line");
    }
    OpLine l{line_no, tokens[0], {tokens.begin() + 1, tokens.end()}};
    for (const auto& a : l.args) {
      switch (spec.arg) {
        case Arg::vertex: parse_script_vertex(a, line_no); break;
        case Arg::count:
          if (detail::parse_count(a, line_no) < 1) throw ParseError(line_no, "expected a positive integer");
          break;
        case Arg::product:
          try {
            parse_product_kind(a);
          } catch (const ParameterError& e) {
            throw ParseError(line_no, e.what());
          }
          break;
      }
    }
    script.lines.push_back(std::move(l));
  }
  return script;
}

std::string format_opscript(const OpScript& script) {
  std::string out;
  for (const auto& l : script.lines) {
    out += l.opcode;
    for (const auto& a : l.args) out += " " + a;
    out += "\n";
  }
  return out;
}

ApplyResult run_opscript(const OpScript& script, const Graph& g, const std::optional<Graph>& g2,
                         const CarryInput& carry, const CarryInput& carry2) {
  bool binary = !script.lines.empty() && is_binary_opcode(script.lines.front().opcode);
  if (binary && !g2) throw ParameterError("binary operation '" + script.lines.front().opcode + "' needs a second graph");
  if (!binary && g2) throw ParameterError("a second graph is only used by a binary first line");
  if (carry.tree && carry.path) throw ParameterError("carry either a tree- or a path-decomposition");

  State s{g, carry.tree, carry.path};
  State s2{g2.value_or(Graph{}), carry2.tree, carry2.path};
  auto check_host = [](const State& st, const char* which) {
    const Graph* h = st.tree ? &st.tree->host() : st.path ? &st.path->host() : nullptr;
    if (h && !(*h == st.graph)) throw ParameterError(std::string("carried decomposition is not of the ") + which + " graph");
    if ((st.tree && !st.tree->valid()) || (st.path && !st.path->valid())) {
      throw PreconditionError(std::string("carried decomposition of the ") + which + " graph is invalid");
    }
  };
  check_host(s, "first");
  check_host(s2, "second");

  ApplyResult result;
  for (const OpLine& l : script.lines) {
    long long claim = 0;
    try {
      if (is_binary_opcode(l.opcode)) {
        apply_binary(s, s2, l, claim);
      } else {
        apply_unary(s, l, claim);
      }
    } catch (const CapabilityError&) {
      throw;
    } catch (const InconsistencyError&) {
      throw;
    } catch (const ScriptError& e) {
      throw ScriptError(l.line, e.what());
    } catch (const Error& e) {
      throw ScriptError(l.line, e.what());
    }
    if (s.carrying()) {
      bool ok = s.tree ? s.tree->valid() : s.path->valid();
      if (!ok) throw InconsistencyError("line " + std::to_string(l.line) + ": transformed decomposition is invalid");
      Width w = s.tree ? width(*s.tree) : width(*s.path);
      if (!within(w, static_cast<int>(claim))) {
        throw InconsistencyError("line " + std::to_string(l.line) + ": width exceeds the claimed bound");
      }
      result.steps.push_back({l.line, l.opcode, w, claim});
    }
  }
  result.graph = std::move(s.graph);
  result.tree = std::move(s.tree);
  result.path = std::move(s.path);
  return result;
}

}  // namespace widthlab
