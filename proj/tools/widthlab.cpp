#include <CLI11.hpp>

#include <cctype>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "widthlab/decomposition.hpp"
#include "widthlab/errors.hpp"
#include "widthlab/graph.hpp"
#include "widthlab/harness.hpp"
#include "widthlab/opscript.hpp"
#include "widthlab/solvers.hpp"

using namespace widthlab;
namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapability = 3;
constexpr int kExitInternal = 4;

// I/O failures and parse errors already tagged with their file; exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "step 3: msg" -> "msg"
std::string without_step(const ScriptError& e) {
  std::string what = e.what();
  auto colon = what.find(": ");
  return colon == std::string::npos ? what : what.substr(colon + 2);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
  if (!out) throw UsageError("write failed for " + path);
}

Graph load_graph(const std::string& path) {
  try {
    return parse_gr(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

TreeDecomposition load_td(const std::string& path, const Graph& host) {
  try {
    return parse_td(read_file(path), host);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

CarryInput load_carry(const std::string& path, const Graph& host, bool as_path_decomposition) {
  CarryInput c;
  if (path.empty()) return c;
  TreeDecomposition td = load_td(path, host);
  if (!as_path_decomposition) {
    c.tree = std::move(td);
    return c;
  }
  auto pd = as_path(td);
  if (!pd) throw ParameterError(path + ": decomposition tree is not a path");
  c.path = std::move(*pd);
  return c;
}

std::string witness_dir_name(const std::string& check) {
  std::string out;
  for (char ch : check) {
    bool keep = std::isalnum(static_cast<unsigned char>(ch)) || ch == '-' || ch == '_' || ch == '.';
    out += keep ? ch : '_';
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_gen(const std::vector<std::string>& args) {
  if (args.size() < 2) throw ParameterError("gen: expected KIND [PARAMS...] OUT");
  GraphKind kind = parse_graph_kind(args.front());
  std::vector<int> params;
  for (std::size_t i = 1; i + 1 < args.size(); ++i) {
    try {
      std::size_t used = 0;
      int v = std::stoi(args[i], &used);
      if (used != args[i].size()) throw std::invalid_argument(args[i]);
      params.push_back(v);
    } catch (const std::logic_error&) {
      throw ParameterError("gen: parameter '" + args[i] + "' is not an integer");
    }
  }
  write_file(args.back(), format_gr(generate(kind, params)));
  return kExitOk;
}

int cmd_width(const std::string& graph_path, const std::string& param, const std::string& method,
              const std::string& cert) {
  Graph g = load_graph(graph_path);
  WidthParameter p = parse_width_parameter(param);
  SolverMethod m = method == "ordering-enumeration" ? SolverMethod::ordering_enumeration
                   : method == "subset-dp"          ? SolverMethod::subset_dp
                                                    : throw ParameterError("unknown method '" + method + "'");
  Width w;
  std::string td_text;
  if (p == WidthParameter::treewidth) {
    auto r = exact_treewidth(g, m);
    w = r.value;
    td_text = format_td(r.certificate);
  } else {
    auto r = exact_pathwidth(g, m);
    w = r.value;
    td_text = format_td(r.certificate);
  }
  if (w) {
    std::cout << *w << "\n";
  } else {
    std::cout << "undefined (empty graph)\n";
  }
  if (!cert.empty()) write_file(cert, td_text);
  return kExitOk;
}

int cmd_validate(const std::string& graph_path, const std::string& td_path, bool as_path_decomposition) {
  Graph g = load_graph(graph_path);
  TreeDecomposition td = load_td(td_path, g);
  const ValidationReport* report = &td.report();
  std::optional<PathDecomposition> pd;
  if (as_path_decomposition) {
    pd = as_path(td);
    if (!pd) {
      std::cout << "(tree) decomposition tree is not a path\n";
      return kExitInvalid;
    }
    report = &pd->report();
  }
  for (const Violation& v : report->violations) std::cout << v.describe(g) << "\n";
  if (!report->passed()) return kExitInvalid;
  Width w = pd ? width(*pd) : width(td);
  std::cout << "valid, width " << (w ? std::to_string(*w) : std::string("undefined")) << "\n";
  return kExitOk;
}

struct ApplyArgs {
  std::vector<std::string> positional;
  std::string carry, carry2, td_out;
  bool path = false;
};

int cmd_apply(const ApplyArgs& a) {
  if (a.positional.size() != 3 && a.positional.size() != 4) {
    throw ParameterError("apply: expected GRAPH [GRAPH2] SCRIPT OUT");
  }
  bool two = a.positional.size() == 4;
  const std::string& graph_path = a.positional[0];
  const std::string& script_path = a.positional[two ? 2 : 1];
  const std::string& out_path = a.positional.back();

  std::string graph_text = read_file(graph_path);
  Graph g = load_graph(graph_path);
  std::optional<Graph> g2;
  if (two) g2 = load_graph(a.positional[1]);
  OpScript script;
  try {
    script = parse_opscript(read_file(script_path), script_path);
  } catch (const ParseError& e) {
    throw UsageError(script_path + ": " + e.what());
  }
  if (!a.carry2.empty() && !two) throw ParameterError("apply: --carry2 needs a second graph");

  CarryInput c1 = load_carry(a.carry, g, a.path);
  CarryInput c2 = two ? load_carry(a.carry2, *g2, a.path) : CarryInput{};
  if ((c1.tree && !c1.tree->valid()) || (c1.path && !c1.path->valid()) || (c2.tree && !c2.tree->valid()) ||
      (c2.path && !c2.path->valid())) {
    std::cerr << "error: carried decomposition is invalid; run validate for details\n";
    return kExitInvalid;
  }

  bool carrying = c1.tree || c1.path;
  std::string td_out = a.td_out;
  if (carrying && td_out.empty()) td_out = fs::path(out_path).replace_extension(".td").string();

  if (script.lines.empty() && !two) {
    write_file(out_path, graph_text);
    if (carrying) write_file(td_out, read_file(a.carry));
    return kExitOk;
  }

  ApplyResult r = run_opscript(script, g, g2, c1, c2);
  for (const StepReport& s : r.steps) {
    std::cout << "line " << s.line << " " << s.opcode << ": width "
              << (s.width ? std::to_string(*s.width) : std::string("undefined")) << " claimed bound "
              << s.claimed_bound << "\n";
  }
  write_file(out_path, format_gr(r.graph));
  if (r.tree) write_file(td_out, format_td(*r.tree));
  if (r.path) write_file(td_out, format_td(*r.path));
  return kExitOk;
}

struct HarnessArgs {
  std::string suite;
  SweepConfig cfg;
  std::string ops;
  std::string witness_dir = "witnesses";
};

int cmd_harness(const HarnessArgs& a) {
  std::vector<std::string> suites;
  if (a.suite.empty() || a.suite == "all") {
    suites = suite_names();
  } else {
    suites = {a.suite};
  }
  SweepConfig cfg = a.cfg;
  std::stringstream ss(a.ops);
  for (std::string op; std::getline(ss, op, ',');) {
    if (!op.empty()) cfg.ops.push_back(op);
  }
  std::size_t total = 0, failed = 0;
  for (const auto& suite : suites) {
    for (const BoundCheck& c : run_suite(suite, cfg)) {
      if (c.advisory) {
        std::cout << "# " << c.name << " " << c.lhs << " " << to_string(c.relation) << " " << c.rhs
                  << " (advisory)\n";
        continue;
      }
      ++total;
      if (c.passed()) {
        std::cout << "ok " << c.name << "\n";
        continue;
      }
      ++failed;
      fs::path dir = fs::path(a.witness_dir) / witness_dir_name(c.name);
      fs::create_directories(dir);
      for (const WitnessFile& f : c.witness) write_file((dir / f.name).string(), f.content);
      std::cout << "not ok " << c.name << " witness=" << dir.string() << " # " << c.lhs << " "
                << to_string(c.relation) << " " << c.rhs << "\n";
    }
  }
  std::cout << "# " << total - failed << "/" << total << " checks passed\n";
  return failed == 0 ? kExitOk : kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tree-width and path-width toolkit"};
  app.require_subcommand(1);

  std::vector<std::string> gen_args;
  auto* gen = app.add_subcommand("gen", "Write a named graph as .gr");
  gen->add_option("args", gen_args, "KIND [PARAMS...] OUT")->required();

  std::string width_graph, width_param = "tw", width_method = "subset-dp", width_cert;
  auto* wid = app.add_subcommand("width", "Exact tree-width or path-width");
  wid->add_option("graph", width_graph)->required();
  wid->add_option("--param", width_param, "tw or pw");
  wid->add_option("--method", width_method, "subset-dp or ordering-enumeration");
  wid->add_option("--cert", width_cert, "write an optimal decomposition to this .td");

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Run an operation script");
  apply->add_option("args", apply_args.positional, "GRAPH [GRAPH2] SCRIPT OUT")->required();
  apply->add_option("--carry", apply_args.carry, "decomposition of GRAPH to transform");
  apply->add_option("--carry2", apply_args.carry2, "decomposition of GRAPH2 for binary operations");
  apply->add_flag("--path", apply_args.path, "treat carried decompositions as path-decompositions");
  apply->add_option("--td-out", apply_args.td_out, "output .td (default: OUT with .td extension)");

  std::string val_graph, val_td;
  bool val_path = false;
  auto* val = app.add_subcommand("validate", "Check a decomposition against a graph");
  val->add_option("graph", val_graph)->required();
  val->add_option("td", val_td)->required();
  val->add_flag("--path", val_path, "also require the decomposition tree to be a path");

  HarnessArgs h;
  auto* harness = app.add_subcommand("harness", "Bound checks");
  harness->require_subcommand(1);
  auto* run = harness->add_subcommand("run", "Run one suite or all of them");
  run->add_option("--suite", h.suite, "relations, unary, binary, ng, logbound or all");
  run->add_option("--max-n", h.cfg.max_n);
  run->add_option("--samples", h.cfg.samples);
  run->add_option("--seed", h.cfg.seed);
  run->add_option("--tree-max-n", h.cfg.tree_max_n);
  run->add_option("--ops", h.ops, "comma-separated table rows");
  run->add_flag("--exhaustive", h.cfg.exhaustive, "all graphs up to --max-n in relations and ng");
  run->add_option("--witness-dir", h.witness_dir);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_args);
    if (*wid) return cmd_width(width_graph, width_param, width_method, width_cert);
    if (*apply) return cmd_apply(apply_args);
    if (*val) return cmd_validate(val_graph, val_td, val_path);
    if (*run) return cmd_harness(h);
  } catch (const ScriptError& e) {
    std::cerr << "error: script line " << e.step() << ": " << without_step(e) << "\n";
    return kExitUsage;
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapability;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const InconsistencyError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
