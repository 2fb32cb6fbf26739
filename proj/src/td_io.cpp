#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "text_util.hpp"
#include "widthlab/decomposition.hpp"

namespace widthlab {

TreeDecomposition read_td(std::istream& in, const Graph& host) {
  std::string line;
  std::size_t line_no = 0;
  long count = -1, max_bag = -1;
  std::vector<Bag> bags;
  std::vector<char> seen;
  std::set<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "s") {
      if (count >= 0) throw ParseError(line_no, "duplicate header");
      if (tok.size() != 5 || tok[1] != "td") {
        throw ParseError(line_no, "expected 's td <bags> <max bag size> <n>'");
      }
      count = detail::parse_count(tok[2], line_no);
      max_bag = detail::parse_count(tok[3], line_no);
      long n = detail::parse_count(tok[4], line_no);
      if (n != static_cast<long>(host.order())) {
        throw ParseError(line_no, "header announces " + std::to_string(n) +
                                      " vertices, graph has " + std::to_string(host.order()));
      }
      bags.assign(static_cast<std::size_t>(count), {});
      seen.assign(static_cast<std::size_t>(count), 0);
      continue;
    }
    if (count < 0) throw ParseError(line_no, "content before 's td' header");
    if (tok[0] == "b") {
      if (tok.size() < 2) throw ParseError(line_no, "bag line without bag number");
      long id = detail::parse_count(tok[1], line_no);
      if (id < 1 || id > count) throw ParseError(line_no, "bag number out of range");
      if (seen[id - 1]) throw ParseError(line_no, "bag " + std::to_string(id) + " defined twice");
      seen[id - 1] = 1;
      Bag bag;
      for (std::size_t i = 2; i < tok.size(); ++i) {
        long v = detail::parse_count(tok[i], line_no);
        if (v < 1 || v > static_cast<long>(host.order())) {
          throw ParseError(line_no, "vertex id out of range");
        }
        bag.push_back(host.vertices()[v - 1]);
      }
      std::sort(bag.begin(), bag.end());
      if (std::adjacent_find(bag.begin(), bag.end()) != bag.end()) {
        throw ParseError(line_no, "repeated vertex in bag");
      }
      bags[id - 1] = std::move(bag);
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected tree edge '<i> <j>'");
    long a = detail::parse_count(tok[0], line_no);
    long b = detail::parse_count(tok[1], line_no);
    if (a < 1 || b < 1 || a > count || b > count) {
      throw ParseError(line_no, "tree edge names an unknown bag");
    }
    if (a == b) throw ParseError(line_no, "tree edge is a loop");
    if (!edges.insert(Edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1))).second) {
      throw ParseError(line_no, "duplicate tree edge");
    }
  }
  if (count < 0) throw ParseError(line_no, "missing 's td' header");
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw ParseError(line_no, "some bag is not defined");
  }
  std::size_t largest = 0;
  for (const Bag& b : bags) largest = std::max(largest, b.size());
  if (static_cast<long>(largest) != max_bag) {
    throw ParseError(line_no, "header announces max bag size " + std::to_string(max_bag) +
                                  ", found " + std::to_string(largest));
  }
  return TreeDecomposition(host, Graph::with_order(static_cast<int>(count), {edges.begin(), edges.end()}),
                           std::move(bags));
}

TreeDecomposition parse_td(const std::string& text, const Graph& host) {
  std::istringstream in(text);
  return read_td(in, host);
}

void write_td(std::ostream& out, const TreeDecomposition& td) {
  std::size_t largest = 0;
  for (const Bag& b : td.bags()) largest = std::max(largest, b.size());
  out << "s td " << td.size() << ' ' << largest << ' ' << td.host().order() << '\n';
  for (std::size_t i = 0; i < td.size(); ++i) {
    out << "b " << i + 1;
    for (Vertex v : td.bag(static_cast<int>(i))) {
      // foreign vertices (invalid decompositions) keep their raw id
      long id = td.host().has_vertex(v) ? static_cast<long>(td.host().index_of(v)) : v;
      out << ' ' << id + 1;
    }
    out << '\n';
  }
  for (const Edge& e : td.tree().edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_td(std::ostream& out, const PathDecomposition& pd) { write_td(out, pd.as_tree()); }

std::string format_td(const TreeDecomposition& td) {
  std::ostringstream out;
  write_td(out, td);
  return out.str();
}

std::string format_td(const PathDecomposition& pd) { return format_td(pd.as_tree()); }

}  // namespace widthlab
