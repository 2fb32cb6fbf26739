#include <algorithm>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "text_util.hpp"
#include "widthlab/graph.hpp"

namespace widthlab {

Graph read_gr(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  long n = -1, m = -1;
  std::set<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = detail::split_ws(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (n >= 0) throw ParseError(line_no, "duplicate header");
      if (tokens.size() != 4 || tokens[1] != "tw") {
        throw ParseError(line_no, "expected 'p tw <n> <m>'");
      }
      n = detail::parse_count(tokens[2], line_no);
      m = detail::parse_count(tokens[3], line_no);
      continue;
    }
    if (n < 0) throw ParseError(line_no, "edge before header");
    if (tokens.size() != 2) throw ParseError(line_no, "expected '<u> <v>'");
    long u = detail::parse_count(tokens[0], line_no);
    long v = detail::parse_count(tokens[1], line_no);
    if (u < 1 || v < 1 || u > n || v > n) {
      throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
    }
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    Edge e(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    if (!edges.insert(e).second) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                    std::to_string(v));
    }
  }
  if (n < 0) throw ParseError(line_no, "missing 'p tw' header");
  if (static_cast<long>(edges.size()) != m) {
    throw ParseError(line_no, "header announces " + std::to_string(m) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return Graph::with_order(static_cast<int>(n), {edges.begin(), edges.end()});
}

Graph parse_gr(const std::string& text) {
  std::istringstream in(text);
  return read_gr(in);
}

void write_gr(std::ostream& out, const Graph& g) {
  out << "p tw " << g.order() << ' ' << g.size() << '\n';
  // edges() is sorted by id, and ids map monotonically to file ids
  for (const Edge& e : g.edges()) {
    out << g.index_of(e.u) + 1 << ' ' << g.index_of(e.v) + 1 << '\n';
  }
}

std::string format_gr(const Graph& g) {
  std::ostringstream out;
  write_gr(out, g);
  return out.str();
}

}  // namespace widthlab
