#include "sepenum/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "sepenum/errors.hpp"

namespace sepenum {
namespace {

bool parse_int(const std::string& tok, long long& out) {
  if (tok.empty()) return false;
  std::size_t pos = 0;
  try {
    out = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    return false;
  }
  return pos == tok.size();
}

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

}  // namespace

Graph load_graph(std::istream& in) {
  int line_no = 0;
  long long n = -1;
  std::vector<Edge> edges;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      long long m = 0;
      if (n >= 0) throw ParseError(line_no, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "edge" || !parse_int(tok[2], n) || !parse_int(tok[3], m) ||
          n < 0 || m < 0) {
        n = -1;
        throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
      }
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(line_no, "edge line before problem line");
      long long u = 0, v = 0;
      if (tok.size() != 3 || !parse_int(tok[1], u) || !parse_int(tok[2], v))
        throw ParseError(line_no, "malformed edge line, expected 'e <u> <v>'");
      if (u < 1 || v < 1 || u > n || v > n)
        throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      edges.emplace_back(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      throw ParseError(line_no, "unknown line type '" + tok[0] + "'");
    }
  }
  if (n < 0) throw ParseError(line_no, "missing problem line");
  return Graph(static_cast<int>(n), edges);
}

Graph load_graph_text(const std::string& text) {
  std::istringstream in(text);
  return load_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) out << "c " << comment << '\n';
  out << "p edge " << g.order() << ' ' << g.size() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::vector<Weight> load_weights(std::istream& in, int n) {
  std::vector<Weight> w(static_cast<std::size_t>(n), Weight(1));
  int line_no = 0;
  for (std::string line; std::getline(in, line);) {
    ++line_no;
    auto tok = tokens_of(line);
    if (tok.empty() || tok[0] == "c" || tok[0][0] == '#') continue;
    long long v = 0;
    if (tok.size() != 2 || !parse_int(tok[0], v))
      throw ParseError(line_no, "malformed weight line, expected '<v> <weight>'");
    if (v < 1 || v > n) throw ParseError(line_no, "vertex index out of range 1.." + std::to_string(n));
    try {
      w[static_cast<std::size_t>(v - 1)] = parse_weight(tok[1]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return w;
}

std::vector<Weight> load_weights_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_weights(in, n);
}

}  // namespace sepenum
