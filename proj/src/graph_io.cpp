#include "ifk/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace ifk {
namespace {

constexpr long long kMaxVertices = 10'000'000;

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_int(std::string_view tok, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

PrecoloredGraph parse_graph(std::string_view text) {
  int k = 0;
  long long n = -1;
  std::size_t line_no = 0;
  std::set<Edge> edges;
  std::vector<std::size_t> pre_line_of;
  std::vector<VertexState> states;

  auto vertex = [&](std::string_view tok) {
    long long v = to_int(tok, line_no);
    if (v < 0 || v >= n) {
      throw ParseError(line_no, "vertex id " + std::string(tok) + " is outside [0," +
                                    std::to_string(n) + ")");
    }
    return static_cast<Vertex>(v);
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;

    const std::string_view directive = tok[0];
    if (k == 0 && directive != "k") {
      throw ParseError(line_no, "first directive must be 'k', got '" + std::string(directive) + "'");
    }
    if (directive == "k") {
      if (k != 0) throw ParseError(line_no, "repeated 'k' directive");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'k <int>'");
      long long value = to_int(tok[1], line_no);
      if (value < 2 || value > 1'000'000) {
        throw ParseError(line_no, "k must be at least 2, got " + std::string(tok[1]));
      }
      k = static_cast<int>(value);
    } else if (directive == "n") {
      if (n >= 0) throw ParseError(line_no, "repeated 'n' directive");
      if (tok.size() != 2) throw ParseError(line_no, "expected 'n <int>'");
      n = to_int(tok[1], line_no);
      if (n < 0 || n > kMaxVertices) {
        throw ParseError(line_no, "vertex count out of range: " + std::string(tok[1]));
      }
      states.assign(static_cast<std::size_t>(n), VertexState::U(0));
      pre_line_of.assign(static_cast<std::size_t>(n), 0);
    } else if (directive == "e") {
      if (n < 0) throw ParseError(line_no, "'e' before 'n'");
      if (tok.size() != 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      Vertex u = vertex(tok[1]);
      Vertex v = vertex(tok[2]);
      if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
      if (!edges.insert(Edge::make(u, v)).second) {
        throw ParseError(line_no, "duplicate edge {" + std::to_string(std::min(u, v)) + "," +
                                      std::to_string(std::max(u, v)) + "}");
      }
    } else if (directive == "pre") {
      if (n < 0) throw ParseError(line_no, "'pre' before 'n'");
      if (tok.size() < 3) throw ParseError(line_no, "expected 'pre <v> U|F <j>' or 'pre <v> I'");
      Vertex v = vertex(tok[1]);
      VertexState s;
      if (tok[2] == "I") {
        if (tok.size() != 3) throw ParseError(line_no, "expected 'pre <v> I'");
        s = VertexState::I();
      } else if (tok[2] == "U" || tok[2] == "F") {
        if (tok.size() != 4) throw ParseError(line_no, "expected 'pre <v> U|F <j>'");
        long long j = to_int(tok[3], line_no);
        if (j < 0 || j > k) {
          throw ParseError(line_no, "state " + std::string(tok[2]) + std::string(tok[3]) +
                                        " is out of range for k=" + std::to_string(k));
        }
        s = tok[2] == "U" ? VertexState::U(static_cast<int>(j))
                          : VertexState::F(static_cast<int>(j));
      } else {
        throw ParseError(line_no, "unknown state '" + std::string(tok[2]) + "'");
      }
      if (!s.valid_for(k)) {
        throw ParseError(line_no, "state " + s.to_string() + " is out of range for k=" +
                                      std::to_string(k));
      }
      if (pre_line_of[v] != 0) {
        throw ParseError(line_no, "vertex " + std::to_string(v) + " already precolored on line " +
                                      std::to_string(pre_line_of[v]));
      }
      pre_line_of[v] = line_no;
      states[v] = s;
    } else {
      throw ParseError(line_no, "unknown directive '" + std::string(directive) + "'");
    }
  }
  if (k == 0) throw ParseError(0, "missing 'k' directive");
  if (n < 0) throw ParseError(0, "missing 'n' directive");

  std::vector<Edge> edge_list(edges.begin(), edges.end());
  return PrecoloredGraph(Graph::from_edges(static_cast<std::size_t>(n), edge_list),
                         std::move(states), k);
}

std::string serialize_graph(const PrecoloredGraph& g, const std::vector<std::string>& header) {
  std::ostringstream out;
  for (const auto& line : header) out << "# " << line << '\n';
  out << "k " << g.k() << '\n' << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.graph().edges()) out << "e " << e.u << ' ' << e.v << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexState& s = g.state(v);
    if (s.is_trivial()) continue;
    out << "pre " << v << ' ';
    switch (s.kind) {
      case StateKind::U: out << "U " << s.j; break;
      case StateKind::F: out << "F " << s.j; break;
      case StateKind::I: out << 'I'; break;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ifk
