#include "ifk/coloring.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "ifk/graph_io.hpp"

namespace ifk {
namespace {

void check_fits(const PrecoloredGraph& g, const Coloring& c) {
  if (c.labels.size() != g.vertex_count()) {
    throw ColoringError("coloring has " + std::to_string(c.labels.size()) + " labels for " +
                        std::to_string(g.vertex_count()) + " vertices");
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const auto kind = g.state(v).kind;
    if (kind == StateKind::I && c.labels[v] != Label::I) {
      throw ColoringError("vertex " + std::to_string(v) + " is precolored I but labelled F");
    }
    if (kind == StateKind::F && c.labels[v] != Label::F) {
      throw ColoringError("vertex " + std::to_string(v) + " is precolored " +
                          g.state(v).to_string() + " but labelled I");
    }
  }
}

// One cycle inside the F-component containing `start`, found by DFS.
std::vector<Edge> find_cycle(const PrecoloredGraph& g, const Coloring& c, Vertex start) {
  const std::size_t n = g.vertex_count();
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<bool> seen(n, false);
  std::vector<std::pair<Vertex, std::size_t>> stack{{start, 0}};
  seen[start] = true;
  while (!stack.empty()) {
    auto& [u, idx] = stack.back();
    auto nb = g.graph().neighbors(u);
    if (idx == nb.size()) {
      stack.pop_back();
      continue;
    }
    Vertex w = nb[idx++];
    if (c.labels[w] != Label::F || w == parent[u]) continue;
    if (!seen[w]) {
      seen[w] = true;
      parent[w] = u;
      stack.emplace_back(w, 0);
      continue;
    }
    // Back edge u-w: w is an ancestor of u on the DFS stack.
    std::vector<Edge> cycle{Edge::make(u, w)};
    for (Vertex x = u; x != w; x = parent[x]) cycle.push_back(Edge::make(x, parent[x]));
    std::sort(cycle.begin(), cycle.end());
    return cycle;
  }
  return {};
}

}  // namespace

std::int64_t f_weight(const VertexState& s) {
  switch (s.kind) {
    case StateKind::F: return s.j;
    case StateKind::U: return s.j + 1;
    case StateKind::I: break;
  }
  throw ColoringError("an I-precolored vertex has no F weight");
}

std::vector<FComponent> f_components(const PrecoloredGraph& g, const Coloring& c) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<FComponent> out;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s] || c.labels[s] != Label::F) continue;
    FComponent comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.members.push_back(u);
      comp.weight += f_weight(g.state(u));
      for (Vertex w : g.graph().neighbors(u)) {
        if (!seen[w] && c.labels[w] == Label::F) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.members.begin(), comp.members.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::string Violation::describe() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::IEdge:
      out << "i-edge " << vertices[0] << ' ' << vertices[1];
      break;
    case Kind::Overweight:
      out << "overweight " << weight << " :";
      for (Vertex v : vertices) out << ' ' << v;
      break;
    case Kind::FCycle:
      out << "f-cycle :";
      for (const Edge& e : edges) out << ' ' << e.u << '-' << e.v;
      break;
  }
  return out.str();
}

VerifyReport verify(const PrecoloredGraph& g, const Coloring& c) {
  check_fits(g, c);
  VerifyReport report;
  for (const Edge& e : g.graph().edges()) {
    if (c.labels[e.u] == Label::I && c.labels[e.v] == Label::I) {
      report.violations.push_back({Violation::Kind::IEdge, {e.u, e.v}, {}, 0});
    }
  }
  for (auto& comp : f_components(g, c)) {
    if (comp.weight > g.k()) {
      report.violations.push_back({Violation::Kind::Overweight, comp.members, {}, comp.weight});
    }
    std::size_t internal = 0;
    for (Vertex u : comp.members) {
      for (Vertex w : g.graph().neighbors(u)) internal += (c.labels[w] == Label::F) ? 1 : 0;
    }
    if (internal / 2 >= comp.members.size()) {
      report.violations.push_back(
          {Violation::Kind::FCycle, {}, find_cycle(g, c, comp.members.front()), 0});
    }
  }
  return report;
}

std::string format_coloring(const PrecoloredGraph& g, const Coloring& c) {
  check_fits(g, c);
  const auto comps = f_components(g, c);
  std::vector<std::size_t> comp_of(g.vertex_count(), 0);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    for (Vertex v : comps[i].members) comp_of[v] = i;
  }
  std::ostringstream out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    out << "v " << v;
    if (c.labels[v] == Label::I) {
      out << " I\n";
    } else {
      out << " F " << comp_of[v] << ' ' << comps[comp_of[v]].weight << '\n';
    }
  }
  return out.str();
}

Coloring parse_coloring(const PrecoloredGraph& g, std::string_view text) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  std::size_t line_no = 0;
  std::size_t pos = 0;
  auto number = [&](std::string_view tok) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
      throw ParseError(line_no, "expected a nonnegative integer, got '" + std::string(tok) + "'");
    }
    return value;
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    std::vector<std::string> tok;
    for (std::string t; in >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (tok[0] != "v" || tok.size() < 3) throw ParseError(line_no, "expected 'v <id> I|F ...'");
    long long v = number(tok[1]);
    if (static_cast<std::size_t>(v) >= n) {
      throw ParseError(line_no, "vertex id " + tok[1] + " is outside [0," + std::to_string(n) + ")");
    }
    if (label[static_cast<std::size_t>(v)] != -1) {
      throw ParseError(line_no, "vertex " + tok[1] + " listed twice");
    }
    if (tok[2] == "I" && tok.size() == 3) {
      label[static_cast<std::size_t>(v)] = 0;
    } else if (tok[2] == "F" && (tok.size() == 3 || tok.size() == 5)) {
      for (std::size_t i = 3; i < tok.size(); ++i) number(tok[i]);
      label[static_cast<std::size_t>(v)] = 1;
    } else {
      throw ParseError(line_no, "expected 'v <id> I' or 'v <id> F [<component> <weight>]'");
    }
  }
  Coloring c;
  c.labels.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (label[v] == -1) throw ParseError(0, "vertex " + std::to_string(v) + " is not assigned");
    c.labels.push_back(label[v] == 0 ? Label::I : Label::F);
  }
  return c;
}

std::string coloring_dot(const PrecoloredGraph& g, const Coloring& c) {
  check_fits(g, c);
  std::ostringstream out;
  out << "graph coloring {\n  node [shape=circle, style=filled];\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (c.labels[v] == Label::I) {
      out << "  " << v << " [fillcolor=black, fontcolor=white];\n";
    } else {
      out << "  " << v << " [fillcolor=white, fontcolor=black];\n";
    }
  }
  for (const Edge& e : g.graph().edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace ifk
