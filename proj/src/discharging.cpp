#include "ifk/discharging.hpp"

#include <sstream>
#include <stdexcept>

#include "ifk/coefficients.hpp"
#include "ifk/density.hpp"

namespace ifk {
namespace {

bool is_u(const VertexClass& c, std::size_t degree, int j) {
  return c.state.kind == StateKind::U && c.degree == degree && c.state.j == j;
}

}  // namespace

int discharge_level(int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  return k % 2 == 0 ? k / 2 - 1 : (k - 3) / 2;
}

std::string VertexClass::tag() const {
  std::string out;
  switch (state.kind) {
    case StateKind::U: out = "U^" + std::to_string(degree) + "_" + std::to_string(state.j); break;
    case StateKind::F: out = "F^" + std::to_string(degree) + "_" + std::to_string(state.j); break;
    case StateKind::I: out = "I^" + std::to_string(degree); break;
  }
  if (needy) out += "*";
  return out;
}

std::vector<VertexClass> classify(const PrecoloredGraph& g) {
  const Graph& graph = g.graph();
  const int level = discharge_level(g.k());
  std::vector<VertexClass> out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out[v] = {g.state(v), graph.degree(v), false};
  if (g.k() % 2 == 1) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (!is_u(out[v], 3, 0)) continue;
      int low = 0;
      for (Vertex w : graph.neighbors(v)) low += is_u(out[w], 2, level) ? 1 : 0;
      out[v].needy = (low == 2);
    }
  }
  return out;
}

ChargeReport initial_charges(const PrecoloredGraph& g) {
  const CoefficientTable table = coefficients(g.k());
  ChargeReport report;
  report.k = g.k();
  report.classes = classify(g);
  report.initial.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexState& s = g.state(v);
    if (s.kind == StateKind::I) {
      throw std::invalid_argument("vertex " + std::to_string(v) +
                                  " is precolored I, which has no charge");
    }
    report.initial[v] =
        table.c_e * static_cast<std::int64_t>(g.graph().degree(v)) - 2 * table.of(s);
    report.total_initial += report.initial[v];
  }
  report.final = report.initial;
  report.total_final = report.total_initial;
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) all[v] = v;
  report.minus_two_rho = -2 * potential(g, all);
  return report;
}

ChargeReport discharge(const PrecoloredGraph& g) {
  ChargeReport report = initial_charges(g);
  const Graph& graph = g.graph();
  const int level = discharge_level(g.k());
  const bool odd = g.k() % 2 == 1;
  const std::int64_t take = odd ? 2 : 1;
  std::vector<std::int64_t> delta(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const VertexClass& c = report.classes[v];
    if (is_u(c, 2, level)) {
      for (Vertex w : graph.neighbors(v)) {
        delta[v] += take;
        delta[w] -= take;
      }
    }
    if (odd && c.needy) {
      for (Vertex w : graph.neighbors(v)) {
        if (is_u(report.classes[w], 2, level)) continue;
        delta[v] += 1;
        delta[w] -= 1;
      }
    }
  }
  report.total_final = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    report.final[v] = report.initial[v] + delta[v];
    report.total_final += report.final[v];
  }
  return report;
}

std::optional<ChargeBound> charge_lower_bound(int k, const VertexClass& c) {
  const std::int64_t ce = coefficients(k).c_e;
  const int l = discharge_level(k);
  const int j = c.state.j;
  const std::size_t d = c.degree;
  const bool u = c.state.kind == StateKind::U;
  const bool f = c.state.kind == StateKind::F;
  auto bound = [](std::int64_t value, bool only = false) {
    return std::optional<ChargeBound>(ChargeBound{value, only});
  };
  if (k % 2 == 0) {
    if (d == 1 && f && j >= l + 2) return bound(4);
    if (d == 2 && f && j == 1) return bound(4);
    if (d == 2 && u && j == l) return bound(0, true);
    if (d == 2 && u && j == l + 1) return bound(2);
    if (d == 2 && u && j == l + 2) return bound(8);
    if (d == 3 && u && j == 0) return bound(0);
    if (d == 3 && u && j == 1) return bound(6);
    if (d == 3 && f && j == 1) return bound(ce + 3);
    if (d == 4 && u && j == 0) return bound(ce - 1);
    if (d == 4 && u && j == 1) return bound(ce + 5);
    if (d == 4 && f && j == 1) return bound(2 * ce + 2);
    return std::nullopt;
  }
  if (d == 2 && f && j == 1) return bound(2);
  if (d == 2 && f && j == 2) return bound(8);
  if (d == 2 && u && j == l) return bound(0, true);
  if (d == 2 && u && j == l + 1) return bound(0, true);
  if (d == 2 && u && j == l + 2) return bound(4);
  if (d == 3 && u && j == 0) return bound(0, true);
  if (d == 3 && u && j == 1) return bound(3);
  if (d == 3 && u && j == 2) return bound(9);
  if (d == 3 && f && j == 1) return bound(ce);
  if (d == 3 && f && j == 2) return bound(ce + 6);
  if (d == 4 && u && j == 0) return bound(ce - 5);
  if (d == 4 && u && j == 1) return bound(ce + 1);
  if (d == 4 && u && j == 2) return bound(ce + 7);
  if (d == 4 && f && j == 1) return bound(2 * ce - 2);
  return std::nullopt;
}

std::string format_charge_report(const ChargeReport& report) {
  std::ostringstream out;
  out << "vertex\tclass\tinitial\tfinal\n";
  for (std::size_t v = 0; v < report.classes.size(); ++v) {
    out << v << '\t' << report.classes[v].tag() << '\t' << report.initial[v] << '\t'
        << report.final[v] << '\n';
  }
  out << "total\t-\t" << report.total_initial << '\t' << report.total_final << '\n';
  out << "-2rho\t-\t" << report.minus_two_rho << '\t' << report.minus_two_rho << '\n';
  return out.str();
}

}  // namespace ifk
