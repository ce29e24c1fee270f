#include "ifk/ifk.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>
#include <vector>

#include "ifk/coefficients.hpp"
#include "ifk/coloring.hpp"
#include "ifk/constructions.hpp"
#include "ifk/density.hpp"
#include "ifk/discharging.hpp"
#include "ifk/graph.hpp"
#include "ifk/graph_io.hpp"
#include "ifk/rational.hpp"
#include "ifk/solver.hpp"

struct ifk_graph {
  ifk::PrecoloredGraph graph;
  std::vector<std::string> header;
};

struct ifk_coloring {
  ifk::Coloring coloring;
};

namespace {

thread_local std::string last_error;

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("search budget exceeded") {}
};

struct NullPointer : std::runtime_error {
  NullPointer() : std::runtime_error("null pointer argument") {}
};

template <class Fn>
ifk_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return IFK_OK;
  } catch (const ifk::ParseError& e) {
    last_error = e.what();
    return IFK_ERR_PARSE;
  } catch (const ifk::ColoringError& e) {
    last_error = e.what();
    return IFK_ERR_PRECONDITION;
  } catch (const BudgetExceeded& e) {
    last_error = e.what();
    return IFK_ERR_BUDGET_EXCEEDED;
  } catch (const NullPointer& e) {
    last_error = e.what();
    return IFK_ERR_NULL_POINTER;
  } catch (const ifk::OverflowError& e) {
    last_error = e.what();
    return IFK_ERR_OVERFLOW;
  } catch (const std::out_of_range& e) {
    last_error = e.what();
    return IFK_ERR_OUT_OF_RANGE;
  } catch (const std::invalid_argument& e) {
    last_error = e.what();
    return IFK_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return IFK_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IFK_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return IFK_ERR_INTERNAL;
  }
}

template <class... P>
void require(const P*... ptrs) {
  if (((ptrs == nullptr) || ...)) throw NullPointer();
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void export_ids(const std::vector<ifk::Vertex>& ids, uint32_t** out, size_t* len) {
  *len = ids.size();
  *out = static_cast<uint32_t*>(std::malloc(std::max<size_t>(1, ids.size()) * sizeof(uint32_t)));
  if (*out == nullptr) throw std::bad_alloc();
  std::copy(ids.begin(), ids.end(), *out);
}

// Comment lines before the first directive, without the '#' and one space.
std::vector<std::string> leading_comments(std::string_view text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (line[first] != '#') break;
    line.remove_prefix(first + 1);
    if (!line.empty() && line.front() == ' ') line.remove_prefix(1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    out.emplace_back(line);
  }
  return out;
}

ifk::VertexState state_of(char kind, int j) {
  switch (kind) {
    case 'U': return ifk::VertexState::U(j);
    case 'F': return ifk::VertexState::F(j);
    case 'I':
      if (j != 0) throw std::invalid_argument("the I gadget takes j = 0");
      return ifk::VertexState::I();
  }
  throw std::invalid_argument(std::string("unknown gadget kind '") + kind + "'");
}

ifk::SolveOptions options(uint64_t max_nodes) {
  ifk::SolveOptions o;
  o.max_nodes = max_nodes;
  return o;
}

}  // namespace

extern "C" {

const char* ifk_last_error(void) { return last_error.c_str(); }

const char* ifk_status_name(ifk_status status) {
  switch (status) {
    case IFK_OK: return "ok";
    case IFK_ERR_PARSE: return "parse error";
    case IFK_ERR_INVALID_ARGUMENT: return "invalid argument";
    case IFK_ERR_OUT_OF_RANGE: return "out of range";
    case IFK_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case IFK_ERR_PRECONDITION: return "precondition violated";
    case IFK_ERR_OVERFLOW: return "arithmetic overflow";
    case IFK_ERR_NULL_POINTER: return "null pointer";
    case IFK_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void ifk_string_free(char* s) { std::free(s); }
void ifk_ids_free(uint32_t* ids) { std::free(ids); }

ifk_status ifk_graph_parse(const char* text, size_t len, ifk_graph** out) {
  return guarded([&] {
    require(out);
    *out = nullptr;
    if (text == nullptr && len != 0) throw NullPointer();
    std::string_view view(text == nullptr ? "" : text, len);
    auto g = std::make_unique<ifk_graph>();
    g->graph = ifk::parse_graph(view);
    g->header = leading_comments(view);
    *out = g.release();
  });
}

void ifk_graph_free(ifk_graph* g) { delete g; }

ifk_status ifk_graph_serialize(const ifk_graph* g, char** out) {
  return guarded([&] {
    require(g, out);
    *out = dup_string(ifk::serialize_graph(g->graph, g->header));
  });
}

size_t ifk_graph_vertex_count(const ifk_graph* g) { return g ? g->graph.vertex_count() : 0; }
size_t ifk_graph_edge_count(const ifk_graph* g) { return g ? g->graph.graph().edge_count() : 0; }
int ifk_graph_k(const ifk_graph* g) { return g ? g->graph.k() : 0; }

ifk_status ifk_graph_edge(const ifk_graph* g, size_t index, uint32_t* u, uint32_t* v) {
  return guarded([&] {
    require(g, u, v);
    auto edges = g->graph.graph().edges();
    if (index >= edges.size()) throw std::out_of_range("edge index " + std::to_string(index));
    *u = edges[index].u;
    *v = edges[index].v;
  });
}

int ifk_graph_has_header(const ifk_graph* g, const char* word) {
  if (g == nullptr || word == nullptr) return 0;
  const std::string w(word);
  for (const auto& line : g->header) {
    if (line.compare(0, w.size(), w) == 0 &&
        (line.size() == w.size() || line[w.size()] == ' ' || line[w.size()] == '\t')) {
      return 1;
    }
  }
  return 0;
}

ifk_status ifk_graph_delete_edge(const ifk_graph* g, uint32_t u, uint32_t v, ifk_graph** out) {
  return guarded([&] {
    require(g, out);
    *out = new ifk_graph{ifk::delete_edge(g->graph, ifk::Edge::make(u, v)), g->header};
  });
}

ifk_status ifk_graph_delete_vertex(const ifk_graph* g, uint32_t v, ifk_graph** out) {
  return guarded([&] {
    require(g, out);
    *out = new ifk_graph{ifk::delete_vertex(g->graph, v).graph, g->header};
  });
}

ifk_status ifk_graph_with_k(const ifk_graph* g, int k, ifk_graph** out) {
  return guarded([&] {
    require(g, out);
    std::vector<ifk::VertexState> states(g->graph.states().begin(), g->graph.states().end());
    *out = new ifk_graph{ifk::PrecoloredGraph(g->graph.graph(), std::move(states), k), g->header};
  });
}

ifk_status ifk_graph_girth(const ifk_graph* g, size_t* girth, int* acyclic) {
  return guarded([&] {
    require(g, girth, acyclic);
    auto value = ifk::girth(g->graph.graph());
    *acyclic = value ? 0 : 1;
    *girth = value.value_or(0);
  });
}

ifk_status ifk_coefficients(int k, int64_t* c_e, int64_t* c_u, int64_t* c_f, int64_t* c_i) {
  return guarded([&] {
    require(c_e, c_u, c_f, c_i);
    const auto table = ifk::coefficients(k);
    *c_e = table.c_e;
    *c_i = table.c_i;
    std::copy(table.c_u.begin(), table.c_u.end(), c_u);
    std::copy(table.c_f.begin(), table.c_f.end(), c_f);
  });
}

ifk_status ifk_coefficients_report(int k, char** tsv) {
  return guarded([&] {
    require(tsv);
    const auto table = ifk::coefficients(k);
    std::ostringstream out;
    out << "name\tj\tvalue\n";
    out << "C_E\t-\t" << table.c_e << '\n';
    for (int j = 0; j <= k; ++j) out << "C_U\t" << j << '\t' << table.u(j) << '\n';
    for (int j = 1; j <= k; ++j) out << "C_F\t" << j << '\t' << table.f(j) << '\n';
    out << "C_I\t-\t" << table.c_i << '\n';
    *tsv = dup_string(out.str());
  });
}

ifk_status ifk_threshold(int k, int64_t* num, int64_t* den) {
  return guarded([&] {
    require(num, den);
    const auto f = ifk::f_threshold(k);
    *num = f.num();
    *den = f.den();
  });
}

ifk_status ifk_potential(const ifk_graph* g, const uint32_t* subset, size_t len, int64_t* value) {
  return guarded([&] {
    require(g, value);
    if (subset == nullptr && len != 0) throw NullPointer();
    *value = ifk::potential(g->graph, std::span<const ifk::Vertex>(subset, len));
  });
}

ifk_status ifk_min_potential(const ifk_graph* g, ifk_subset_mode mode, int64_t* value,
                             uint32_t** witness, size_t* witness_len) {
  return guarded([&] {
    require(g, value, witness, witness_len);
    ifk::SubsetMode m;
    switch (mode) {
      case IFK_SUBSET_ALL: m = ifk::SubsetMode::All; break;
      case IFK_SUBSET_NONEMPTY: m = ifk::SubsetMode::Nonempty; break;
      case IFK_SUBSET_NONEMPTY_PROPER: m = ifk::SubsetMode::NonemptyProper; break;
      default: throw std::invalid_argument("unknown subset mode");
    }
    const auto best = ifk::min_potential_subset(g->graph, m);
    export_ids(best.witness, witness, witness_len);
    *value = best.value;
  });
}

ifk_status ifk_mad(const ifk_graph* g, int64_t* num, int64_t* den, uint32_t** witness,
                   size_t* witness_len) {
  return guarded([&] {
    require(g, num, den, witness, witness_len);
    const auto result = ifk::mad(g->graph.graph());
    export_ids(result.witness, witness, witness_len);
    *num = result.mad.num();
    *den = result.mad.den();
  });
}

ifk_status ifk_solve(const ifk_graph* g, uint64_t max_nodes, int* feasible,
                     ifk_coloring** coloring) {
  return guarded([&] {
    require(g, feasible, coloring);
    *coloring = nullptr;
    auto result = ifk::solve(g->graph, options(max_nodes));
    if (result.status == ifk::SolveStatus::BudgetExceeded) throw BudgetExceeded();
    *feasible = result.status == ifk::SolveStatus::Feasible ? 1 : 0;
    if (result.coloring) *coloring = new ifk_coloring{std::move(*result.coloring)};
  });
}

void ifk_coloring_free(ifk_coloring* c) { delete c; }

ifk_status ifk_coloring_parse(const ifk_graph* g, const char* text, size_t len,
                              ifk_coloring** out) {
  return guarded([&] {
    require(g, out);
    if (text == nullptr && len != 0) throw NullPointer();
    *out = new ifk_coloring{ifk::parse_coloring(g->graph, std::string_view(text ? text : "", len))};
  });
}

ifk_status ifk_coloring_format(const ifk_graph* g, const ifk_coloring* c, char** out) {
  return guarded([&] {
    require(g, c, out);
    *out = dup_string(ifk::format_coloring(g->graph, c->coloring));
  });
}

ifk_status ifk_coloring_dot(const ifk_graph* g, const ifk_coloring* c, char** out) {
  return guarded([&] {
    require(g, c, out);
    *out = dup_string(ifk::coloring_dot(g->graph, c->coloring));
  });
}

ifk_status ifk_verify(const ifk_graph* g, const ifk_coloring* c, int* ok, char** report) {
  return guarded([&] {
    require(g, c, ok, report);
    const auto result = ifk::verify(g->graph, c->coloring);
    std::string text;
    for (const auto& v : result.violations) text += v.describe() + "\n";
    *report = dup_string(text);
    *ok = result.ok() ? 1 : 0;
  });
}

ifk_status ifk_critical(const ifk_graph* g, uint64_t max_nodes, int* critical, char** report) {
  return guarded([&] {
    require(g, critical, report);
    const auto verdict = ifk::is_critical(g->graph, options(max_nodes));
    if (verdict.reason == ifk::CriticalityVerdict::Reason::BudgetExceeded) throw BudgetExceeded();
    std::string text = verdict.describe() + "\n";
    if (verdict.coloring) text += ifk::format_coloring(g->graph, *verdict.coloring);
    *report = dup_string(text);
    *critical = verdict.is_critical ? 1 : 0;
  });
}

ifk_status ifk_gen_sharpness(int k, int t, ifk_graph** out) {
  return guarded([&] {
    require(out);
    *out = new ifk_graph{ifk::sharpness_graph(k, t), ifk::sharpness_header(k, t)};
  });
}

ifk_status ifk_gen_gadget(char kind, int j, int k, ifk_graph** out, uint32_t* root) {
  return guarded([&] {
    require(out);
    const auto state = state_of(kind, j);
    auto gd = ifk::gadget(state, k);
    std::vector<std::string> header{"gadget " + state.to_string() + " for k=" +
                                    std::to_string(k) + ", root " + std::to_string(gd.root)};
    if (root != nullptr) *root = gd.root;
    *out = new ifk_graph{ifk::PrecoloredGraph(std::move(gd.graph), k), std::move(header)};
  });
}

ifk_status ifk_verify_gadget(char kind, int j, int k, uint64_t max_nodes, int* pass,
                             char** report) {
  return guarded([&] {
    require(pass, report);
    const auto verdict = ifk::verify_gadget(state_of(kind, j), k, options(max_nodes));
    if (verdict.budget_exceeded) throw BudgetExceeded();
    std::string text = verdict.pass ? "pass\n" : "fail\n";
    for (const auto& f : verdict.failures) text += f + "\n";
    *report = dup_string(text);
    *pass = verdict.pass ? 1 : 0;
  });
}

ifk_status ifk_expand(const ifk_graph* g, ifk_graph** out) {
  return guarded([&] {
    require(g, out);
    auto expansion = ifk::expand_precoloring(g->graph);
    const std::size_t n = g->graph.vertex_count();
    std::vector<std::string> header{
        n == 0 ? std::string("gadget expansion of the empty graph")
               : "gadget expansion; vertices 0.." + std::to_string(n - 1) + " keep their ids"};
    *out = new ifk_graph{std::move(expansion.graph), std::move(header)};
  });
}

ifk_status ifk_discharge_report(const ifk_graph* g, char** tsv, int* consistent) {
  return guarded([&] {
    require(g, tsv, consistent);
    const auto report = ifk::discharge(g->graph);
    *tsv = dup_string(ifk::format_charge_report(report));
    *consistent = report.sum_identity_holds() && report.conserved() ? 1 : 0;
  });
}

}  // extern "C"
