// Command-line front end over the C interface.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ifk/ifk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

// Carries an exit code out of a subcommand handler.
struct Exit {
  int code;
  std::string message;
};

struct GraphDeleter {
  void operator()(ifk_graph* g) const { ifk_graph_free(g); }
};
struct ColoringDeleter {
  void operator()(ifk_coloring* c) const { ifk_coloring_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { ifk_string_free(s); }
};
struct IdsDeleter {
  void operator()(uint32_t* ids) const { ifk_ids_free(ids); }
};
using GraphPtr = std::unique_ptr<ifk_graph, GraphDeleter>;
using ColoringPtr = std::unique_ptr<ifk_coloring, ColoringDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;
using IdsPtr = std::unique_ptr<uint32_t, IdsDeleter>;

void check(ifk_status status, const std::string& context = {}) {
  if (status == IFK_OK) return;
  std::string msg = ifk_last_error();
  if (!context.empty()) msg = context + ": " + msg;
  throw Exit{status == IFK_ERR_BUDGET_EXCEEDED ? kExitBudget : kExitUsage, msg};
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitUsage, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

GraphPtr load_graph(const std::string& path) {
  const std::string text = read_input(path);
  ifk_graph* g = nullptr;
  check(ifk_graph_parse(text.data(), text.size(), &g), path);
  return GraphPtr(g);
}

std::string take(char* s) { return StringPtr(s).get(); }

std::string serialize(const ifk_graph* g) {
  char* out = nullptr;
  check(ifk_graph_serialize(g, &out));
  return take(out);
}

std::string join_ids(const uint32_t* ids, size_t len) {
  std::ostringstream out;
  for (size_t i = 0; i < len; ++i) out << (i ? " " : "") << ids[i];
  return out.str();
}

std::vector<uint32_t> parse_id_list(const std::string& list) {
  std::vector<uint32_t> out;
  std::stringstream in(list);
  for (std::string tok; std::getline(in, tok, ',');) {
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long value = 0;
    try {
      value = std::stoul(tok, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != tok.size() || tok[0] == '-' || value > UINT32_MAX) {
      throw Exit{kExitUsage, "bad vertex id '" + tok + "' in --subset"};
    }
    out.push_back(static_cast<uint32_t>(value));
  }
  return out;
}

struct ColorResult {
  std::string out;
  std::string err;
  int code = kExitOk;
};

// Solves one graph and renders the coloring or the verdict.
ColorResult color_graph(const ifk_graph* g, uint64_t max_nodes, bool dot) {
  ColorResult r;
  int feasible = 0;
  ifk_coloring* raw = nullptr;
  ifk_status st = ifk_solve(g, max_nodes, &feasible, &raw);
  ColoringPtr coloring(raw);
  if (st == IFK_ERR_BUDGET_EXCEEDED) {
    r.out = "budget exceeded\n";
    r.code = kExitBudget;
    return r;
  }
  check(st);
  if (!feasible) {
    r.out = "infeasible\n";
    r.code = kExitNo;
    return r;
  }
  char* text = nullptr;
  check(dot ? ifk_coloring_dot(g, coloring.get(), &text)
            : ifk_coloring_format(g, coloring.get(), &text));
  r.out = take(text);
  return r;
}

ColorResult color_file(const std::string& path, uint64_t max_nodes, bool dot) {
  try {
    GraphPtr g = load_graph(path);
    return color_graph(g.get(), max_nodes, dot);
  } catch (const Exit& e) {
    return {"", e.message + "\n", e.code};
  }
}

int run_color(const std::vector<std::string>& files, uint64_t max_nodes, bool dot,
              unsigned jobs) {
  std::vector<ColorResult> results(files.size());
  if (jobs <= 1 || files.size() <= 1) {
    for (size_t i = 0; i < files.size(); ++i) results[i] = color_file(files[i], max_nodes, dot);
  } else {
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < std::min<size_t>(jobs, files.size()); ++t) {
      pool.emplace_back([&] {
        for (size_t i; (i = next++) < files.size();) {
          results[i] = color_file(files[i], max_nodes, dot);
        }
      });
    }
    for (auto& th : pool) th.join();
  }
  int code = kExitOk;
  for (size_t i = 0; i < files.size(); ++i) {
    if (files.size() > 1) std::cout << "# " << files[i] << '\n';
    std::cout << results[i].out;
    std::cerr << results[i].err;
    code = std::max(code, results[i].code);
  }
  return code;
}

int run_girth_corollary(const std::string& path, uint64_t max_nodes) {
  GraphPtr g = load_graph(path);
  if (!ifk_graph_has_header(g.get(), "planar")) {
    throw Exit{kExitUsage, path + ": missing '# planar' header; planarity must be asserted"};
  }
  size_t girth = 0;
  int acyclic = 0;
  check(ifk_graph_girth(g.get(), &girth, &acyclic));
  int k = 0;
  if (acyclic || girth >= 9) {
    k = 3;
  } else if (girth == 8) {
    k = 4;
  } else if (girth == 7) {
    k = 6;
  } else {
    throw Exit{kExitUsage, path + ": girth " + std::to_string(girth) + " is below 7"};
  }
  ifk_graph* raw = nullptr;
  check(ifk_graph_with_k(g.get(), k, &raw));
  GraphPtr target(raw);
  std::cout << "# girth " << (acyclic ? std::string("inf") : std::to_string(girth)) << ", k "
            << k << '\n';
  ColorResult r = color_graph(target.get(), max_nodes, false);
  std::cout << r.out;
  return r.code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact (I,F_k)-partition toolkit"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  int k = 0;
  int t = 0;
  int j = 0;
  std::string file;
  std::string coloring_file;
  std::string kind;
  std::vector<std::string> files;
  uint64_t max_nodes = 0;
  bool dot = false;
  unsigned jobs = 1;
  std::string subset;
  std::string min_mode;

  auto* coeffs = app.add_subcommand("coeffs", "Print the coefficient table as TSV");
  coeffs->add_option("K", k, "forest component bound")->required();
  coeffs->callback([&] {
    char* tsv = nullptr;
    check(ifk_coefficients_report(k, &tsv));
    std::cout << take(tsv);
  });

  auto* threshold = app.add_subcommand("threshold", "Print the mad threshold f(k)");
  threshold->add_option("K", k, "forest component bound")->required();
  threshold->callback([&] {
    int64_t num = 0, den = 0;
    check(ifk_threshold(k, &num, &den));
    std::cout << num << '/' << den << '\n';
  });

  auto* mad = app.add_subcommand("mad", "Exact maximum average degree and a densest set");
  mad->add_option("FILE", file, "graph file, - for stdin")->required();
  mad->callback([&] {
    GraphPtr g = load_graph(file);
    int64_t num = 0, den = 0;
    uint32_t* ids = nullptr;
    size_t len = 0;
    check(ifk_mad(g.get(), &num, &den, &ids, &len));
    IdsPtr hold(ids);
    std::cout << num << '/' << den << '\n' << "witness " << join_ids(ids, len) << '\n';
  });

  auto* girth = app.add_subcommand("girth", "Length of a shortest cycle");
  girth->add_option("FILE", file, "graph file, - for stdin")->required();
  girth->callback([&] {
    GraphPtr g = load_graph(file);
    size_t value = 0;
    int acyclic = 0;
    check(ifk_graph_girth(g.get(), &value, &acyclic));
    if (acyclic) {
      std::cout << "inf\n";
    } else {
      std::cout << value << '\n';
    }
  });

  auto* potential = app.add_subcommand("potential", "Potential of a set or its minimum");
  potential->add_option("FILE", file, "graph file, - for stdin")->required();
  auto* subset_opt = potential->add_option("--subset", subset, "comma-separated vertex ids");
  auto* min_opt = potential->add_option("--min", min_mode, "minimise over subsets")
                      ->check(CLI::IsMember({"all", "nonempty", "proper"}));
  subset_opt->excludes(min_opt);
  potential->callback([&] {
    if (subset_opt->count() == 0 && min_opt->count() == 0) {
      throw Exit{kExitUsage, "potential needs --subset or --min"};
    }
    GraphPtr g = load_graph(file);
    if (subset_opt->count() > 0) {
      auto ids = parse_id_list(subset);
      int64_t value = 0;
      check(ifk_potential(g.get(), ids.data(), ids.size(), &value));
      std::cout << value << '\n';
      return;
    }
    ifk_subset_mode mode = min_mode == "all"        ? IFK_SUBSET_ALL
                           : min_mode == "nonempty" ? IFK_SUBSET_NONEMPTY
                                                    : IFK_SUBSET_NONEMPTY_PROPER;
    int64_t value = 0;
    uint32_t* ids = nullptr;
    size_t len = 0;
    check(ifk_min_potential(g.get(), mode, &value, &ids, &len));
    IdsPtr hold(ids);
    std::cout << value << '\n' << "witness " << join_ids(ids, len) << '\n';
  });

  auto* color = app.add_subcommand("color", "Find an (I,F_k)-coloring");
  color->add_option("FILE", files, "graph files, - for stdin")->required();
  color->add_option("--max-nodes", max_nodes, "search budget, 0 for none");
  color->add_flag("--dot", dot, "emit Graphviz DOT instead of the coloring format");
  color->add_option("--jobs", jobs, "files solved in parallel")->check(CLI::PositiveNumber);
  color->callback([&] { exit_code = run_color(files, max_nodes, dot, jobs); });

  auto* verify = app.add_subcommand("verify", "Check a coloring against a graph");
  verify->add_option("FILE", file, "graph file")->required();
  verify->add_option("COLORING", coloring_file, "coloring file")->required();
  verify->callback([&] {
    GraphPtr g = load_graph(file);
    const std::string text = read_input(coloring_file);
    ifk_coloring* raw = nullptr;
    check(ifk_coloring_parse(g.get(), text.data(), text.size(), &raw), coloring_file);
    ColoringPtr c(raw);
    int ok = 0;
    char* report = nullptr;
    check(ifk_verify(g.get(), c.get(), &ok, &report));
    std::string body = take(report);
    std::cout << (ok ? "ok\n" : body);
    if (!ok) exit_code = kExitNo;
  });

  auto* critical = app.add_subcommand("critical", "Decide (I,F_k)-criticality");
  critical->add_option("FILE", file, "graph file, - for stdin")->required();
  critical->add_option("--max-nodes", max_nodes, "budget per solver call, 0 for none");
  critical->callback([&] {
    GraphPtr g = load_graph(file);
    int is_critical = 0;
    char* report = nullptr;
    check(ifk_critical(g.get(), max_nodes, &is_critical, &report));
    std::cout << take(report);
    if (!is_critical) exit_code = kExitNo;
  });

  auto* gen = app.add_subcommand("gen", "Generate constructions");
  gen->require_subcommand(1);
  auto* sharp = gen->add_subcommand("sharpness", "The critical family G_{k,t}");
  sharp->add_option("K", k, "forest component bound")->required();
  sharp->add_option("T", t, "number of spine steps")->required();
  sharp->callback([&] {
    ifk_graph* raw = nullptr;
    check(ifk_gen_sharpness(k, t, &raw));
    GraphPtr g(raw);
    std::cout << serialize(g.get());
  });
  auto* gadget = gen->add_subcommand("gadget", "Gadget simulating a precolored vertex");
  gadget->add_option("KIND", kind, "U, F or I")->required()->check(CLI::IsMember({"U", "F", "I"}));
  gadget->add_option("J", j, "state index, 0 for I")->required();
  gadget->add_option("K", k, "forest component bound")->required();
  gadget->callback([&] {
    ifk_graph* raw = nullptr;
    check(ifk_gen_gadget(kind[0], j, k, &raw, nullptr));
    GraphPtr g(raw);
    std::cout << serialize(g.get());
  });

  auto* check_gadget = app.add_subcommand("verify-gadget", "Exhaustively check a gadget");
  check_gadget->add_option("KIND", kind, "U, F or I")->required()->check(CLI::IsMember({"U", "F", "I"}));
  check_gadget->add_option("J", j, "state index, 0 for I")->required();
  check_gadget->add_option("K", k, "forest component bound")->required();
  check_gadget->add_option("--max-nodes", max_nodes, "budget per enumeration, 0 for none");
  check_gadget->callback([&] {
    int pass = 0;
    char* report = nullptr;
    check(ifk_verify_gadget(kind[0], j, k, max_nodes, &pass, &report));
    std::cout << take(report);
    if (!pass) exit_code = kExitNo;
  });

  auto* expand = app.add_subcommand("expand", "Replace precolored vertices by gadgets");
  expand->add_option("FILE", file, "graph file, - for stdin")->required();
  expand->callback([&] {
    GraphPtr g = load_graph(file);
    ifk_graph* raw = nullptr;
    check(ifk_expand(g.get(), &raw));
    GraphPtr out(raw);
    std::cout << serialize(out.get());
  });

  auto* discharge = app.add_subcommand("discharge", "Charges before and after the rules");
  discharge->add_option("FILE", file, "graph file, - for stdin")->required();
  discharge->callback([&] {
    GraphPtr g = load_graph(file);
    char* tsv = nullptr;
    int consistent = 0;
    check(ifk_discharge_report(g.get(), &tsv, &consistent));
    std::cout << take(tsv);
    if (!consistent) exit_code = kExitNo;
  });

  auto* corollary = app.add_subcommand("girth-corollary",
                                       "Color a planar graph with k chosen from its girth");
  corollary->add_option("FILE", file, "graph file with a '# planar' header")->required();
  corollary->add_option("--max-nodes", max_nodes, "search budget, 0 for none");
  corollary->callback([&] { exit_code = run_girth_corollary(file, max_nodes); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const Exit& e) {
    if (!e.message.empty()) std::cerr << "error: " << e.message << '\n';
    return e.code;
  }
  return exit_code;
}
