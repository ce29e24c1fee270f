#include <doctest.h>

#include <cstring>
#include <string>

#include "ifk/ifk.h"

namespace {

ifk_graph* parse(const std::string& text) {
  ifk_graph* g = nullptr;
  REQUIRE(ifk_graph_parse(text.data(), text.size(), &g) == IFK_OK);
  return g;
}

std::string take(char* s) {
  std::string out(s);
  ifk_string_free(s);
  return out;
}

const std::string kTriangle = "# planar\n# note\nk 2\nn 3\ne 0 1\ne 0 2\ne 1 2\n";

}  // namespace

TEST_CASE("parse, query and serialize") {
  ifk_graph* g = parse(kTriangle);
  CHECK(ifk_graph_vertex_count(g) == 3);
  CHECK(ifk_graph_edge_count(g) == 3);
  CHECK(ifk_graph_k(g) == 2);
  uint32_t u = 0, v = 0;
  CHECK(ifk_graph_edge(g, 2, &u, &v) == IFK_OK);
  CHECK(u == 1);
  CHECK(v == 2);
  CHECK(ifk_graph_edge(g, 3, &u, &v) == IFK_ERR_OUT_OF_RANGE);
  CHECK(ifk_graph_has_header(g, "planar"));
  CHECK_FALSE(ifk_graph_has_header(g, "plan"));
  char* text = nullptr;
  REQUIRE(ifk_graph_serialize(g, &text) == IFK_OK);
  CHECK(take(text) == kTriangle);
  ifk_graph_free(g);
}

TEST_CASE("errors map to status codes with a message") {
  ifk_graph* g = nullptr;
  const std::string bad = "k 2\nn 2\ne 0 0\n";
  CHECK(ifk_graph_parse(bad.data(), bad.size(), &g) == IFK_ERR_PARSE);
  CHECK(g == nullptr);
  CHECK(std::string(ifk_last_error()).find("line 3") != std::string::npos);
  CHECK(ifk_graph_parse(bad.data(), bad.size(), nullptr) == IFK_ERR_NULL_POINTER);

  int64_t n = 0, d = 0;
  CHECK(ifk_threshold(1, &n, &d) == IFK_ERR_INVALID_ARGUMENT);
  CHECK(ifk_threshold(3, &n, &d) == IFK_OK);
  CHECK(n == 18);
  CHECK(d == 7);
  CHECK(std::string(ifk_last_error()).empty());
  CHECK(std::string(ifk_status_name(IFK_ERR_BUDGET_EXCEEDED)) == "budget exceeded");

  ifk_graph* tri = parse(kTriangle);
  ifk_graph* out = nullptr;
  CHECK(ifk_graph_delete_edge(tri, 0, 0, &out) == IFK_ERR_INVALID_ARGUMENT);
  CHECK(ifk_graph_with_k(tri, 1, &out) == IFK_ERR_INVALID_ARGUMENT);
  uint32_t ids[] = {7};
  int64_t value = 0;
  CHECK(ifk_potential(tri, ids, 1, &value) == IFK_ERR_OUT_OF_RANGE);
  ifk_graph_free(tri);
}

TEST_CASE("coefficients into caller buffers") {
  int64_t ce = 0, ci = 0, cu[5] = {}, cf[5] = {};
  REQUIRE(ifk_coefficients(4, &ce, cu, cf, &ci) == IFK_OK);
  CHECK(ce == 11);
  CHECK(cu[0] == 15);
  CHECK(cu[4] == 3);
  CHECK(cf[3] == 3);
  CHECK(cf[4] == 0);
  CHECK(ci == 4);
  char* tsv = nullptr;
  REQUIRE(ifk_coefficients_report(2, &tsv) == IFK_OK);
  CHECK(take(tsv) == "name\tj\tvalue\nC_E\t-\t5\nC_U\t0\t6\nC_U\t1\t3\nC_U\t2\t0\n"
                     "C_F\t1\t2\nC_F\t2\t0\nC_I\t-\t1\n");
}

TEST_CASE("density through the C interface") {
  ifk_graph* g = nullptr;
  REQUIRE(ifk_gen_sharpness(2, 0, &g) == IFK_OK);
  int64_t num = 0, den = 0;
  uint32_t* ids = nullptr;
  size_t len = 0;
  REQUIRE(ifk_mad(g, &num, &den, &ids, &len) == IFK_OK);
  CHECK(num == 18);
  CHECK(den == 7);
  CHECK(len == 7);
  ifk_ids_free(ids);
  int64_t value = 0;
  REQUIRE(ifk_min_potential(g, IFK_SUBSET_NONEMPTY, &value, &ids, &len) == IFK_OK);
  CHECK(value == -3);
  ifk_ids_free(ids);
  uint32_t subset[] = {0, 1, 2};
  REQUIRE(ifk_potential(g, subset, 3, &value) == IFK_OK);
  CHECK(value == 3);
  size_t girth = 0;
  int acyclic = 0;
  REQUIRE(ifk_graph_girth(g, &girth, &acyclic) == IFK_OK);
  CHECK(girth == 3);
  CHECK(acyclic == 0);
  ifk_graph_free(g);
}

TEST_CASE("solve, format, parse and verify") {
  ifk_graph* g = parse(kTriangle);
  int feasible = 0;
  ifk_coloring* c = nullptr;
  REQUIRE(ifk_solve(g, 0, &feasible, &c) == IFK_OK);
  CHECK(feasible == 1);
  char* text = nullptr;
  REQUIRE(ifk_coloring_format(g, c, &text) == IFK_OK);
  const std::string formatted = take(text);
  ifk_coloring* back = nullptr;
  REQUIRE(ifk_coloring_parse(g, formatted.data(), formatted.size(), &back) == IFK_OK);
  int ok = 0;
  char* report = nullptr;
  REQUIRE(ifk_verify(g, back, &ok, &report) == IFK_OK);
  CHECK(ok == 1);
  CHECK(take(report).empty());
  REQUIRE(ifk_coloring_dot(g, c, &text) == IFK_OK);
  CHECK(take(text).rfind("graph coloring {", 0) == 0);
  ifk_coloring_free(c);
  ifk_coloring_free(back);

  const std::string all_f = "v 0 F\nv 1 F\nv 2 F\n";
  REQUIRE(ifk_coloring_parse(g, all_f.data(), all_f.size(), &back) == IFK_OK);
  REQUIRE(ifk_verify(g, back, &ok, &report) == IFK_OK);
  CHECK(ok == 0);
  CHECK(take(report).find("f-cycle") != std::string::npos);
  ifk_coloring_free(back);
  ifk_graph_free(g);
}

TEST_CASE("criticality, budget and constructions") {
  ifk_graph* g = nullptr;
  REQUIRE(ifk_gen_sharpness(2, 0, &g) == IFK_OK);
  int feasible = 1;
  ifk_coloring* c = nullptr;
  REQUIRE(ifk_solve(g, 0, &feasible, &c) == IFK_OK);
  CHECK(feasible == 0);
  CHECK(c == nullptr);
  int critical = 0;
  char* report = nullptr;
  REQUIRE(ifk_critical(g, 0, &critical, &report) == IFK_OK);
  CHECK(critical == 1);
  CHECK(take(report) == "critical\n");
  ifk_graph_free(g);

  REQUIRE(ifk_gen_sharpness(3, 2, &g) == IFK_OK);
  CHECK(ifk_solve(g, 1, &feasible, &c) == IFK_ERR_BUDGET_EXCEEDED);
  ifk_graph_free(g);

  uint32_t root = 99;
  REQUIRE(ifk_gen_gadget('I', 0, 2, &g, &root) == IFK_OK);
  CHECK(root == 0);
  CHECK(ifk_graph_vertex_count(g) == 6);
  ifk_graph_free(g);
  CHECK(ifk_gen_gadget('I', 1, 2, &g, &root) == IFK_ERR_INVALID_ARGUMENT);
  CHECK(ifk_gen_gadget('X', 1, 2, &g, &root) == IFK_ERR_INVALID_ARGUMENT);
  CHECK(ifk_gen_gadget('U', 0, 2, &g, &root) == IFK_ERR_INVALID_ARGUMENT);

  int pass = 0;
  REQUIRE(ifk_verify_gadget('F', 2, 2, 0, &pass, &report) == IFK_OK);
  CHECK(pass == 1);
  CHECK(take(report) == "pass\n");

  ifk_graph* pre = parse("k 2\nn 1\npre 0 U 1\n");
  ifk_graph* expanded = nullptr;
  REQUIRE(ifk_expand(pre, &expanded) == IFK_OK);
  CHECK(ifk_graph_vertex_count(expanded) == 3);
  ifk_graph_free(expanded);
  ifk_graph_free(pre);
}

TEST_CASE("discharge report") {
  ifk_graph* g = parse("k 3\nn 3\ne 0 1\ne 1 2\n");
  char* tsv = nullptr;
  int consistent = 0;
  REQUIRE(ifk_discharge_report(g, &tsv, &consistent) == IFK_OK);
  CHECK(consistent == 1);
  CHECK(take(tsv).find("1\tU^2_0\t-4\t0\n") != std::string::npos);
  ifk_graph_free(g);

  g = parse("k 3\nn 1\npre 0 I\n");
  CHECK(ifk_discharge_report(g, &tsv, &consistent) == IFK_ERR_INVALID_ARGUMENT);
  ifk_graph_free(g);
}
