#include <doctest.h>

#include <random>

#include "ifk/coefficients.hpp"
#include "ifk/constructions.hpp"
#include "ifk/density.hpp"
#include "ifk/flow.hpp"
#include "ifk/rational.hpp"
#include "oracles.hpp"

using namespace ifk;

namespace {

Graph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.push_back(Edge::make(v, static_cast<Vertex>((v + 1) % n)));
  return Graph::from_edges(n, edges);
}

std::vector<Vertex> all_vertices(std::size_t n) {
  std::vector<Vertex> out(n);
  std::iota(out.begin(), out.end(), 0);
  return out;
}

}  // namespace

TEST_CASE("rational arithmetic") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK((Rational(1, 2) + Rational(1, 3)).to_string() == "5/6");
  CHECK(Rational(2).to_string() == "2/1");
  CHECK(Rational(18, 7) > Rational(30, 12));
  CHECK(Rational::parse("-4/6") == Rational(-2, 3));
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), OverflowError);
}

TEST_CASE("coefficient tables for k = 2, 3, 4") {
  auto t2 = coefficients(2);
  CHECK(t2.c_e == 5);
  CHECK(t2.u(0) == 6);
  CHECK(t2.u(1) == 3);
  CHECK(t2.f(1) == 2);
  CHECK(t2.f(2) == 0);
  CHECK(t2.c_i == 1);

  auto t3 = coefficients(3);
  CHECK(t3.c_e == 7);
  CHECK(std::vector<std::int64_t>(t3.c_u.begin(), t3.c_u.begin() + 3) ==
        std::vector<std::int64_t>{9, 6, 3});
  CHECK(t3.f(1) == 4);
  CHECK(t3.f(2) == 1);
  CHECK(t3.f(3) == 0);
  CHECK(t3.c_i == 2);

  auto t4 = coefficients(4);
  CHECK(t4.c_e == 11);
  CHECK(std::vector<std::int64_t>(t4.c_u.begin(), t4.c_u.begin() + 4) ==
        std::vector<std::int64_t>{15, 12, 9, 6});
  CHECK(t4.f(1) == 8);
  CHECK(t4.f(2) == 5);
  CHECK(t4.f(3) == 3);
  CHECK(t4.f(4) == 0);
  CHECK(t4.c_i == 4);

  CHECK_THROWS_AS(coefficients(1), std::invalid_argument);
}

TEST_CASE("coefficient identities for 2 <= k <= 64") {
  for (int k = 2; k <= 64; ++k) {
    CAPTURE(k);
    auto t = coefficients(k);
    CHECK(t.c_e == (k % 2 == 0 ? 3 * k - 1 : 3 * k - 2));
    CHECK(2 * t.u(0) == 3 * t.c_e - 3);
    for (int j = 0; j <= k; ++j) CHECK(t.u(j) == t.u(0) - 3 * j);
    const int upper = upper_f_regime_start(k);
    CHECK(upper == (k + 3) / 2);
    for (int j = 1; j <= k; ++j) {
      CHECK(t.f(j) == (j < upper ? t.c_e - 3 * j : 3 * (k - j)));
      CHECK(t.f(j) >= 0);
      if (j < upper) CHECK(t.f(j) == t.u(j - 1) + t.c_i - t.c_e);
    }
    for (int j = 0; j < k; ++j) CHECK(t.u(j) >= 0);
    CHECK(t.f(k) == 0);
    CHECK(2 * t.c_i == t.c_e - 3);
    CHECK(t.c_i == t.u(0) + t.f(k) - t.c_e);
    CHECK(t.c_i >= 0);
    CHECK(f_threshold(k) == Rational(2 * t.u(0), t.c_e));
  }
}

TEST_CASE("threshold values") {
  CHECK(f_threshold(2) == Rational(12, 5));
  CHECK(f_threshold(3) == Rational(18, 7));
  CHECK(f_threshold(4) == Rational(30, 11));
  CHECK(f_threshold(6) == Rational(48, 17));
  CHECK_THROWS_AS(f_threshold(1), std::invalid_argument);
}

TEST_CASE("potential examples") {
  PrecoloredGraph k3(complete(3), 2);
  CHECK(potential(k3, all_vertices(3)) == 3);
  CHECK(potential(k3, std::vector<Vertex>{}) == 0);
  auto g20 = sharpness_graph(2, 0);
  CHECK(potential(g20, all_vertices(7)) == -3);
  CHECK_THROWS_AS(potential(k3, std::vector<Vertex>{5}), std::out_of_range);
}

TEST_CASE("min_potential_subset examples") {
  PrecoloredGraph k3(complete(3), 2);
  auto all = min_potential_subset(k3, SubsetMode::All);
  CHECK(all.value == 0);
  CHECK(all.witness.empty());
  auto proper = min_potential_subset(k3, SubsetMode::NonemptyProper);
  CHECK(proper.value == 6);
  CHECK(proper.witness.size() == 1);
  auto g20 = sharpness_graph(2, 0);
  auto nonempty = min_potential_subset(g20, SubsetMode::Nonempty);
  CHECK(nonempty.value == -3);
  CHECK(nonempty.witness == all_vertices(7));
  CHECK_THROWS_AS(min_potential_subset(PrecoloredGraph(Graph(1), 2), SubsetMode::NonemptyProper),
                  std::invalid_argument);
}

TEST_CASE("max flow examples") {
  FlowNetwork one(2, 0, 1);
  one.add_arc(0, 1, 7);
  CHECK(max_flow(one).value == 7);

  FlowNetwork two(4, 0, 3);
  two.add_arc(0, 1, 2);
  two.add_arc(1, 3, 9);
  two.add_arc(0, 2, 8);
  two.add_arc(2, 3, 3);
  auto r = max_flow(two);
  CHECK(r.value == 5);
  CHECK(r.source_side == std::vector<bool>{true, false, true, false});

  FlowNetwork inf(3, 0, 2);
  inf.add_infinite_arc(0, 1);
  inf.add_arc(1, 2, 4);
  CHECK(inf.infinite_capacity() == 5);
  CHECK(max_flow(inf).value == 4);
  CHECK_THROWS_AS(inf.add_arc(0, 1, -1), std::invalid_argument);
}

TEST_CASE("forced project selection on the triangle") {
  // All vertices forced in: profit is 3 C_E - 3 C_U0 = -rho(V).
  std::vector<std::int64_t> cost(3, 6);
  auto r = max_profit_subset(complete(3), 5, cost, std::vector<Vertex>{0, 1, 2});
  CHECK(r.profit == -3);
  CHECK(r.selected.size() == 3);
}

TEST_CASE("mad examples") {
  CHECK(mad(cycle(5)).mad == Rational(2));
  CHECK(mad(complete(4)).mad == Rational(3));
  auto g20 = mad(sharpness_graph(2, 0).graph());
  CHECK(g20.mad == Rational(18, 7));
  CHECK(g20.witness.size() == 7);
  CHECK(mad(Graph(3)).mad == Rational(0));
  CHECK_THROWS_AS(mad(Graph(0)), std::invalid_argument);
}

TEST_CASE("property: min potential and mad agree with subset enumeration") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    std::size_t n = 2 + rng() % 11;
    int k = 2 + static_cast<int>(rng() % 5);
    double p = std::uniform_real_distribution<double>(0.15, 0.8)(rng);
    Graph g = oracle::random_graph(rng, n, p);
    auto pg = oracle::random_precolored(rng, g, k, true, 0.5);
    for (int mode = 0; mode < 3; ++mode) {
      auto got = min_potential_subset(pg, static_cast<SubsetMode>(mode));
      CHECK(got.value == oracle::min_potential(pg, mode));
      CHECK(potential(pg, got.witness) == got.value);
    }
    auto m = mad(g);
    auto [num, den] = oracle::mad(g);
    CHECK(m.mad == Rational(num, den));
    CHECK(m.mad >= Rational(2 * static_cast<std::int64_t>(g.edge_count()),
                            static_cast<std::int64_t>(n)));
    auto mask = vertex_mask(n, m.witness);
    CHECK(Rational(2 * static_cast<std::int64_t>(induced_edge_count(g, mask)),
                   static_cast<std::int64_t>(m.witness.size())) == m.mad);
    // Monotone under deleting a vertex.
    if (n > 1) CHECK(mad(delete_vertex(g, 0).graph).mad <= m.mad);
  }
}

TEST_CASE("property: submodularity of the potential") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 12;
    int k = 2 + static_cast<int>(rng() % 6);
    Graph g = oracle::random_graph(rng, n, 0.4);
    auto pg = oracle::random_precolored(rng, g, k, true, 0.5);
    std::uint64_t a = rng() & ((std::uint64_t{1} << n) - 1);
    std::uint64_t b = rng() & ((std::uint64_t{1} << n) - 1);
    auto rho = [&](std::uint64_t mask) { return oracle::potential_mask(pg, mask); };
    CHECK(rho(a | b) + rho(a & b) <= rho(a) + rho(b));
  }
}

TEST_CASE("property: trivial potential of V is nonnegative iff density is at most f(k)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 12;
    int k = 2 + static_cast<int>(rng() % 8);
    Graph g = oracle::random_graph(rng, n, 0.4);
    PrecoloredGraph pg(g, k);
    bool nonneg = potential(pg, all_vertices(n)) >= 0;
    bool sparse = Rational(2 * static_cast<std::int64_t>(g.edge_count()),
                           static_cast<std::int64_t>(n)) <= f_threshold(k);
    CHECK(nonneg == sparse);
  }
}
