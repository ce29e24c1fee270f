#include <doctest.h>

#include <sstream>
#include <vector>

#include "cli_runner.hpp"

using testutil::run_shell;

namespace {

const std::string kCli = IFK_CLI_PATH;

testutil::CliResult cli(const std::string& args) { return run_shell(kCli + " " + args); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("constants") {
  auto t = cli("threshold 3");
  CHECK(t.code == 0);
  CHECK(t.out == "18/7\n");
  CHECK(cli("threshold 6").out == "48/17\n");
  CHECK(cli("threshold 1").code == 2);
  auto c = cli("coeffs 3");
  CHECK(c.code == 0);
  CHECK(c.out.find("C_E\t-\t7\n") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(cli("").code == 2);
  CHECK(cli("frobnicate").code == 2);
  CHECK(cli("threshold 3 --bogus").code == 2);
  CHECK(cli("color /nonexistent/file").code == 2);
  testutil::TempDir dir;
  CHECK(cli("color " + dir.write("bad.txt", "k 2\nn 2\ne 0 0\n")).code == 2);
  const std::string tri = dir.write("tri.txt", "k 2\nn 3\ne 0 1\ne 1 2\ne 0 2\n");
  CHECK(cli("potential " + tri).code == 2);
  CHECK(cli("potential " + tri + " --subset 0 --min all").code == 2);
  CHECK(cli("potential " + tri + " --subset 0,x").code == 2);
  CHECK(cli("girth-corollary " + tri).code == 2);
}

TEST_CASE("graph queries") {
  testutil::TempDir dir;
  const std::string c5 = dir.write("c5.txt", "k 2\nn 5\ne 0 1\ne 1 2\ne 2 3\ne 3 4\ne 0 4\n");
  auto m = cli("mad " + c5);
  CHECK(m.code == 0);
  CHECK(lines(m.out)[0] == "2/1");
  CHECK(cli("girth " + c5).out == "5\n");
  const std::string tree = dir.write("tree.txt", "k 2\nn 3\ne 0 1\ne 1 2\n");
  CHECK(cli("girth " + tree).out == "inf\n");
  const std::string tri = dir.write("tri.txt", "k 2\nn 3\ne 0 1\ne 1 2\ne 0 2\n");
  CHECK(cli("potential " + tri + " --subset 0,1,2").out == "3\n");
  CHECK(cli("potential " + tri + " --min proper").out == "6\nwitness 0\n");
  CHECK(cli("potential " + tri + " --min all").out == "0\nwitness \n");
}

TEST_CASE("color, verify, critical") {
  auto g = cli("gen sharpness 2 0");
  REQUIRE(g.code == 0);
  testutil::TempDir dir;
  const std::string g20 = dir.write("g20.txt", g.out);
  CHECK(cli("color " + g20).code == 1);
  CHECK(cli("color " + g20).out == "infeasible\n");
  CHECK(cli("critical " + g20).code == 0);

  const std::string tri = dir.write("tri.txt", "k 2\nn 3\ne 0 1\ne 1 2\ne 0 2\n");
  auto c = cli("color " + tri);
  CHECK(c.code == 0);
  const std::string col = dir.write("tri.col", c.out);
  CHECK(cli("verify " + tri + " " + col).out == "ok\n");
  const std::string bad = dir.write("bad.col", "v 0 F\nv 1 F\nv 2 F\n");
  auto v = cli("verify " + tri + " " + bad);
  CHECK(v.code == 1);
  CHECK(v.out.find("f-cycle") != std::string::npos);
  CHECK(cli("critical " + tri).code == 1);
  CHECK(cli("color --dot " + tri).out.rfind("graph coloring {", 0) == 0);

  auto g32 = dir.write("g32.txt", cli("gen sharpness 3 2").out);
  CHECK(cli("color --max-nodes 1 " + g32).code == 3);
  CHECK(cli("critical --max-nodes 1 " + g32).code == 3);

  auto batch = cli("color --jobs 3 " + tri + " " + g20 + " " + tri);
  CHECK(batch.code == 1);
  auto out = lines(batch.out);
  REQUIRE(out.size() == 1 + 3 + 1 + 1 + 1 + 3);
  CHECK(out[0] == "# " + tri);
  CHECK(out[4] == "# " + g20);
  CHECK(out[5] == "infeasible");
  CHECK(batch.out == cli("color " + tri + " " + g20 + " " + tri).out);
}

TEST_CASE("round-trip: sharpness graphs are infeasible and edge-critical") {
  testutil::TempDir dir;
  for (auto [k, t] : {std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 0}}) {
    const std::string args = std::to_string(k) + " " + std::to_string(t);
    CHECK(run_shell(kCli + " gen sharpness " + args + " | " + kCli + " color -").code == 1);
    const std::string text = cli("gen sharpness " + args).out;
    auto all = lines(text);
    for (std::size_t i = 0; i < all.size(); ++i) {
      if (all[i].rfind("e ", 0) != 0) continue;
      std::string minus;
      for (std::size_t j = 0; j < all.size(); ++j) {
        if (j != i) minus += all[j] + "\n";
      }
      CAPTURE(all[i]);
      CHECK(cli("color " + dir.write("minus.txt", minus)).code == 0);
    }
  }
}

TEST_CASE("generators, expansion and discharge") {
  auto gd = cli("gen gadget F 2 2");
  CHECK(gd.code == 0);
  CHECK(gd.out.find("n 5\n") != std::string::npos);
  CHECK(cli("gen gadget U 0 2").code == 2);
  CHECK(cli("gen gadget Q 1 2").code == 2);
  CHECK(cli("verify-gadget U 1 2").out == "pass\n");

  testutil::TempDir dir;
  const std::string pre = dir.write("pre.txt", "k 2\nn 1\npre 0 F 2\n");
  auto e = cli("expand " + pre);
  CHECK(e.code == 0);
  CHECK(e.out.find("n 5\n") != std::string::npos);
  CHECK(e.out.find("pre") == std::string::npos);

  const std::string p3 = dir.write("p3.txt", "k 3\nn 3\ne 0 1\ne 1 2\n");
  auto d = cli("discharge " + p3);
  CHECK(d.code == 0);
  CHECK(d.out.find("total\t-\t-26\t-26\n") != std::string::npos);
  CHECK(d.out.find("-2rho\t-\t-26\t-26\n") != std::string::npos);
}

TEST_CASE("girth corollary") {
  testutil::TempDir dir;
  std::string c9 = "# planar\nk 2\nn 9\n";
  for (int v = 0; v < 9; ++v) c9 += "e " + std::to_string(v) + " " + std::to_string((v + 1) % 9) + "\n";
  auto r = cli("girth-corollary " + dir.write("c9.txt", c9));
  CHECK(r.code == 0);
  CHECK(lines(r.out)[0] == "# girth 9, k 3");
  const std::string tri = dir.write("tri.txt", "# planar\nk 2\nn 3\ne 0 1\ne 1 2\ne 0 2\n");
  CHECK(cli("girth-corollary " + tri).code == 2);
}

TEST_CASE("output is deterministic") {
  const std::string a = cli("gen sharpness 4 2").out;
  CHECK(a == cli("gen sharpness 4 2").out);
  testutil::TempDir dir;
  const std::string f = dir.write("g.txt", a);
  CHECK(cli("mad " + f).out == cli("mad " + f).out);
  CHECK(cli("discharge " + f).out == cli("discharge " + f).out);
}
