#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"
#include "paintbucket/grid.hpp"
#include "paintbucket/io.hpp"

namespace fs = std::filesystem;
using namespace paintbucket;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

fs::path workdir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "paintbucket_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path file(const std::string& name, const std::string& contents) {
  const fs::path p = workdir() / name;
  std::ofstream(p) << contents;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run run(const std::string& args) {
  const fs::path out = workdir() / "stdout.txt";
  const fs::path err = workdir() / "stderr.txt";
  const std::string cmd = std::string(PAINTBUCKET_CLI) + " " + args + " > " + out.string() + " 2> " + err.string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve a grid") {
  const std::string text = "BWB\nWBW\nBWB\n";
  const Color expected = oracle::plain_winner(contract(grid_to_colored_graph(parse_grid(text))), Color::Black);
  const Run r = run(file("board.txt", text).string() + " --to-move black");
  // no subcommand given: usage error
  CHECK(r.code == 2);
  const Run s = run("solve " + file("board.txt", text).string() + " --to-move black");
  CHECK(s.code == (expected == Color::Black ? 0 : 1));
  CHECK(contains(s.out, expected == Color::Black ? "winner: Black wins" : "winner: White wins"));
  CHECK(contains(s.out, "format: grid 3x3"));
}

TEST_CASE("solve K_{2,2}") {
  const fs::path k22 = file("k22.json", R"({"vertices":[{"id":0,"color":"black"},{"id":1,"color":"black"},
    {"id":2,"color":"white"},{"id":3,"color":"white"}],"edges":[[0,2],[0,3],[1,2],[1,3]]})");
  const Run r = run("solve " + k22.string() + " --format bipartite --to-move black");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "White wins"));
  for (const char* memo : {"labeled", "iso"}) {
    const Run again = run("solve " + k22.string() + " --to-move black --threads 2 --memo " + std::string(memo));
    CHECK(again.code == 1);
  }
  // Report text is deterministic.
  CHECK(run("solve " + k22.string() + " --to-move white").out ==
        run("solve " + k22.string() + " --to-move white").out);
}

TEST_CASE("solve an AE instance") {
  const fs::path p = file("ae1.json", R"({"cells":["c1"],"sets":[["c1"]],"to_move":"avoider"})");
  const Run r = run("solve " + p.string());
  CHECK(r.code == 1);
  CHECK(contains(r.out, "Enforcer wins"));
  const Run free = run("solve " + file("ae0.json", R"({"cells":["c1"],"sets":[],"to_move":"avoider"})").string());
  CHECK(free.code == 0);
  CHECK(contains(free.out, "Avoider wins"));
}

TEST_CASE("solve errors") {
  CHECK(run("solve " + file("bad.txt", "BQ\n").string() + " --format grid").code == 2);
  CHECK(run("solve " + (workdir() / "missing.txt").string()).code == 2);
  const fs::path split = file("split.json", R"({"vertices":[{"id":0,"color":"black"},{"id":1,"color":"white"}],
    "edges":[]})");
  CHECK(run("solve " + split.string() + " --format graph").code == 2);
  const fs::path big = file("big.txt", "BWBWBWBW\nWBWBWBWB\nBWBWBWBW\nWBWBWBWB\n");
  const Run budget = run("solve " + big.string() + " --budget 5");
  CHECK(budget.code == 3);
}

TEST_CASE("reduce") {
  SUBCASE("two cells, auto") {
    const fs::path in = file("two.json", R"({"cells":["c1","c2"],"sets":[["c1","c2"]],"to_move":"avoider"})");
    const fs::path out = workdir() / "two_graph.json";
    const Run r = run("reduce " + in.string() + " -o " + out.string());
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "normalization: none"));
    const auto g = io::bipartite_from_json(io::parse_json(slurp(out)));
    CHECK(g.size() == 14);
    const auto roles = io::parse_json(slurp(workdir() / "two_graph.roles.json"));
    CHECK(roles["roles"].size() == 14);
  }
  SUBCASE("zero cells, K=2") {
    const fs::path in = file("zero.json", R"({"cells":[],"sets":[],"to_move":"avoider"})");
    const fs::path out = workdir() / "zero_graph.json";
    const Run r = run("reduce " + in.string() + " --K 2 -o " + out.string());
    REQUIRE(r.code == 0);
    CHECK(io::bipartite_from_json(io::parse_json(slurp(out))).size() == 4);
    CHECK(r.err.empty());
  }
  SUBCASE("odd, enforcer first") {
    const fs::path in = file("odd.json", R"({"cells":["c1"],"sets":[["c1"]],"to_move":"enforcer"})");
    const Run one = run("reduce " + in.string() + " -o " + (workdir() / "odd_graph.json").string());
    REQUIRE(one.code == 0);
    CHECK(contains(one.out, "normalization: "));
    const fs::path in3 = file("odd3.json", R"({"cells":["a","b"],"sets":[["a"]],"to_move":"enforcer"})");
    const Run both = run("reduce " + in3.string() + " -o " + (workdir() / "odd3_graph.json").string());
    REQUIRE(both.code == 0);
    std::size_t steps = 0;
    for (std::size_t at = both.out.find("normalization: "); at != std::string::npos;
         at = both.out.find("normalization: ", at + 1)) {
      ++steps;
    }
    CHECK(steps == 2);
    CHECK(contains(both.out, "K: 6"));
  }
  SUBCASE("small K warns but builds") {
    const fs::path in = file("warn.json", R"({"cells":["c1","c2"],"sets":[["c1"]],"to_move":"avoider"})");
    const Run r = run("reduce " + in.string() + " --K 1 -o " + (workdir() / "warn_graph.json").string());
    CHECK(r.code == 0);
    CHECK(contains(r.err, "warning"));
  }
  SUBCASE("reserved names are refused") {
    const fs::path in = file("reserved.json", R"({"cells":["x1"],"sets":[],"to_move":"avoider"})");
    CHECK(run("reduce " + in.string() + " -o " + (workdir() / "r.json").string()).code == 2);
  }
}

TEST_CASE("verify") {
  const Run complete = run("verify complete --max 4");
  CHECK(complete.code == 0);
  CHECK(contains(complete.out, "complete: 16/16"));
  CHECK(run("verify simulation --cells 2 --sets 2 --quiet").code == 0);
  CHECK(run("verify proposition --cells 2 --quiet").code == 0);
  CHECK(run("verify bogus").code == 2);
}

TEST_CASE("convert") {
  const fs::path grid = file("conv.txt", "BBW\nWBW\n");
  const fs::path out = workdir() / "conv.json";
  REQUIRE(run("convert " + grid.string() + " --to bipartite -o " + out.string()).code == 0);
  const auto p = io::bipartite_from_json(io::parse_json(slurp(out)));
  CHECK(p == contract(grid_to_colored_graph(parse_grid("BBW\nWBW\n"))));
  const Run back = run("convert " + grid.string() + " --to grid");
  CHECK(back.code == 0);
  CHECK(back.out == "BBW\nWBW\n");
}
