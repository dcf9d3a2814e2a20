#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <random>

#include "fixtures.hpp"
#include "paintbucket/errors.hpp"
#include "paintbucket/generators.hpp"
#include "paintbucket/io.hpp"
#include "paintbucket/reduction.hpp"

using namespace paintbucket;
using nlohmann::json;

TEST_CASE("graph documents") {
  const json doc = json::parse(R"({"vertices":[{"id":0,"color":"black"},{"id":1,"color":"white"}],
                                   "edges":[[0,1]]})");
  const BipartitePosition p = io::bipartite_from_json(doc);
  CHECK(p == complete_bipartite(1, 1));
  CHECK(io::to_json(p) == doc);
  CHECK(io::colored_graph_from_json(doc) == p.graph());
}

TEST_CASE("graph document errors") {
  CHECK_THROWS_AS(io::bipartite_from_json(json::parse(R"({"edges":[]})")), ParseError);
  CHECK_THROWS_AS(io::bipartite_from_json(json::parse(R"({"vertices":[{"id":0,"color":"red"}],"edges":[]})")),
                  ParseError);
  CHECK_THROWS_AS(io::bipartite_from_json(json::parse(R"({"vertices":[{"id":-1,"color":"black"}],"edges":[]})")),
                  ParseError);
  CHECK_THROWS_AS(io::bipartite_from_json(json::parse(R"({"vertices":[{"id":0,"color":"black"}],"edges":[[0]]})")),
                  ParseError);
  // Well-formed but invariant-violating.
  const json same_color = json::parse(
      R"({"vertices":[{"id":0,"color":"black"},{"id":1,"color":"black"}],"edges":[[0,1]]})");
  CHECK_NOTHROW(io::colored_graph_from_json(same_color));
  CHECK_THROWS_AS(io::bipartite_from_json(same_color), InvalidPosition);
  const json disconnected = json::parse(
      R"({"vertices":[{"id":0,"color":"black"},{"id":1,"color":"white"}],"edges":[]})");
  CHECK_THROWS_AS(io::bipartite_from_json(disconnected), InvalidPosition);
  CHECK_THROWS_AS(io::parse_json("{not json"), ParseError);
}

TEST_CASE("AE documents") {
  const json doc = json::parse(R"({"cells":["c1","c2"],"sets":[["c1"],["c1","c2"]],"to_move":"enforcer"})");
  const AePosition p = io::ae_from_json(doc);
  CHECK(p.to_move() == AePlayer::Enforcer);
  CHECK(io::to_json(p) == doc);
  CHECK_THROWS_AS(io::ae_from_json(json::parse(R"({"cells":["x0"],"sets":[],"to_move":"avoider"})")), InvalidPosition);
  CHECK_NOTHROW(io::ae_from_json(json::parse(R"({"cells":["x0"],"sets":[],"to_move":"avoider"})"), true));
  CHECK_THROWS_AS(io::ae_from_json(json::parse(R"({"cells":["c1"],"sets":[],"to_move":"maker"})")), ParseError);
  CHECK_THROWS_AS(io::ae_from_json(json::parse(R"({"cells":["c1"],"sets":[["c2"]],"to_move":"avoider"})")),
                  InvalidPosition);
}

TEST_CASE("move documents") {
  const Move m{Color::White, 7};
  CHECK(io::move_from_json(io::to_json(m)) == m);
  CHECK_THROWS_AS(io::move_from_json(json::parse(R"({"player":"white"})")), ParseError);
}

TEST_CASE("role sidecar") {
  const ReductionInstance ri = build_reduction(AePosition({"c1"}, {{"c1"}}, AePlayer::Avoider), 2);
  const json roles = io::roles_to_json(ri)["roles"];
  CHECK(roles.size() == ri.graph.size());
  CHECK(roles["0"]["type"] == "r");
  CHECK(roles["2"] == json::parse(R"({"type":"v","i":1})"));
  CHECK(roles[std::to_string(ri.id_of({RoleType::T, 0, 1, 2}))] == json::parse(R"({"type":"t","j":1,"k":2})"));
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_connected_bipartite(rng, 1 + static_cast<int>(rng() % 20), 0.3);
    const std::string text = io::to_json(p).dump();
    CHECK(io::bipartite_from_json(io::parse_json(text)) == p);
    CHECK(io::colored_graph_from_json(io::parse_json(text)) == p.graph());
  }
  for (int cells = 0; cells <= 3; ++cells) {
    for (const AePosition& p : enumerate_ae(cells, 2, AePlayer::Enforcer)) {
      CHECK(io::ae_from_json(io::parse_json(io::to_json(p).dump())) == p);
    }
  }
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    std::vector<Color> px;
    for (std::size_t k = 0; k < rows * cols; ++k) px.push_back(rng() % 2 ? Color::Black : Color::White);
    const GridPosition g(rows, cols, px);
    CHECK(parse_grid(format_grid(g)) == g);
  }
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "paintbucket_io_test";
  std::filesystem::create_directories(dir);
  io::write_file(dir / "a.json", "{\"k\":1}\n");
  CHECK(io::read_file(dir / "a.json") == "{\"k\":1}\n");
  CHECK_THROWS_AS(io::read_file(dir / "missing.json"), Error);
  std::filesystem::remove_all(dir);
}
