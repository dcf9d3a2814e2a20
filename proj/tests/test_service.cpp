#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <thread>

#include "fixtures.hpp"
#include "httplib.h"
#include "paintbucket/generators.hpp"
#include "paintbucket/io.hpp"
#include "paintbucket/service.hpp"
#include "paintbucket/solver.hpp"

using namespace paintbucket;
using nlohmann::json;

namespace {

const std::string kXPattern = "WBW\nBWB\nWBW\n";

std::string create(GameService& svc, json request) {
  const auto r = svc.create_game(request);
  REQUIRE(r.status == 201);
  return r.body["id"].get<std::string>();
}

// Replays the served history from the initial position and compares.
void check_history(GameService& svc, const std::string& id, const BipartitePosition& initial) {
  const json st = svc.get_state(id).body;
  std::vector<Move> moves;
  for (const auto& m : st["history"]) moves.push_back(io::move_from_json(m));
  CHECK(replay(initial, moves) == io::bipartite_from_json(st["position"]));
}

}  // namespace

TEST_CASE("create from the sample opening against a White engine") {
  GameService svc;
  const auto r = svc.create_game({{"grid", kXPattern}, {"engine", "white"}});
  REQUIRE(r.status == 201);
  CHECK(r.body["legal_moves"].size() == 5);
  CHECK(r.body["to_move"] == "black");
  CHECK(r.body["revision"] == 0);
  CHECK(r.body["grid"]["pixels"] == kXPattern);
  CHECK(r.body["grid"]["groups"].size() == 9);
  CHECK_FALSE(r.body.contains("engine_move"));
}

TEST_CASE("engine moving first replies immediately") {
  GameService svc;
  const auto r = svc.create_game({{"grid", kXPattern}, {"engine", "black"}, {"first", "black"}});
  REQUIRE(r.status == 201);
  CHECK(r.body.contains("engine_move"));
  CHECK(r.body["to_move"] == "white");
  CHECK(r.body["history"].size() == 1);
  CHECK(r.body["revision"] == 1);
}

TEST_CASE("create errors") {
  GameService svc;
  CHECK(svc.create_game(json::array()).status == 400);
  CHECK(svc.create_game({{"grid", "BX\n"}}).status == 400);
  CHECK(svc.create_game({{"grid", 3}}).status == 400);
  CHECK(svc.create_game(json::object()).status == 400);
  CHECK(svc.create_game({{"grid", "BW\n"}, {"engine", "purple"}}).status == 400);
  const json same_color = json::parse(
      R"({"vertices":[{"id":0,"color":"black"},{"id":1,"color":"black"}],"edges":[[0,1]]})");
  CHECK(svc.create_game({{"bipartite", same_color}}).status == 422);
  CHECK(svc.create_game({{"grid", "BW\nWB\nBW\nWB\nBW\nWB\nBW\nWB\nBW\n"}}).status == 201);
  ServiceOptions small;
  small.max_vertices = 3;
  GameService capped(small);
  CHECK(capped.create_game({{"grid", "BWBW"}}).status == 422);
}

TEST_CASE("moves, statuses and revisions") {
  GameService svc;
  const std::string id = create(svc, {{"grid", kXPattern}});
  CHECK(svc.get_state("nope").status == 404);
  CHECK(svc.post_move("nope", {{"target", 0}}).status == 404);
  CHECK(svc.post_move(id, {{"target", "two"}}).status == 400);
  CHECK(svc.post_move(id, json::array()).status == 400);

  const auto illegal = svc.post_move(id, {{"target", 1}});  // own color
  CHECK(illegal.status == 409);
  CHECK(illegal.body.contains("error"));
  CHECK(svc.post_move(id, {{"target", 2}, {"player", "white"}}).status == 409);

  std::uint64_t revision = 0;
  const BipartitePosition initial = contract(grid_to_colored_graph(fixtures::x_pattern()));
  for (const Move& m : fixtures::sample_game_moves()) {
    const auto r = svc.post_move(id, {{"target", m.target}, {"player", std::string(to_string(m.player))}});
    REQUIRE(r.status == 200);
    CHECK(r.body["revision"].get<std::uint64_t>() > revision);
    revision = r.body["revision"].get<std::uint64_t>();
    check_history(svc, id, initial);
  }
  const json st = svc.get_state(id).body;
  CHECK(st["terminal"] == true);
  CHECK(st["winner"] == "white");
  CHECK(st["grid"]["pixels"] == "WWW\nWWW\nWWW\n");
  CHECK(svc.post_move(id, {{"target", 7}}).status == 409);
  CHECK(svc.hint(id).status == 409);
}

TEST_CASE("grid groups follow the moves") {
  GameService svc;
  const std::string id = create(svc, {{"grid", kXPattern}});
  const auto r = svc.post_move(id, {{"target", 2}});
  REQUIRE(r.status == 200);
  CHECK(r.body["grid"]["pixels"] == "WBB\nBWB\nWBW\n");
  CHECK(r.body["grid"]["groups"]["2"] == json::array({1, 2, 5}));
  CHECK_FALSE(r.body["grid"]["groups"].contains("1"));
}

TEST_CASE("hint") {
  GameService svc;
  const std::string id = create(svc, {{"bipartite", io::to_json(complete_bipartite(1, 1))}});
  const auto h = svc.hint(id);
  REQUIRE(h.status == 200);
  CHECK(h.body["move"]["target"] == 1);
  CHECK(h.body["winning"] == true);
  CHECK(svc.hint("nope").status == 404);

  const std::string lost =
      create(svc, {{"bipartite", io::to_json(complete_bipartite(2, 1))}, {"first", "white"}});
  const auto resign = svc.hint(lost);
  CHECK(resign.body["move"]["target"] == 0);
  CHECK(resign.body["winning"] == false);

  ServiceOptions tight;
  tight.solve.node_budget = 1;
  GameService starved(tight);
  std::mt19937_64 rng(3);
  const std::string big = create(starved, {{"bipartite", io::to_json(random_connected_bipartite(rng, 30, 0.1))}});
  CHECK(starved.hint(big).status == 503);
}

TEST_CASE("engine plays perfectly and falls back under budget") {
  GameService svc;
  const std::string id = create(svc, {{"bipartite", io::to_json(complete_bipartite(3, 3))}, {"engine", "white"}});
  const auto r = svc.post_move(id, {{"target", 3}});
  REQUIRE(r.status == 200);
  REQUIRE(r.body.contains("engine_move"));
  CHECK(r.body["engine_move"]["exact"] == true);
  CHECK(r.body["terminal"] == true);
  CHECK(r.body["winner"] == "white");

  ServiceOptions tight;
  tight.solve.node_budget = 1;
  GameService starved(tight);
  std::mt19937_64 rng(9);
  const auto p = random_connected_bipartite(rng, 30, 0.1);
  const std::string g = create(starved, {{"bipartite", io::to_json(p)}, {"engine", "white"}});
  const auto black_move = legal_moves(p, Color::Black).front();
  const auto reply = starved.post_move(g, {{"target", black_move.target}});
  REQUIRE(reply.status == 200);
  CHECK(reply.body["engine_move"]["exact"] == false);
}

TEST_CASE("engine turn is not the human's") {
  GameService svc;
  const std::string id = create(svc, {{"grid", kXPattern}, {"engine", "black"}, {"first", "white"}});
  CHECK(svc.get_state(id).body["history"].size() == 0);
  // White moves, the engine replies as Black; posting again as Black is refused.
  const auto r = svc.post_move(id, {{"target", 1}});
  REQUIRE(r.status == 200);
  if (!r.body["terminal"].get<bool>()) {
    CHECK(svc.post_move(id, {{"target", 0}, {"player", "black"}}).status == 409);
  }
}

TEST_CASE("undo") {
  SUBCASE("two humans: one ply") {
    GameService svc;
    const std::string id = create(svc, {{"grid", kXPattern}});
    CHECK(svc.undo(id).status == 409);
    const json before = svc.get_state(id).body;
    REQUIRE(svc.post_move(id, {{"target", 2}}).status == 200);
    const auto u = svc.undo(id);
    REQUIRE(u.status == 200);
    CHECK(u.body["position"] == before["position"]);
    CHECK(u.body["grid"] == before["grid"]);
    CHECK(u.body["to_move"] == "black");
    CHECK(u.body["revision"] == 2);
  }
  SUBCASE("against the engine: back to the human's turn") {
    GameService svc;
    const std::string id = create(svc, {{"grid", kXPattern}, {"engine", "white"}});
    const json before = svc.get_state(id).body;
    const auto r = svc.post_move(id, {{"target", 2}});
    REQUIRE(r.status == 200);
    CHECK(r.body["history"].size() == 2);
    const auto u = svc.undo(id);
    REQUIRE(u.status == 200);
    CHECK(u.body["position"] == before["position"]);
    CHECK(u.body["history"].empty());
    CHECK(svc.undo(id).status == 409);
  }
  SUBCASE("engine opened: its move stays") {
    GameService svc;
    const std::string id = create(svc, {{"grid", kXPattern}, {"engine", "black"}});
    CHECK(svc.undo(id).status == 409);
  }
  CHECK(GameService().undo("nope").status == 404);
}

TEST_CASE("delete") {
  GameService svc;
  const std::string id = create(svc, {{"grid", "BW"}});
  const auto d = svc.delete_game(id);
  CHECK(d.status == 200);
  CHECK(d.body["revision"] == 1);
  CHECK(svc.get_state(id).status == 404);
  CHECK(svc.delete_game(id).status == 404);
}

TEST_CASE("monochromatic board is over at creation") {
  GameService svc;
  const auto r = svc.create_game({{"grid", "BB\nBB"}, {"first", "white"}});
  REQUIRE(r.status == 201);
  CHECK(r.body["terminal"] == true);
  CHECK(r.body["winner"] == "black");
  CHECK(r.body["legal_moves"].empty());
}

TEST_CASE("HTTP round trip") {
  GameService svc;
  HttpServer server(svc);
  const int port = server.bind("127.0.0.1", 0);
  REQUIRE(port > 0);
  std::thread loop([&] { server.listen(); });

  httplib::Client client("127.0.0.1", port);
  auto created = client.Post("/games", json{{"grid", kXPattern}, {"engine", "white"}}.dump(), "application/json");
  REQUIRE(created);
  CHECK(created->status == 201);
  const json st = json::parse(created->body);
  const std::string id = st["id"];
  CHECK(st["legal_moves"].size() == 5);

  auto got = client.Get("/games/" + id);
  REQUIRE(got);
  CHECK(got->status == 200);

  auto bad = client.Post("/games/" + id + "/moves", "{oops", "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 400);

  auto illegal = client.Post("/games/" + id + "/moves", R"({"target": 1})", "application/json");
  REQUIRE(illegal);
  CHECK(illegal->status == 409);

  auto hint = client.Get("/games/" + id + "/hint");
  REQUIRE(hint);
  CHECK(hint->status == 200);

  auto moved = client.Post("/games/" + id + "/moves", R"({"target": 2})", "application/json");
  REQUIRE(moved);
  CHECK(moved->status == 200);
  CHECK(json::parse(moved->body).contains("engine_move"));

  auto undone = client.Post("/games/" + id + "/undo", "", "application/json");
  REQUIRE(undone);
  CHECK(undone->status == 200);
  CHECK(json::parse(undone->body)["position"] == st["position"]);

  auto missing = client.Get("/games/ffff");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  auto removed = client.Delete("/games/" + id);
  REQUIRE(removed);
  CHECK(removed->status == 200);

  server.stop();
  loop.join();
}
