#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "paintbucket/grid.hpp"
#include "paintbucket/position.hpp"
#include "paintbucket/solver.hpp"

namespace paintbucket {

struct ServiceOptions {
  SolveOptions solve = [] {
    SolveOptions o = isomorphism_options();
    o.node_budget = 5'000'000;
    return o;
  }();
  std::size_t max_vertices = 64;
};

/// One live game. Every mutation bumps `revision`.
struct GameSession {
  struct Ply {
    Move move;
    BipartitePosition prior;
    std::map<VertexId, std::vector<VertexId>> prior_pixels;
  };

  GameSession(std::string id_, BipartitePosition start, Color first)
      : id(std::move(id_)), initial(start), current(std::move(start)), first_to_move(first), to_move(first) {}

  std::string id;
  BipartitePosition initial;
  BipartitePosition current;
  Color first_to_move;
  Color to_move;
  std::vector<Ply> history;
  std::optional<Color> engine_side;
  std::optional<GridPosition> grid;
  /// Grid games only: contracted vertex id -> pixel ids it covers.
  std::map<VertexId, std::vector<VertexId>> pixels;
  std::uint64_t revision = 0;
  mutable std::mutex mutex;
};

/// HTTP-independent game service; each call returns a status code and a
/// JSON body. Status codes: 400 malformed request, 404 unknown game,
/// 409 illegal or out-of-turn move, 422 document violating position
/// invariants, 503 engine budget exhausted on a hint.
class GameService {
 public:
  struct Response {
    int status;
    nlohmann::json body;
  };

  explicit GameService(ServiceOptions opts = {});

  /// {"grid": "BWB\n..."} or {"bipartite": {vertices, edges}}, plus optional
  /// "engine": "black"|"white"|"none" and "first": "black"|"white".
  Response create_game(const nlohmann::json& request);
  Response get_state(std::string_view id) const;
  /// {"target": id} with optional "player"; the engine answers when it is
  /// its turn.
  Response post_move(std::string_view id, const nlohmann::json& request);
  Response hint(std::string_view id) const;
  /// Against the engine: back to the previous human turn. Otherwise: one ply.
  Response undo(std::string_view id);
  Response delete_game(std::string_view id);

 private:
  std::shared_ptr<GameSession> find(std::string_view id) const;
  nlohmann::json state(const GameSession& s) const;
  void play(GameSession& s, const Move& m);
  std::optional<nlohmann::json> engine_reply(GameSession& s);
  std::string fresh_id();

  ServiceOptions opts_;
  mutable std::shared_mutex sessions_mutex_;
  std::map<std::string, std::shared_ptr<GameSession>, std::less<>> sessions_;
  std::mutex id_mutex_;
  std::mt19937_64 id_rng_;
};

/// Serves `service` over HTTP/JSON:
///   POST   /games                create
///   GET    /games/{id}           state
///   POST   /games/{id}/moves     move
///   GET    /games/{id}/hint      hint
///   POST   /games/{id}/undo      undo
///   DELETE /games/{id}           delete
class HttpServer {
 public:
  explicit HttpServer(GameService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds `port` (0 picks a free port) and returns the bound port, or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop() is called.
  bool listen();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace paintbucket
