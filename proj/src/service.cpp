#include "paintbucket/service.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "httplib.h"
#include "paintbucket/errors.hpp"
#include "paintbucket/io.hpp"

namespace paintbucket {

using nlohmann::json;
using Response = GameService::Response;

namespace {

Response error(int status, const std::string& reason) { return {status, {{"error", reason}}}; }

std::optional<Color> optional_color(const json& request, const char* name) {
  auto it = request.find(name);
  if (it == request.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  const auto text = it->get<std::string>();
  if (text == "none") return std::nullopt;
  if (auto c = parse_color(text)) return c;
  throw ParseError(std::string("field '") + name + "' must be \"black\", \"white\" or \"none\"");
}

}  // namespace

GameService::GameService(ServiceOptions opts) : opts_(std::move(opts)), id_rng_(std::random_device{}()) {}

std::string GameService::fresh_id() {
  std::lock_guard lock(id_mutex_);
  char buffer[17];
  std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(id_rng_()));
  return buffer;
}

std::shared_ptr<GameSession> GameService::find(std::string_view id) const {
  std::shared_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : it->second;
}

json GameService::state(const GameSession& s) const {
  json legal = json::array();
  for (const Move& m : legal_moves(s.current, s.to_move)) legal.push_back(m.target);
  json history = json::array();
  for (const auto& ply : s.history) history.push_back(io::to_json(ply.move));

  json out = {
      {"id", s.id},
      {"revision", s.revision},
      {"to_move", std::string(to_string(s.to_move))},
      {"first_to_move", std::string(to_string(s.first_to_move))},
      {"engine", s.engine_side ? json(std::string(to_string(*s.engine_side))) : json(nullptr)},
      {"position", io::to_json(s.current)},
      {"legal_moves", std::move(legal)},
      {"terminal", is_terminal(s.current)},
      {"winner", is_terminal(s.current) ? json(std::string(to_string(winner_if_terminal(s.current))))
                                        : json(nullptr)},
      {"history", std::move(history)},
  };
  if (s.grid) {
    std::vector<Color> pixels(s.grid->pixels().size());
    json groups = json::object();
    for (const auto& [vertex, covered] : s.pixels) {
      for (VertexId px : covered) pixels[px] = s.current.color(vertex);
      groups[std::to_string(vertex)] = covered;
    }
    out["grid"] = {{"rows", s.grid->rows()},
                   {"cols", s.grid->cols()},
                   {"pixels", format_grid(GridPosition(s.grid->rows(), s.grid->cols(), std::move(pixels)))},
                   {"groups", std::move(groups)}};
  }
  return out;
}

void GameService::play(GameSession& s, const Move& m) {
  GameSession::Ply ply{m, s.current, s.pixels};
  BipartitePosition next = apply_move(s.current, m);
  if (s.grid) {
    auto& covered = s.pixels[m.target];
    for (VertexId merged : s.current.neighbors(m.target)) {
      auto node = s.pixels.extract(merged);
      covered.insert(covered.end(), node.mapped().begin(), node.mapped().end());
    }
    std::sort(covered.begin(), covered.end());
  }
  s.current = std::move(next);
  s.history.push_back(std::move(ply));
  s.to_move = opposite(s.to_move);
  ++s.revision;
}

std::optional<json> GameService::engine_reply(GameSession& s) {
  if (!s.engine_side || s.to_move != *s.engine_side || is_terminal(s.current)) return std::nullopt;
  Move m = legal_moves(s.current, s.to_move).front();
  bool exact = true;
  try {
    m = best_move(s.current, s.to_move, opts_.solve);
  } catch (const BudgetExceeded&) {
    exact = false;  // fall back to the smallest-id move
  }
  play(s, m);
  json reply = io::to_json(m);
  reply["exact"] = exact;
  return reply;
}

Response GameService::create_game(const json& request) {
  try {
    if (!request.is_object()) return error(400, "request body must be a JSON object");
    std::optional<GridPosition> grid;
    std::optional<BipartitePosition> start;
    if (auto it = request.find("grid"); it != request.end()) {
      if (!it->is_string()) return error(400, "field 'grid' must be a string of B/W rows");
      grid = parse_grid(it->get<std::string>());
      start = contract(grid_to_colored_graph(*grid));
    } else if (auto doc = request.find("bipartite"); doc != request.end()) {
      start = io::bipartite_from_json(*doc);
    } else {
      return error(400, "request needs a 'grid' or a 'bipartite' field");
    }
    if (start->size() > opts_.max_vertices) {
      return error(422, "position has " + std::to_string(start->size()) + " vertices; sessions are capped at " +
                            std::to_string(opts_.max_vertices));
    }
    const Color first = optional_color(request, "first").value_or(Color::Black);
    auto session = std::make_shared<GameSession>(fresh_id(), *start, first);
    session->engine_side = optional_color(request, "engine");
    if (grid) {
      session->grid = grid;
      for (auto& group : groups(grid_to_colored_graph(*grid))) {
        const VertexId representative = group.front();
        session->pixels.emplace(representative, std::move(group));
      }
    }
    std::lock_guard lock(session->mutex);
    json body;
    std::optional<json> reply = engine_reply(*session);
    {
      std::unique_lock sessions_lock(sessions_mutex_);
      sessions_.emplace(session->id, session);
    }
    body = state(*session);
    if (reply) body["engine_move"] = *reply;
    return {201, std::move(body)};
  } catch (const ParseError& e) {
    return error(400, e.what());
  } catch (const InvalidPosition& e) {
    return error(422, e.what());
  }
}

Response GameService::get_state(std::string_view id) const {
  auto session = find(id);
  if (!session) return error(404, "unknown game '" + std::string(id) + "'");
  std::lock_guard lock(session->mutex);
  return {200, state(*session)};
}

Response GameService::post_move(std::string_view id, const json& request) {
  auto session = find(id);
  if (!session) return error(404, "unknown game '" + std::string(id) + "'");
  if (!request.is_object()) return error(400, "request body must be a JSON object");
  auto target = request.find("target");
  if (target == request.end() || !target->is_number_integer() || target->get<std::int64_t>() < 0 ||
      target->get<std::int64_t>() > std::numeric_limits<VertexId>::max()) {
    return error(400, "field 'target' must be a vertex id");
  }
  std::optional<Color> player;
  try {
    player = optional_color(request, "player");
  } catch (const ParseError& e) {
    return error(400, e.what());
  }

  std::lock_guard lock(session->mutex);
  GameSession& s = *session;
  if (is_terminal(s.current)) return error(409, "the game is over");
  if (player && *player != s.to_move) {
    return error(409, "out of turn: it is " + std::string(to_string(s.to_move)) + "'s move");
  }
  if (s.engine_side && *s.engine_side == s.to_move) {
    return error(409, "out of turn: it is the engine's move");
  }
  try {
    play(s, {s.to_move, target->get<VertexId>()});
  } catch (const IllegalMove& e) {
    return error(409, e.what());
  }
  std::optional<json> reply = engine_reply(s);
  json body = state(s);
  if (reply) body["engine_move"] = *reply;
  return {200, std::move(body)};
}

Response GameService::hint(std::string_view id) const {
  auto session = find(id);
  if (!session) return error(404, "unknown game '" + std::string(id) + "'");
  std::lock_guard lock(session->mutex);
  const GameSession& s = *session;
  if (is_terminal(s.current)) return error(409, "the game is over");
  try {
    const SolveResult result = solve(s.current, s.to_move, opts_.solve);
    return {200,
            {{"move", io::to_json(result.pv.front())},
             {"winning", result.winner == s.to_move},
             {"revision", s.revision}}};
  } catch (const BudgetExceeded& e) {
    return error(503, e.what());
  }
}

Response GameService::undo(std::string_view id) {
  auto session = find(id);
  if (!session) return error(404, "unknown game '" + std::string(id) + "'");
  std::lock_guard lock(session->mutex);
  GameSession& s = *session;
  auto pop = [&] {
    GameSession::Ply ply = std::move(s.history.back());
    s.history.pop_back();
    s.current = std::move(ply.prior);
    s.pixels = std::move(ply.prior_pixels);
    s.to_move = ply.move.player;
  };
  if (!s.engine_side) {
    if (s.history.empty()) return error(409, "nothing to undo");
    pop();
  } else {
    const Color human = opposite(*s.engine_side);
    const bool has_human_ply = std::any_of(s.history.begin(), s.history.end(),
                                           [&](const GameSession::Ply& p) { return p.move.player == human; });
    if (!has_human_ply) return error(409, "nothing to undo");
    do {
      pop();
    } while (s.to_move != human);
  }
  ++s.revision;
  return {200, state(s)};
}

Response GameService::delete_game(std::string_view id) {
  std::unique_lock lock(sessions_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return error(404, "unknown game '" + std::string(id) + "'");
  std::uint64_t revision = 0;
  {
    std::lock_guard session_lock(it->second->mutex);
    revision = ++it->second->revision;
  }
  sessions_.erase(it);
  return {200, {{"deleted", std::string(id)}, {"revision", revision}}};
}

struct HttpServer::Impl {
  explicit Impl(GameService& s) : service(s) {}
  GameService& service;
  httplib::Server server;
};

HttpServer::HttpServer(GameService& service) : impl_(std::make_unique<Impl>(service)) {
  auto& server = impl_->server;
  GameService& svc = service;
  auto send = [](httplib::Response& res, const Response& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  };
  auto body_of = [](const httplib::Request& req) -> std::optional<json> {
    if (req.body.empty()) return json::object();
    json parsed = json::parse(req.body, nullptr, false);
    if (parsed.is_discarded()) return std::nullopt;
    return parsed;
  };
  auto malformed = [send](httplib::Response& res) { send(res, error(400, "malformed JSON body")); };

  server.Post("/games", [=, &svc](const httplib::Request& req, httplib::Response& res) {
    auto body = body_of(req);
    if (!body) return malformed(res);
    send(res, svc.create_game(*body));
  });
  server.Get(R"(/games/([0-9a-zA-Z]+))", [=, &svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc.get_state(req.matches[1].str()));
  });
  server.Post(R"(/games/([0-9a-zA-Z]+)/moves)", [=, &svc](const httplib::Request& req, httplib::Response& res) {
    auto body = body_of(req);
    if (!body) return malformed(res);
    send(res, svc.post_move(req.matches[1].str(), *body));
  });
  server.Get(R"(/games/([0-9a-zA-Z]+)/hint)", [=, &svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc.hint(req.matches[1].str()));
  });
  server.Post(R"(/games/([0-9a-zA-Z]+)/undo)", [=, &svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc.undo(req.matches[1].str()));
  });
  server.Delete(R"(/games/([0-9a-zA-Z]+))", [=, &svc](const httplib::Request& req, httplib::Response& res) {
    send(res, svc.delete_game(req.matches[1].str()));
  });
}

HttpServer::~HttpServer() = default;

int HttpServer::bind(const std::string& host, int port) {
  if (port == 0) return impl_->server.bind_to_any_port(host);
  return impl_->server.bind_to_port(host, port) ? port : -1;
}

bool HttpServer::listen() { return impl_->server.listen_after_bind(); }

void HttpServer::stop() { impl_->server.stop(); }

}  // namespace paintbucket
