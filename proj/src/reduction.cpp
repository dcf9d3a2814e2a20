#include "paintbucket/reduction.hpp"

#include <algorithm>

#include "paintbucket/errors.hpp"

namespace paintbucket {

std::string_view to_string(RoleType t) noexcept {
  switch (t) {
    case RoleType::V: return "v";
    case RoleType::U: return "u";
    case RoleType::W: return "w";
    case RoleType::T: return "t";
    case RoleType::R: return "r";
    case RoleType::S: return "s";
  }
  return "?";
}

VertexId ReductionInstance::id_of(const VertexRole& role) const {
  for (const auto& [id, r] : roles) {
    if (r == role) return id;
  }
  throw std::out_of_range("no vertex with role " + std::string(to_string(role.type)));
}

ReductionInstance build_reduction(const AePosition& ae, int K) {
  if (K < 1) throw PreconditionError("K must be positive");
  const int I = static_cast<int>(ae.cells().size());
  const int J = static_cast<int>(ae.sets().size());

  std::map<VertexId, VertexRole> roles;
  VertexId next = 0;
  const VertexId r = next++;
  roles[r] = {RoleType::R};
  const VertexId s = next++;
  roles[s] = {RoleType::S};
  auto v = [&](int i) { return static_cast<VertexId>(2 + (i - 1)); };
  auto u = [&](int i) { return static_cast<VertexId>(2 + I + (i - 1)); };
  auto w = [&](int k) { return static_cast<VertexId>(2 + 2 * I + (k - 1)); };
  auto t = [&](int j, int k) { return static_cast<VertexId>(2 + 2 * I + K + (j - 1) * K + (k - 1)); };
  for (int i = 1; i <= I; ++i) roles[v(i)] = {RoleType::V, i};
  for (int i = 1; i <= I; ++i) roles[u(i)] = {RoleType::U, i};
  for (int k = 1; k <= K; ++k) roles[w(k)] = {RoleType::W, 0, 0, k};
  for (int j = 1; j <= J; ++j) {
    for (int k = 1; k <= K; ++k) roles[t(j, k)] = {RoleType::T, 0, j, k};
  }

  std::vector<Vertex> vertices;
  for (const auto& [id, role] : roles) {
    const bool black = role.type == RoleType::V || role.type == RoleType::W || role.type == RoleType::R;
    vertices.push_back({id, black ? Color::Black : Color::White});
  }

  std::vector<Edge> edges;
  auto connect = [&](VertexId a, VertexId b) { edges.emplace_back(std::min(a, b), std::max(a, b)); };
  for (const Vertex& x : vertices) {
    if (x.id == r || x.id == s) continue;
    connect(x.color == Color::White ? r : s, x.id);  // universal r and s
  }
  connect(r, s);
  for (int i = 1; i <= I; ++i) connect(v(i), u(i));
  for (int k = 1; k <= K; ++k) {
    for (int j = 1; j <= J; ++j) {
      for (int k2 = 1; k2 <= K; ++k2) connect(w(k), t(j, k2));
    }
  }
  for (int j = 1; j <= J; ++j) {
    for (const auto& cell : ae.sets()[j - 1]) {
      const int i = static_cast<int>(ae.index_of(cell)) + 1;
      for (int k = 1; k <= K; ++k) connect(v(i), t(j, k));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  return ReductionInstance{ae, K, BipartitePosition(std::move(vertices), edges), std::move(roles)};
}

int default_K(const AePosition& ae) noexcept { return static_cast<int>(ae.cells().size()) + 2; }

std::vector<std::string> audit_instance(const ReductionInstance& ri) {
  std::vector<std::string> problems;
  const auto& g = ri.graph;
  const int I = static_cast<int>(ri.ae.cells().size());
  const int J = static_cast<int>(ri.ae.sets().size());
  const int K = ri.K;

  auto complain = [&](std::string msg) { problems.push_back(std::move(msg)); };
  if (g.count(Color::Black) != static_cast<std::size_t>(I + K + 1)) {
    complain("black vertex count is " + std::to_string(g.count(Color::Black)) + ", expected I+K+1 = " +
             std::to_string(I + K + 1));
  }
  if (g.count(Color::White) != static_cast<std::size_t>(I + J * K + 1)) {
    complain("white vertex count is " + std::to_string(g.count(Color::White)) +
             ", expected I+J*K+1 = " + std::to_string(I + J * K + 1));
  }
  if (ri.roles.size() != g.size()) complain("role map does not cover every vertex");

  auto adjacent = [&](VertexId a, VertexId b) {
    const auto nb = g.neighbors(a);
    return std::binary_search(nb.begin(), nb.end(), b);
  };
  const VertexId r = ri.id_of({RoleType::R});
  const VertexId s = ri.id_of({RoleType::S});
  if (g.neighbors(r).size() != g.count(Color::White)) complain("r is not adjacent to every white vertex");
  if (g.neighbors(s).size() != g.count(Color::Black)) complain("s is not adjacent to every black vertex");

  for (int i = 1; i <= I; ++i) {
    const VertexId ui = ri.id_of({RoleType::U, i});
    const VertexId vi = ri.id_of({RoleType::V, i});
    const auto nb = g.neighbors(ui);
    if (nb.size() != 2 || !adjacent(ui, r) || !adjacent(ui, vi)) {
      complain("u_" + std::to_string(i) + " is not adjacent to exactly {r, v_" + std::to_string(i) + "}");
    }
    for (int j = 1; j <= J; ++j) {
      const auto& set = ri.ae.sets()[j - 1];
      const bool member = std::binary_search(set.begin(), set.end(), ri.ae.cells()[i - 1]);
      for (int k = 1; k <= K; ++k) {
        if (adjacent(vi, ri.id_of({RoleType::T, 0, j, k})) != member) {
          complain("v_" + std::to_string(i) + " - t_{" + std::to_string(j) + "," + std::to_string(k) +
                   "} wiring disagrees with membership of c_" + std::to_string(i) + " in A_" +
                   std::to_string(j));
        }
      }
    }
  }
  for (int k = 1; k <= K; ++k) {
    const VertexId wk = ri.id_of({RoleType::W, 0, 0, k});
    for (int j = 1; j <= J; ++j) {
      for (int k2 = 1; k2 <= K; ++k2) {
        if (!adjacent(wk, ri.id_of({RoleType::T, 0, j, k2}))) {
          complain("w_" + std::to_string(k) + " is not adjacent to t_{" + std::to_string(j) + "," +
                   std::to_string(k2) + "}");
        }
      }
    }
  }
  return problems;
}

bool verify_simulation_step(const ReductionInstance& ri, std::string_view cell, Color player) {
  const int i = static_cast<int>(ri.ae.index_of(cell)) + 1;
  if (player == Color::Black) {
    const BipartitePosition moved = apply_move(ri.graph, {Color::Black, ri.id_of({RoleType::U, i})});
    const AePosition next = ae_remove(ri.ae, cell, AePlayer::Avoider);
    return isomorphic(moved, build_reduction(next, ri.K).graph);
  }
  const BipartitePosition moved = apply_move(ri.graph, {Color::White, ri.id_of({RoleType::V, i})});
  const AePosition next = ae_remove(ri.ae, cell, AePlayer::Enforcer);
  return isomorphic(moved, build_reduction(next, ri.K).graph);
}

bool verify_shenanigans(const ReductionInstance& ri, Color player, const SolveOptions& opts) {
  if (ri.K < default_K(ri.ae)) {
    throw PreconditionError("off-type move checks need K >= |C|+2 = " + std::to_string(default_K(ri.ae)));
  }
  if (player == Color::Black && ri.ae.sets().empty()) {
    throw PreconditionError("the Black off-type move check needs a non-empty avoider family");
  }
  const RoleType intended = player == Color::White ? RoleType::V : RoleType::U;
  for (const Move& m : legal_moves(ri.graph, player)) {
    if (ri.roles.at(m.target).type == intended) continue;
    const BipartitePosition after = apply_move(ri.graph, m);
    if (is_terminal(after)) {
      if (winner_if_terminal(after) == player) return false;
      continue;
    }
    if (solve(after, opposite(player), opts).winner != opposite(player)) return false;
  }
  return true;
}

bool verify_proposition(const AePosition& ae, int K, const SolveOptions& opts) {
  if (K < default_K(ae)) {
    throw PreconditionError("K = " + std::to_string(K) + " is below |C|+2 = " + std::to_string(default_K(ae)));
  }
  const bool even = ae.cells().size() % 2 == 0;
  // Even: both sides of the biconditional have the avoider/Black moving
  // first. Odd: the enforcer/White moves first.
  const AePosition start(ae.cells(), ae.sets(), even ? AePlayer::Avoider : AePlayer::Enforcer);
  const bool avoider_wins = ae_solve(start).winner == AePlayer::Avoider;
  const ReductionInstance ri = build_reduction(ae, K);
  const bool black_wins =
      solve(ri.graph, even ? Color::Black : Color::White, opts).winner == Color::Black;
  return avoider_wins == black_wins;
}

namespace {

std::string added_cell(const AePosition& before, const AePosition& after) {
  for (const auto& c : after.cells()) {
    if (!before.has_cell(c)) return c;
  }
  return {};
}

}  // namespace

DecisionInstance reduce_decision(const AePosition& ae) {
  AePosition current = ae;
  std::vector<std::string> steps;
  if (current.to_move() == AePlayer::Enforcer) {
    AePosition next = normalize_avoider_first(current);
    steps.push_back("enforcer to move: added free cell " + added_cell(current, next) +
                    " outside every avoider set; avoider now moves first");
    current = std::move(next);
  }
  if (current.cells().size() % 2 == 1) {
    AePosition next = normalize_even(current);
    const std::string added = added_cell(current, next);
    steps.push_back("odd number of cells: added cell " + added + " with avoider set {" + added + "}");
    current = std::move(next);
  }
  const int K = default_K(current);
  ReductionInstance ri = build_reduction(current, K);
  BipartitePosition graph = ri.graph;
  return DecisionInstance{std::move(graph), Color::Black, current, K, std::move(steps), std::move(ri)};
}

}  // namespace paintbucket
