#include "paintbucket/position.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "paintbucket/errors.hpp"

namespace paintbucket {

namespace {

ColoredGraph validated(ColoredGraph g) {
  if (g.empty()) throw InvalidPosition("position has no vertices");
  for (const auto& [a, b] : g.edges()) {
    if (g.color(a) == g.color(b)) {
      throw InvalidPosition("edge {" + std::to_string(a) + ", " + std::to_string(b) +
                            "} joins two " + std::string(to_string(g.color(a))) + " vertices");
    }
  }
  if (!g.is_connected()) throw InvalidPosition("position graph is not connected");
  return g;
}

}  // namespace

BipartitePosition::BipartitePosition(ColoredGraph g) : graph_(validated(std::move(g))) {}

BipartitePosition::BipartitePosition(std::vector<Vertex> vertices, const std::vector<Edge>& edges)
    : BipartitePosition(ColoredGraph(std::move(vertices), edges)) {}

std::vector<VertexId> BipartitePosition::vertices_of(Color c) const {
  std::vector<VertexId> out;
  for (VertexId id : ids()) {
    if (color(id) == c) out.push_back(id);
  }
  return out;
}

std::vector<Edge> BipartitePosition::oriented_edges() const {
  std::vector<Edge> out = graph_.edges();
  for (auto& e : out) {
    if (color(e.first) == Color::White) std::swap(e.first, e.second);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BipartitePosition contract(const ColoredGraph& g) {
  if (g.empty()) throw InvalidPosition("cannot contract an empty graph");
  if (!g.is_connected()) {
    throw InvalidPosition("Paintbucket is played on connected boards; input graph is disconnected");
  }
  std::map<VertexId, VertexId> representative;
  std::vector<Vertex> vertices;
  for (const auto& group : groups(g)) {
    vertices.push_back({group.front(), g.color(group.front())});
    for (VertexId id : group) representative[id] = group.front();
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    VertexId ra = representative[a];
    VertexId rb = representative[b];
    if (ra == rb) continue;
    if (ra > rb) std::swap(ra, rb);
    edges.emplace_back(ra, rb);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartitePosition(std::move(vertices), edges);
}

std::vector<Move> legal_moves(const BipartitePosition& p, Color player) {
  std::vector<Move> out;
  if (is_terminal(p)) return out;
  for (VertexId id : p.ids()) {
    if (p.color(id) != player) out.push_back({player, id});
  }
  return out;
}

BipartitePosition apply_move(const BipartitePosition& p, const Move& m) {
  if (is_terminal(p)) throw IllegalMove("game is over; no moves are legal");
  if (!p.contains(m.target)) {
    throw IllegalMove("target vertex " + std::to_string(m.target) + " does not exist");
  }
  if (p.color(m.target) == m.player) {
    throw IllegalMove(std::string(to_string(m.player)) + " cannot play its own vertex " +
                      std::to_string(m.target));
  }
  const auto merged = p.neighbors(m.target);
  auto is_merged = [&](VertexId id) { return std::binary_search(merged.begin(), merged.end(), id); };

  std::vector<Vertex> vertices;
  vertices.reserve(p.size() - merged.size());
  for (VertexId id : p.ids()) {
    if (id == m.target) {
      vertices.push_back({id, m.player});
    } else if (!is_merged(id)) {
      vertices.push_back({id, p.color(id)});
    }
  }

  std::vector<Edge> edges;
  edges.reserve(p.edge_count());
  for (const auto& [a, b] : p.graph().edges()) {
    if (a == m.target || b == m.target) continue;
    const bool ma = is_merged(a);
    const bool mb = is_merged(b);
    if (!ma && !mb) {
      edges.emplace_back(a, b);
    } else if (ma != mb) {
      // Opponent-colored neighbor of a merged vertex attaches to the target.
      const VertexId other = ma ? b : a;
      edges.emplace_back(std::min(other, m.target), std::max(other, m.target));
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return BipartitePosition(std::move(vertices), edges);
}

bool is_terminal(const BipartitePosition& p) noexcept { return p.size() == 1; }

Color winner_if_terminal(const BipartitePosition& p) {
  if (!is_terminal(p)) {
    throw PreconditionError("position with " + std::to_string(p.size()) +
                            " vertices is not terminal");
  }
  return p.color(p.ids().front());
}

BipartitePosition replay(const BipartitePosition& p, std::span<const Move> moves,
                         std::optional<Color> first) {
  BipartitePosition current = p;
  std::optional<Color> expected = first;
  for (std::size_t ply = 0; ply < moves.size(); ++ply) {
    const Move& m = moves[ply];
    if (expected && m.player != *expected) {
      throw IllegalMove("expected a move by " + std::string(to_string(*expected)) + ", got " +
                            std::string(to_string(m.player)),
                        ply);
    }
    if (is_terminal(current)) throw IllegalMove("game is already over", ply);
    try {
      current = apply_move(current, m);
    } catch (const IllegalMove& e) {
      throw IllegalMove(e.what(), ply);
    }
    expected = opposite(m.player);
  }
  return current;
}

}  // namespace paintbucket
