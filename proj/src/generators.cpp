#include "paintbucket/generators.hpp"

#include <algorithm>
#include <string>

#include "paintbucket/errors.hpp"

namespace paintbucket {

BipartitePosition complete_bipartite(int blacks, int whites) {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  for (int b = 0; b < blacks; ++b) vertices.push_back({static_cast<VertexId>(b), Color::Black});
  for (int w = 0; w < whites; ++w) vertices.push_back({static_cast<VertexId>(blacks + w), Color::White});
  for (int b = 0; b < blacks; ++b) {
    for (int w = 0; w < whites; ++w) {
      edges.emplace_back(static_cast<VertexId>(b), static_cast<VertexId>(blacks + w));
    }
  }
  return BipartitePosition(std::move(vertices), edges);
}

namespace {

struct RawGraph {
  std::vector<Color> colors;
  std::vector<Edge> edges;

  bool has_edge(VertexId a, VertexId b) const {
    const Edge e{std::min(a, b), std::max(a, b)};
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  }
  void add_edge(VertexId a, VertexId b) { edges.emplace_back(std::min(a, b), std::max(a, b)); }

  BipartitePosition build() const {
    std::vector<Vertex> vertices;
    for (std::size_t i = 0; i < colors.size(); ++i) vertices.push_back({static_cast<VertexId>(i), colors[i]});
    return BipartitePosition(std::move(vertices), edges);
  }
};

RawGraph random_raw(Rng& rng, int n, double p) {
  if (n < 1) throw PreconditionError("random graphs need at least one vertex");
  RawGraph g;
  g.colors.push_back(std::bernoulli_distribution(0.5)(rng) ? Color::Black : Color::White);
  for (int v = 1; v < n; ++v) {
    const auto parent = static_cast<VertexId>(std::uniform_int_distribution<int>(0, v - 1)(rng));
    g.colors.push_back(opposite(g.colors[parent]));
    g.add_edge(parent, static_cast<VertexId>(v));
  }
  std::bernoulli_distribution extra(p);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (g.colors[a] != g.colors[b] && !g.has_edge(a, b) && extra(rng)) g.add_edge(a, b);
    }
  }
  return g;
}

}  // namespace

BipartitePosition random_connected_bipartite(Rng& rng, int vertices, double extra_edge_probability) {
  return random_raw(rng, vertices, extra_edge_probability).build();
}

ClawInstance random_claw(Rng& rng, int max_vertices, int max_leaves) {
  if (max_leaves < 1 || max_vertices < 3) {
    throw PreconditionError("claw instances need at least one leaf and three vertices");
  }
  for (;;) {
    const int leaves = std::uniform_int_distribution<int>(1, max_leaves)(rng);
    if (max_vertices - leaves < 2) continue;
    const int base = std::uniform_int_distribution<int>(2, max_vertices - leaves)(rng);
    RawGraph g = random_raw(rng, base, std::uniform_real_distribution<double>(0.0, 0.6)(rng));
    const int whites = static_cast<int>(std::count(g.colors.begin(), g.colors.end(), Color::White));
    if (whites > leaves) continue;

    std::vector<VertexId> white_ids;
    for (std::size_t i = 0; i < g.colors.size(); ++i) {
      if (g.colors[i] == Color::White) white_ids.push_back(static_cast<VertexId>(i));
    }
    const VertexId hub =
        white_ids[std::uniform_int_distribution<std::size_t>(0, white_ids.size() - 1)(rng)];
    for (int l = 0; l < leaves; ++l) {
      const auto leaf = static_cast<VertexId>(g.colors.size());
      g.colors.push_back(Color::Black);
      g.add_edge(hub, leaf);
    }
    return ClawInstance{g.build(), hub, leaves, whites};
  }
}

TwinInstance random_twins(Rng& rng, int max_base_vertices, int max_twins) {
  const int base = std::uniform_int_distribution<int>(2, std::max(2, max_base_vertices))(rng);
  RawGraph g = random_raw(rng, base, std::uniform_real_distribution<double>(0.0, 0.6)(rng));
  const auto original = static_cast<VertexId>(std::uniform_int_distribution<int>(0, base - 1)(rng));
  std::vector<VertexId> neighborhood;
  for (const auto& [a, b] : g.edges) {
    if (a == original) neighborhood.push_back(b);
    if (b == original) neighborhood.push_back(a);
  }
  TwinInstance out{g.build(), {original}};
  const int copies = std::uniform_int_distribution<int>(1, std::max(1, max_twins - 1))(rng);
  for (int c = 0; c < copies; ++c) {
    const auto twin = static_cast<VertexId>(g.colors.size());
    g.colors.push_back(g.colors[original]);
    for (VertexId nb : neighborhood) g.add_edge(twin, nb);
    out.twins.push_back(twin);
  }
  out.position = g.build();
  return out;
}

std::vector<AePosition> enumerate_ae(int cells, int max_sets, AePlayer to_move) {
  std::vector<std::string> names;
  for (int i = 1; i <= cells; ++i) names.push_back("c" + std::to_string(i));
  const int subsets = 1 << cells;

  std::vector<AePosition> out;
  std::vector<int> family;
  // Families of length `len`, enumerated as base-`subsets` counters.
  for (int len = 0; len <= max_sets; ++len) {
    family.assign(len, 0);
    for (;;) {
      std::vector<AePosition::CellSet> sets;
      for (int mask : family) {
        AePosition::CellSet set;
        for (int i = 0; i < cells; ++i) {
          if (mask & (1 << i)) set.push_back(names[i]);
        }
        sets.push_back(std::move(set));
      }
      out.emplace_back(names, std::move(sets), to_move);
      int pos = 0;
      while (pos < len && ++family[pos] == subsets) family[pos++] = 0;
      if (pos == len) break;
    }
  }
  return out;
}

}  // namespace paintbucket
