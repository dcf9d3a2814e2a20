#include "paintbucket/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "paintbucket/errors.hpp"

namespace paintbucket {

ColoredGraph::ColoredGraph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i].id == vertices[i - 1].id) {
      throw InvalidPosition("duplicate vertex id " + std::to_string(vertices[i].id));
    }
  }
  ids_.reserve(vertices.size());
  colors_.reserve(vertices.size());
  for (const Vertex& v : vertices) {
    ids_.push_back(v.id);
    colors_.push_back(v.color);
  }
  adjacency_.resize(ids_.size());

  auto lookup = [this](VertexId id) {
    auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (it == ids_.end() || *it != id) {
      throw InvalidPosition("edge endpoint " + std::to_string(id) + " is not a declared vertex");
    }
    return static_cast<std::size_t>(it - ids_.begin());
  };
  for (const auto& [a, b] : edges) {
    if (a == b) throw InvalidPosition("self-loop at vertex " + std::to_string(a));
    const std::size_t ia = lookup(a);
    const std::size_t ib = lookup(b);
    adjacency_[ia].push_back(b);
    adjacency_[ib].push_back(a);
  }
  for (std::size_t i = 0; i < adjacency_.size(); ++i) {
    auto& row = adjacency_[i];
    std::sort(row.begin(), row.end());
    if (auto dup = std::adjacent_find(row.begin(), row.end()); dup != row.end()) {
      throw InvalidPosition("duplicate edge {" + std::to_string(ids_[i]) + ", " +
                            std::to_string(*dup) + "}");
    }
  }
  edge_count_ = edges.size();
}

bool ColoredGraph::contains(VertexId id) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t ColoredGraph::index_of(VertexId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) {
    throw std::out_of_range("unknown vertex id " + std::to_string(id));
  }
  return static_cast<std::size_t>(it - ids_.begin());
}

Color ColoredGraph::color(VertexId id) const { return colors_[index_of(id)]; }

std::span<const VertexId> ColoredGraph::neighbors(VertexId id) const {
  return adjacency_[index_of(id)];
}

std::vector<Vertex> ColoredGraph::vertices() const {
  std::vector<Vertex> out;
  out.reserve(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) out.push_back({ids_[i], colors_[i]});
  return out;
}

std::vector<Edge> ColoredGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (VertexId nb : adjacency_[i]) {
      if (ids_[i] < nb) out.emplace_back(ids_[i], nb);
    }
  }
  return out;
}

std::size_t ColoredGraph::count(Color c) const noexcept {
  return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
}

bool ColoredGraph::is_connected() const {
  if (ids_.empty()) return true;
  std::vector<bool> seen(ids_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (VertexId nb : adjacency_[i]) {
      const std::size_t j = index_of(nb);
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == ids_.size();
}

std::vector<std::vector<VertexId>> groups(const ColoredGraph& g) {
  const auto ids = g.ids();
  std::vector<bool> seen(ids.size(), false);
  std::vector<std::vector<VertexId>> out;
  for (std::size_t start = 0; start < ids.size(); ++start) {
    if (seen[start]) continue;
    const Color c = g.color(ids[start]);
    std::vector<VertexId> group;
    std::vector<std::size_t> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      group.push_back(ids[i]);
      for (VertexId nb : g.neighbors(ids[i])) {
        const std::size_t j = g.index_of(nb);
        if (!seen[j] && g.color(nb) == c) {
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
    std::sort(group.begin(), group.end());
    out.push_back(std::move(group));
  }
  // Scanning starts in id order, so groups already come out ordered by
  // their smallest member.
  return out;
}

ColoredGraph flip_group(const ColoredGraph& g, VertexId member) {
  if (!g.contains(member)) {
    throw IllegalMove("no vertex " + std::to_string(member));
  }
  const Color c = g.color(member);
  std::vector<Vertex> vertices = g.vertices();
  std::vector<bool> in_group(vertices.size(), false);
  std::vector<VertexId> stack{member};
  in_group[g.index_of(member)] = true;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId nb : g.neighbors(v)) {
      const std::size_t j = g.index_of(nb);
      if (!in_group[j] && g.color(nb) == c) {
        in_group[j] = true;
        stack.push_back(nb);
      }
    }
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (in_group[i]) vertices[i].color = opposite(c);
  }
  return ColoredGraph(std::move(vertices), g.edges());
}

}  // namespace paintbucket
