#include "paintbucket/io.hpp"

#include <fstream>
#include <sstream>

#include "paintbucket/errors.hpp"

namespace paintbucket::io {

namespace {

const json& field(const json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("expected a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

const json& array_field(const json& doc, const char* name) {
  const json& value = field(doc, name);
  if (!value.is_array()) throw ParseError(std::string("field '") + name + "' must be an array");
  return value;
}

VertexId vertex_id(const json& value) {
  if (!value.is_number_unsigned() || value.get<std::uint64_t>() > 0xFFFFFFFFULL) {
    throw ParseError("vertex ids must be non-negative 32-bit integers, got " + value.dump());
  }
  return value.get<VertexId>();
}

Color color_field(const json& doc, const char* name) {
  const json& value = field(doc, name);
  if (!value.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
  if (auto c = parse_color(value.get<std::string>())) return *c;
  throw ParseError("unknown color " + value.dump());
}

}  // namespace

json to_json(const ColoredGraph& g) {
  json vertices = json::array();
  for (const Vertex& v : g.vertices()) {
    vertices.push_back({{"id", v.id}, {"color", std::string(to_string(v.color))}});
  }
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

json to_json(const BipartitePosition& p) { return to_json(p.graph()); }

ColoredGraph colored_graph_from_json(const json& doc) {
  std::vector<Vertex> vertices;
  for (const json& v : array_field(doc, "vertices")) {
    vertices.push_back({vertex_id(field(v, "id")), color_field(v, "color")});
  }
  std::vector<Edge> edges;
  for (const json& e : array_field(doc, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edges must be [idA, idB] pairs, got " + e.dump());
    edges.emplace_back(vertex_id(e[0]), vertex_id(e[1]));
  }
  return ColoredGraph(std::move(vertices), edges);
}

BipartitePosition bipartite_from_json(const json& doc) {
  return BipartitePosition(colored_graph_from_json(doc));
}

json to_json(const AePosition& p) {
  return {{"cells", p.cells()}, {"sets", p.sets()}, {"to_move", std::string(to_string(p.to_move()))}};
}

AePosition ae_from_json(const json& doc, bool allow_reserved) {
  auto strings = [](const json& arr, const char* what) {
    std::vector<std::string> out;
    for (const json& s : arr) {
      if (!s.is_string()) throw ParseError(std::string(what) + " entries must be strings, got " + s.dump());
      out.push_back(s.get<std::string>());
    }
    return out;
  };
  std::vector<std::string> cells = strings(array_field(doc, "cells"), "cells");
  if (!allow_reserved) {
    for (const auto& c : cells) {
      if (is_reserved_cell_name(c)) {
        throw InvalidPosition("cell name '" + c + "' is reserved for normalization cells");
      }
    }
  }
  std::vector<AePosition::CellSet> sets;
  for (const json& s : array_field(doc, "sets")) {
    if (!s.is_array()) throw ParseError("sets must be arrays of cell names, got " + s.dump());
    sets.push_back(strings(s, "set"));
  }
  const json& mover = field(doc, "to_move");
  if (!mover.is_string()) throw ParseError("to_move must be \"avoider\" or \"enforcer\"");
  const auto player = parse_ae_player(mover.get<std::string>());
  if (!player) throw ParseError("to_move must be \"avoider\" or \"enforcer\", got " + mover.dump());
  return AePosition(std::move(cells), std::move(sets), *player);
}

json roles_to_json(const ReductionInstance& ri) {
  json roles = json::object();
  for (const auto& [id, role] : ri.roles) {
    json entry = {{"type", std::string(to_string(role.type))}};
    if (role.i) entry["i"] = role.i;
    if (role.j) entry["j"] = role.j;
    if (role.k) entry["k"] = role.k;
    roles[std::to_string(id)] = std::move(entry);
  }
  return {{"roles", std::move(roles)}};
}

json to_json(const Move& m) { return {{"player", std::string(to_string(m.player))}, {"target", m.target}}; }

Move move_from_json(const json& doc) { return {color_field(doc, "player"), vertex_id(field(doc, "target"))}; }

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace paintbucket::io
