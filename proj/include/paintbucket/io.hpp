#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "paintbucket/ae.hpp"
#include "paintbucket/colored_graph.hpp"
#include "paintbucket/position.hpp"
#include "paintbucket/reduction.hpp"

namespace paintbucket::io {

using nlohmann::json;

// Graph documents: {"vertices": [{"id": 0, "color": "black"}, ...],
//                   "edges": [[0, 1], ...]}
// Schema problems raise ParseError; invariant violations (self-loops,
// same-color edges in a bipartite document, disconnection...) raise
// InvalidPosition.

json to_json(const ColoredGraph& g);
json to_json(const BipartitePosition& p);
ColoredGraph colored_graph_from_json(const json& doc);
BipartitePosition bipartite_from_json(const json& doc);

// AE documents: {"cells": ["c1", ...], "sets": [["c1"], ...],
//                "to_move": "avoider" | "enforcer"}

json to_json(const AePosition& p);
/// Cell names matching x<digits> are reserved and rejected unless
/// `allow_reserved` is set.
AePosition ae_from_json(const json& doc, bool allow_reserved = false);

/// {"roles": {"<id>": {"type": "t", "j": 1, "k": 2}, ...}}
json roles_to_json(const ReductionInstance& ri);

json to_json(const Move& m);
Move move_from_json(const json& doc);

/// Parses JSON text, mapping syntax errors to ParseError.
json parse_json(const std::string& text);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& contents);

}  // namespace paintbucket::io
