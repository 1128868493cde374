#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "raagobs/coloring.hpp"
#include "raagobs/graph.hpp"

namespace raagobs {

using json = nlohmann::json;

/// Edge-list text: a header line "n m" followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// {"n": int, "edges": [[u, v], ...], "labels": [...]} (labels optional).
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

/// Undirected DOT export; labels become node labels.
std::string to_dot(const Graph& g, std::string_view name = "G");

/// Parses either format; JSON is recognised by a leading '{'.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::filesystem::path& path);

/// {"colors": {"<vertex id>": token}}; set tokens are sorted int arrays.
json coloring_to_json(const Coloring& f);
/// Keys may be vertex ids or labels of `g`. Throws ParseError on a missing
/// vertex or malformed token.
Coloring coloring_from_json(const json& j, const Graph& g);

json token_to_json(const ColorToken& t);
ColorToken token_from_json(const json& j);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// Canonical serialisation: sorted keys, two-space indent, trailing newline.
std::string dump_json(const json& j);

}  // namespace raagobs
