#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "raagobs/graph.hpp"

namespace raagobs {

/// A colour: either a plain integer or a sorted set of integers (lifted
/// colourings).
using ColorToken = std::variant<std::int64_t, std::vector<std::int64_t>>;

std::string token_to_string(const ColorToken& t);

/// Total vertex -> token assignment.
struct Coloring {
    std::vector<ColorToken> tokens;

    std::size_t size() const noexcept { return tokens.size(); }
    std::set<ColorToken> palette() const;

    static Coloring from_ints(const std::vector<int>& colors);

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// First monochromatic edge, if any. Throws GraphError when the colouring
/// does not cover every vertex.
std::optional<Edge> monochromatic_edge(const Graph& g, const Coloring& f);

bool is_valid_coloring(const Graph& g, const Coloring& f);

}  // namespace raagobs
