#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "raagobs/graph.hpp"

namespace raagobs {

/// Shortest cycle length; nullopt stands for infinite girth (forests).
using Girth = std::optional<std::size_t>;

Girth girth(const Graph& g);

/// A shortest cycle as its vertex sequence (closing edge implied), or an
/// empty vector when the graph is a forest. With `max_length` set, only
/// cycles of at most that length are searched for.
std::vector<Vertex> shortest_cycle(const Graph& g, std::optional<std::size_t> max_length = std::nullopt);

std::string girth_to_string(const Girth& gi);

}  // namespace raagobs
