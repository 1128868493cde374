#include "raagobs/coloring.hpp"

#include "raagobs/errors.hpp"

namespace raagobs {

std::string token_to_string(const ColorToken& t) {
    if (auto* i = std::get_if<std::int64_t>(&t)) return std::to_string(*i);
    const auto& set = std::get<std::vector<std::int64_t>>(t);
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(set[i]);
    }
    return s + "}";
}

std::set<ColorToken> Coloring::palette() const { return {tokens.begin(), tokens.end()}; }

Coloring Coloring::from_ints(const std::vector<int>& colors) {
    Coloring c;
    c.tokens.reserve(colors.size());
    for (int x : colors) c.tokens.emplace_back(std::int64_t{x});
    return c;
}

std::optional<Edge> monochromatic_edge(const Graph& g, const Coloring& f) {
    if (f.size() != g.order())
        throw GraphError("partial assignment: colouring covers " + std::to_string(f.size()) + " of " +
                         std::to_string(g.order()) + " vertices");
    for (auto [u, v] : g.edges())
        if (f.tokens[u] == f.tokens[v]) return Edge{u, v};
    return std::nullopt;
}

bool is_valid_coloring(const Graph& g, const Coloring& f) { return !monochromatic_edge(g, f); }

}  // namespace raagobs
