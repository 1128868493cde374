#include "raagobs/clique_color.hpp"

#include <algorithm>

#include "raagobs/errors.hpp"

namespace raagobs {

namespace {

std::int64_t scalar_token(const Coloring& f, Vertex v) {
    if (auto* i = std::get_if<std::int64_t>(&f.tokens[v])) return *i;
    throw GraphError("cannot lift: vertex " + std::to_string(v) + " carries a set token");
}

std::vector<std::int64_t> image_of(const Coloring& f, const Clique& k) {
    std::vector<std::int64_t> s;
    for (Vertex u : k) s.push_back(scalar_token(f, u));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void require_clique_graph_of(const Graph& g, const CliqueGraph& gk) {
    if (gk.graph.order() != gk.cliques.size())
        throw GraphError("clique graph index has " + std::to_string(gk.cliques.size()) + " entries for " +
                         std::to_string(gk.graph.order()) + " vertices");
    for (std::size_t i = 0; i < gk.cliques.size(); ++i) {
        const auto& k = gk.cliques[i];
        if (k.empty() || !std::is_sorted(k.begin(), k.end()) || !is_clique(g, k))
            throw GraphError("clique graph vertex " + std::to_string(i) + " is not a clique of the base graph");
        if (i > 0 && !shortlex_less(gk.cliques[i - 1], k))
            throw GraphError("clique graph index is not in canonical order");
    }
}

}  // namespace

Coloring lift_coloring(const Graph& g, const CliqueGraph& gk, const Coloring& f) {
    if (auto bad = monochromatic_edge(g, f))
        throw GraphError("colouring is invalid: edge {" + g.label(bad->first) + "," + g.label(bad->second) +
                         "} is monochromatic");
    require_clique_graph_of(g, gk);
    Coloring lifted;
    lifted.tokens.reserve(gk.cliques.size());
    for (const auto& k : gk.cliques) lifted.tokens.emplace_back(image_of(f, k));
    return lifted;
}

LiftCheck verify_lift(const Graph& g, const CliqueGraph& gk, const Coloring& f, const Coloring& lifted) {
    require_clique_graph_of(g, gk);
    if (f.size() != g.order() || lifted.size() != gk.graph.order())
        throw GraphError("colouring sizes do not match the graphs");
    auto all = enumerate_cliques(g, gk.cliques.size() + 1);
    if (all.size() != gk.cliques.size())
        throw GraphError("clique graph has " + std::to_string(gk.cliques.size()) + " vertices but the base graph has " +
                         std::to_string(all.size()) + " cliques");

    if (auto bad = monochromatic_edge(gk.graph, lifted))
        return {false, "edge (" + clique_name(g, gk.cliques[bad->first]) + "," +
                           clique_name(g, gk.cliques[bad->second]) + ") is monochromatic"};
    for (std::size_t i = 0; i < gk.cliques.size(); ++i) {
        ColorToken expected = image_of(f, gk.cliques[i]);
        if (lifted.tokens[i] != expected)
            return {false, "vertex " + clique_name(g, gk.cliques[i]) + " has colour " +
                               token_to_string(lifted.tokens[i]) + ", expected " + token_to_string(expected)};
    }
    return {};
}

std::uint64_t clique_chromatic_upper_bound(std::uint32_t m) {
    if (m > max_bound_exponent)
        throw Error("2^" + std::to_string(m) + " exceeds the supported range (m <= " +
                    std::to_string(max_bound_exponent) + ")");
    return std::uint64_t{1} << m;
}

}  // namespace raagobs
