#include "raagobs/erdos.hpp"

#include <algorithm>
#include <cmath>

namespace raagobs {

Graph mycielskian(const Graph& g) {
    if (g.order() == 0) throw GraphError("Mycielskian of the empty graph is undefined");
    const auto n = static_cast<Vertex>(g.order());
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(u, v);
        edges.emplace_back(n + u, v);
        edges.emplace_back(n + v, u);
    }
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(n + i, 2 * n);
    return build_graph(2 * g.order() + 1, edges);
}

GirthChromaticCertificate generate_triangle_free(std::size_t n, SearchBudget budget) {
    if (n < 1) throw Error("chromatic target must be at least 1");
    Graph g = complete_graph(2);
    std::size_t iterations = 0;
    for (;;) {
        auto evidence = exact_evidence(g, budget);
        if (evidence.chromatic_number >= n) {
            GirthChromaticCertificate c;
            c.graph = std::move(g);
            c.girth_lb = 4;
            c.chromatic_lb = n;
            c.evidence = std::move(evidence);
            c.params.method = "mycielski";
            c.params.iterations = iterations;
            c.params.node_budget = budget.max_nodes;
            c.params.rng = "none";
            return c;
        }
        g = mycielskian(g);
        ++iterations;
    }
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph sample_binomial_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (unit_draw(rng) < p) edges.emplace_back(i, j);
    return build_graph(n, edges);
}

Graph delete_short_cycles(Graph g, std::size_t m) {
    if (m <= 3) return g;
    for (;;) {
        auto cycle = shortest_cycle(g, m - 1);
        if (cycle.empty()) return g;
        Vertex victim = cycle.front();
        for (Vertex v : cycle)
            if (g.degree(v) > g.degree(victim) || (g.degree(v) == g.degree(victim) && v < victim)) victim = v;
        std::vector<Vertex> keep;
        keep.reserve(g.order() - 1);
        for (Vertex v = 0; v < g.order(); ++v)
            if (v != victim) keep.push_back(v);
        g = induced_subgraph(g, keep).graph;
    }
}

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

}  // namespace

GirthChromaticCertificate generate_high_girth(std::size_t m, std::size_t n, std::uint64_t seed,
                                              const HighGirthConfig& config) {
    if (m < 3) throw Error("girth target must be at least 3");
    if (n < 2) throw Error("chromatic target must be at least 2");
    if (m == 4 && config.mycielski_shortcut) {
        auto c = generate_triangle_free(n, config.budget);
        c.seed = seed;
        return c;
    }

    std::mt19937_64 rng(seed);
    std::optional<std::size_t> best_girth;
    std::size_t best_lb = 0;
    std::size_t order = config.initial_vertices;
    for (std::size_t attempt = 0; attempt < config.max_resamples; ++attempt, order *= 2) {
        const double p = std::min(1.0, config.edge_factor * std::pow(static_cast<double>(order),
                                                                     1.0 / static_cast<double>(m) - 1.0));
        Graph g = delete_short_cycles(sample_binomial_graph(order, p, rng), m);
        if (g.order() == 0) continue;
        auto gi = girth(g);
        if (!best_girth || (gi && *gi > *best_girth)) best_girth = gi ? gi : best_girth;

        std::optional<ChromaticEvidence> evidence;
        if (g.order() <= config.exact_threshold) {
            auto r = chromatic_number(g, config.budget);
            best_lb = std::max(best_lb, r.lower);
            if (r.exact() && r.upper >= n) evidence = ExactEvidence{r.upper, std::move(r.witness), r.nodes};
        } else {
            auto alpha = independence_number(g, config.budget);
            if (alpha.exact()) {
                const auto bound = ceil_div(g.order(), alpha.lower);
                best_lb = std::max(best_lb, bound);
                if (bound >= n) evidence = IndependenceEvidence{alpha.lower, alpha.witness, g.order(), bound};
            }
            if (!evidence) {
                // The ratio bound is weak on sparse graphs; exact colouring
                // evidence is still honest when the search finishes.
                auto r = chromatic_number(g, config.budget);
                best_lb = std::max(best_lb, r.lower);
                if (r.exact() && r.upper >= n) evidence = ExactEvidence{r.upper, std::move(r.witness), r.nodes};
            }
        }
        if (!evidence) continue;

        GirthChromaticCertificate c;
        c.graph = std::move(g);
        c.girth_lb = m;
        c.chromatic_lb = n;
        c.evidence = std::move(*evidence);
        c.seed = seed;
        c.params.method = "deletion";
        c.params.edge_factor = config.edge_factor;
        c.params.initial_vertices = config.initial_vertices;
        c.params.max_resamples = config.max_resamples;
        c.params.exact_threshold = config.exact_threshold;
        c.params.node_budget = config.budget.max_nodes;
        c.params.attempt = attempt;
        c.params.sampled_vertices = order;
        c.params.edge_probability = p;
        return c;
    }
    throw GenerationFailure("no graph with girth >= " + std::to_string(m) + " and chi >= " + std::to_string(n) +
                                " within " + std::to_string(config.max_resamples) + " resamples",
                            best_girth, best_lb);
}

}  // namespace raagobs
