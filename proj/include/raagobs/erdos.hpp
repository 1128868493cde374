#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "raagobs/certificate.hpp"
#include "raagobs/errors.hpp"
#include "raagobs/graph.hpp"

namespace raagobs {

/// Mycielski construction on 2n+1 vertices: originals, then shadows, then
/// the apex. Keeps the graph triangle-free and raises chi by exactly one.
Graph mycielskian(const Graph& g);

/// Iterates the Mycielskian from K2 until the exact chromatic number reaches
/// `n`. Throws BudgetExhausted if exactness cannot be established.
GirthChromaticCertificate generate_triangle_free(std::size_t n, SearchBudget budget = {});

struct HighGirthConfig {
    double edge_factor = 1.0;           ///< c in p = c * n^(1/M - 1)
    std::size_t initial_vertices = 50;
    std::size_t max_resamples = 8;      ///< vertex count doubles per resample
    std::size_t exact_threshold = 60;   ///< exact chi evidence up to this order
    SearchBudget budget{5'000'000};     ///< per exact search
    bool mycielski_shortcut = true;     ///< use generate_triangle_free when M == 4
};

/// Generation gave up; carries the best result seen.
class GenerationFailure : public Error {
public:
    GenerationFailure(const std::string& message, std::optional<std::size_t> best_girth, std::size_t best_chromatic_lb)
        : Error(message), best_girth_(best_girth), best_chromatic_lb_(best_chromatic_lb) {}

    std::optional<std::size_t> best_girth() const noexcept { return best_girth_; }
    std::size_t best_chromatic_lb() const noexcept { return best_chromatic_lb_; }

private:
    std::optional<std::size_t> best_girth_;
    std::size_t best_chromatic_lb_;
};

/// Uniform double in [0, 1) from the top 53 bits of one mt19937_64 draw.
double unit_draw(std::mt19937_64& rng);

/// G(n, p): pairs (i, j), i < j, visited in lexicographic order; the edge is
/// kept iff unit_draw(rng) < p.
Graph sample_binomial_graph(std::size_t n, double p, std::mt19937_64& rng);

/// Repeatedly finds a shortest cycle of length < m and deletes its vertex of
/// largest degree (smallest id on ties) until the girth is at least m.
Graph delete_short_cycles(Graph g, std::size_t m);

/// Graph with girth >= m and chi >= n by the deletion method, resampling
/// with doubled order on failure. Deterministic in (m, n, seed, config).
/// Throws GenerationFailure when every resample fails and Error on m < 3 or
/// n < 2.
GirthChromaticCertificate generate_high_girth(std::size_t m, std::size_t n, std::uint64_t seed,
                                              const HighGirthConfig& config = {});

}  // namespace raagobs
