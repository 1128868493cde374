#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "raagobs/coloring.hpp"
#include "raagobs/graph.hpp"

namespace raagobs {

/// Node limit for exact searches. Counting nodes rather than wall time keeps
/// every outcome reproducible.
struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

enum class SearchStatus { exact, undecided };

struct ChromaticResult {
    SearchStatus status = SearchStatus::exact;
    std::size_t lower = 0;  ///< proven lower bound
    std::size_t upper = 0;  ///< colours used by `witness`
    Coloring witness;       ///< valid colouring with colours 0..upper-1
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return status == SearchStatus::exact; }
    /// Throws BudgetExhausted when undecided.
    std::size_t value() const;
};

/// Exact chromatic number: DSATUR upper bound, maximum clique lower bound,
/// then a refutation search for each smaller colour count. An exhausted
/// budget yields status `undecided` with the best bounds found.
ChromaticResult chromatic_number(const Graph& g, SearchBudget budget = {});

enum class Colorability { colorable, not_colorable, undecided };

struct KColoringResult {
    Colorability outcome = Colorability::undecided;
    std::optional<Coloring> witness;
    std::uint64_t nodes = 0;
};

/// Decides k-colourability by exhaustive DSATUR backtracking.
KColoringResult k_coloring(const Graph& g, std::size_t k, SearchBudget budget = {});

/// Greedy DSATUR colouring with integer colours 0..c-1.
Coloring dsatur_coloring(const Graph& g);

struct IndependenceResult {
    SearchStatus status = SearchStatus::exact;
    std::size_t lower = 0;
    std::size_t upper = 0;
    std::vector<Vertex> witness;  ///< independent set of size `lower`, sorted
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return status == SearchStatus::exact; }
    std::size_t value() const;
};

/// Exact independence number by branch and reduce with a clique-cover bound.
IndependenceResult independence_number(const Graph& g, SearchBudget budget = {});

struct CliqueResult {
    SearchStatus status = SearchStatus::exact;
    std::size_t lower = 0;
    std::size_t upper = 0;
    Clique witness;
    std::uint64_t nodes = 0;

    bool exact() const noexcept { return status == SearchStatus::exact; }
};

CliqueResult maximum_clique(const Graph& g, SearchBudget budget = {});

/// Size of a largest clique. Throws GraphError for the empty graph and
/// BudgetExhausted if the search does not finish.
std::size_t max_clique_size(const Graph& g, SearchBudget budget = {});

/// The cohomological dimension of A(g) equals its largest clique size.
inline std::size_t cohomological_dimension(const Graph& g, SearchBudget budget = {}) {
    return max_clique_size(g, budget);
}

bool is_independent_set(const Graph& g, const std::vector<Vertex>& s);

}  // namespace raagobs
