#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace raagobs {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Graph;

/// Builds a normalized graph. Duplicate edges collapse; self-loops,
/// out-of-range ids and duplicate labels throw GraphError.
Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels = {});

/// Finite simple graph on dense vertex ids 0..n-1, optionally labelled.
///
/// Immutable after construction. Neighbour lists are sorted and the adjacency
/// matrix is kept as bit rows so `adjacent` is O(1).
class Graph {
public:
    Graph() = default;

    std::size_t order() const noexcept { return adj_.size(); }
    std::size_t size() const noexcept { return edge_count_; }

    bool adjacent(Vertex u, Vertex v) const { return rows_[u].test(v); }
    std::span<const Vertex> neighbours(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    const boost::dynamic_bitset<>& neighbour_row(Vertex v) const { return rows_[v]; }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    /// Label of `v`, or its decimal id for unlabelled graphs.
    std::string label(Vertex v) const;
    /// Resolves a label (or, for unlabelled graphs, a decimal id).
    std::optional<Vertex> find_label(std::string_view name) const;

    /// Edges as (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_ && a.labels_ == b.labels_;
    }

private:
    friend Graph build_graph(std::size_t, std::span<const Edge>, std::vector<std::string>);

    std::vector<std::vector<Vertex>> adj_;
    std::vector<boost::dynamic_bitset<>> rows_;
    std::vector<std::string> labels_;
    std::size_t edge_count_ = 0;
};

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph edgeless_graph(std::size_t n);
Graph petersen_graph();

/// Same graph with labels dropped.
Graph without_labels(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    /// new id -> original id
    std::vector<Vertex> origin;
};

/// Graph on `vertices` (kept in ascending order) with every edge of `g`
/// between them. Labels are carried over.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Complement graph (labels kept).
Graph complement(const Graph& g);

/// A nonempty set of pairwise adjacent vertices, sorted ascending.
using Clique = std::vector<Vertex>;

/// Canonical clique order: by size, then lexicographic on members.
bool shortlex_less(const Clique& a, const Clique& b);

bool is_clique(const Graph& g, std::span<const Vertex> members);

inline constexpr std::size_t default_clique_cap = 1'000'000;

/// All nonempty cliques, each once, in shortlex order. Throws CliqueOverflow
/// when more than `cap` exist.
std::vector<Clique> enumerate_cliques(const Graph& g, std::size_t cap = default_clique_cap);

/// Clique graph: one vertex per nonempty clique of the base graph, and
/// K ~ L iff K != L and K u L is a clique. Nested cliques are adjacent.
struct CliqueGraph {
    Graph graph;
    std::vector<Clique> cliques;

    std::optional<Vertex> index_of(const Clique& k) const;
};

CliqueGraph clique_graph(const Graph& g, std::size_t cap = default_clique_cap);

/// Human-readable clique name such as "{a,b}".
std::string clique_name(const Graph& g, const Clique& k);

}  // namespace raagobs
