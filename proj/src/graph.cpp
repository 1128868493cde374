#include "raagobs/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_set>

#include "raagobs/errors.hpp"

namespace raagobs {

std::string Graph::label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<Vertex> Graph::find_label(std::string_view name) const {
    if (!labels_.empty()) {
        auto it = std::find(labels_.begin(), labels_.end(), name);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<Vertex>(it - labels_.begin());
    }
    Vertex v = 0;
    auto [end, ec] = std::from_chars(name.data(), name.data() + name.size(), v);
    if (ec != std::errc{} || end != name.data() + name.size() || v >= order()) return std::nullopt;
    return v;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges, std::vector<std::string> labels) {
    if (!labels.empty()) {
        if (labels.size() != n)
            throw GraphError("label count " + std::to_string(labels.size()) + " does not match vertex count " +
                             std::to_string(n));
        std::unordered_set<std::string> seen;
        for (const auto& l : labels)
            if (!seen.insert(l).second) throw GraphError("duplicate label '" + l + "'");
    }

    Graph g;
    g.adj_.assign(n, {});
    g.rows_.assign(n, boost::dynamic_bitset<>(n));
    g.labels_ = std::move(labels);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw GraphError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} references a vertex >= " +
                             std::to_string(n));
        if (u == v) throw GraphError("self-loop {" + std::to_string(u) + "," + std::to_string(v) + "}");
        if (g.rows_[u].test(v)) continue;
        g.rows_[u].set(v);
        g.rows_[v].set(u);
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

Graph complete_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(n, e);
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
    return build_graph(n, e);
}

Graph path_graph(std::size_t n) {
    std::vector<Edge> e;
    for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
    return build_graph(n, e);
}

Graph edgeless_graph(std::size_t n) { return build_graph(n, std::span<const Edge>{}); }

Graph petersen_graph() {
    // outer 5-cycle 0..4, spokes i -> i+5, inner pentagram
    std::vector<Edge> e;
    for (Vertex i = 0; i < 5; ++i) {
        e.emplace_back(i, (i + 1) % 5);
        e.emplace_back(i, i + 5);
        e.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return build_graph(10, e);
}

Graph without_labels(const Graph& g) { return build_graph(g.order(), g.edges()); }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    std::vector<Vertex> origin(vertices.begin(), vertices.end());
    std::sort(origin.begin(), origin.end());
    origin.erase(std::unique(origin.begin(), origin.end()), origin.end());
    for (Vertex v : origin)
        if (v >= g.order())
            throw GraphError("vertex " + std::to_string(v) + " out of range for graph of order " +
                             std::to_string(g.order()));

    std::vector<Vertex> renumber(g.order(), static_cast<Vertex>(-1));
    for (Vertex i = 0; i < origin.size(); ++i) renumber[origin[i]] = i;

    std::vector<Edge> e;
    for (Vertex i = 0; i < origin.size(); ++i)
        for (Vertex w : g.neighbours(origin[i]))
            if (renumber[w] != static_cast<Vertex>(-1) && i < renumber[w]) e.emplace_back(i, renumber[w]);

    std::vector<std::string> labels;
    if (g.has_labels())
        for (Vertex v : origin) labels.push_back(g.labels()[v]);
    return {build_graph(origin.size(), e, std::move(labels)), std::move(origin)};
}

Graph complement(const Graph& g) {
    std::vector<Edge> e;
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return build_graph(g.order(), e, g.labels());
}

bool shortlex_less(const Clique& a, const Clique& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool is_clique(const Graph& g, std::span<const Vertex> members) {
    for (std::size_t i = 0; i < members.size(); ++i) {
        if (members[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < members.size(); ++j)
            if (!g.adjacent(members[i], members[j])) return false;
    }
    return true;
}

namespace {

void extend_cliques(const Graph& g, Clique& current, const boost::dynamic_bitset<>& candidates,
                    std::vector<Clique>& out, std::size_t cap) {
    for (auto v = candidates.find_first(); v != boost::dynamic_bitset<>::npos; v = candidates.find_next(v)) {
        current.push_back(static_cast<Vertex>(v));
        if (out.size() == cap) throw CliqueOverflow(cap);
        out.push_back(current);
        auto next = candidates & g.neighbour_row(static_cast<Vertex>(v));
        // only extend with larger ids so each clique is produced once
        next.reset(0, v + 1);
        if (next.any()) extend_cliques(g, current, next, out, cap);
        current.pop_back();
    }
}

}  // namespace

std::vector<Clique> enumerate_cliques(const Graph& g, std::size_t cap) {
    if (cap == 0) throw GraphError("clique cap must be at least 1");
    std::vector<Clique> out;
    if (g.order() == 0) return out;
    Clique current;
    boost::dynamic_bitset<> all(g.order());
    all.set();
    extend_cliques(g, current, all, out, cap);
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

std::optional<Vertex> CliqueGraph::index_of(const Clique& k) const {
    auto it = std::lower_bound(cliques.begin(), cliques.end(), k, shortlex_less);
    if (it == cliques.end() || *it != k) return std::nullopt;
    return static_cast<Vertex>(it - cliques.begin());
}

CliqueGraph clique_graph(const Graph& g, std::size_t cap) {
    CliqueGraph out;
    out.cliques = enumerate_cliques(g, cap);
    const auto c = out.cliques.size();

    // K u L is a clique iff L lies in the common closed neighbourhood of K.
    std::vector<boost::dynamic_bitset<>> reach(c);
    std::vector<boost::dynamic_bitset<>> members(c);
    for (std::size_t i = 0; i < c; ++i) {
        boost::dynamic_bitset<> r(g.order());
        r.set();
        boost::dynamic_bitset<> m(g.order());
        for (Vertex u : out.cliques[i]) {
            auto closed = g.neighbour_row(u);
            closed.set(u);
            r &= closed;
            m.set(u);
        }
        reach[i] = std::move(r);
        members[i] = std::move(m);
    }

    std::vector<Edge> e;
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j)
            if (members[j].is_subset_of(reach[i])) e.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));

    std::vector<std::string> labels;
    labels.reserve(c);
    for (const auto& k : out.cliques) labels.push_back(clique_name(g, k));
    out.graph = build_graph(c, e, std::move(labels));
    return out;
}

std::string clique_name(const Graph& g, const Clique& k) {
    std::string s = "{";
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (i) s += ',';
        s += g.label(k[i]);
    }
    return s + "}";
}

}  // namespace raagobs
