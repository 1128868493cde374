#pragma once

// Naive reference implementations used to cross-check the library. They share
// no code with src/ beyond the Graph container and favour obviousness over
// speed, so keep inputs small (n <= 10, words of a dozen letters).

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "raagobs/graph.hpp"

namespace oracle {

using raagobs::Edge;
using raagobs::Graph;
using raagobs::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return raagobs::build_graph(n, edges);
}

inline bool colorable(const Graph& g, std::size_t k, std::vector<int>& colors, Vertex v) {
    if (v == g.order()) return true;
    for (int c = 0; c < static_cast<int>(k); ++c) {
        bool clash = false;
        for (Vertex u = 0; u < v; ++u)
            if (g.adjacent(u, v) && colors[u] == c) clash = true;
        if (clash) continue;
        colors[v] = c;
        if (colorable(g, k, colors, v + 1)) return true;
    }
    return false;
}

/// Smallest k admitting a proper colouring, by plain backtracking in id order.
inline std::size_t chromatic_number(const Graph& g) {
    std::vector<int> colors(g.order(), -1);
    for (std::size_t k = 0;; ++k)
        if (colorable(g, k, colors, 0)) return k;
}

inline bool valid_coloring(const Graph& g, const std::vector<int>& colors) {
    for (auto [u, v] : g.edges())
        if (colors[u] == colors[v]) return false;
    return true;
}

/// Largest independent set size over all 2^n subsets.
inline std::size_t independence_number(const Graph& g) {
    const std::size_t n = g.order();
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
        if (ok) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

inline void cycle_dfs(const Graph& g, Vertex start, Vertex at, std::vector<bool>& on_path, std::size_t length,
                      std::optional<std::size_t>& best) {
    if (best && length >= *best) return;
    for (Vertex next = 0; next < g.order(); ++next) {
        if (!g.adjacent(at, next)) continue;
        if (next == start && length >= 3) {
            if (!best || length < *best) best = length;
        } else if (next > start && !on_path[next]) {
            on_path[next] = true;
            cycle_dfs(g, start, next, on_path, length + 1, best);
            on_path[next] = false;
        }
    }
}

/// Shortest cycle by enumerating every simple cycle through its least vertex.
inline std::optional<std::size_t> girth(const Graph& g) {
    std::optional<std::size_t> best;
    std::vector<bool> on_path(g.order());
    for (Vertex s = 0; s < g.order(); ++s) {
        on_path[s] = true;
        cycle_dfs(g, s, s, on_path, 1, best);
        on_path[s] = false;
    }
    return best;
}

/// Every nonempty clique, sorted by (size, members).
inline std::vector<std::vector<Vertex>> cliques(const Graph& g) {
    std::vector<std::pair<std::size_t, std::vector<Vertex>>> found;
    const std::size_t n = g.order();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        bool ok = true;
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!g.adjacent(members[i], members[j])) ok = false;
        if (ok) found.emplace_back(members.size(), members);
    }
    std::sort(found.begin(), found.end());
    std::vector<std::vector<Vertex>> out;
    for (auto& f : found) out.push_back(f.second);
    return out;
}

/// Letters are signed: +(v+1) for v, -(v+1) for v^-1.
using Letters = std::vector<int>;

inline Vertex letter_vertex(int x) { return static_cast<Vertex>(std::abs(x) - 1); }

/// Explores every word reachable by swapping adjacent commuting letters and
/// deleting adjacent inverse pairs. Returns the reachable words of minimal
/// length, which are exactly the reduced spellings of the element.
inline std::set<Letters> reduced_spellings(const Graph& g, const Letters& word) {
    std::set<Letters> seen{word};
    std::deque<Letters> queue{word};
    std::size_t shortest = word.size();
    while (!queue.empty()) {
        Letters w = queue.front();
        queue.pop_front();
        shortest = std::min(shortest, w.size());
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            Letters next;
            if (w[i] == -w[i + 1]) {
                next = w;
                next.erase(next.begin() + static_cast<std::ptrdiff_t>(i), next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            } else if (letter_vertex(w[i]) != letter_vertex(w[i + 1]) &&
                       g.adjacent(letter_vertex(w[i]), letter_vertex(w[i + 1]))) {
                next = w;
                std::swap(next[i], next[i + 1]);
            } else {
                continue;
            }
            if (seen.insert(next).second) queue.push_back(std::move(next));
        }
    }
    std::set<Letters> out;
    for (const auto& w : seen)
        if (w.size() == shortest) out.insert(w);
    return out;
}

inline Letters inverse(const Letters& w) {
    Letters out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

inline bool trivial(const Graph& g, const Letters& w) { return reduced_spellings(g, w).begin()->empty(); }

inline bool same_element(const Graph& g, const Letters& a, const Letters& b) {
    Letters w = a;
    auto bi = inverse(b);
    w.insert(w.end(), bi.begin(), bi.end());
    return trivial(g, w);
}

inline std::set<Vertex> support(const Graph& g, const Letters& w) {
    std::set<Vertex> out;
    const auto spellings = reduced_spellings(g, w);
    for (int x : *spellings.begin()) out.insert(letter_vertex(x));
    return out;
}

}  // namespace oracle
