#include "raagobs/cycles.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace raagobs {

namespace {

constexpr std::size_t unseen = std::numeric_limits<std::size_t>::max();

struct CycleHit {
    std::size_t length = unseen;
    Vertex root = 0, a = 0, b = 0;
};

// BFS from `root`, recording the shortest closed walk through a non-tree edge.
// Depth is bounded by the best length found so far.
void scan_from(const Graph& g, Vertex root, std::size_t limit, CycleHit& best, std::vector<std::size_t>& dist,
               std::vector<Vertex>& parent) {
    std::fill(dist.begin(), dist.end(), unseen);
    dist[root] = 0;
    parent[root] = root;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (2 * dist[u] + 1 >= std::min(limit + 1, best.length)) break;
        for (Vertex w : g.neighbours(u)) {
            if (dist[w] == unseen) {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if (w != parent[u]) {
                std::size_t len = dist[u] + dist[w] + 1;
                if (len < best.length && len <= limit) best = {len, root, u, w};
            }
        }
    }
}

}  // namespace

std::vector<Vertex> shortest_cycle(const Graph& g, std::optional<std::size_t> max_length) {
    const std::size_t limit = max_length.value_or(unseen - 1);
    CycleHit best;
    std::vector<std::size_t> dist(g.order());
    std::vector<Vertex> parent(g.order());
    for (Vertex r = 0; r < g.order(); ++r) {
        scan_from(g, r, limit, best, dist, parent);
        if (best.length == 3) break;
    }
    if (best.length == unseen) return {};

    // Rerun the winning BFS to rebuild both tree paths. At the global minimum
    // the two paths only meet at the root, so their union is a simple cycle.
    CycleHit again;
    scan_from(g, best.root, best.length, again, dist, parent);
    std::vector<Vertex> left, right;
    for (Vertex v = again.a; v != again.root; v = parent[v]) left.push_back(v);
    for (Vertex v = again.b; v != again.root; v = parent[v]) right.push_back(v);
    std::vector<Vertex> cycle{again.root};
    cycle.insert(cycle.end(), left.rbegin(), left.rend());
    cycle.insert(cycle.end(), right.begin(), right.end());
    return cycle;
}

Girth girth(const Graph& g) {
    auto c = shortest_cycle(g);
    if (c.empty()) return std::nullopt;
    return c.size();
}

std::string girth_to_string(const Girth& gi) { return gi ? std::to_string(*gi) : "infinity"; }

}  // namespace raagobs
