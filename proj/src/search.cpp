#include "raagobs/search.hpp"

#include <algorithm>
#include <string>

#include "raagobs/errors.hpp"

namespace raagobs {

using Bits = boost::dynamic_bitset<>;

namespace {

struct OutOfNodes {};

struct NodeCounter {
    std::uint64_t used = 0;
    std::uint64_t limit = 0;

    void tick() {
        if (++used > limit) throw OutOfNodes{};
    }
};

// ---------------------------------------------------------------- colouring

class DsaturSearch {
public:
    DsaturSearch(const Graph& g, std::size_t k, NodeCounter& nodes)
        : g_(g), k_(k), nodes_(nodes), color_(g.order(), -1), counts_(g.order() * k, 0), saturation_(g.order(), 0) {}

    void precolor(const Clique& clique) {
        for (std::size_t i = 0; i < clique.size(); ++i) assign(clique[i], static_cast<int>(i));
        colored_ = clique.size();
        max_used_ = static_cast<int>(clique.size()) - 1;
    }

    bool run() { return search(); }

    Coloring coloring() const {
        std::vector<int> c(color_.begin(), color_.end());
        return Coloring::from_ints(c);
    }

private:
    void assign(Vertex v, int c) {
        color_[v] = c;
        for (Vertex w : g_.neighbours(v))
            if (counts_[w * k_ + c]++ == 0) ++saturation_[w];
    }

    void unassign(Vertex v) {
        int c = color_[v];
        color_[v] = -1;
        for (Vertex w : g_.neighbours(v))
            if (--counts_[w * k_ + c] == 0) --saturation_[w];
    }

    bool search() {
        nodes_.tick();
        if (colored_ == g_.order()) return true;

        Vertex pick = 0;
        bool found = false;
        for (Vertex v = 0; v < g_.order(); ++v) {
            if (color_[v] >= 0) continue;
            if (!found || saturation_[v] > saturation_[pick] ||
                (saturation_[v] == saturation_[pick] && g_.degree(v) > g_.degree(pick))) {
                pick = v;
                found = true;
            }
        }
        if (saturation_[pick] >= k_) return false;

        const int limit = std::min(static_cast<int>(k_) - 1, max_used_ + 1);
        for (int c = 0; c <= limit; ++c) {
            if (counts_[pick * k_ + c] != 0) continue;
            const int saved = max_used_;
            max_used_ = std::max(max_used_, c);
            assign(pick, c);
            ++colored_;
            if (search()) return true;
            --colored_;
            unassign(pick);
            max_used_ = saved;
        }
        return false;
    }

    const Graph& g_;
    std::size_t k_;
    NodeCounter& nodes_;
    std::vector<int> color_;
    std::vector<std::uint32_t> counts_;
    std::vector<std::size_t> saturation_;
    std::size_t colored_ = 0;
    int max_used_ = -1;
};

// Maximum clique, Tomita-style greedy colouring bound.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, NodeCounter& nodes) : g_(g), nodes_(nodes) {}

    void run(Clique& best) {
        best_ = &best;
        Bits all(g_.order());
        all.set();
        Clique current;
        expand(current, all);
    }

    // Greedy colour count of `p`; an upper bound on the clique number within p.
    std::size_t colour_bound(const Bits& p) const {
        std::vector<Vertex> order;
        std::vector<std::size_t> colours;
        sort_by_colour(p, order, colours);
        return colours.empty() ? 0 : colours.back();
    }

private:
    void sort_by_colour(Bits p, std::vector<Vertex>& order, std::vector<std::size_t>& colours) const {
        std::size_t colour = 0;
        while (p.any()) {
            ++colour;
            Bits q = p;
            while (q.any()) {
                auto v = q.find_first();
                q.reset(v);
                q -= g_.neighbour_row(static_cast<Vertex>(v));
                p.reset(v);
                order.push_back(static_cast<Vertex>(v));
                colours.push_back(colour);
            }
        }
    }

    void expand(Clique& current, Bits p) {
        nodes_.tick();
        std::vector<Vertex> order;
        std::vector<std::size_t> colours;
        sort_by_colour(p, order, colours);
        for (std::size_t i = order.size(); i-- > 0;) {
            if (current.size() + colours[i] <= best_->size()) return;
            Vertex v = order[i];
            current.push_back(v);
            Bits next = p & g_.neighbour_row(v);
            if (next.none()) {
                if (current.size() > best_->size()) *best_ = current;
            } else {
                expand(current, std::move(next));
            }
            current.pop_back();
            p.reset(v);
        }
    }

    const Graph& g_;
    NodeCounter& nodes_;
    Clique* best_ = nullptr;
};

// Maximum independent set by branch and reduce on sparse-friendly rules:
// vertices of degree <= 1 are taken greedily, otherwise branch on a
// maximum-degree vertex. Bound: greedy clique cover of the remainder.
class IndependentSetSearch {
public:
    IndependentSetSearch(const Graph& g, NodeCounter& nodes) : g_(g), nodes_(nodes) {}

    void run(std::vector<Vertex>& best) {
        best_ = &best;
        Bits all(g_.order());
        all.set();
        std::vector<Vertex> current;
        solve(current, std::move(all));
    }

    std::size_t cover_bound(Bits q) const {
        std::size_t cliques = 0;
        while (q.any()) {
            auto u = q.find_first();
            q.reset(u);
            Bits c = q & g_.neighbour_row(static_cast<Vertex>(u));
            while (c.any()) {
                auto w = c.find_first();
                q.reset(w);
                c.reset(w);
                c &= g_.neighbour_row(static_cast<Vertex>(w));
            }
            ++cliques;
        }
        return cliques;
    }

private:
    void solve(std::vector<Vertex>& current, Bits p) {
        nodes_.tick();
        const std::size_t mark = current.size();

        bool changed = true;
        while (changed) {
            changed = false;
            for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
                auto d = (g_.neighbour_row(static_cast<Vertex>(v)) & p).count();
                if (d <= 1) {
                    current.push_back(static_cast<Vertex>(v));
                    p -= g_.neighbour_row(static_cast<Vertex>(v));
                    p.reset(v);
                    changed = true;
                }
            }
        }

        if (p.none()) {
            if (current.size() > best_->size()) *best_ = current;
        } else if (current.size() + cover_bound(p) > best_->size()) {
            Vertex pick = 0;
            std::size_t pick_deg = 0;
            for (auto v = p.find_first(); v != Bits::npos; v = p.find_next(v)) {
                auto d = (g_.neighbour_row(static_cast<Vertex>(v)) & p).count();
                if (d > pick_deg) {
                    pick = static_cast<Vertex>(v);
                    pick_deg = d;
                }
            }
            Bits with = p - g_.neighbour_row(pick);
            with.reset(pick);
            current.push_back(pick);
            solve(current, std::move(with));
            current.pop_back();

            p.reset(pick);
            solve(current, std::move(p));
        }
        current.resize(mark);
    }

    const Graph& g_;
    NodeCounter& nodes_;
    std::vector<Vertex>* best_ = nullptr;
};

std::vector<Vertex> greedy_independent_set(const Graph& g) {
    std::vector<Vertex> order(g.order());
    for (Vertex v = 0; v < g.order(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    Bits blocked(g.order());
    std::vector<Vertex> out;
    for (Vertex v : order) {
        if (blocked.test(v)) continue;
        out.push_back(v);
        blocked |= g.neighbour_row(v);
        blocked.set(v);
    }
    return out;
}

}  // namespace

std::size_t ChromaticResult::value() const {
    if (!exact())
        throw BudgetExhausted("chromatic number undecided at budget: " + std::to_string(lower) +
                              " <= chi <= " + std::to_string(upper));
    return upper;
}

std::size_t IndependenceResult::value() const {
    if (!exact())
        throw BudgetExhausted("independence number undecided at budget: " + std::to_string(lower) +
                              " <= alpha <= " + std::to_string(upper));
    return lower;
}

Coloring dsatur_coloring(const Graph& g) {
    const auto n = g.order();
    std::vector<int> color(n, -1);
    std::vector<Bits> seen(n, Bits(n + 1));
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (color[v] >= 0) continue;
            if (!found || seen[v].count() > seen[pick].count() ||
                (seen[v].count() == seen[pick].count() && g.degree(v) > g.degree(pick))) {
                pick = v;
                found = true;
            }
        }
        int c = 0;
        while (seen[pick].test(static_cast<std::size_t>(c))) ++c;
        color[pick] = c;
        for (Vertex w : g.neighbours(pick)) seen[w].set(static_cast<std::size_t>(c));
    }
    return Coloring::from_ints(color);
}

CliqueResult maximum_clique(const Graph& g, SearchBudget budget) {
    CliqueResult r;
    if (g.order() == 0) return r;
    NodeCounter nodes{0, budget.max_nodes};
    CliqueSearch search(g, nodes);
    Clique best;
    try {
        search.run(best);
        r.status = SearchStatus::exact;
        r.upper = best.size();
    } catch (const OutOfNodes&) {
        Bits all(g.order());
        all.set();
        r.status = SearchStatus::undecided;
        r.upper = search.colour_bound(all);
    }
    std::sort(best.begin(), best.end());
    r.lower = best.size();
    r.witness = std::move(best);
    r.nodes = nodes.used;
    return r;
}

std::size_t max_clique_size(const Graph& g, SearchBudget budget) {
    if (g.order() == 0) throw GraphError("maximum clique of the empty graph is undefined");
    auto r = maximum_clique(g, budget);
    if (!r.exact())
        throw BudgetExhausted("maximum clique undecided at budget: " + std::to_string(r.lower) + " <= omega <= " +
                              std::to_string(r.upper));
    return r.lower;
}

KColoringResult k_coloring(const Graph& g, std::size_t k, SearchBudget budget) {
    KColoringResult r;
    if (g.order() == 0) {
        r.outcome = Colorability::colorable;
        r.witness = Coloring{};
        return r;
    }
    if (k == 0) {
        r.outcome = Colorability::not_colorable;
        return r;
    }
    NodeCounter nodes{0, budget.max_nodes};
    try {
        auto clique = maximum_clique(g, SearchBudget{budget.max_nodes});
        nodes.used += clique.nodes;
        if (clique.lower > k) {
            r.outcome = Colorability::not_colorable;
            r.nodes = nodes.used;
            return r;
        }
        DsaturSearch search(g, k, nodes);
        search.precolor(clique.witness);
        if (search.run()) {
            r.outcome = Colorability::colorable;
            r.witness = search.coloring();
        } else {
            r.outcome = Colorability::not_colorable;
        }
    } catch (const OutOfNodes&) {
        r.outcome = Colorability::undecided;
    }
    r.nodes = nodes.used;
    return r;
}

ChromaticResult chromatic_number(const Graph& g, SearchBudget budget) {
    ChromaticResult r;
    if (g.order() == 0) return r;

    auto clique = maximum_clique(g, budget);
    std::uint64_t used = clique.nodes;
    r.lower = clique.lower;
    r.witness = dsatur_coloring(g);
    r.upper = r.witness.palette().size();

    while (r.upper > r.lower) {
        const std::uint64_t left = used >= budget.max_nodes ? 0 : budget.max_nodes - used;
        auto attempt = k_coloring(g, r.upper - 1, SearchBudget{left});
        used += attempt.nodes;
        if (attempt.outcome == Colorability::colorable) {
            r.witness = std::move(*attempt.witness);
            r.upper = r.witness.palette().size();
        } else if (attempt.outcome == Colorability::not_colorable) {
            r.lower = r.upper;
        } else {
            r.status = SearchStatus::undecided;
            break;
        }
    }
    r.nodes = used;
    return r;
}

IndependenceResult independence_number(const Graph& g, SearchBudget budget) {
    IndependenceResult r;
    if (g.order() == 0) return r;
    NodeCounter nodes{0, budget.max_nodes};
    IndependentSetSearch search(g, nodes);
    std::vector<Vertex> best = greedy_independent_set(g);
    try {
        search.run(best);
        r.status = SearchStatus::exact;
        r.upper = best.size();
    } catch (const OutOfNodes&) {
        Bits all(g.order());
        all.set();
        r.status = SearchStatus::undecided;
        r.upper = search.cover_bound(all);
    }
    std::sort(best.begin(), best.end());
    r.lower = best.size();
    r.witness = std::move(best);
    r.nodes = nodes.used;
    return r;
}

bool is_independent_set(const Graph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] >= g.order()) return false;
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] == s[j] || g.adjacent(s[i], s[j])) return false;
    }
    return true;
}

}  // namespace raagobs
