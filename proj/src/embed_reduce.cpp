#include "raagobs/embed_reduce.hpp"

#include <algorithm>

namespace raagobs {

namespace {

void require_ambients(const CliqueSupportMap& psi) {
    if (!psi.source || !psi.target) throw Error("clique support map is missing a graph");
    if (psi.images.size() != psi.source->order())
        throw Error("clique support map has " + std::to_string(psi.images.size()) + " images for " +
                    std::to_string(psi.source->order()) + " source vertices");
    for (const auto& w : psi.images)
        if (w.ambient_ptr() != psi.target && !(w.ambient() == *psi.target))
            throw Error("image word is not over the target graph");
}

std::string word_text(const RaagWord& w) {
    auto s = to_string(w);
    return s.empty() ? "1" : s;
}

}  // namespace

std::size_t CliqueSupportMap::support_mass() const {
    std::size_t total = 0;
    for (const auto& w : images) total += support(w).size();
    return total;
}

HomCheck check_clique_support_hom(const CliqueSupportMap& psi) {
    require_ambients(psi);
    const Graph& src = *psi.source;
    for (Vertex v = 0; v < src.order(); ++v) {
        auto s = support(psi.images[v]);
        if (s.empty()) return {false, "image of " + src.label(v) + " is trivial"};
        if (!is_clique(*psi.target, s))
            return {false, "support of the image of " + src.label(v) + " is not a clique: " +
                               clique_name(*psi.target, s)};
    }
    for (auto [u, v] : src.edges())
        if (!commutes(psi.images[u], psi.images[v]))
            return {false, "images of adjacent vertices " + src.label(u) + " and " + src.label(v) + " do not commute"};
    return {};
}

std::vector<Exponent> clique_exponents(const RaagWord& w) {
    auto nf = normal_form(w);
    std::vector<Syllable> s = nf.syllables();
    std::sort(s.begin(), s.end(), [](const Syllable& a, const Syllable& b) { return a.vertex < b.vertex; });
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i].vertex == s[i - 1].vertex) throw Error("word " + word_text(w) + " does not have clique support");
    std::vector<Exponent> out;
    for (auto& syl : s) out.push_back(std::move(syl.exponent));
    return out;
}

CliqueSupportMap reduce_equal_supports(const CliqueSupportMap& psi, Vertex v, Vertex w) {
    require_ambients(psi);
    const Graph& src = *psi.source;
    const Graph& tgt = *psi.target;
    if (v >= src.order() || w >= src.order()) throw GraphError("reduction pair out of range");
    if (v == w) throw ReductionError(ReductionFailure::same_vertex, v, w, "reduction needs two distinct vertices");

    const auto supp = support(psi.images[v]);
    if (supp != support(psi.images[w]) || supp.empty())
        throw ReductionError(ReductionFailure::unequal_supports, v, w,
                             "supports of " + src.label(v) + " and " + src.label(w) + " differ");
    if (!is_clique(tgt, supp))
        throw ReductionError(ReductionFailure::unequal_supports, v, w,
                             "shared support " + clique_name(tgt, supp) + " is not a clique");
    for (Vertex u : src.neighbours(v))
        if (u != w && !src.adjacent(u, w))
            throw ReductionError(ReductionFailure::link_condition, v, w,
                                 "link condition fails: " + src.label(u) + " is adjacent to " + src.label(v) +
                                     " but not to " + src.label(w));

    const auto p = clique_exponents(psi.images[v]);
    const auto q = clique_exponents(psi.images[w]);
    std::vector<Syllable> reduced;
    for (std::size_t i = 1; i < supp.size(); ++i) {
        Exponent e = p[i] * q[0] - q[i] * p[0];
        if (e != 0) reduced.push_back({supp[i], std::move(e)});
    }
    if (reduced.empty())
        throw ReductionError(ReductionFailure::degenerate, v, w,
                             "degenerate: " + src.label(v) + " maps to the identity after reducing against " +
                                 src.label(w) + "; the candidate is not injective");

    CliqueSupportMap out = psi;
    out.images[v] = RaagWord(psi.target, std::move(reduced));
    return out;
}

Minimization minimize_supports(const CliqueSupportMap& psi, std::function<void(const ReductionStep&)> observer) {
    if (auto check = check_clique_support_hom(psi); !check.ok)
        throw Error("not a clique support homomorphism: " + check.diagnostic);

    Minimization m{psi, {}};
    const Graph& src = *psi.source;
    const std::size_t limit = psi.support_mass();
    for (std::size_t round = 0; round <= limit; ++round) {
        std::vector<std::vector<Vertex>> supports;
        for (const auto& img : m.result.images) supports.push_back(support(img));

        std::optional<std::pair<Vertex, Vertex>> first_equal;
        std::optional<std::pair<Vertex, Vertex>> chosen;
        for (Vertex v = 0; v < src.order() && !chosen; ++v)
            for (Vertex w = 0; w < src.order() && !chosen; ++w) {
                if (v == w || supports[v] != supports[w]) continue;
                if (!first_equal) first_equal = {v, w};
                bool link = std::all_of(src.neighbours(v).begin(), src.neighbours(v).end(),
                                        [&](Vertex u) { return u == w || src.adjacent(u, w); });
                if (link) chosen = {v, w};
            }

        if (!first_equal) return m;
        if (!chosen) {
            // Surface the refusal for the first equal pair.
            reduce_equal_supports(m.result, first_equal->first, first_equal->second);
        }
        auto [v, w] = *chosen;
        ReductionStep step{v, w, m.result.images[v], m.result.images[v]};
        m.result = reduce_equal_supports(m.result, v, w);
        step.after = m.result.images[v];
        if (auto check = check_clique_support_hom(m.result); !check.ok)
            throw Error("reduction broke the homomorphism checks: " + check.diagnostic);
        if (observer) observer(step);
        m.steps.push_back(std::move(step));
    }
    throw Error("support minimization did not terminate within the support-mass bound");
}

InducedEmbedding extract_delta(const CliqueSupportMap& psi, std::size_t cap) {
    require_ambients(psi);
    const Graph& src = *psi.source;
    const Graph& tgt = *psi.target;
    InducedEmbedding e;
    e.target_clique_graph = clique_graph(tgt, cap);

    for (Vertex v = 0; v < src.order(); ++v) {
        auto s = support(psi.images[v]);
        auto idx = s.empty() ? std::nullopt : e.target_clique_graph.index_of(s);
        if (!idx)
            throw Error("support of the image of " + src.label(v) + " is not a nonempty clique of the target");
        e.delta.push_back(std::move(s));
        e.delta_index.push_back(*idx);
    }

    e.injective = true;
    for (Vertex u = 0; u < src.order(); ++u)
        for (Vertex v = u + 1; v < src.order(); ++v)
            if (e.delta_index[u] == e.delta_index[v]) {
                e.injective = false;
                e.violations.push_back("not injective: " + src.label(u) + " and " + src.label(v) +
                                       " share the support " + clique_name(tgt, e.delta[u]));
            }

    e.induced = true;
    const Graph& xk = e.target_clique_graph.graph;
    for (Vertex u = 0; u < src.order(); ++u)
        for (Vertex v = u + 1; v < src.order(); ++v) {
            const bool in_source = src.adjacent(u, v);
            const bool in_target = e.delta_index[u] != e.delta_index[v] && xk.adjacent(e.delta_index[u], e.delta_index[v]);
            if (in_source == in_target) continue;
            e.induced = false;
            const std::string pair = src.label(u) + "," + src.label(v);
            if (in_source)
                e.violations.push_back("edge {" + pair + "} maps to non-adjacent cliques " + clique_name(tgt, e.delta[u]) +
                                       ", " + clique_name(tgt, e.delta[v]));
            else
                e.violations.push_back("non-edge {" + pair + "} maps to adjacent cliques " + clique_name(tgt, e.delta[u]) +
                                       ", " + clique_name(tgt, e.delta[v]) +
                                       ": the candidate was not injective / not an embedding");
        }
    return e;
}

Graph commutation_graph(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& related) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < count; ++i) {
        if (related(i, i)) throw GraphError("relation is not irreflexive at element " + std::to_string(i));
        for (std::size_t j = i + 1; j < count; ++j) {
            const bool a = related(i, j);
            if (a != related(j, i))
                throw GraphError("relation is not symmetric on (" + std::to_string(i) + "," + std::to_string(j) + ")");
            if (a) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    return build_graph(count, edges);
}

Graph commutation_graph(const std::vector<RaagWord>& elements) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = i + 1; j < elements.size(); ++j)
            if (commutes(elements[i], elements[j])) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return build_graph(elements.size(), edges);
}

}  // namespace raagobs
