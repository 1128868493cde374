#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "raagobs/errors.hpp"
#include "raagobs/graph.hpp"
#include "raagobs/raag.hpp"

namespace raagobs {

/// Candidate homomorphism psi: A(source) -> A(target), one image word per
/// source vertex, meant to have clique supports.
struct CliqueSupportMap {
    std::shared_ptr<const Graph> source;
    std::shared_ptr<const Graph> target;
    std::vector<RaagWord> images;

    /// Sum over source vertices of |supp(psi(v))|.
    std::size_t support_mass() const;
};

struct HomCheck {
    bool ok = true;
    std::string diagnostic;
};

/// Verifies that every image has a nonempty clique support and that images
/// of adjacent source vertices commute. Throws Error on ambient mismatches.
HomCheck check_clique_support_hom(const CliqueSupportMap& psi);

/// Why a reduction step was refused.
enum class ReductionFailure { unequal_supports, link_condition, degenerate, same_vertex };

class ReductionError : public Error {
public:
    ReductionError(ReductionFailure kind, Vertex v, Vertex w, const std::string& message)
        : Error(message), kind_(kind), v_(v), w_(w) {}

    ReductionFailure kind() const noexcept { return kind_; }
    Vertex first() const noexcept { return v_; }
    Vertex second() const noexcept { return w_; }

private:
    ReductionFailure kind_;
    Vertex v_, w_;
};

/// Exponents of a clique-supported word indexed by its ascending support.
std::vector<Exponent> clique_exponents(const RaagWord& w);

/// One descent step for a pair v != w whose images share the support
/// {x1 < ... < xk} with exponent vectors p and q. Replaces psi(v) by
/// psi(v)^q1 psi(w)^-p1, whose exponent on x_i is p_i q1 - q_i p1; x1 drops
/// out and the support mass strictly decreases. Requires every neighbour of
/// v other than w to be adjacent to w, so that v -> v w^-1 is a transvection.
///
/// Throws ReductionError for unequal supports, a failed link condition, or
/// an empty result (the candidate sends v to the identity, so it cannot be
/// injective).
CliqueSupportMap reduce_equal_supports(const CliqueSupportMap& psi, Vertex v, Vertex w);

struct ReductionStep {
    Vertex reduced = 0;   ///< vertex whose image changed
    Vertex partner = 0;   ///< vertex with the equal support
    RaagWord before;
    RaagWord after;
};

struct Minimization {
    CliqueSupportMap result;
    std::vector<ReductionStep> steps;
};

/// Reduces equal-support pairs until all supports are pairwise distinct.
/// Pairs are scanned as ordered (v, w) in lexicographic order; the first one
/// satisfying the link condition is reduced. Throws ReductionError when an
/// equal-support class admits no valid step or a step degenerates, and Error
/// when the input fails check_clique_support_hom.
Minimization minimize_supports(const CliqueSupportMap& psi, std::function<void(const ReductionStep&)> observer = {});

/// delta: V(source) -> cliques of the target, with the check transcript.
struct InducedEmbedding {
    std::vector<Clique> delta;
    CliqueGraph target_clique_graph;
    std::vector<Vertex> delta_index;      ///< delta(v) as a clique graph vertex
    bool injective = false;
    bool induced = false;                 ///< u~v  <=>  delta(u) ~ delta(v)
    std::vector<std::string> violations;  ///< one line per failed pair

    bool ok() const noexcept { return injective && induced; }
};

/// Sets delta(v) = supp(psi(v)) and checks injectivity and the induced
/// subgraph biconditional against the target's clique graph. Failures of
/// the reverse direction mean psi was not an embedding.
InducedEmbedding extract_delta(const CliqueSupportMap& psi, std::size_t cap = default_clique_cap);

/// Graph with one vertex per element and edges from a symmetric,
/// irreflexive relation. Throws GraphError otherwise.
Graph commutation_graph(std::size_t count, const std::function<bool(std::size_t, std::size_t)>& related);

/// Commutation graph of concrete words: i ~ j iff the words commute.
Graph commutation_graph(const std::vector<RaagWord>& elements);

}  // namespace raagobs
