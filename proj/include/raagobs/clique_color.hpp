#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "raagobs/coloring.hpp"
#include "raagobs/graph.hpp"

namespace raagobs {

/// Lifts a colouring f of g to its clique graph: the clique K receives the
/// set token f(K) = { f(u) : u in K }. Any valid f yields a valid lift since
/// adjacent cliques differ by a vertex coloured outside the other clique.
///
/// Integer tokens of f are collected directly; set tokens are rejected.
/// Throws GraphError naming a monochromatic edge when f is invalid on g.
Coloring lift_coloring(const Graph& g, const CliqueGraph& gk, const Coloring& f);

struct LiftCheck {
    bool ok = true;
    std::string diagnostic;
};

/// Checks g(v_K) = f(K) for every clique and validity of g on the clique
/// graph. Throws GraphError when `gk` is not the clique graph of `g`.
LiftCheck verify_lift(const Graph& g, const CliqueGraph& gk, const Coloring& f, const Coloring& lifted);

inline constexpr std::uint32_t max_bound_exponent = 63;

/// 2^m colours suffice for the clique graph of an m-colourable graph (the
/// lift itself only uses the 2^m - 1 nonempty subsets). Throws Error above
/// `max_bound_exponent`.
std::uint64_t clique_chromatic_upper_bound(std::uint32_t m);

}  // namespace raagobs
