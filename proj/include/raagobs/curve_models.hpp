#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "raagobs/graph.hpp"
#include "raagobs/graph_io.hpp"
#include "raagobs/search.hpp"

namespace raagobs {

/// Orientable surface of genus g with b punctures; requires 2 - 2g - b < 0.
class SurfaceType {
public:
    SurfaceType(std::uint32_t genus, std::uint32_t punctures);

    std::uint32_t genus() const noexcept { return genus_; }
    std::uint32_t punctures() const noexcept { return punctures_; }
    std::int64_t euler_characteristic() const noexcept {
        return 2 - 2 * std::int64_t{genus_} - std::int64_t{punctures_};
    }
    std::string name() const;

    friend bool operator==(const SurfaceType&, const SurfaceType&) = default;

private:
    std::uint32_t genus_;
    std::uint32_t punctures_;
};

/// Maximal rank of an abelian subgroup of Mod(S): 3g - 3 + b, the number of
/// components of a pants decomposition. Gives 1 for S(1,1) and S(0,4), and 0
/// for the pair of pants, which has no essential curves.
std::uint32_t surface_rank(const SurfaceType& s);

/// Slope p/q in lowest terms, q >= 0, with infinity written 1/0.
class FareyVertex {
public:
    FareyVertex(std::int64_t p, std::int64_t q);

    std::int64_t p() const noexcept { return p_; }
    std::int64_t q() const noexcept { return q_; }
    std::string name() const;

    /// |p q' - p' q|; Farey neighbours have determinant 1.
    friend std::int64_t determinant(const FareyVertex& a, const FareyVertex& b);
    /// Orders by slope, infinity last.
    friend bool operator<(const FareyVertex& a, const FareyVertex& b);
    friend bool operator==(const FareyVertex&, const FareyVertex&) = default;

private:
    std::int64_t p_, q_;
};

/// Finite Farey graph on slopes with max(|p|, q) <= depth, ordered by slope.
Graph farey_truncation(std::uint32_t depth);

/// Disjointness curve graph fragment for S(1,1) and S(0,4): distinct curves
/// always intersect there, so the graph is edgeless. Throws Error for other
/// surfaces.
Graph disjointness_graph_small(const SurfaceType& s, std::size_t vertex_count);

/// Which curve graph convention a model follows.
struct CurveModelInfo {
    std::optional<SurfaceType> surface;
    std::string model = "external";  ///< "disjointness" | "farey" | "external"
    bool verified = false;
};

json curve_model_to_json(const CurveModelInfo& m);
CurveModelInfo curve_model_from_json(const json& j);

struct CurveGraphModel {
    Graph graph;
    CurveModelInfo info;
};

/// Graph JSON plus {"metadata": {"surface": ..., "model": ..., "verified": ...}}.
json curve_graph_to_json(const CurveGraphModel& m);

/// Loads a curve graph fragment (graph JSON with optional metadata, or an
/// edge list). Nothing about the topology is checked; files without
/// metadata load as an unverified external model.
CurveGraphModel ingest_curve_graph(std::string_view text);
CurveGraphModel ingest_curve_graph_file(const std::filesystem::path& path);

/// Exact chromatic number of a finite fragment, a lower bound for the
/// ambient curve graph. Throws BudgetExhausted when undecided.
std::size_t chromatic_lower_bound_from_model(const Graph& g, SearchBudget budget = {});

}  // namespace raagobs
