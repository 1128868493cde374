#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "raagobs/certificate.hpp"
#include "raagobs/curve_models.hpp"
#include "raagobs/erdos.hpp"
#include "raagobs/graph.hpp"

namespace raagobs {

enum class Verdict { obstructed_by_chromatic, obstructed_by_rank, not_obstructed, undecided };

std::string verdict_name(Verdict v);
Verdict verdict_from_name(const std::string& name);

struct RankCheck {
    std::size_t max_clique = 0;
    std::uint32_t surface_rank = 0;
};

/// Outcome of the two one-sided tests for A(gamma) -> Mod(S):
///  - chi(gamma) > 2^M_S, where M_S is the asserted colour count of the
///    curve graph, rules out an embedding;
///  - a clique larger than the surface's abelian rank rules it out too.
/// Neither test ever establishes that an embedding exists.
struct ObstructionVerdict {
    std::optional<SurfaceType> surface;
    CurveModelInfo model;
    std::uint32_t colors_of_curve_graph = 0;  ///< M_S
    std::uint64_t clique_graph_bound = 0;     ///< N_S = 2^M_S
    Graph gamma;
    ChromaticEvidence evidence;
    std::optional<RankCheck> rank;
    bool chromatic_obstructed = false;
    bool rank_obstructed = false;
    Verdict verdict = Verdict::undecided;
};

inline constexpr const char* one_sided_note =
    "one-sided test: only an obstruction verdict carries a conclusion; no verdict is evidence of an embedding";

/// Runs both tests, computing chromatic evidence for gamma within `budget`.
/// Throws Error for M_S < 1.
ObstructionVerdict obstruct(const Graph& gamma, std::uint32_t colors_of_curve_graph,
                            std::optional<SurfaceType> surface, CurveModelInfo model, SearchBudget budget = {});

/// Same tests with chromatic evidence supplied by the caller.
ObstructionVerdict obstruct_with_evidence(const Graph& gamma, ChromaticEvidence evidence,
                                          std::uint32_t colors_of_curve_graph, std::optional<SurfaceType> surface,
                                          CurveModelInfo model, SearchBudget budget = {});

json verdict_to_json(const ObstructionVerdict& v);
ObstructionVerdict verdict_from_json(const json& j);

/// Recomputes N_S, re-validates the evidence and the rank check, and
/// confirms the verdict label follows from them.
VerificationReport verify_verdict(const ObstructionVerdict& v, SearchBudget budget = {});

struct Synthesis {
    GirthChromaticCertificate certificate;
    ObstructionVerdict verdict;
};

/// Builds a girth >= m graph with chi >= 2^M_S + 1 and the resulting
/// chromatic obstruction.
Synthesis synthesize(std::size_t m, std::uint32_t colors_of_curve_graph, std::uint64_t seed,
                     std::optional<SurfaceType> surface, CurveModelInfo model, const HighGirthConfig& config = {});

/// {"certificate": ..., "verdict": ...}
json synthesis_to_json(const Synthesis& s);

}  // namespace raagobs
