#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "raagobs/coloring.hpp"
#include "raagobs/cycles.hpp"
#include "raagobs/graph.hpp"
#include "raagobs/graph_io.hpp"
#include "raagobs/search.hpp"

namespace raagobs {

inline constexpr const char* tool_version = "raagobs 0.1.0";

/// chi >= ceil(n / alpha), with a maximum independent set as witness.
struct IndependenceEvidence {
    std::size_t alpha = 0;
    std::vector<Vertex> independent_set;
    std::size_t vertex_count = 0;
    std::size_t bound = 0;
};

/// chi exactly, with an optimal colouring; the claim that chi - 1 colours do
/// not suffice was established by exhaustive search.
struct ExactEvidence {
    std::size_t chromatic_number = 0;
    Coloring coloring;
    std::uint64_t search_nodes = 0;
};

/// Partial knowledge from an exhausted budget: a clique proves the lower
/// bound and a colouring the upper bound.
struct BoundsEvidence {
    std::size_t lower = 0;
    std::size_t upper = 0;
    Clique clique;
    Coloring coloring;
};

using ChromaticEvidence = std::variant<ExactEvidence, IndependenceEvidence, BoundsEvidence>;

/// Lower bound on chi that the evidence claims.
std::size_t claimed_lower_bound(const ChromaticEvidence& e);
/// Upper bound on chi, when the evidence carries one.
std::optional<std::size_t> claimed_upper_bound(const ChromaticEvidence& e);

json evidence_to_json(const ChromaticEvidence& e);
ChromaticEvidence evidence_from_json(const json& j, const Graph& g);

/// Exact chromatic evidence computed from scratch. Throws BudgetExhausted.
ExactEvidence exact_evidence(const Graph& g, SearchBudget budget = {});

/// Parameters recorded so a certificate regenerates bit for bit.
struct GeneratorParams {
    std::string method;  ///< "mycielski" or "deletion"
    double edge_factor = 1.0;
    std::size_t initial_vertices = 50;
    std::size_t max_resamples = 8;
    std::size_t exact_threshold = 60;
    std::uint64_t node_budget = 0;
    std::size_t attempt = 0;          ///< resample index that succeeded
    std::size_t sampled_vertices = 0;
    double edge_probability = 0.0;
    std::size_t iterations = 0;       ///< Mycielski iterations from K2
    std::string rng = "mt19937_64";

    friend bool operator==(const GeneratorParams&, const GeneratorParams&) = default;
};

json params_to_json(const GeneratorParams& p);
GeneratorParams params_from_json(const json& j);

/// Graph with girth >= girth_lb and chi >= chromatic_lb, plus the evidence.
struct GirthChromaticCertificate {
    Graph graph;
    std::size_t girth_lb = 0;
    std::size_t chromatic_lb = 0;
    ChromaticEvidence evidence;
    std::uint64_t seed = 0;
    GeneratorParams params;
    std::string version = tool_version;
};

json certificate_to_json(const GirthChromaticCertificate& c);
/// Throws ParseError on malformed input.
GirthChromaticCertificate certificate_from_json(const json& j);

struct VerificationReport {
    bool ok = true;
    bool undecided = false;  ///< a re-search ran out of budget
    std::vector<std::string> findings;

    void fail(std::string why) {
        ok = false;
        findings.push_back(std::move(why));
    }
};

/// Re-checks chromatic evidence on g and returns the lower bound on chi it
/// proves (0 when nothing could be confirmed). Exact evidence is re-refuted
/// with chi - 1 colours; an independence witness is re-checked and its
/// maximality re-searched.
std::size_t verify_evidence(const Graph& g, const ChromaticEvidence& e, SearchBudget budget,
                            VerificationReport& report);

/// Recomputes the girth exactly and re-validates the chromatic evidence.
VerificationReport verify_certificate(const GirthChromaticCertificate& c, SearchBudget budget = {});

}  // namespace raagobs
