#include "raagobs/obstruct.hpp"

#include "raagobs/clique_color.hpp"
#include "raagobs/errors.hpp"

namespace raagobs {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::obstructed_by_chromatic: return "OBSTRUCTED_BY_CHROMATIC";
        case Verdict::obstructed_by_rank: return "OBSTRUCTED_BY_RANK";
        case Verdict::not_obstructed: return "NOT_OBSTRUCTED_BY_THESE_TESTS";
        case Verdict::undecided: return "UNDECIDED";
    }
    return "UNDECIDED";
}

Verdict verdict_from_name(const std::string& name) {
    for (auto v : {Verdict::obstructed_by_chromatic, Verdict::obstructed_by_rank, Verdict::not_obstructed,
                   Verdict::undecided})
        if (verdict_name(v) == name) return v;
    throw ParseError("unknown verdict \"" + name + "\"");
}

namespace {

std::uint64_t clique_bound_for(std::uint32_t m) {
    if (m < 1) throw Error("the curve graph colour count M_S must be at least 1");
    return clique_chromatic_upper_bound(m);
}

Verdict decide(const ObstructionVerdict& v) {
    if (v.chromatic_obstructed) return Verdict::obstructed_by_chromatic;
    if (v.rank_obstructed) return Verdict::obstructed_by_rank;
    auto upper = claimed_upper_bound(v.evidence);
    if (upper && *upper <= v.clique_graph_bound) return Verdict::not_obstructed;
    return Verdict::undecided;
}

}  // namespace

ObstructionVerdict obstruct_with_evidence(const Graph& gamma, ChromaticEvidence evidence,
                                          std::uint32_t colors_of_curve_graph, std::optional<SurfaceType> surface,
                                          CurveModelInfo model, SearchBudget budget) {
    ObstructionVerdict v;
    v.surface = surface;
    v.model = std::move(model);
    v.colors_of_curve_graph = colors_of_curve_graph;
    v.clique_graph_bound = clique_bound_for(colors_of_curve_graph);
    v.gamma = gamma;
    v.evidence = std::move(evidence);
    v.chromatic_obstructed = claimed_lower_bound(v.evidence) > v.clique_graph_bound;
    if (surface) {
        auto clique = maximum_clique(gamma, budget);
        v.rank = RankCheck{clique.lower, surface_rank(*surface)};
        v.rank_obstructed = clique.lower > v.rank->surface_rank;
    }
    v.verdict = decide(v);
    return v;
}

ObstructionVerdict obstruct(const Graph& gamma, std::uint32_t colors_of_curve_graph,
                            std::optional<SurfaceType> surface, CurveModelInfo model, SearchBudget budget) {
    clique_bound_for(colors_of_curve_graph);
    auto chi = chromatic_number(gamma, budget);
    ChromaticEvidence evidence;
    if (chi.exact()) {
        evidence = ExactEvidence{chi.upper, std::move(chi.witness), chi.nodes};
    } else {
        auto clique = maximum_clique(gamma, budget);
        BoundsEvidence bounds{clique.lower, chi.upper, clique.witness, chi.witness};
        evidence = bounds;
        auto alpha = independence_number(gamma, budget);
        if (alpha.exact() && alpha.lower > 0) {
            const auto ratio = (gamma.order() + alpha.lower - 1) / alpha.lower;
            if (ratio > bounds.lower) evidence = IndependenceEvidence{alpha.lower, alpha.witness, gamma.order(), ratio};
        }
        // An undecided ratio bound loses the upper bound; keep the bounds
        // evidence unless the ratio alone settles the chromatic test.
        if (std::holds_alternative<IndependenceEvidence>(evidence) &&
            claimed_lower_bound(evidence) <= clique_bound_for(colors_of_curve_graph))
            evidence = bounds;
    }
    return obstruct_with_evidence(gamma, std::move(evidence), colors_of_curve_graph, surface, std::move(model), budget);
}

json verdict_to_json(const ObstructionVerdict& v) {
    json surface = nullptr;
    if (v.surface)
        surface = {{"genus", v.surface->genus()},
                   {"punctures", v.surface->punctures()},
                   {"euler_characteristic", v.surface->euler_characteristic()}};
    json rank = nullptr;
    if (v.rank) rank = {{"max_clique", v.rank->max_clique}, {"surface_rank", v.rank->surface_rank}};
    return {{"surface", surface},
            {"model_assumption", curve_model_to_json(v.model)},
            {"M_S", v.colors_of_curve_graph},
            {"N_S", v.clique_graph_bound},
            {"gamma", graph_to_json(v.gamma)},
            {"gamma_chromatic_evidence", evidence_to_json(v.evidence)},
            {"rank_check", rank},
            {"tests", {{"chromatic", v.chromatic_obstructed}, {"rank", v.rank_obstructed}}},
            {"verdict", verdict_name(v.verdict)},
            {"note", one_sided_note}};
}

ObstructionVerdict verdict_from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("verdict must be a JSON object");
        ObstructionVerdict v;
        if (j.contains("surface") && !j["surface"].is_null())
            v.surface = SurfaceType(j["surface"].at("genus").get<std::uint32_t>(),
                                    j["surface"].at("punctures").get<std::uint32_t>());
        if (j.contains("model_assumption")) v.model = curve_model_from_json(j["model_assumption"]);
        v.colors_of_curve_graph = j.at("M_S").get<std::uint32_t>();
        v.clique_graph_bound = j.at("N_S").get<std::uint64_t>();
        v.gamma = graph_from_json(j.at("gamma"));
        v.evidence = evidence_from_json(j.at("gamma_chromatic_evidence"), v.gamma);
        if (j.contains("rank_check") && !j["rank_check"].is_null())
            v.rank = RankCheck{j["rank_check"].at("max_clique").get<std::size_t>(),
                               j["rank_check"].at("surface_rank").get<std::uint32_t>()};
        if (j.contains("tests")) {
            v.chromatic_obstructed = j["tests"].at("chromatic").get<bool>();
            v.rank_obstructed = j["tests"].at("rank").get<bool>();
        }
        v.verdict = verdict_from_name(j.at("verdict").get<std::string>());
        return v;
    } catch (const json::exception& e) {
        throw ParseError(std::string("verdict: ") + e.what());
    } catch (const GraphError& e) {
        throw ParseError(std::string("verdict: ") + e.what());
    }
}

VerificationReport verify_verdict(const ObstructionVerdict& v, SearchBudget budget) {
    VerificationReport report;
    std::uint64_t expected_bound = 0;
    try {
        expected_bound = clique_bound_for(v.colors_of_curve_graph);
    } catch (const Error& e) {
        report.fail(e.what());
        return report;
    }
    if (v.clique_graph_bound != expected_bound)
        report.fail("N_S is " + std::to_string(v.clique_graph_bound) + ", expected 2^M_S = " +
                    std::to_string(expected_bound));

    const std::size_t proven = verify_evidence(v.gamma, v.evidence, budget, report);
    const bool chromatic = proven > expected_bound;
    if (v.chromatic_obstructed && !chromatic)
        report.fail("chromatic obstruction claimed but the evidence proves only chi >= " + std::to_string(proven));

    bool rank = false;
    if (v.surface) {
        if (!v.rank) {
            report.fail("surface given without a rank check");
        } else {
            auto clique = maximum_clique(v.gamma, budget);
            if (!clique.exact()) {
                report.undecided = true;
                report.fail("maximum clique undecided at budget");
            } else if (clique.lower != v.rank->max_clique) {
                report.fail("maximum clique is " + std::to_string(clique.lower) + ", not " +
                            std::to_string(v.rank->max_clique));
            }
            if (surface_rank(*v.surface) != v.rank->surface_rank) report.fail("surface rank mismatch");
            rank = clique.lower > surface_rank(*v.surface);
        }
    }
    if (v.rank_obstructed != rank) report.fail("rank test flag does not follow from the rank check");

    if (report.ok) {
        ObstructionVerdict recomputed = v;
        recomputed.chromatic_obstructed = chromatic;
        recomputed.rank_obstructed = rank;
        if (decide(recomputed) != v.verdict)
            report.fail("verdict " + verdict_name(v.verdict) + " does not follow; expected " +
                        verdict_name(decide(recomputed)));
    }
    return report;
}

Synthesis synthesize(std::size_t m, std::uint32_t colors_of_curve_graph, std::uint64_t seed,
                     std::optional<SurfaceType> surface, CurveModelInfo model, const HighGirthConfig& config) {
    const auto bound = clique_bound_for(colors_of_curve_graph);
    auto certificate = generate_high_girth(m, static_cast<std::size_t>(bound) + 1, seed, config);
    auto verdict = obstruct_with_evidence(certificate.graph, certificate.evidence, colors_of_curve_graph, surface,
                                          std::move(model), config.budget);
    return {std::move(certificate), std::move(verdict)};
}

json synthesis_to_json(const Synthesis& s) {
    return {{"certificate", certificate_to_json(s.certificate)}, {"verdict", verdict_to_json(s.verdict)}};
}

}  // namespace raagobs
