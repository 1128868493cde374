#include "raagobs/certificate.hpp"

#include <algorithm>

#include "raagobs/errors.hpp"

namespace raagobs {

namespace {

std::size_t ceil_div(std::size_t a, std::size_t b) { return b == 0 ? 0 : (a + b - 1) / b; }

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::size_t get_size(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw ParseError(std::string("expected a nonnegative integer \"") + key + "\"");
    return j[key].get<std::size_t>();
}

std::vector<Vertex> get_vertices(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) throw ParseError(std::string("expected a vertex array \"") + key + "\"");
    std::vector<Vertex> out;
    for (const auto& v : j[key]) {
        if (!v.is_number_unsigned()) throw ParseError(std::string("malformed vertex in \"") + key + "\"");
        out.push_back(v.get<Vertex>());
    }
    return out;
}

}  // namespace

std::size_t claimed_lower_bound(const ChromaticEvidence& e) {
    return std::visit(overloaded{[](const ExactEvidence& x) { return x.chromatic_number; },
                                 [](const IndependenceEvidence& x) { return x.bound; },
                                 [](const BoundsEvidence& x) { return x.lower; }},
                      e);
}

std::optional<std::size_t> claimed_upper_bound(const ChromaticEvidence& e) {
    return std::visit(overloaded{[](const ExactEvidence& x) -> std::optional<std::size_t> { return x.chromatic_number; },
                                 [](const IndependenceEvidence&) -> std::optional<std::size_t> { return std::nullopt; },
                                 [](const BoundsEvidence& x) -> std::optional<std::size_t> { return x.upper; }},
                      e);
}

json evidence_to_json(const ChromaticEvidence& e) {
    return std::visit(
        overloaded{
            [](const ExactEvidence& x) -> json {
                return {{"kind", "exact"},
                        {"chromatic_number", x.chromatic_number},
                        {"coloring", coloring_to_json(x.coloring)},
                        {"refutation",
                         {{"colors", x.chromatic_number == 0 ? 0 : x.chromatic_number - 1},
                          {"method", "dsatur-backtracking"},
                          {"search_nodes", x.search_nodes}}}};
            },
            [](const IndependenceEvidence& x) -> json {
                return {{"kind", "independence_bound"},
                        {"alpha", x.alpha},
                        {"independent_set", x.independent_set},
                        {"n", x.vertex_count},
                        {"bound", x.bound}};
            },
            [](const BoundsEvidence& x) -> json {
                return {{"kind", "bounds"},
                        {"lower", x.lower},
                        {"upper", x.upper},
                        {"clique", x.clique},
                        {"coloring", coloring_to_json(x.coloring)}};
            }},
        e);
}

ChromaticEvidence evidence_from_json(const json& j, const Graph& g) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw ParseError("evidence needs a \"kind\"");
    const auto kind = j["kind"].get<std::string>();
    if (kind == "exact") {
        ExactEvidence x;
        x.chromatic_number = get_size(j, "chromatic_number");
        if (!j.contains("coloring")) throw ParseError("exact evidence needs a \"coloring\"");
        x.coloring = coloring_from_json(j["coloring"], g);
        if (j.contains("refutation") && j["refutation"].is_object() && j["refutation"].contains("search_nodes"))
            x.search_nodes = get_size(j["refutation"], "search_nodes");
        return x;
    }
    if (kind == "independence_bound") {
        IndependenceEvidence x;
        x.alpha = get_size(j, "alpha");
        x.independent_set = get_vertices(j, "independent_set");
        x.vertex_count = get_size(j, "n");
        x.bound = get_size(j, "bound");
        return x;
    }
    if (kind == "bounds") {
        BoundsEvidence x;
        x.lower = get_size(j, "lower");
        x.upper = get_size(j, "upper");
        x.clique = get_vertices(j, "clique");
        if (!j.contains("coloring")) throw ParseError("bounds evidence needs a \"coloring\"");
        x.coloring = coloring_from_json(j["coloring"], g);
        return x;
    }
    throw ParseError("unknown evidence kind \"" + kind + "\"");
}

ExactEvidence exact_evidence(const Graph& g, SearchBudget budget) {
    auto r = chromatic_number(g, budget);
    ExactEvidence x;
    x.chromatic_number = r.value();
    x.coloring = std::move(r.witness);
    x.search_nodes = r.nodes;
    return x;
}

json params_to_json(const GeneratorParams& p) {
    json j = {{"method", p.method}, {"node_budget", p.node_budget}, {"rng", p.rng}};
    if (p.method == "mycielski") {
        j["iterations"] = p.iterations;
    } else {
        j["edge_factor"] = p.edge_factor;
        j["initial_vertices"] = p.initial_vertices;
        j["max_resamples"] = p.max_resamples;
        j["exact_threshold"] = p.exact_threshold;
        j["attempt"] = p.attempt;
        j["sampled_vertices"] = p.sampled_vertices;
        j["edge_probability"] = p.edge_probability;
    }
    return j;
}

GeneratorParams params_from_json(const json& j) {
    if (!j.is_object() || !j.contains("method") || !j["method"].is_string())
        throw ParseError("generator params need a \"method\"");
    GeneratorParams p;
    p.method = j["method"].get<std::string>();
    p.node_budget = j.value("node_budget", std::uint64_t{0});
    p.rng = j.value("rng", std::string("mt19937_64"));
    if (p.method == "mycielski") {
        p.iterations = j.value("iterations", std::size_t{0});
    } else {
        p.edge_factor = j.value("edge_factor", 1.0);
        p.initial_vertices = j.value("initial_vertices", std::size_t{0});
        p.max_resamples = j.value("max_resamples", std::size_t{0});
        p.exact_threshold = j.value("exact_threshold", std::size_t{0});
        p.attempt = j.value("attempt", std::size_t{0});
        p.sampled_vertices = j.value("sampled_vertices", std::size_t{0});
        p.edge_probability = j.value("edge_probability", 0.0);
    }
    return p;
}

json certificate_to_json(const GirthChromaticCertificate& c) {
    return {{"graph", graph_to_json(c.graph)},
            {"claims", {{"girth_lb", c.girth_lb}, {"chromatic_lb", c.chromatic_lb}}},
            {"evidence", evidence_to_json(c.evidence)},
            {"provenance", {{"seed", c.seed}, {"params", params_to_json(c.params)}, {"tool_version", c.version}}}};
}

GirthChromaticCertificate certificate_from_json(const json& j) {
    try {
        if (!j.is_object()) throw ParseError("certificate must be a JSON object");
        for (const char* key : {"graph", "claims", "evidence", "provenance"})
            if (!j.contains(key)) throw ParseError(std::string("certificate is missing \"") + key + "\"");
        GirthChromaticCertificate c;
        c.graph = graph_from_json(j["graph"]);
        c.girth_lb = get_size(j["claims"], "girth_lb");
        c.chromatic_lb = get_size(j["claims"], "chromatic_lb");
        c.evidence = evidence_from_json(j["evidence"], c.graph);
        const auto& prov = j["provenance"];
        if (!prov.is_object()) throw ParseError("\"provenance\" must be an object");
        if (prov.contains("seed")) {
            if (!prov["seed"].is_number_unsigned()) throw ParseError("\"seed\" must be a nonnegative integer");
            c.seed = prov["seed"].get<std::uint64_t>();
        }
        if (prov.contains("params")) c.params = params_from_json(prov["params"]);
        c.version = prov.value("tool_version", std::string());
        return c;
    } catch (const json::exception& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    } catch (const GraphError& e) {
        throw ParseError(std::string("certificate: ") + e.what());
    }
}

std::size_t verify_evidence(const Graph& g, const ChromaticEvidence& e, SearchBudget budget,
                            VerificationReport& report) {
    return std::visit(
        overloaded{
            [&](const ExactEvidence& x) -> std::size_t {
                if (x.coloring.size() != g.order()) {
                    report.fail("exact evidence: colouring does not cover the graph");
                    return 0;
                }
                if (auto bad = monochromatic_edge(g, x.coloring)) {
                    report.fail("exact evidence: edge {" + std::to_string(bad->first) + "," +
                                std::to_string(bad->second) + "} is monochromatic");
                    return 0;
                }
                if (x.coloring.palette().size() != x.chromatic_number) {
                    report.fail("exact evidence: colouring uses " + std::to_string(x.coloring.palette().size()) +
                                " colours, claimed " + std::to_string(x.chromatic_number));
                    return 0;
                }
                if (x.chromatic_number == 0) return 0;
                auto refute = k_coloring(g, x.chromatic_number - 1, budget);
                if (refute.outcome == Colorability::colorable) {
                    report.fail("exact evidence: found a colouring with " + std::to_string(x.chromatic_number - 1) +
                                " colours");
                    return 0;
                }
                if (refute.outcome == Colorability::undecided) {
                    report.undecided = true;
                    report.fail("exact evidence: refutation of " + std::to_string(x.chromatic_number - 1) +
                                " colours undecided at budget");
                    return 0;
                }
                return x.chromatic_number;
            },
            [&](const IndependenceEvidence& x) -> std::size_t {
                const auto& s = x.independent_set;
                for (std::size_t i = 0; i < s.size(); ++i) {
                    if (s[i] >= g.order()) {
                        report.fail("independence evidence: vertex " + std::to_string(s[i]) + " out of range");
                        return 0;
                    }
                    for (std::size_t j = i + 1; j < s.size(); ++j)
                        if (s[i] == s[j] || g.adjacent(s[i], s[j])) {
                            report.fail("independence evidence: witness contains edge {" + std::to_string(s[i]) +
                                        "," + std::to_string(s[j]) + "}");
                            return 0;
                        }
                }
                if (s.size() != x.alpha || x.vertex_count != g.order() || x.alpha == 0) {
                    report.fail("independence evidence: witness size or vertex count mismatch");
                    return 0;
                }
                if (x.bound != ceil_div(g.order(), x.alpha)) {
                    report.fail("independence evidence: bound " + std::to_string(x.bound) + " != ceil(" +
                                std::to_string(g.order()) + "/" + std::to_string(x.alpha) + ")");
                    return 0;
                }
                auto alpha = independence_number(g, budget);
                if (!alpha.exact()) {
                    report.undecided = true;
                    report.fail("independence evidence: maximality re-search undecided at budget");
                    return 0;
                }
                if (alpha.lower != x.alpha) {
                    report.fail("independence evidence: alpha is " + std::to_string(alpha.lower) + ", not " +
                                std::to_string(x.alpha));
                    return 0;
                }
                return x.bound;
            },
            [&](const BoundsEvidence& x) -> std::size_t {
                if (!is_clique(g, x.clique) || x.clique.size() != x.lower) {
                    report.fail("bounds evidence: lower bound witness is not a clique of size " +
                                std::to_string(x.lower));
                    return 0;
                }
                if (x.coloring.size() != g.order() || !is_valid_coloring(g, x.coloring) ||
                    x.coloring.palette().size() != x.upper) {
                    report.fail("bounds evidence: upper bound colouring is invalid");
                    return 0;
                }
                return x.lower;
            }},
        e);
}

VerificationReport verify_certificate(const GirthChromaticCertificate& c, SearchBudget budget) {
    VerificationReport report;
    if (c.girth_lb > 3) {
        auto cycle = shortest_cycle(c.graph, c.girth_lb - 1);
        if (!cycle.empty()) {
            std::string vs;
            for (Vertex v : cycle) vs += (vs.empty() ? "" : ",") + std::to_string(v);
            report.fail("girth claim " + std::to_string(c.girth_lb) + " fails: cycle of length " +
                        std::to_string(cycle.size()) + " [" + vs + "]");
        }
    }
    if (std::holds_alternative<BoundsEvidence>(c.evidence))
        report.fail("certificates need exact or independence evidence, not bounds");
    const std::size_t proven = verify_evidence(c.graph, c.evidence, budget, report);
    if (report.ok && proven < c.chromatic_lb)
        report.fail("evidence proves chi >= " + std::to_string(proven) + ", claim is " + std::to_string(c.chromatic_lb));
    return report;
}

}  // namespace raagobs
