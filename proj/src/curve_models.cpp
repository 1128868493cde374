#include "raagobs/curve_models.hpp"

#include <algorithm>
#include <numeric>

#include "raagobs/errors.hpp"

namespace raagobs {

SurfaceType::SurfaceType(std::uint32_t genus, std::uint32_t punctures) : genus_(genus), punctures_(punctures) {
    if (euler_characteristic() >= 0)
        throw Error("surface " + name() + " has nonnegative Euler characteristic " +
                    std::to_string(euler_characteristic()));
}

std::string SurfaceType::name() const {
    return "S(" + std::to_string(genus_) + "," + std::to_string(punctures_) + ")";
}

std::uint32_t surface_rank(const SurfaceType& s) {
    const std::int64_t r = 3 * std::int64_t{s.genus()} - 3 + std::int64_t{s.punctures()};
    return r > 0 ? static_cast<std::uint32_t>(r) : 0;
}

FareyVertex::FareyVertex(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw Error("0/0 is not a slope");
    if (q < 0) {
        p = -p;
        q = -q;
    }
    if (q == 0) p = 1;
    const auto g = std::gcd(p < 0 ? -p : p, q);
    p_ = p / g;
    q_ = q / g;
}

std::string FareyVertex::name() const { return std::to_string(p_) + "/" + std::to_string(q_); }

std::int64_t determinant(const FareyVertex& a, const FareyVertex& b) {
    const auto d = a.p_ * b.q_ - b.p_ * a.q_;
    return d < 0 ? -d : d;
}

bool operator<(const FareyVertex& a, const FareyVertex& b) {
    if (a.q_ == 0 || b.q_ == 0) return b.q_ == 0 && a.q_ != 0;
    // q > 0 on both sides, so cross multiplication keeps the order
    return a.p_ * b.q_ < b.p_ * a.q_;
}

Graph farey_truncation(std::uint32_t depth) {
    if (depth < 1) throw Error("Farey truncation depth must be at least 1");
    const std::int64_t d = depth;
    std::vector<FareyVertex> slopes;
    slopes.emplace_back(1, 0);
    for (std::int64_t q = 1; q <= d; ++q)
        for (std::int64_t p = -d; p <= d; ++p)
            if (std::gcd(p < 0 ? -p : p, q) == 1) slopes.emplace_back(p, q);
    std::sort(slopes.begin(), slopes.end());

    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (Vertex i = 0; i < slopes.size(); ++i) {
        labels.push_back(slopes[i].name());
        for (Vertex j = i + 1; j < slopes.size(); ++j)
            if (determinant(slopes[i], slopes[j]) == 1) edges.emplace_back(i, j);
    }
    return build_graph(slopes.size(), edges, std::move(labels));
}

Graph disjointness_graph_small(const SurfaceType& s, std::size_t vertex_count) {
    const bool small = (s.genus() == 1 && s.punctures() == 1) || (s.genus() == 0 && s.punctures() == 4);
    if (!small)
        throw Error("no built-in disjointness model for " + s.name() +
                    "; ingest an external fragment or use the Farey model");
    return edgeless_graph(vertex_count);
}

json curve_model_to_json(const CurveModelInfo& m) {
    json j = {{"model", m.model}, {"verified", m.verified}, {"surface", nullptr}};
    if (m.surface) j["surface"] = {{"genus", m.surface->genus()}, {"punctures", m.surface->punctures()}};
    return j;
}

CurveModelInfo curve_model_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("curve model metadata must be an object");
    CurveModelInfo m;
    if (j.contains("model")) {
        if (!j["model"].is_string()) throw ParseError("metadata \"model\" must be a string");
        m.model = j["model"].get<std::string>();
        if (m.model != "disjointness" && m.model != "farey" && m.model != "external")
            throw ParseError("unknown curve model \"" + m.model + "\"");
    }
    if (j.contains("verified")) {
        if (!j["verified"].is_boolean()) throw ParseError("metadata \"verified\" must be a boolean");
        m.verified = j["verified"].get<bool>();
    }
    if (j.contains("surface") && !j["surface"].is_null()) {
        const auto& s = j["surface"];
        if (!s.is_object() || !s.contains("genus") || !s.contains("punctures") ||
            !s["genus"].is_number_unsigned() || !s["punctures"].is_number_unsigned())
            throw ParseError("metadata \"surface\" needs nonnegative \"genus\" and \"punctures\"");
        try {
            m.surface = SurfaceType(s["genus"].get<std::uint32_t>(), s["punctures"].get<std::uint32_t>());
        } catch (const Error& e) {
            throw ParseError(e.what());
        }
    }
    return m;
}

json curve_graph_to_json(const CurveGraphModel& m) {
    json j = graph_to_json(m.graph);
    j["metadata"] = curve_model_to_json(m.info);
    return j;
}

CurveGraphModel ingest_curve_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos || text[first] != '{') return {parse_edge_list(text), CurveModelInfo{}};
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("curve graph JSON: ") + e.what());
    }
    CurveGraphModel m{graph_from_json(j), CurveModelInfo{}};
    if (j.contains("metadata")) m.info = curve_model_from_json(j["metadata"]);
    return m;
}

CurveGraphModel ingest_curve_graph_file(const std::filesystem::path& path) {
    return ingest_curve_graph(read_text_file(path));
}

std::size_t chromatic_lower_bound_from_model(const Graph& g, SearchBudget budget) {
    return chromatic_number(g, budget).value();
}

}  // namespace raagobs
