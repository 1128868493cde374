#include "raagobs/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "raagobs/errors.hpp"

namespace raagobs {

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, out)) {
            auto hash = out.find('#');
            if (hash != std::string::npos) out.erase(hash);
            if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };

    if (!next_line(line)) throw ParseError("edge list: missing header line \"n m\"");
    std::istringstream header(line);
    long long n = -1, m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: malformed header \"" + line + "\"");

    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line(line))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i));
        std::istringstream row(line);
        long long u = -1, v = -1;
        if (!(row >> u >> v) || u < 0 || v < 0) throw ParseError("edge list: malformed edge \"" + line + "\"");
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    if (next_line(line)) throw ParseError("edge list: trailing content \"" + line + "\"");
    return build_graph(static_cast<std::size_t>(n), edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    json j = {{"n", g.order()}, {"edges", std::move(edges)}};
    if (g.has_labels()) j["labels"] = g.labels();
    return j;
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("graph JSON needs \"n\" and \"edges\"");
    if (!j["n"].is_number_integer() || j["n"].get<long long>() < 0)
        throw ParseError("graph JSON: \"n\" must be a nonnegative integer");
    const auto n = j["n"].get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            e[0].get<long long>() < 0 || e[1].get<long long>() < 0)
            throw ParseError("graph JSON: malformed edge " + e.dump());
        edges.emplace_back(e[0].get<Vertex>(), e[1].get<Vertex>());
    }
    std::vector<std::string> labels;
    if (j.contains("labels") && !j["labels"].is_null()) {
        if (!j["labels"].is_array()) throw ParseError("graph JSON: \"labels\" must be an array of strings");
        for (const auto& l : j["labels"]) {
            if (!l.is_string()) throw ParseError("graph JSON: label " + l.dump() + " is not a string");
            labels.push_back(l.get<std::string>());
        }
    }
    return build_graph(n, edges, std::move(labels));
}

namespace {

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const Graph& g, std::string_view name) {
    std::string out = "graph " + dot_quote(name) + " {\n";
    for (Vertex v = 0; v < g.order(); ++v) {
        out += "  " + std::to_string(v);
        if (g.has_labels()) out += " [label=" + dot_quote(g.labels()[v]) + "]";
        out += ";\n";
    }
    for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    return out + "}\n";
}

Graph parse_graph(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            throw ParseError(std::string("graph JSON: ") + e.what());
        }
        return graph_from_json(j);
    }
    return parse_edge_list(text);
}

Graph read_graph_file(const std::filesystem::path& path) { return parse_graph(read_text_file(path)); }

json token_to_json(const ColorToken& t) {
    if (auto* i = std::get_if<std::int64_t>(&t)) return *i;
    return std::get<std::vector<std::int64_t>>(t);
}

ColorToken token_from_json(const json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_array()) {
        std::vector<std::int64_t> s;
        for (const auto& x : j) {
            if (!x.is_number_integer()) throw ParseError("colour token element " + x.dump() + " is not an integer");
            s.push_back(x.get<std::int64_t>());
        }
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        return s;
    }
    throw ParseError("colour token " + j.dump() + " is neither an integer nor an integer array");
}

json coloring_to_json(const Coloring& f) {
    json colors = json::object();
    for (std::size_t v = 0; v < f.size(); ++v) colors[std::to_string(v)] = token_to_json(f.tokens[v]);
    return {{"colors", std::move(colors)}};
}

Coloring coloring_from_json(const json& j, const Graph& g) {
    if (!j.is_object() || !j.contains("colors") || !j["colors"].is_object())
        throw ParseError("colouring JSON needs a \"colors\" object");
    std::vector<std::optional<ColorToken>> slots(g.order());
    const Graph by_id = g.has_labels() ? without_labels(g) : g;
    for (const auto& [key, value] : j["colors"].items()) {
        auto v = g.find_label(key);
        if (!v) v = by_id.find_label(key);
        if (!v) throw ParseError("colouring JSON: unknown vertex \"" + key + "\"");
        slots[*v] = token_from_json(value);
    }
    Coloring f;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (!slots[v]) throw ParseError("partial assignment: vertex " + g.label(v) + " has no colour");
        f.tokens.push_back(std::move(*slots[v]));
    }
    return f;
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path.string());
    out << text;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

}  // namespace raagobs
