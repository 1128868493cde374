#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "raagobs/certificate.hpp"
#include "raagobs/erdos.hpp"
#include "raagobs/graph_io.hpp"

using namespace raagobs;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "raagobs");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("raagobs-cli-" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string& name, const std::string& text) const {
        write_text_file(path / name, text);
        return (path / name).string();
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == cli::exit_usage);
    CHECK(run({"bogus"}).code == cli::exit_usage);
    CHECK(run({"chroma"}).code == cli::exit_usage);
    CHECK(run({"chroma", "/nonexistent/graph.txt"}).code == cli::exit_usage);
    CHECK(run({"synthesize", "--girth", "4", "--ms", "2"}).code == cli::exit_usage);
    CHECK(run({"farey", "--depth", "0"}).code == cli::exit_usage);
    TempDir dir;
    auto loop = dir.file("loop.txt", "2 1\n1 1\n");
    auto r = run({"girth", loop});
    CHECK(r.code == cli::exit_usage);
    CHECK(r.err.find("self-loop") != std::string::npos);
    CHECK(r.out.empty());
    CHECK(run({"--help"}).code == cli::exit_ok);
}

TEST_CASE("cliquegraph of K2 is a triangle") {
    TempDir dir;
    auto k2 = dir.file("k2.txt", "2 1\n0 1\n");
    auto r = run({"cliquegraph", k2});
    REQUIRE(r.code == 0);
    auto g = graph_from_json(json::parse(r.out));
    CHECK(without_labels(g) == complete_graph(3));
    CHECK(run({"cliquegraph", k2, "--dot"}).out.find("graph \"G\"") != std::string::npos);
    CHECK(run({"cliquegraph", k2, "--cap", "2"}).code == cli::exit_budget);
}

TEST_CASE("analysis commands") {
    TempDir dir;
    auto c5 = dir.file("c5.json", dump_json(graph_to_json(cycle_graph(5))));
    auto chroma = run({"chroma", c5});
    CHECK(chroma.code == 0);
    CHECK(json::parse(chroma.out)["chromatic_number"] == 3);
    CHECK(json::parse(run({"girth", c5}).out)["girth"] == 5);
    auto a = json::parse(run({"analyze", c5}).out);
    CHECK(a["independence"]["upper"] == 2);
    CHECK(a["max_clique"]["upper"] == 2);

    auto tree = dir.file("p.txt", "3 2\n0 1\n1 2\n");
    CHECK(json::parse(run({"girth", tree}).out)["girth"] == "infinity");

    auto big = dir.file("big.json", dump_json(graph_to_json(mycielskian(mycielskian(mycielskian(cycle_graph(5)))))));
    auto undecided = run({"chroma", big, "--budget", "10"});
    CHECK(undecided.code == cli::exit_budget);
    CHECK(json::parse(undecided.out)["status"] == "undecided");

    auto my = run({"mycielski", c5, "--iterations", "1"});
    CHECK(graph_from_json(json::parse(my.out)).order() == 11);

    auto farey = run({"farey", "--depth", "1"});
    CHECK(json::parse(farey.out)["n"] == 4);
    CHECK(json::parse(farey.out)["metadata"]["model"] == "farey");

    auto dj = run({"disjointness", "--genus", "1", "--punctures", "1", "--vertices", "4"});
    CHECK(dj.code == 0);
    CHECK(json::parse(dj.out)["edges"].empty());
    CHECK(run({"disjointness", "--genus", "2", "--punctures", "0", "--vertices", "4"}).code == cli::exit_usage);
}

TEST_CASE("liftcolor") {
    TempDir dir;
    auto p3 = dir.file("p3.txt", "3 2\n0 1\n1 2\n");
    auto f = dir.file("f.json", R"({"colors": {"0": 1, "1": 2, "2": 1}})");
    auto r = run({"liftcolor", p3, "--coloring", f});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["verified"] == true);
    CHECK(j["colors"]["3"] == json::array({1, 2}));
    CHECK(run({"liftcolor", p3}).code == 0);
    auto bad = dir.file("bad.json", R"({"colors": {"0": 1, "1": 1, "2": 1}})");
    CHECK(run({"liftcolor", p3, "--coloring", bad}).code == cli::exit_usage);
}

TEST_CASE("obstruct") {
    TempDir dir;
    auto c5 = dir.file("c5.txt", "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    auto r = run({"obstruct", c5, "--ms", "1", "--genus", "1", "--punctures", "1", "--model", "disjointness"});
    CHECK(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["verdict"] == "OBSTRUCTED_BY_CHROMATIC");
    CHECK(j["model_assumption"]["model"] == "disjointness");
    CHECK(r.out.find("embeds") == std::string::npos);
    CHECK(r.out.find("EMBEDS") == std::string::npos);

    auto v = dir.file("verdict.json", r.out);
    CHECK(run({"verify", v}).code == 0);

    CHECK(run({"obstruct", c5}).code == cli::exit_usage);
    CHECK(run({"obstruct", c5, "--ms", "1", "--genus", "1"}).code == cli::exit_usage);
    CHECK(run({"obstruct", c5, "--ms", "1", "--model", "nonsense"}).code == cli::exit_usage);

    auto model = dir.file("model.json", dump_json(json{{"n", 2},
                                                       {"edges", json::array()},
                                                       {"metadata", {{"model", "disjointness"},
                                                                     {"surface", {{"genus", 0}, {"punctures", 4}}},
                                                                     {"verified", true}}}}));
    auto m = json::parse(run({"obstruct", c5, "--ms", "2", "--curve-model", model}).out);
    CHECK(m["surface"]["punctures"] == 4);
    CHECK(m["verdict"] == "OBSTRUCTED_BY_RANK");
}

TEST_CASE("synthesize, verify and tamper") {
    TempDir dir;
    auto r = run({"synthesize", "--girth", "4", "--ms", "1", "--seed", "7", "--out-dir", dir / "out"});
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "out/certificate.json"));
    CHECK(fs::exists(dir / "out/gamma.json"));
    CHECK(fs::exists(dir / "out/verdict.json"));
    auto bundle = dir.file("bundle.json", r.out);
    auto ok = run({"verify", bundle});
    CHECK(ok.code == 0);
    CHECK(json::parse(ok.out)["kind"] == "bundle");
    CHECK(run({"verify", dir / "out/certificate.json"}).code == 0);
    CHECK(run({"verify", dir / "out/verdict.json"}).code == 0);

    CHECK(run({"synthesize", "--girth", "4", "--ms", "1", "--seed", "7"}).out == r.out);

    auto cert = json::parse(read_text_file(dir / "out/certificate.json"));
    cert["claims"]["girth_lb"] = 6;
    auto tampered = dir.file("tampered.json", dump_json(cert));
    auto t = run({"verify", tampered});
    CHECK(t.code == cli::exit_verification_failed);
    CHECK(t.err.find("cycle of length") != std::string::npos);

    auto cert2 = json::parse(read_text_file(dir / "out/certificate.json"));
    cert2["graph"]["edges"].erase(0);
    auto t2 = run({"verify", dir.file("tampered2.json", dump_json(cert2))});
    CHECK(t2.code == cli::exit_verification_failed);

    CHECK(run({"verify", dir.file("junk.json", "{\"x\": 1}")}).code == cli::exit_usage);
    CHECK(run({"verify", dir.file("junk2.json", "[1, 2")}).code == cli::exit_usage);
}

TEST_CASE("generate") {
    auto r = run({"generate", "--girth", "5", "--chromatic", "3", "--seed", "1"});
    REQUIRE(r.code == 0);
    auto c = certificate_from_json(json::parse(r.out));
    CHECK(verify_certificate(c).ok);

    auto fail = run({"generate", "--girth", "6", "--chromatic", "4", "--seed", "1", "--initial-vertices", "5",
                     "--resamples", "1"});
    CHECK(fail.code == cli::exit_budget);
    CHECK(json::parse(fail.out)["status"] == "failed");
    CHECK(run({"generate", "--girth", "2", "--chromatic", "3", "--seed", "1"}).code == cli::exit_usage);
}

TEST_CASE("reduce-embedding") {
    TempDir dir;
    dir.file("x.json", R"({"n": 2, "edges": [[0, 1]], "labels": ["x1", "x2"]})");
    auto psi = dir.file("psi.json", R"({
        "source": {"n": 2, "edges": [[0, 1]], "labels": ["v", "w"]},
        "target": "x.json",
        "images": {"v": "x1 x2", "w": "x1 x2^2"}})");
    auto r = run({"reduce-embedding", psi});
    REQUIRE(r.code == 0);
    auto j = json::parse(r.out);
    CHECK(j["status"] == "ok");
    CHECK(j["steps"].size() == 1);
    CHECK(j["images"]["v"] == "x2^-1");
    CHECK(j["delta"]["v"] == json::array({"x2"}));

    auto negative = dir.file("free.json", R"({
        "source": {"n": 2, "edges": []},
        "target": "x.json",
        "images": {"0": "x1", "1": "x2"}})");
    auto n = run({"reduce-embedding", negative});
    CHECK(n.code == cli::exit_verification_failed);
    CHECK(json::parse(n.out)["status"] == "not_embedding");
    CHECK(n.err.find("not an embedding") != std::string::npos);

    auto degenerate = dir.file("deg.json", R"({
        "source": {"n": 3, "edges": []},
        "target": "x.json",
        "images": {"0": "x1 x2", "1": "x1 x2^2", "2": "x2"}})");
    auto d = run({"reduce-embedding", degenerate});
    CHECK(d.code == cli::exit_verification_failed);
    CHECK(json::parse(d.out)["status"] == "degenerate");

    auto missing = dir.file("missing.json", R"({"source": {"n": 1, "edges": []}, "target": "x.json", "images": {}})");
    CHECK(run({"reduce-embedding", missing}).code == cli::exit_usage);
}
