#include "commands.hpp"

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "raagobs/certificate.hpp"
#include "raagobs/clique_color.hpp"
#include "raagobs/curve_models.hpp"
#include "raagobs/cycles.hpp"
#include "raagobs/embed_reduce.hpp"
#include "raagobs/erdos.hpp"
#include "raagobs/errors.hpp"
#include "raagobs/graph_io.hpp"
#include "raagobs/obstruct.hpp"
#include "raagobs/raag.hpp"
#include "raagobs/search.hpp"

namespace raagobs::cli {

namespace fs = std::filesystem;

namespace {

/// Failure carrying its exit code; the message is printed as one line.
struct CommandFailure {
    int code;
    std::string message;
};

struct Output {
    std::string path;
    bool dot = false;
};

struct Context {
    std::ostream& out;
    std::ostream& err;
};

void emit(Context& ctx, const Output& o, const std::string& text) {
    if (o.path.empty())
        ctx.out << text;
    else
        write_text_file(o.path, text);
}

void emit_graph(Context& ctx, const Output& o, const Graph& g, const json& extra = nullptr) {
    if (o.dot) {
        emit(ctx, o, to_dot(g));
        return;
    }
    json j = graph_to_json(g);
    if (!extra.is_null()) j["metadata"] = extra;
    emit(ctx, o, dump_json(j));
}

json girth_json(const Girth& gi) { return gi ? json(*gi) : json("infinity"); }

std::optional<SurfaceType> surface_from(const std::optional<std::uint32_t>& genus,
                                        const std::optional<std::uint32_t>& punctures) {
    if (!genus && !punctures) return std::nullopt;
    if (!genus || !punctures) throw CommandFailure{exit_usage, "--genus and --punctures must be given together"};
    try {
        return SurfaceType(*genus, *punctures);
    } catch (const Error& e) {
        throw CommandFailure{exit_usage, e.what()};
    }
}

json chromatic_json(const Graph& g, const ChromaticResult& r) {
    json j = {{"status", r.exact() ? "exact" : "undecided"},
              {"lower", r.lower},
              {"upper", r.upper},
              {"search_nodes", r.nodes},
              {"coloring", coloring_to_json(r.witness)}};
    if (r.exact()) j["chromatic_number"] = r.upper;
    (void)g;
    return j;
}

// Graph references inside a psi file are inline objects or paths relative
// to the file.
std::shared_ptr<const Graph> graph_ref(const json& j, const fs::path& base) {
    if (j.is_string()) return std::make_shared<const Graph>(read_graph_file(base / j.get<std::string>()));
    return std::make_shared<const Graph>(graph_from_json(j));
}

CliqueSupportMap read_psi(const fs::path& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("psi file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("source") || !j.contains("target") || !j.contains("images") ||
        !j["images"].is_object())
        throw ParseError("psi file needs \"source\", \"target\" and an \"images\" object");
    const auto base = path.parent_path();
    CliqueSupportMap psi;
    psi.source = graph_ref(j["source"], base);
    psi.target = graph_ref(j["target"], base);
    std::vector<std::optional<RaagWord>> images(psi.source->order());
    for (const auto& [key, value] : j["images"].items()) {
        auto v = psi.source->find_label(key);
        if (!v) throw ParseError("psi file: unknown source vertex \"" + key + "\"");
        if (!value.is_string()) throw ParseError("psi file: image of \"" + key + "\" must be a word string");
        images[*v] = parse_word(psi.target, value.get<std::string>());
    }
    for (Vertex v = 0; v < images.size(); ++v) {
        if (!images[v]) throw ParseError("psi file: no image for source vertex " + psi.source->label(v));
        psi.images.push_back(std::move(*images[v]));
    }
    return psi;
}

json images_json(const CliqueSupportMap& psi) {
    json j = json::object();
    for (Vertex v = 0; v < psi.images.size(); ++v) j[psi.source->label(v)] = to_string(psi.images[v]);
    return j;
}

std::string reduction_status(ReductionFailure f) {
    switch (f) {
        case ReductionFailure::unequal_supports: return "unequal_supports";
        case ReductionFailure::link_condition: return "link_condition";
        case ReductionFailure::degenerate: return "degenerate";
        case ReductionFailure::same_vertex: return "same_vertex";
    }
    return "error";
}

int report_verification(Context& ctx, const Output& o, json report, const VerificationReport& r) {
    report["verified"] = r.ok;
    report["undecided"] = r.undecided;
    report["findings"] = r.findings;
    emit(ctx, o, dump_json(report));
    if (r.ok) return exit_ok;
    ctx.err << "verification failed: " << r.findings.front() << "\n";
    return r.undecided ? exit_budget : exit_verification_failed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Context ctx{out, err};
    CLI::App app{"Exact combinatorics for right-angled Artin group embedding obstructions", "raagobs"};
    app.require_subcommand(1);

    Output output;
    std::uint64_t budget_nodes = SearchBudget{}.max_nodes;
    std::size_t cap = default_clique_cap;
    std::function<int()> action;

    auto add_output = [&](CLI::App* sub, bool dot) {
        sub->add_option("-o,--output", output.path, "Write to this file instead of stdout");
        if (dot) sub->add_flag("--dot", output.dot, "Emit DOT instead of JSON");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", budget_nodes, "Node limit for exact searches")->check(CLI::PositiveNumber);
    };
    auto budget = [&] { return SearchBudget{budget_nodes}; };

    // analyze
    std::string graph_path;
    {
        auto* sub = app.add_subcommand("analyze", "Girth, clique number, chromatic and independence numbers");
        sub->add_option("graph", graph_path, "Graph file (edge list or JSON)")->required()->check(CLI::ExistingFile);
        add_output(sub, false);
        add_budget(sub);
        sub->callback([&] {
            action = [&] {
                const Graph g = read_graph_file(graph_path);
                const auto chi = chromatic_number(g, budget());
                const auto alpha = independence_number(g, budget());
                const auto omega = maximum_clique(g, budget());
                json j = {{"n", g.order()},
                          {"m", g.size()},
                          {"girth", girth_json(girth(g))},
                          {"max_clique", {{"status", omega.exact() ? "exact" : "undecided"},
                                          {"lower", omega.lower},
                                          {"upper", omega.upper},
                                          {"witness", omega.witness}}},
                          {"chromatic", chromatic_json(g, chi)},
                          {"independence", {{"status", alpha.exact() ? "exact" : "undecided"},
                                            {"lower", alpha.lower},
                                            {"upper", alpha.upper},
                                            {"witness", alpha.witness}}}};
                emit(ctx, output, dump_json(j));
                return chi.exact() && alpha.exact() && omega.exact() ? exit_ok : exit_budget;
            };
        });
    }

    // cliquegraph
    {
        auto* sub = app.add_subcommand("cliquegraph", "Clique graph of a graph");
        sub->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--cap", cap, "Maximum number of cliques")->check(CLI::PositiveNumber);
        add_output(sub, true);
        sub->callback([&] {
            action = [&] {
                const Graph g = read_graph_file(graph_path);
                emit_graph(ctx, output, clique_graph(g, cap).graph);
                return exit_ok;
            };
        });
    }

    // liftcolor
    std::string coloring_path;
    {
        auto* sub = app.add_subcommand("liftcolor", "Lift a colouring to the clique graph by clique images");
        sub->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--coloring", coloring_path, "Colouring JSON (default: an optimal colouring)")
            ->check(CLI::ExistingFile);
        sub->add_option("--cap", cap, "Maximum number of cliques")->check(CLI::PositiveNumber);
        add_output(sub, false);
        add_budget(sub);
        sub->callback([&] {
            action = [&] {
                const Graph g = read_graph_file(graph_path);
                Coloring f;
                if (coloring_path.empty()) {
                    auto chi = chromatic_number(g, budget());
                    f = chi.witness;
                } else {
                    try {
                        f = coloring_from_json(json::parse(read_text_file(coloring_path)), g);
                    } catch (const json::parse_error& e) {
                        throw ParseError(std::string("colouring JSON: ") + e.what());
                    }
                }
                const auto gk = clique_graph(g, cap);
                const auto lifted = lift_coloring(g, gk, f);
                const auto check = verify_lift(g, gk, f, lifted);
                const auto palette = f.palette().size();
                json j = coloring_to_json(lifted);
                j["clique_graph"] = graph_to_json(gk.graph);
                j["base_palette_size"] = palette;
                j["lifted_palette_size"] = lifted.palette().size();
                j["upper_bound"] = palette <= max_bound_exponent ? json(clique_chromatic_upper_bound(
                                                                       static_cast<std::uint32_t>(palette)))
                                                                 : json(nullptr);
                j["verified"] = check.ok;
                if (!check.ok) j["diagnostic"] = check.diagnostic;
                emit(ctx, output, dump_json(j));
                return check.ok ? exit_ok : exit_verification_failed;
            };
        });
    }

    // girth
    {
        auto* sub = app.add_subcommand("girth", "Girth and a shortest cycle");
        sub->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
        add_output(sub, false);
        sub->callback([&] {
            action = [&] {
                const Graph g = read_graph_file(graph_path);
                const auto cycle = shortest_cycle(g);
                json j = {{"girth", cycle.empty() ? json("infinity") : json(cycle.size())}, {"cycle", cycle}};
                emit(ctx, output, dump_json(j));
                return exit_ok;
            };
        });
    }

    // chroma
    {
        auto* sub = app.add_subcommand("chroma", "Exact chromatic number with an optimal colouring");
        sub->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
        add_output(sub, false);
        add_budget(sub);
        sub->callback([&] {
            action = [&] {
                const Graph g = read_graph_file(graph_path);
                const auto chi = chromatic_number(g, budget());
                emit(ctx, output, dump_json(chromatic_json(g, chi)));
                if (!chi.exact()) ctx.err << "chromatic number undecided at budget\n";
                return chi.exact() ? exit_ok : exit_budget;
            };
        });
    }

    // farey
    std::uint32_t depth = 1;
    {
        auto* sub = app.add_subcommand("farey", "Finite Farey graph truncation");
        sub->add_option("--depth", depth, "Largest |p| and q")->required()->check(CLI::PositiveNumber);
        add_output(sub, true);
        sub->callback([&] {
            action = [&] {
                CurveModelInfo info;
                info.model = "farey";
                info.verified = true;
                emit_graph(ctx, output, farey_truncation(depth), curve_model_to_json(info));
                return exit_ok;
            };
        });
    }

    // disjointness
    std::optional<std::uint32_t> genus, punctures;
    std::size_t vertex_count = 0;
    {
        auto* sub = app.add_subcommand("disjointness", "Disjointness curve graph model for S(1,1) and S(0,4)");
        sub->add_option("--genus", genus)->required();
        sub->add_option("--punctures", punctures)->required();
        sub->add_option("--vertices", vertex_count, "Number of curves")->required();
        add_output(sub, true);
        sub->callback([&] {
            action = [&] {
                auto s = surface_from(genus, punctures);
                Graph g;
                try {
                    g = disjointness_graph_small(*s, vertex_count);
                } catch (const Error& e) {
                    throw CommandFailure{exit_usage, e.what()};
                }
                CurveModelInfo info{s, "disjointness", true};
                emit_graph(ctx, output, g, curve_model_to_json(info));
                return exit_ok;
            };
        });
    }

    // mycielski
    std::size_t iterations = 1;
    {
        auto* sub = app.add_subcommand("mycielski", "Iterated Mycielskian");
        sub->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
        sub->add_option("--iterations", iterations, "Number of applications")->check(CLI::NonNegativeNumber);
        add_output(sub, true);
        sub->callback([&] {
            action = [&] {
                Graph g = read_graph_file(graph_path);
                for (std::size_t i = 0; i < iterations; ++i) g = mycielskian(g);
                emit_graph(ctx, output, g);
                return exit_ok;
            };
        });
    }

    // generate
    std::size_t girth_target = 0, chromatic_target = 0;
    std::optional<std::uint64_t> seed;
    HighGirthConfig config;
    auto add_generator_options = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "Random seed")->required();
        sub->add_option("--edge-factor", config.edge_factor, "c in p = c n^(1/M - 1)")->check(CLI::PositiveNumber);
        sub->add_option("--initial-vertices", config.initial_vertices)->check(CLI::PositiveNumber);
        sub->add_option("--resamples", config.max_resamples)->check(CLI::PositiveNumber);
        sub->add_option("--exact-threshold", config.exact_threshold);
        sub->add_option("--budget", config.budget.max_nodes, "Node limit per exact search")
            ->check(CLI::PositiveNumber);
    };
    auto generation_failure = [&](const GenerationFailure& e) {
        json j = {{"status", "failed"},
                  {"reason", e.what()},
                  {"best_girth", e.best_girth() ? json(*e.best_girth()) : json(nullptr)},
                  {"best_chromatic_lb", e.best_chromatic_lb()}};
        emit(ctx, output, dump_json(j));
        ctx.err << e.what() << "\n";
        return exit_budget;
    };
    {
        auto* sub = app.add_subcommand("generate", "Certified graph of girth >= M and chromatic number >= N");
        sub->add_option("--girth", girth_target, "M")->required();
        sub->add_option("--chromatic", chromatic_target, "N")->required();
        add_generator_options(sub);
        add_output(sub, false);
        sub->callback([&] {
            action = [&] {
                if (girth_target < 3 || chromatic_target < 2)
                    throw CommandFailure{exit_usage, "need --girth >= 3 and --chromatic >= 2"};
                try {
                    auto c = generate_high_girth(girth_target, chromatic_target, *seed, config);
                    emit(ctx, output, dump_json(certificate_to_json(c)));
                    return exit_ok;
                } catch (const GenerationFailure& e) {
                    return generation_failure(e);
                }
            };
        });
    }

    // obstruct
    std::uint32_t colors_ms = 0;
    std::string model_name = "external", curve_model_path;
    {
        auto* sub = app.add_subcommand("obstruct", "Chromatic and rank obstructions for A(Gamma) -> Mod(S)");
        sub->add_option("graph", graph_path, "Gamma (edge list or JSON)")->required()->check(CLI::ExistingFile);
        sub->add_option("--ms", colors_ms, "Asserted colour count M_S of the curve graph")
            ->required()
            ->check(CLI::PositiveNumber);
        sub->add_option("--genus", genus);
        sub->add_option("--punctures", punctures);
        sub->add_option("--model", model_name, "Curve graph convention")
            ->check(CLI::IsMember({"disjointness", "farey", "external"}));
        sub->add_option("--curve-model", curve_model_path, "Curve graph fragment whose metadata is recorded")
            ->check(CLI::ExistingFile);
        add_output(sub, false);
        add_budget(sub);
        sub->callback([&] {
            action = [&] {
                const Graph g = read_graph_file(graph_path);
                CurveModelInfo info;
                if (!curve_model_path.empty()) info = ingest_curve_graph_file(curve_model_path).info;
                else info.model = model_name;
                auto s = surface_from(genus, punctures);
                if (!s) s = info.surface;
                info.surface = s;
                auto v = obstruct(g, colors_ms, s, info, budget());
                emit(ctx, output, dump_json(verdict_to_json(v)));
                return v.verdict == Verdict::undecided ? exit_budget : exit_ok;
            };
        });
    }

    // synthesize
    std::string out_dir;
    {
        auto* sub = app.add_subcommand("synthesize", "Girth >= M graph whose chromatic number exceeds 2^M_S");
        sub->add_option("--girth", girth_target, "M")->required();
        sub->add_option("--ms", colors_ms, "M_S")->required()->check(CLI::Range(1u, 30u));
        sub->add_option("--genus", genus);
        sub->add_option("--punctures", punctures);
        sub->add_option("--model", model_name)->check(CLI::IsMember({"disjointness", "farey", "external"}));
        sub->add_option("--out-dir", out_dir, "Also write gamma.json, certificate.json and verdict.json here");
        add_generator_options(sub);
        add_output(sub, false);
        sub->callback([&] {
            action = [&] {
                if (girth_target < 3) throw CommandFailure{exit_usage, "need --girth >= 3"};
                auto s = surface_from(genus, punctures);
                CurveModelInfo info{s, model_name, false};
                try {
                    auto result = synthesize(girth_target, colors_ms, *seed, s, info, config);
                    if (!out_dir.empty()) {
                        fs::create_directories(out_dir);
                        write_text_file(fs::path(out_dir) / "gamma.json", dump_json(graph_to_json(result.certificate.graph)));
                        write_text_file(fs::path(out_dir) / "certificate.json",
                                        dump_json(certificate_to_json(result.certificate)));
                        write_text_file(fs::path(out_dir) / "verdict.json", dump_json(verdict_to_json(result.verdict)));
                    }
                    emit(ctx, output, dump_json(synthesis_to_json(result)));
                    return exit_ok;
                } catch (const GenerationFailure& e) {
                    return generation_failure(e);
                }
            };
        });
    }

    // reduce-embedding
    std::string psi_path;
    {
        auto* sub = app.add_subcommand("reduce-embedding",
                                       "Minimise the supports of a clique-support map and extract delta");
        sub->add_option("psi", psi_path, "psi JSON file")->required()->check(CLI::ExistingFile);
        sub->add_option("--cap", cap, "Maximum number of target cliques")->check(CLI::PositiveNumber);
        add_output(sub, false);
        sub->callback([&] {
            action = [&] {
                const auto psi = read_psi(psi_path);
                json report = {{"source", graph_to_json(*psi.source)},
                               {"target", graph_to_json(*psi.target)},
                               {"input_images", images_json(psi)}};
                const auto check = check_clique_support_hom(psi);
                report["initial_check"] = {{"ok", check.ok}, {"diagnostic", check.diagnostic}};
                if (!check.ok) {
                    report["status"] = "not_homomorphism";
                    emit(ctx, output, dump_json(report));
                    ctx.err << "input is not a clique-support homomorphism: " << check.diagnostic << "\n";
                    return exit_verification_failed;
                }
                json steps = json::array();
                auto record = [&](const ReductionStep& s) {
                    steps.push_back({{"reduced", psi.source->label(s.reduced)},
                                     {"partner", psi.source->label(s.partner)},
                                     {"before", to_string(s.before)},
                                     {"after", to_string(s.after)}});
                };
                std::optional<Minimization> minimized;
                try {
                    minimized = minimize_supports(psi, record);
                } catch (const ReductionError& e) {
                    report["steps"] = steps;
                    report["status"] = reduction_status(e.kind());
                    report["failure"] = {{"pair", {psi.source->label(e.first()), psi.source->label(e.second())}},
                                         {"message", e.what()}};
                    emit(ctx, output, dump_json(report));
                    ctx.err << e.what() << "\n";
                    return exit_verification_failed;
                }
                report["steps"] = steps;
                report["images"] = images_json(minimized->result);
                report["support_mass"] = {{"before", psi.support_mass()},
                                          {"after", minimized->result.support_mass()}};
                const auto delta = extract_delta(minimized->result, cap);
                json dj = json::object();
                for (Vertex v = 0; v < delta.delta.size(); ++v) {
                    json members = json::array();
                    for (Vertex x : delta.delta[v]) members.push_back(psi.target->label(x));
                    dj[psi.source->label(v)] = members;
                }
                report["delta"] = dj;
                report["injective"] = delta.injective;
                report["induced"] = delta.induced;
                report["violations"] = delta.violations;
                report["status"] = delta.ok() ? "ok" : "not_embedding";
                emit(ctx, output, dump_json(report));
                if (!delta.ok()) {
                    ctx.err << delta.violations.front() << "\n";
                    return exit_verification_failed;
                }
                return exit_ok;
            };
        });
    }

    // verify
    std::string verify_path;
    {
        auto* sub = app.add_subcommand("verify", "Check a certificate, verdict, or synthesis bundle");
        sub->add_option("file", verify_path, "JSON file")->required()->check(CLI::ExistingFile);
        add_output(sub, false);
        add_budget(sub);
        sub->callback([&] {
            action = [&] {
                json j;
                try {
                    j = json::parse(read_text_file(verify_path));
                } catch (const json::parse_error& e) {
                    throw ParseError(std::string("verify: ") + e.what());
                }
                if (!j.is_object()) throw ParseError("verify: expected a JSON object");
                VerificationReport total;
                auto merge = [&](const VerificationReport& r, const std::string& prefix) {
                    total.undecided = total.undecided || r.undecided;
                    for (const auto& f : r.findings) total.fail(prefix + f);
                };
                std::string kind;
                if (j.contains("certificate") && j.contains("verdict")) {
                    kind = "bundle";
                    const auto c = certificate_from_json(j["certificate"]);
                    const auto v = verdict_from_json(j["verdict"]);
                    merge(verify_certificate(c, budget()), "certificate: ");
                    merge(verify_verdict(v, budget()), "verdict: ");
                    if (!(c.graph == v.gamma)) total.fail("bundle: verdict graph differs from the certificate graph");
                    if (c.chromatic_lb <= v.clique_graph_bound)
                        total.fail("bundle: certified chi >= " + std::to_string(c.chromatic_lb) +
                                   " does not exceed N_S = " + std::to_string(v.clique_graph_bound));
                } else if (j.contains("claims")) {
                    kind = "certificate";
                    merge(verify_certificate(certificate_from_json(j), budget()), "");
                } else if (j.contains("verdict")) {
                    kind = "verdict";
                    merge(verify_verdict(verdict_from_json(j), budget()), "");
                } else {
                    throw ParseError("verify: not a certificate, verdict or bundle");
                }
                return report_verification(ctx, output, json{{"kind", kind}}, total);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    }

    try {
        return action();
    } catch (const CommandFailure& f) {
        err << f.message << "\n";
        return f.code;
    } catch (const BudgetExhausted& e) {
        err << e.what() << "\n";
        return exit_budget;
    } catch (const CliqueOverflow& e) {
        err << e.what() << "\n";
        return exit_budget;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_usage;
    }
}

}  // namespace raagobs::cli
