/*
 * Copyright 2026 The Rendezvous Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "rendezvous/tools/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rendezvous/engine.hpp"
#include "rendezvous/gadget_check.hpp"
#include "rendezvous/instance_io.hpp"
#include "rendezvous/kernel.hpp"
#include "rendezvous/policies.hpp"
#include "rendezvous/reductions.hpp"
#include "rendezvous/special.hpp"
#include "rendezvous/tools/game_service.hpp"

namespace rendezvous::tools {

using json = nlohmann::json;

namespace {

/** A failure that maps onto exit code 2 with a JSON error object. */
struct ComputationError {
    json detail;
};

json
count_json(const ExtendedCount& c)
{
    if (c.is_infinite()) return "infinite";
    return c.value();
}

std::string
read_text(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ComputationError{{{"error", "FileNotFound"}, {"path", path}}};
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void
write_text(const std::string& path, const std::string& text)
{
    std::ofstream out(path);
    if (!out) throw ComputationError{{{"error", "CannotWrite"}, {"path", path}}};
    out << text;
}

// inline JSON when it starts with '{', otherwise a file path
std::string
json_argument(const std::string& arg)
{
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') return arg;
    return read_text(arg);
}

Instance
load(const std::string& path)
{
    return load_instance(path);
}

void
emit(std::ostream& out, bool as_json, const json& doc)
{
    if (as_json) {
        out << doc.dump() << "\n";
        return;
    }
    for (const auto& [key, value] : doc.items()) {
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
}

std::pair<int, int>
parse_coord(const std::string& text)
{
    int r = 0, c = 0;
    char comma = 0;
    std::istringstream in(text);
    if (!(in >> r >> comma >> c) || comma != ',') throw CLI::ValidationError("coordinate", "expected row,col");
    return {r, c};
}

} // namespace

int
run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Rendezvous game with adversaries: exact solver, separation numbers, kernels and reductions", "rvtool"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::uint64_t budget = kDefaultBudget;
    app.add_flag("--json", as_json, "Print JSON on stdout");
    app.add_option("--budget", budget, "Maximum position-sides for the exact engine");

    std::function<json()> action;
    std::string file, second;

    auto* solve_cmd = app.add_subcommand("solve", "Decide the winner with the exact engine");
    solve_cmd->add_option("instance", file, "Instance file (.rv or .json)")->required();
    solve_cmd->callback([&] {
        action = [&] {
            SolveReport r = solve(load(file), SolveOptions{budget});
            json doc{{"winner", side_name(r.winner())}};
            doc["min_rounds"] = r.min_rounds() ? json(*r.min_rounds()) : json(nullptr);
            doc["pairs"] = r.stats().pairs;
            doc["position_sides"] = r.stats().position_sides;
            doc["iterations"] = r.stats().iterations;
            doc["seconds"] = r.stats().seconds;
            return doc;
        };
    });

    bool verify_upper = false;
    auto* dsep_cmd = app.add_subcommand("dsep", "Dynamic separation number d and lambda");
    dsep_cmd->add_option("instance", file, "Instance file")->required();
    dsep_cmd->add_flag("--verify-upper", verify_upper, "Also solve k = lambda instead of trusting the static cut");
    dsep_cmd->callback([&] {
        action = [&] {
            Instance inst = load(file);
            json doc;
            std::optional<SpecialResult> fast = verify_upper ? std::nullopt : solve_special(inst);
            if (fast) {
                doc["d"] = count_json(fast->d);
                doc["lambda"] = count_json(fast->lambda);
                doc["method"] = fast_path_name(fast->path);
            } else {
                SeparationStats stats;
                ExtendedCount d = dynamic_separation(inst.graph, inst.s, inst.t, SeparationOptions{budget, verify_upper},
                                                     &stats);
                doc["d"] = count_json(d);
                doc["lambda"] = count_json(stats.lambda);
                doc["method"] = "exact";
                doc["solves"] = stats.solves;
            }
            return doc;
        };
    });

    auto* lambda_cmd = app.add_subcommand("lambda", "Static separation number and a minimum vertex cut");
    lambda_cmd->add_option("instance", file, "Instance file")->required();
    lambda_cmd->callback([&] {
        action = [&] {
            Instance inst = load(file);
            ExtendedCount lambda = static_separation(inst.graph, inst.s, inst.t);
            json doc{{"lambda", count_json(lambda)}};
            if (!lambda.is_infinite()) doc["cut"] = min_vertex_cut(inst.graph, inst.s, inst.t);
            return doc;
        };
    });

    unsigned tau = 1;
    auto* timed_cmd = app.add_subcommand("solve-in-time", "Can Facilitator meet within tau of her moves");
    timed_cmd->add_option("instance", file, "Instance file")->required();
    timed_cmd->add_option("--tau", tau, "Number of Facilitator moves")->required()->check(CLI::PositiveNumber);
    timed_cmd->callback([&] {
        action = [&] {
            TimedResult r = solve_in_time(load(file), tau, SolveOptions{budget});
            json doc{{"facilitator_wins", r.facilitator_wins}, {"tau", tau}};
            doc["min_rounds"] = r.min_rounds ? json(*r.min_rounds) : json(nullptr);
            return doc;
        };
    });

    std::string output;
    unsigned cover_budget = kDefaultCoverBudget;
    auto* kernel_cmd = app.add_subcommand("kernelize", "Apply the twin-class reduction rules");
    kernel_cmd->add_option("instance", file, "Instance file")->required();
    kernel_cmd->add_option("-o,--output", output, "Write the reduced instance here");
    kernel_cmd->add_option("--cover-budget", cover_budget, "Largest exact vertex cover to search for");
    kernel_cmd->callback([&] {
        action = [&] {
            Instance inst = load(file);
            KernelReport r = kernelize(inst, cover_budget);
            json doc{{"trivial_yes", r.trivial_yes}};
            doc["cover"] = r.cover.vertices;
            doc["cover_exact"] = r.cover.exact;
            doc["deleted"] = r.deleted.size();
            doc["classes_touched"] = r.classes_touched;
            doc["bound"] = r.bound;
            doc["size_bound_ok"] = r.size_bound_ok;
            if (r.reduced) {
                doc["n"] = r.reduced->graph.size();
                if (!output.empty()) save_instance(output, *r.reduced);
            }
            return doc;
        };
    });

    auto* recognize_cmd = app.add_subcommand("recognize", "Report trees, treewidth <= 2 and grids");
    recognize_cmd->add_option("instance", file, "Instance file")->required();
    recognize_cmd->callback([&] {
        action = [&] {
            Instance inst = load(file);
            json doc;
            doc["tree"] = is_tree(inst.graph);
            doc["tw2"] = recognize_tw2(inst.graph).has_value();
            std::optional<GridMeta> grid = grid_meta(inst.graph);
            doc["grid"] = grid ? json{{"rows", grid->rows}, {"cols", grid->cols}} : json(false);
            std::optional<SpecialResult> fast = solve_special(inst);
            if (fast) {
                doc["fast_path"] = fast_path_name(fast->path);
                doc["winner"] = side_name(fast->winner);
                doc["d"] = count_json(fast->d);
                doc["lambda"] = count_json(fast->lambda);
            } else {
                doc["fast_path"] = nullptr;
            }
            return doc;
        };
    });

    auto* generate_cmd = app.add_subcommand("generate", "Write grids and reduction outputs");
    generate_cmd->require_subcommand(1);
    int rows = 3, cols = 3;
    unsigned agents = 2;
    std::string s_at, t_at, src, index_out;
    auto* grid_cmd = generate_cmd->add_subcommand("grid", "Rows x cols grid");
    grid_cmd->add_option("--rows", rows, "Rows")->check(CLI::PositiveNumber);
    grid_cmd->add_option("--cols", cols, "Columns")->check(CLI::PositiveNumber);
    grid_cmd->add_option("--s", s_at, "Terminal s as row,col (default 1,1)");
    grid_cmd->add_option("--t", t_at, "Terminal t as row,col (default rows,cols)");
    grid_cmd->add_option("-k", agents, "Divider agents")->check(CLI::PositiveNumber);
    grid_cmd->add_option("-o,--output", output, "Instance file")->required();
    grid_cmd->callback([&] {
        action = [&] {
            Graph g = make_grid(rows, cols);
            auto [sr, sc] = s_at.empty() ? std::pair<int, int>{1, 1} : parse_coord(s_at);
            auto [tr, tc] = t_at.empty() ? std::pair<int, int>{rows, cols} : parse_coord(t_at);
            auto cell = [&](int r, int c) -> Vertex {
                if (r < 1 || r > rows || c < 1 || c > cols) {
                    throw ComputationError{{{"error", "InvalidTerminal"}, {"row", r}, {"col", c}}};
                }
                return static_cast<Vertex>((r - 1) * cols + (c - 1));
            };
            Instance inst = make_instance(std::move(g), cell(sr, sc), cell(tr, tc), agents);
            save_instance(output, inst);
            return json{{"n", inst.graph.size()}, {"s", inst.s}, {"t", inst.t}, {"k", inst.k}, {"output", output}};
        };
    });
    auto reduction_cmd = [&](const std::string& name, const std::string& help) {
        auto* cmd = generate_cmd->add_subcommand(name, help);
        cmd->add_option("--src", src, "Source instance as JSON text or a JSON file")->required();
        cmd->add_option("-o,--output", output, "Instance file")->required();
        cmd->add_option("--index", index_out, "Gadget index JSON file");
        cmd->callback([&, name] {
            action = [&, name] {
                std::string text = json_argument(src);
                Reduction red;
                json doc;
                try {
                    if (name == "3dm") {
                        ThreeDMInstance s = parse_3dm_json(text);
                        red = reduce_3dm(s);
                    } else if (name == "nae") {
                        NAEInstance s = parse_nae_json(text);
                        red = reduce_nae(s);
                    } else {
                        SetCoverInstance s = parse_setcover_json(text);
                        red = reduce_setcover(s);
                    }
                } catch (const SourceInvalid& e) {
                    throw ComputationError{{{"error", "SourceInvalid"}, {"detail", e.what()}}};
                }
                save_instance(output, red.instance);
                if (!index_out.empty()) write_text(index_out, serialize_gadget_index(red.index));
                doc["n"] = red.instance.graph.size();
                doc["m"] = red.instance.graph.edge_count();
                doc["k"] = red.instance.k;
                doc["scale"] = red.index.scale;
                doc["paths"] = red.index.paths.size();
                doc["output"] = output;
                return doc;
            };
        });
    };
    reduction_cmd("3dm", "3-dimensional matching reduction");
    reduction_cmd("nae", "NAE-integer-3-SAT reduction");
    reduction_cmd("setcover", "Set cover reduction");

    auto* validate_cmd = app.add_subcommand("validate", "Structural checks on a generated instance");
    validate_cmd->add_option("instance", file, "Instance file")->required();
    validate_cmd->add_option("index", second, "Gadget index JSON")->required();
    validate_cmd->callback([&] {
        action = [&] {
            Instance inst = load(file);
            GadgetIndex gi;
            try {
                gi = parse_gadget_index(read_text(second));
            } catch (const SourceInvalid& e) {
                throw ComputationError{{{"error", "SourceInvalid"}, {"detail", e.what()}}};
            }
            GadgetReport rep = validate_gadgets(inst, gi, gi.kind);
            json checks = json::array();
            for (const GadgetCheck& c : rep.checks) {
                checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
            }
            json doc{{"ok", rep.ok()}, {"kind", reduction_name(gi.kind)}, {"checks", checks}};
            if (!rep.ok()) throw ComputationError{doc};
            return doc;
        };
    });

    std::string fac_kind = "greedy", div_kind = "heuristic";
    unsigned rounds = 100;
    std::uint64_t seed = 1;
    bool show_trace = false;
    auto* sim_cmd = app.add_subcommand("simulate", "Play two policies against each other");
    sim_cmd->add_option("instance", file, "Instance file")->required();
    sim_cmd->add_option("--facilitator", fac_kind, "random | greedy | exact")
        ->check(CLI::IsMember({"random", "greedy", "exact"}));
    sim_cmd->add_option("--divider", div_kind, "random | heuristic | exact | grid")
        ->check(CLI::IsMember({"random", "heuristic", "exact", "grid"}));
    sim_cmd->add_option("--rounds", rounds, "Round limit");
    sim_cmd->add_option("--seed", seed, "Seed for random policies");
    sim_cmd->add_flag("--trace", show_trace, "Include every position");
    sim_cmd->callback([&] {
        action = [&] {
            Instance inst = load(file);
            std::optional<SolveReport> report;
            if (fac_kind == "exact" || div_kind == "exact") report = solve(inst, SolveOptions{budget});
            std::unique_ptr<FacilitatorPolicy> fac;
            if (fac_kind == "random") fac = std::make_unique<RandomFacilitator>(inst.graph, seed);
            if (fac_kind == "greedy") fac = std::make_unique<GreedyRushFacilitator>(inst.graph);
            if (fac_kind == "exact") fac = std::make_unique<ExactFacilitator>(*report);
            std::unique_ptr<DividerPolicy> div;
            if (div_kind == "random") div = std::make_unique<RandomDivider>(inst.graph, seed + 1);
            if (div_kind == "heuristic") div = std::make_unique<HeuristicDivider>(inst.graph);
            if (div_kind == "exact") div = std::make_unique<ExactDivider>(*report);
            if (div_kind == "grid") div = std::make_unique<GridDivider>(inst.graph, inst.s, inst.t);
            Trace trace = simulate(inst, *fac, *div, rounds);
            json doc{{"met", trace.met}, {"rounds", trace.rounds}};
            if (trace.met) doc["meeting_vertex"] = trace.meeting_vertex;
            if (show_trace) {
                json steps = json::array();
                for (const TraceStep& st : trace.steps) {
                    steps.push_back({{"round", st.round},
                                     {"f", {st.position.f.a, st.position.f.b}},
                                     {"d", st.position.d.agents},
                                     {"to_move", side_name(st.position.to_move)}});
                }
                doc["trace"] = steps;
            }
            return doc;
        };
    });

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* serve_cmd = app.add_subcommand("serve", "Run the JSON play service");
    serve_cmd->add_option("--host", host, "Bind address");
    serve_cmd->add_option("--port", port, "Port")->check(CLI::Range(1, 65535));
    serve_cmd->callback([&] {
        action = [&] {
            ServiceConfig config;
            config.budget = budget;
            GameService service(config);
            err << "serving on " << host << ":" << port << "\n";
            if (serve_http(service, host, port) != 0) {
                throw ComputationError{{{"error", "CannotListen"}, {"host", host}, {"port", port}}};
            }
            return json{{"stopped", true}};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        const CLI::App* failing = &app;
        for (const CLI::App* sub : app.get_subcommands()) {
            failing = sub;
            for (const CLI::App* inner : sub->get_subcommands()) failing = inner;
        }
        err << failing->help();
        return 1;
    }

    auto fail = [&](const json& detail) {
        out << detail.dump() << "\n";
        if (!as_json) err << "error: " << detail.value("error", std::string("failed")) << "\n";
        return 2;
    };
    try {
        if (!action) return 1;
        emit(out, as_json, action());
        return 0;
    } catch (const ComputationError& e) {
        return fail(e.detail);
    } catch (const CapacityExceeded& e) {
        return fail({{"error", "CapacityExceeded"}, {"positions", e.positions()}, {"budget", e.budget()}});
    } catch (const ParseError& e) {
        return fail({{"error", "ParseError"}, {"kind", parse_error_name(e.kind())}, {"line", e.line()},
                     {"detail", e.what()}});
    } catch (const DisconnectedGraph& e) {
        return fail({{"error", "DisconnectedGraph"}, {"detail", e.what()}});
    } catch (const std::exception& e) {
        return fail({{"error", "Failed"}, {"detail", e.what()}});
    }
}

} // namespace rendezvous::tools
