// Copyright (c) taz contributors.
// SPDX-License-Identifier: Apache-2.0

#include "taz/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "taz/errors.hpp"
#include "taz/liveness.hpp"
#include "taz/parser.hpp"
#include "taz/reach.hpp"

namespace taz {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open model file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a64_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

StrategyKind to_kind(const std::string& algo) {
    if (algo == "exact") return StrategyKind::Exact;
    if (algo == "extra-k") return StrategyKind::ExtraK;
    if (algo == "extra-lu") return StrategyKind::ExtraLu;
    return StrategyKind::Sim;
}

bool names_some_state(const TimedAutomaton& a, const std::string& arg) {
    for (const State& s : a.states) {
        if (s.name == arg) return true;
        for (const std::string& l : s.labels) {
            if (l == arg) return true;
        }
    }
    return false;
}

std::string stats_line(const ExploreStats& st) {
    return "visited=" + std::to_string(st.visited) + " stored=" + std::to_string(st.stored) +
           " subsumed=" + std::to_string(st.subsumed) + "\n";
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
    auto start = std::chrono::steady_clock::now();
    CliResult r;
    std::ostringstream out;
    std::ostringstream err;

    CLI::App app{"Zone-based reachability and liveness checking for timed automata"};
    app.require_subcommand(1);

    std::string model_path, target, accepting, dot_path;
    std::string algo = "exact";
    std::string bounds = "global";
    std::string order = "bfs";
    std::int64_t budget = 1000000;

    CLI::App* check = app.add_subcommand("check", "Parse and classify a model");
    check->add_option("model", model_path, "model file")->required();

    CLI::App* reach = app.add_subcommand("reach", "Decide state reachability");
    reach->add_option("model", model_path, "model file")->required();
    reach->add_option("--target", target, "state name or label to reach")->required();
    reach->add_option("--algo", algo, "zone coverage strategy")
        ->required()
        ->check(CLI::IsMember({"exact", "extra-k", "extra-lu", "gsim"}));
    reach->add_option("--bounds", bounds, "clock bound scope for extra-k/extra-lu")
        ->check(CLI::IsMember({"global", "per-state"}));
    reach->add_option("--order", order, "exploration order")
        ->check(CLI::IsMember({"bfs", "dfs"}));
    reach->add_option("--budget", budget, "max stored zones");
    reach->add_option("--dot", dot_path, "write the explored zone graph as graphviz");

    CLI::App* live = app.add_subcommand("liveness", "Decide repeated reachability");
    live->add_option("model", model_path, "model file")->required();
    live->add_option("--accepting", accepting, "accepting state name or label")->required();
    live->add_option("--algo", algo, "zone merge strategy")
        ->required()
        ->check(CLI::IsMember({"exact", "extra-lu", "gsim"}));
    live->add_option("--budget", budget, "max stored zones");

    CLI::App* gdump = app.add_subcommand("gdump", "Print the per-state constraint map");
    gdump->add_option("model", model_path, "model file")->required();

    std::vector<const char*> argv;
    argv.push_back("taz");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        r.out = out.str();
        return r;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        r.err = err.str();
        r.exit_code = 2;
        return r;
    }

    try {
        std::string text = read_file(model_path);
        std::string hash = fnv1a64_hex(text);
        TimedAutomaton a = parse_model(text);

        if (app.got_subcommand(check)) {
            ModelClass cls = classify(a);
            out << "diagonal-free: " << (cls.diagonal_free ? "yes" : "no")
                << "; reset-only: " << (cls.reset_only ? "yes" : "no") << "\n";
            out << "states=" << a.states.size() << " clocks=" << a.clock_count()
                << " transitions=" << a.transitions.size() << "\n";
            algo = "check";
        } else if (app.got_subcommand(gdump)) {
            ConstraintMap g = compute_constraint_map(a);
            for (size_t s = 0; s < a.states.size(); ++s) {
                out << "G(" << a.states[s].name << ") = {";
                bool first = true;
                for (const AtomicConstraint& atom : g.atoms[s]) {
                    out << (first ? "" : ", ") << to_string(atom, a.clock_names, "=");
                    first = false;
                }
                if (g.has_false[s]) out << (first ? "" : ", ") << "false";
                out << "}\n";
            }
            algo = "gdump";
        } else if (app.got_subcommand(reach)) {
            if (!names_some_state(a, target)) throw Error("unknown target '" + target + "'");
            Strategy strategy;
            strategy.kind = to_kind(algo);
            strategy.bounds_mode = bounds == "global" ? BoundsMode::Global : BoundsMode::PerState;
            ExploreResult res =
                explore(a, strategy, target, order == "bfs" ? Order::Bfs : Order::Dfs, budget);
            out << (res.reachable ? "REACHABLE" : "UNREACHABLE") << "\n" << stats_line(res.stats);
            if (res.reachable) {
                for (int ti : res.witness) out << to_string(a.transitions[ti], a) << "\n";
            }
            if (!dot_path.empty()) {
                std::ofstream dot(dot_path, std::ios::binary);
                if (!dot) throw Error("cannot write dot file: " + dot_path);
                dot << to_dot(res, a);
            }
        } else {
            // No state need carry the accepting attribute, but an argument
            // matching nothing while no attribute exists is a dead check.
            bool attr = false;
            for (const State& s : a.states) attr |= s.accepting;
            if (!attr && !names_some_state(a, accepting))
                throw Error("unknown accepting state '" + accepting + "'");
            Strategy strategy;
            strategy.kind = to_kind(algo);
            BuchiResult res = buchi_check(a, strategy, accepting, budget);
            out << (res.empty ? "EMPTY" : "BUCHI-RUN") << "\n" << stats_line(res.stats);
            if (!res.empty) {
                out << "stem:\n";
                for (int ti : res.stem) out << to_string(a.transitions[ti], a) << "\n";
                out << "lasso:\n";
                for (int ti : res.lasso) out << to_string(a.transitions[ti], a) << "\n";
            }
        }

        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        err << "time_ms=" << ms << " algo=" << algo << " model_hash=" << hash << "\n";
    } catch (const ClassMismatchError& e) {
        err << "error: " << e.what() << "\n";
        r.exit_code = 3;
    } catch (const BudgetExhaustedError& e) {
        err << "error: " << e.what() << "\n";
        r.exit_code = 4;
    } catch (const DivergedError& e) {
        err << "error: " << e.what() << "\n";
        for (const std::string& w : e.witness) err << "  " << w << "\n";
        r.exit_code = 4;
    } catch (const Error& e) {
        // Parse errors, negative-clock updates, bad paths, bad arguments.
        err << "error: " << e.what() << "\n";
        r.exit_code = 2;
    }

    r.out = out.str();
    r.err = err.str();
    return r;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    CliResult r = run_cli(args);
    std::fputs(r.out.c_str(), stdout);
    std::fputs(r.err.c_str(), stderr);
    return r.exit_code;
}

}  // namespace taz
