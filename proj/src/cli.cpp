#include "distpack/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>

#include "distpack/bench.hpp"
#include "distpack/cover_search.hpp"
#include "distpack/enumerator.hpp"
#include "distpack/error.hpp"
#include "distpack/io_formats.hpp"
#include "distpack/naive_oracle.hpp"
#include "distpack/verifier.hpp"

namespace distpack {

namespace {

constexpr double default_cli_timeout = 60.0;

// Options that pick and shape one instance.
struct InstanceArgs {
    std::string path;
    std::string format = "auto";
    std::string problem;
    std::string mode = "distinct-values";
    std::optional<Size> capacity;
    std::optional<std::size_t> per_bin;
    std::optional<std::size_t> bins;
    bool relaxed = false;

    void attach(CLI::App* cmd, bool with_mode = true) {
        cmd->add_option("--instance", path, "Instance file")->required();
        cmd->add_option("--format", format, "bpplib | falkenauer | list | auto")
            ->check(CLI::IsMember({"bpplib", "falkenauer", "list", "auto"}));
        cmd->add_option("--problem", problem, "Problem identifier inside a multi-problem file");
        cmd->add_option("--capacity", capacity, "Bin capacity");
        cmd->add_option("--per-bin", per_bin, "Items per bin");
        cmd->add_option("--bins", bins, "Number of bins");
        cmd->add_flag("--relaxed-bounds", relaxed, "Admit one item per bin or a single bin");
        if (with_mode) {
            cmd->add_option("--mode", mode, "distinct-values | multiplicity-bounded")
                ->check(CLI::IsMember({"distinct-values", "multiplicity-bounded"}));
        }
    }

    Overrides overrides() const { return {bins, per_bin, capacity, relaxed}; }
    EnumerationMode enumeration_mode() const { return *parse_mode(mode); }

    NamedInstance load() const {
        auto file = load_instance_file(path, *parse_format(format), overrides());
        if (file.instances.empty()) {
            throw Error(path + ": no instances");
        }
        if (problem.empty()) {
            return std::move(file.instances.front());
        }
        for (auto& named : file.instances) {
            if (named.name == problem) {
                return std::move(named);
            }
        }
        throw Error(path + ": no problem named '" + problem + "'");
    }
};

// Loads, validates and enumerates; throws on anything out of scope.
struct Prepared {
    NamedInstance named;
    PatternSet patterns;
};

Prepared prepare(const InstanceArgs& args) {
    Prepared p{args.load(), {}};
    if (const auto report = instance_validate(p.named.instance); !report.ok()) {
        throw Error("instance " + p.named.name + " is out of scope:\n" + report.describe());
    }
    p.patterns = enumerate_patterns(p.named.instance, args.enumeration_mode());
    return p;
}

void emit(std::ostream& out, const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file) {
        throw Error("cannot write " + output_path);
    }
    file << text;
}

std::string render(const Instance& inst, const std::vector<Packing>& packings, bool json, bool many) {
    if (json) {
        if (!many) {
            return solution_to_json(inst, packings.front()).dump(2) + "\n";
        }
        nlohmann::json all = nlohmann::json::array();
        for (const auto& p : packings) {
            all.push_back(solution_to_json(inst, p));
        }
        return nlohmann::json{{"solutions", std::move(all)}}.dump(2) + "\n";
    }
    std::string text;
    if (many) {
        text = "solutions=" + std::to_string(packings.size()) + "\n";
    }
    for (const auto& p : packings) {
        text += serialize_solution(inst, p);
    }
    return text;
}

std::size_t default_workers() {
    if (const char* env = std::getenv(bench_workers_env)) {
        try {
            const auto v = std::stoul(env);
            if (v > 0) {
                return v;
            }
        } catch (const std::exception&) {
        }
    }
    return 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact distinct bin packing: every bin holds the same number of items, "
                 "fills capacity exactly, and no two bins are alike"};
    app.require_subcommand(1);

    InstanceArgs solve_args;
    bool solve_all_flag = false;
    bool json = false;
    std::optional<std::size_t> limit;
    double timeout = default_cli_timeout;
    std::string output;
    std::string branching = "index";
    auto* solve_cmd = app.add_subcommand("solve", "Search for a distinct packing");
    solve_args.attach(solve_cmd);
    solve_cmd->add_flag("--all", solve_all_flag, "Collect every distinct packing");
    solve_cmd->add_option("--limit", limit, "Stop after this many packings")->check(CLI::PositiveNumber);
    solve_cmd->add_option("--timeout", timeout, "Wall-clock budget in seconds (0 = none)")
        ->check(CLI::NonNegativeNumber);
    solve_cmd->add_option("--output", output, "Write the solution here instead of stdout");
    solve_cmd->add_flag("--json", json, "Emit JSON instead of the text format");
    solve_cmd->add_option("--branching", branching, "index (lexicographically least answer) | scarcest")
        ->check(CLI::IsMember({"index", "scarcest"}));

    InstanceArgs verify_args;
    std::string solution_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against an instance");
    verify_args.attach(verify_cmd, false);
    verify_cmd->add_option("--solution", solution_path, "Solution file")->required();

    InstanceArgs enum_args;
    auto* enum_cmd = app.add_subcommand("enumerate", "Print every bin pattern");
    enum_args.attach(enum_cmd);

    InstanceArgs count_args;
    auto* count_cmd = app.add_subcommand("count", "Print the pattern and subset counts");
    count_args.attach(count_cmd);

    InstanceArgs oracle_args;
    std::size_t cap = default_oracle_cap;
    bool force = false;
    auto* oracle_cmd = app.add_subcommand("oracle", "Run the exhaustive subset sweep");
    oracle_args.attach(oracle_cmd);
    oracle_cmd->add_option("--cap", cap, "Refuse sweeps over more subsets than this");
    oracle_cmd->add_flag("--force", force, "Ignore the cap");

    std::string bench_dir;
    std::string report_path;
    double bench_timeout = default_cli_timeout;
    std::size_t workers = default_workers();
    std::string bench_mode = "distinct-values";
    std::string bench_format = "auto";
    std::string bench_branching = "scarcest";
    auto* bench_cmd = app.add_subcommand("bench", "Solve every instance file in a directory");
    bench_cmd->add_option("--dir", bench_dir, "Directory of instance files")->required();
    bench_cmd->add_option("--timeout", bench_timeout, "Per-instance budget in seconds")
        ->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--report", report_path, "Write the JSON report here")->required();
    bench_cmd->add_option("--workers", workers, "Concurrent instances")->check(CLI::PositiveNumber);
    bench_cmd->add_option("--mode", bench_mode, "distinct-values | multiplicity-bounded")
        ->check(CLI::IsMember({"distinct-values", "multiplicity-bounded"}));
    bench_cmd->add_option("--format", bench_format, "bpplib | falkenauer | list | auto")
        ->check(CLI::IsMember({"bpplib", "falkenauer", "list", "auto"}));
    bench_cmd->add_option("--branching", bench_branching, "index | scarcest")
        ->check(CLI::IsMember({"index", "scarcest"}));

    std::vector<std::string> argv_store{"distpack"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*solve_cmd) {
            const auto p = prepare(solve_args);
            SearchConfig cfg;
            if (timeout > 0) {
                cfg.timeout = std::chrono::duration<double>(timeout);
            }
            cfg.solution_limit = limit;
            cfg.deterministic = branching == "index";
            std::vector<Packing> found;
            if (solve_all_flag) {
                found = solve_all(p.named.instance, p.patterns, cfg);
            } else if (auto packing = solve(p.named.instance, p.patterns, cfg)) {
                found.push_back(std::move(*packing));
            }
            if (found.empty()) {
                out << "NO DISTINCT PACKING\n";
                return exit_infeasible;
            }
            emit(out, render(p.named.instance, found, json, solve_all_flag), output);
            return exit_ok;
        }
        if (*verify_cmd) {
            const auto named = verify_args.load();
            const auto packing = parse_solution(read_text_file(solution_path));
            const auto report = verify(named.instance, packing);
            if (report.valid()) {
                out << "VALID\n";
                return exit_ok;
            }
            out << "INVALID\n" << report.describe();
            return exit_infeasible;
        }
        if (*enum_cmd) {
            const auto p = prepare(enum_args);
            out << format_pattern_dump(p.patterns);
            return exit_ok;
        }
        if (*count_cmd) {
            const auto p = prepare(count_args);
            const auto counts = count_report(p.named.instance, p.patterns);
            out << "patterns=" << counts.pattern_count << '\n'
                << "subsets=" << counts.subset_count.str() << '\n';
            return exit_ok;
        }
        if (*oracle_cmd) {
            const auto p = prepare(oracle_args);
            const auto packing = subset_sweep_solve(
                p.named.instance, p.patterns, force ? std::numeric_limits<std::size_t>::max() : cap);
            if (!packing) {
                out << "NO DISTINCT PACKING\n";
                return exit_infeasible;
            }
            out << serialize_solution(p.named.instance, *packing);
            return exit_ok;
        }
        if (*bench_cmd) {
            BenchOptions opts;
            opts.timeout = std::chrono::duration<double>(bench_timeout);
            opts.workers = workers;
            opts.mode = *parse_mode(bench_mode);
            opts.format = *parse_format(bench_format);
            opts.deterministic = bench_branching == "index";
            const auto report = run_bench(bench_dir, opts);
            emit(out, report.to_json().dump(2) + "\n", report_path);
            for (const auto& row : report.rows) {
                out << row.name << ' ' << to_string(row.outcome) << ' ' << row.seconds << "s\n";
            }
            return exit_ok;
        }
    } catch (const TimeoutExceeded& e) {
        err << "TIMEOUT: " << e.what() << '\n';
        return exit_timeout;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

} // namespace distpack
