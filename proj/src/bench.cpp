#include "distpack/bench.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "distpack/cover_search.hpp"
#include "distpack/error.hpp"
#include "distpack/verifier.hpp"

namespace distpack {

std::string_view to_string(BenchOutcome outcome) {
    switch (outcome) {
    case BenchOutcome::solved:
        return "solved";
    case BenchOutcome::distinct_infeasible:
        return "distinct-infeasible";
    case BenchOutcome::timeout:
        return "timeout";
    case BenchOutcome::out_of_scope:
        return "out-of-scope";
    }
    return "unknown";
}

std::size_t BenchReport::count(BenchOutcome outcome) const {
    return static_cast<std::size_t>(std::count_if(
        rows.begin(), rows.end(), [outcome](const BenchRow& r) { return r.outcome == outcome; }));
}

nlohmann::json BenchReport::to_json() const {
    nlohmann::json out;
    out["rows"] = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json row = {{"name", r.name},
                              {"file", r.file},
                              {"n", r.n},
                              {"bins", r.bins},
                              {"per_bin", r.per_bin},
                              {"capacity", r.capacity},
                              {"pattern_count", r.pattern_count},
                              {"outcome", to_string(r.outcome)},
                              {"seconds", r.seconds}};
        if (!r.detail.empty()) {
            row["detail"] = r.detail;
        }
        out["rows"].push_back(std::move(row));
    }
    out["summary"] = {{"instances", rows.size()},
                      {"solved", count(BenchOutcome::solved)},
                      {"distinct-infeasible", count(BenchOutcome::distinct_infeasible)},
                      {"timeout", count(BenchOutcome::timeout)},
                      {"out-of-scope", count(BenchOutcome::out_of_scope)}};
    return out;
}

BenchRow bench_instance(const NamedInstance& named, const BenchOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const Instance& inst = named.instance;
    BenchRow row;
    row.name = named.name;
    row.n = inst.items.total_count();
    row.bins = inst.bins;
    row.per_bin = inst.per_bin;
    row.capacity = inst.capacity;

    auto finish = [&](BenchOutcome outcome, std::string detail = {}) {
        row.outcome = outcome;
        row.detail = std::move(detail);
        row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return row;
    };

    if (const auto report = instance_validate(inst); !report.ok()) {
        return finish(BenchOutcome::out_of_scope, report.describe());
    }
    PatternSet ps;
    try {
        ps = enumerate_patterns(inst, opts.mode);
    } catch (const PatternExplosion& e) {
        return finish(BenchOutcome::out_of_scope, e.what());
    }
    row.pattern_count = ps.size();

    SearchConfig cfg;
    cfg.deterministic = opts.deterministic;
    const std::chrono::duration<double> spent = std::chrono::steady_clock::now() - start;
    cfg.timeout = std::max(std::chrono::duration<double>(0), opts.timeout - spent);
    try {
        const auto packing = solve(inst, ps, cfg);
        if (!packing) {
            return finish(BenchOutcome::distinct_infeasible);
        }
        const auto check = verify(inst, *packing);
        if (!check.valid()) {
            throw std::logic_error("solver returned a packing that fails verification for " +
                                   named.name + ":\n" + check.describe());
        }
        return finish(BenchOutcome::solved);
    } catch (const TimeoutExceeded& e) {
        return finish(BenchOutcome::timeout, e.what());
    }
}

BenchReport run_bench(const std::filesystem::path& dir, const BenchOptions& opts) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());

    struct Job {
        NamedInstance named;
        std::string file;
    };
    std::vector<Job> jobs;
    std::vector<std::optional<BenchRow>> slots;
    for (const auto& path : files) {
        try {
            auto parsed = load_instance_file(path, opts.format, opts.overrides);
            for (auto& named : parsed.instances) {
                jobs.push_back({std::move(named), path.filename().string()});
                slots.emplace_back();
            }
        } catch (const Error& e) {
            BenchRow row;
            row.name = path.stem().string();
            row.file = path.filename().string();
            row.outcome = BenchOutcome::out_of_scope;
            row.detail = e.what();
            slots.emplace_back(std::move(row));
            jobs.push_back({{}, {}});
        }
    }

    std::atomic<std::size_t> next{0};
    std::mutex fault_mutex;
    std::exception_ptr fault;
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++) {
            if (slots[i]) {
                continue;
            }
            try {
                BenchRow row = bench_instance(jobs[i].named, opts);
                row.file = jobs[i].file;
                slots[i] = std::move(row);
            } catch (...) {
                std::lock_guard lock(fault_mutex);
                if (!fault) {
                    fault = std::current_exception();
                }
                next = jobs.size();
            }
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(opts.workers, 1, std::max<std::size_t>(1, jobs.size()));
    {
        std::vector<std::jthread> pool;
        for (std::size_t w = 1; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        worker();
    }
    if (fault) {
        std::rethrow_exception(fault);
    }

    BenchReport report;
    for (auto& slot : slots) {
        report.rows.push_back(std::move(*slot));
    }
    return report;
}

} // namespace distpack
