#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "distpack/enumerator.hpp"
#include "distpack/io_formats.hpp"

namespace distpack {

enum class BenchOutcome { solved, distinct_infeasible, timeout, out_of_scope };

std::string_view to_string(BenchOutcome outcome);

struct BenchRow {
    std::string name;
    std::string file;
    std::size_t n = 0;
    std::size_t bins = 0;
    std::size_t per_bin = 0;
    Size capacity = 0;
    std::size_t pattern_count = 0;
    BenchOutcome outcome = BenchOutcome::out_of_scope;
    double seconds = 0.0;
    std::string detail;
};

struct BenchReport {
    std::vector<BenchRow> rows;

    std::size_t count(BenchOutcome outcome) const;
    nlohmann::json to_json() const;
};

struct BenchOptions {
    std::chrono::duration<double> timeout{60.0};
    std::size_t workers = 1;
    EnumerationMode mode = EnumerationMode::distinct_values;
    // Outcomes do not depend on which packing is found, so scarcest-first
    // branching is the default here.
    bool deterministic = false;
    InstanceFormat format = InstanceFormat::detect;
    Overrides overrides;
};

/// Runs one instance end to end. A row is marked solved only after the
/// packing passed verify(); a search cut short by the clock is a timeout.
BenchRow bench_instance(const NamedInstance& named, const BenchOptions& opts);

/// Benchmarks every regular file in `dir` (sorted by file name). Files that
/// fail to parse become out-of-scope rows. Rows keep file/instance order no
/// matter how many workers run.
BenchReport run_bench(const std::filesystem::path& dir, const BenchOptions& opts);

} // namespace distpack
