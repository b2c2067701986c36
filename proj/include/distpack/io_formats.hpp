#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "distpack/model.hpp"

namespace distpack {

enum class InstanceFormat {
    // line 1: n, line 2: capacity, then n sizes
    bpplib,
    // line 1: problem count; per problem an identifier line, a
    // "capacity n [best-known]" line, then n sizes
    falkenauer,
    // whitespace-separated sizes; parameters come from overrides
    list,
    // guess from the first two non-blank lines
    detect,
};

std::string_view to_string(InstanceFormat format);
std::optional<InstanceFormat> parse_format(std::string_view text);

/// Explicit parameters. They win over anything read or derived.
struct Overrides {
    std::optional<std::size_t> bins;
    std::optional<std::size_t> per_bin;
    std::optional<Size> capacity;
    bool relaxed_bounds = false;
};

struct NamedInstance {
    std::string name;
    Instance instance;
};

/// Parsed instances are only checked for positive sizes; arithmetic
/// feasibility is left to instance_validate().
struct InstanceFile {
    InstanceFormat format = InstanceFormat::bpplib;
    std::vector<NamedInstance> instances;
};

/// Throws ParseError (with the 1-based line number) on malformed input and
/// DerivationError when bins or per_bin cannot be derived integrally.
InstanceFile parse_instance(std::string_view text, InstanceFormat format,
                            const Overrides& overrides = {}, const std::string& name = "instance");

/// Reads `path` and names single-instance files after the file stem.
InstanceFile load_instance_file(const std::filesystem::path& path, InstanceFormat format,
                                const Overrides& overrides = {});

/// Canonical text form. Throws InvalidPacking unless verify() passes.
std::string serialize_solution(const Instance& inst, const Packing& packing);

struct SolutionFile {
    std::size_t bins = 0;
    std::size_t per_bin = 0;
    Size capacity = 0;
    Packing packing;
};

/// Inverse of serialize_solution. Bins and sizes may appear in any order.
SolutionFile parse_solution_file(std::string_view text);
Packing parse_solution(std::string_view text);

/// Structured mirror of the text format: {"bins","per_bin","capacity","packing"}.
nlohmann::json solution_to_json(const Instance& inst, const Packing& packing);

std::string read_text_file(const std::filesystem::path& path);

} // namespace distpack
