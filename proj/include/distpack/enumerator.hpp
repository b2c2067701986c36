#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "distpack/model.hpp"

namespace distpack {

enum class EnumerationMode {
    // Strictly increasing tuples drawn from the extracted set.
    distinct_values,
    // A value may repeat inside a tuple up to its multiplicity in the items.
    multiplicity_bounded,
};

std::string_view to_string(EnumerationMode mode);
/// Accepts "distinct-values" and "multiplicity-bounded".
std::optional<EnumerationMode> parse_mode(std::string_view text);

inline constexpr std::size_t default_pattern_cap = 10'000'000;

/// Every canonical per_bin-tuple over the instance's values that sums to the
/// capacity, in strict lexicographic order.
struct PatternSet {
    std::vector<BinPattern> patterns;
    EnumerationMode mode = EnumerationMode::distinct_values;
    std::uint64_t source_digest = 0;
    // The instance's extracted set; value_support() reports over it.
    std::vector<Size> values;
    std::size_t per_bin = 0;
    Size capacity = 0;

    std::size_t size() const noexcept { return patterns.size(); }
    bool empty() const noexcept { return patterns.empty(); }
};

/// Raw enumeration over the values of `items`; no instance checks, and the
/// result carries no source digest.
PatternSet enumerate_patterns(const Multiset& items, std::size_t per_bin, Size capacity,
                              EnumerationMode mode = EnumerationMode::distinct_values,
                              std::size_t cap = default_pattern_cap);

/// Requires instance_validate(inst).ok(); with relaxed_bounds set, only the
/// per-bin bounds are waived. Throws std::invalid_argument on an invalid
/// instance and PatternExplosion once more than `cap` patterns are produced.
PatternSet enumerate_patterns(const Instance& inst,
                              EnumerationMode mode = EnumerationMode::distinct_values,
                              std::size_t cap = default_pattern_cap);

/// For each instance value, the ascending indices of patterns containing it.
/// A value mapped to an empty list cannot be packed at all.
std::map<Size, std::vector<std::size_t>> value_support(const PatternSet& ps);

/// Pattern dump: a `patterns=.. per_bin=.. capacity=.. mode=..` header line
/// followed by one space-separated pattern per line.
std::string format_pattern_dump(const PatternSet& ps);

} // namespace distpack
