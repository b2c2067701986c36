#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "distpack/model.hpp"

namespace distpack {

enum class ViolationKind { bin_count, bin_length, bin_sum, duplicate_bins, spread_mismatch };

std::string_view to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::string detail;
};

struct VerifyReport {
    std::vector<Violation> violations;

    bool valid() const noexcept { return violations.empty(); }
    bool has(ViolationKind kind) const noexcept;
    std::string describe() const;
};

/// Checks a claimed packing against an instance and reports every problem
/// found. Accepts arbitrary input, including bins with non-positive sizes.
VerifyReport verify(const Instance& inst, const Packing& packing);

} // namespace distpack
