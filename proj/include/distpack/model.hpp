#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distpack/multiset.hpp"

namespace distpack {

/// A problem: fill exactly `bins` bins with exactly `per_bin` items each,
/// every bin summing to `capacity`, no two bins equal as size-multisets.
struct Instance {
    Multiset items;
    std::size_t bins = 0;
    std::size_t per_bin = 0;
    Size capacity = 0;
    // Admit per_bin == 1 and per_bin == n.
    bool relaxed_bounds = false;

    Instance scaled(Size factor) const;
};

/// Contents of one bin in canonical (non-decreasing) order.
class BinPattern {
public:
    BinPattern() = default;
    /// Sorts `sizes` into canonical order.
    explicit BinPattern(std::vector<Size> sizes);

    const std::vector<Size>& sizes() const noexcept { return sizes_; }
    std::size_t size() const noexcept { return sizes_.size(); }
    Size sum() const noexcept;
    bool contains(Size value) const noexcept;

    auto operator<=>(const BinPattern&) const = default;
    bool operator==(const BinPattern&) const = default;

private:
    std::vector<Size> sizes_;
};

/// A claimed packing. Bins are canonicalized and sorted on construction;
/// nothing else is checked here, see verify().
struct Packing {
    std::vector<BinPattern> bins;

    Packing() = default;
    explicit Packing(std::vector<BinPattern> patterns);

    bool operator==(const Packing&) const = default;
};

/// Multiset union of all pattern elements.
Multiset spread(std::span<const BinPattern> patterns);

enum class ConstraintKind {
    count_mismatch,   // bins * per_bin != n
    sum_mismatch,     // capacity * bins != sum of items
    size_bounds,      // some item outside (0, capacity]
    per_bin_bounds,   // 1 < per_bin < n violated
    nonpositive_param // bins, per_bin or capacity is zero/negative
};

std::string_view to_string(ConstraintKind kind);

struct ConstraintViolation {
    ConstraintKind kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<ConstraintViolation> violations;

    bool ok() const noexcept { return violations.empty(); }
    bool has(ConstraintKind kind) const noexcept;
    std::string describe() const;
};

ValidationReport instance_validate(const Instance& inst);

/// Content hash of (items, bins, per_bin, capacity). Used to tie pattern sets
/// to the instance they were enumerated from.
std::uint64_t instance_digest(const Instance& inst);

} // namespace distpack
