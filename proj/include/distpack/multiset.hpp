#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

namespace distpack {

/// Item size in abstract integer units.
using Size = std::int64_t;

/// Sizes with multiplicities. Zero-count values are never stored, so two
/// multisets compare equal exactly when every value has the same count.
class Multiset {
public:
    using Entries = std::map<Size, std::size_t>;

    Multiset() = default;

    /// Throws NonPositiveValue if any value is <= 0.
    static Multiset from_list(std::span<const Size> values);
    static Multiset from_list(std::initializer_list<Size> values) {
        return from_list(std::span<const Size>(values.begin(), values.size()));
    }

    /// Throws NonPositiveValue for a non-positive value or a zero count.
    static Multiset from_counts(const Entries& counts);

    std::size_t multiplicity(Size value) const noexcept;
    std::size_t total_count() const noexcept { return total_; }
    std::size_t distinct_count() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return total_ == 0; }
    const Entries& entries() const noexcept { return entries_; }

    /// Sum of all items counted with multiplicity. Throws std::overflow_error
    /// if the sum leaves the 64-bit range.
    Size sum() const;

    /// Values in ascending order, each repeated by its multiplicity.
    std::vector<Size> to_list() const;

    /// Every value multiplied by `factor` (> 0).
    Multiset scaled(Size factor) const;

    friend bool operator==(const Multiset&, const Multiset&) = default;

private:
    Entries entries_;
    std::size_t total_ = 0;
};

bool multiset_equal(const Multiset& a, const Multiset& b);

/// The distinct values of `m`, strictly increasing.
std::vector<Size> extracted_set(const Multiset& m);

} // namespace distpack
