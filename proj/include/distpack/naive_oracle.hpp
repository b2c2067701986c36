#pragma once

#include <cstddef>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "distpack/enumerator.hpp"
#include "distpack/model.hpp"

namespace distpack {

using BigInt = boost::multiprecision::cpp_int;

/// Exact C(n, k); zero when k > n.
BigInt binomial(std::size_t n, std::size_t k);

struct CountReport {
    std::size_t pattern_count = 0;
    // Number of bins-element subsets of the pattern set.
    BigInt subset_count;
};

CountReport count_report(const Instance& inst, const PatternSet& ps);

inline constexpr std::size_t default_oracle_cap = 10'000'000;

/// Literal sweep: walks every bins-subset of `ps` in lexicographic index
/// order, spreads it, and compares the result with the item multiset.
/// Throws OracleTooLarge when C(|ps|, bins) > cap.
std::optional<Packing> subset_sweep_solve(const Instance& inst, const PatternSet& ps,
                                          std::size_t cap = default_oracle_cap);

inline constexpr std::size_t brute_force_max_items = 16;

/// Pattern-free oracle: assigns items to bins directly. In distinct-values
/// mode a bin may not hold two items of equal size, mirroring the pattern
/// enumeration mode. Throws InstanceTooLarge above brute_force_max_items.
std::optional<Packing> brute_force_assign(const Instance& inst,
                                          EnumerationMode mode = EnumerationMode::multiplicity_bounded);

} // namespace distpack
