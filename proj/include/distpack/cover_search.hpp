#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "distpack/enumerator.hpp"
#include "distpack/model.hpp"

namespace distpack {

struct SearchConfig {
    // solve_all stops after the first packing. solve() always does.
    bool first_solution_only = false;
    // Upper bound on solutions collected by solve_all; nullopt = unbounded.
    std::optional<std::size_t> solution_limit;
    // Wall-clock budget for the whole call; nullopt = unlimited.
    std::optional<std::chrono::duration<double>> timeout;
    // true: index-ordered branching, first answer is the lexicographically
    // least chosen-index sequence. false: branch on the scarcest value.
    bool deterministic = true;
    // Re-check the conservation invariant at every node (slow).
    bool check_invariants = false;
};

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t solutions = 0;
    double seconds = 0.0;
};

/// A k-subset of pattern indices (strictly increasing) whose spread is the
/// instance's item multiset, or nullopt when no distinct packing exists.
/// nullopt is returned only after the full search space is exhausted.
///
/// Throws PatternSetMismatch if `ps` was enumerated from another instance,
/// std::invalid_argument for an invalid instance and TimeoutExceeded when the
/// budget runs out before the question is settled.
std::optional<Packing> solve(const Instance& inst, const PatternSet& ps,
                             const SearchConfig& cfg = {}, SearchStats* stats = nullptr);

/// Every distinct packing, up to cfg.solution_limit, ordered by chosen-index
/// sequence. Empty iff no distinct packing exists.
std::vector<Packing> solve_all(const Instance& inst, const PatternSet& ps,
                               const SearchConfig& cfg = {}, SearchStats* stats = nullptr);

/// Index form of solve(): the chosen pattern indices, ascending.
std::optional<std::vector<std::size_t>> solve_indices(const Instance& inst, const PatternSet& ps,
                                                      const SearchConfig& cfg = {},
                                                      SearchStats* stats = nullptr);

} // namespace distpack
