#include "distpack/cover_search.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "distpack/error.hpp"

namespace distpack {

namespace {

using Clock = std::chrono::steady_clock;

struct Group {
    std::uint32_t value;  // index into the extracted set
    std::uint32_t count;  // occurrences inside the pattern
};

struct CompiledPattern {
    std::vector<Group> groups;  // ascending by value
};

class CoverSearch {
public:
    CoverSearch(const Instance& inst, const PatternSet& ps, const SearchConfig& cfg,
                std::size_t limit)
        : inst_(inst), cfg_(cfg), limit_(limit), start_(Clock::now()) {
        values_ = ps.values;
        remaining_.reserve(values_.size());
        for (Size v : values_) {
            remaining_.push_back(inst.items.multiplicity(v));
        }
        compiled_.reserve(ps.patterns.size());
        for (const auto& p : ps.patterns) {
            CompiledPattern cp;
            for (Size v : p.sizes()) {
                const auto idx = static_cast<std::uint32_t>(
                    std::lower_bound(values_.begin(), values_.end(), v) - values_.begin());
                if (!cp.groups.empty() && cp.groups.back().value == idx) {
                    ++cp.groups.back().count;
                } else {
                    cp.groups.push_back({idx, 1});
                }
            }
            compiled_.push_back(std::move(cp));
        }
        supply_.assign(values_.size(), 0);
        holders_.assign(values_.size(), 0);
        levels_.resize(inst.bins + 1);
    }

    void run() {
        auto& root = levels_[0];
        root.clear();
        for (std::size_t i = 0; i < compiled_.size(); ++i) {
            if (fits(i)) {
                root.push_back(i);
            }
        }
        descend(0);
    }

    std::vector<std::vector<std::size_t>>& solutions() { return solutions_; }
    std::uint64_t nodes() const { return nodes_; }
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }

private:
    bool fits(std::size_t p) const {
        for (const auto& g : compiled_[p].groups) {
            if (remaining_[g.value] < g.count) {
                return false;
            }
        }
        return true;
    }

    void apply(std::size_t p) {
        for (const auto& g : compiled_[p].groups) {
            remaining_[g.value] -= g.count;
        }
    }

    void undo(std::size_t p) {
        for (const auto& g : compiled_[p].groups) {
            remaining_[g.value] += g.count;
        }
    }

    void check_clock() {
        if (cfg_.timeout && (nodes_ & 1023U) == 1 &&
            Clock::now() - start_ > *cfg_.timeout) {
            throw TimeoutExceeded("search exceeded " + std::to_string(cfg_.timeout->count()) +
                                  " s before settling feasibility");
        }
    }

    void check_conservation() const {
        std::vector<std::size_t> covered(values_.size(), 0);
        for (std::size_t p : chosen_) {
            for (const auto& g : compiled_[p].groups) {
                covered[g.value] += g.count;
            }
        }
        for (std::size_t v = 0; v < values_.size(); ++v) {
            if (covered[v] + remaining_[v] != inst_.items.multiplicity(values_[v])) {
                throw std::logic_error("conservation violated at value " +
                                       std::to_string(values_[v]));
            }
        }
    }

    bool done() const { return solutions_.size() >= limit_; }

    // Exact necessary conditions on the surviving patterns at this node.
    // Returns the value index to branch on, or npos when the node is dead.
    std::size_t analyse(const std::vector<std::size_t>& allowed, std::size_t bins_left) {
        constexpr auto npos = std::numeric_limits<std::size_t>::max();
        if (allowed.size() < bins_left) {
            return npos;
        }
        std::fill(supply_.begin(), supply_.end(), 0);
        std::fill(holders_.begin(), holders_.end(), 0);
        for (std::size_t p : allowed) {
            for (const auto& g : compiled_[p].groups) {
                supply_[g.value] += g.count;
                ++holders_[g.value];
            }
        }
        std::size_t pick = npos;
        std::size_t left = 0;
        for (std::size_t v = 0; v < values_.size(); ++v) {
            if (remaining_[v] == 0) {
                continue;
            }
            left += remaining_[v];
            // Each pattern is used at most once, so the survivors must be
            // able to supply every remaining copy.
            if (supply_[v] < remaining_[v]) {
                return npos;
            }
            if (pick == npos) {
                pick = v;
            } else if (!cfg_.deterministic && holders_[v] < holders_[pick]) {
                pick = v;
            }
        }
        if (left != bins_left * inst_.per_bin) {
            return npos;
        }
        return pick;
    }

    void descend(std::size_t depth) {
        ++nodes_;
        check_clock();
        if (cfg_.check_invariants) {
            check_conservation();
        }
        const std::size_t bins_left = inst_.bins - depth;
        if (bins_left == 0) {
            if (std::all_of(remaining_.begin(), remaining_.end(), [](auto c) { return c == 0; })) {
                solutions_.push_back(chosen_);
            }
            return;
        }

        const auto& allowed = levels_[depth];
        const std::size_t branch_value = analyse(allowed, bins_left);
        if (branch_value == std::numeric_limits<std::size_t>::max()) {
            return;
        }

        std::vector<std::size_t> candidates;
        for (std::size_t p : allowed) {
            const auto& groups = compiled_[p].groups;
            if (cfg_.deterministic) {
                // Index order forces the next pattern to start at the
                // smallest remaining value.
                if (groups.front().value == branch_value) {
                    candidates.push_back(p);
                }
            } else if (std::any_of(groups.begin(), groups.end(),
                                   [&](const Group& g) { return g.value == branch_value; })) {
                candidates.push_back(p);
            }
        }

        auto& child = levels_[depth + 1];
        for (std::size_t c = 0; c < candidates.size() && !done(); ++c) {
            const std::size_t p = candidates[c];
            apply(p);
            chosen_.push_back(p);
            child.clear();
            for (std::size_t q : allowed) {
                if (cfg_.deterministic) {
                    if (q <= p) {
                        continue;
                    }
                } else if (std::find(candidates.begin(), candidates.begin() + c + 1, q) !=
                           candidates.begin() + c + 1) {
                    // Earlier siblings were already explored with q chosen.
                    continue;
                }
                if (fits(q)) {
                    child.push_back(q);
                }
            }
            descend(depth + 1);
            chosen_.pop_back();
            undo(p);
        }
    }

    const Instance& inst_;
    const SearchConfig& cfg_;
    std::size_t limit_;
    Clock::time_point start_;

    std::vector<Size> values_;
    std::vector<std::size_t> remaining_;
    std::vector<CompiledPattern> compiled_;
    std::vector<std::size_t> supply_;
    std::vector<std::size_t> holders_;
    std::vector<std::vector<std::size_t>> levels_;
    std::vector<std::size_t> chosen_;
    std::vector<std::vector<std::size_t>> solutions_;
    std::uint64_t nodes_ = 0;
};

void check_inputs(const Instance& inst, const PatternSet& ps) {
    const auto report = instance_validate(inst);
    if (!report.ok()) {
        throw std::invalid_argument("instance is not arithmetically feasible:\n" + report.describe());
    }
    if (ps.source_digest != instance_digest(inst)) {
        throw PatternSetMismatch("pattern set was enumerated from a different instance");
    }
}

Packing to_packing(const PatternSet& ps, const std::vector<std::size_t>& indices) {
    std::vector<BinPattern> bins;
    bins.reserve(indices.size());
    for (std::size_t i : indices) {
        bins.push_back(ps.patterns[i]);
    }
    return Packing(std::move(bins));
}

std::vector<std::vector<std::size_t>> search(const Instance& inst, const PatternSet& ps,
                                             const SearchConfig& cfg, std::size_t limit,
                                             SearchStats* stats) {
    check_inputs(inst, ps);
    CoverSearch engine(inst, ps, cfg, limit);
    engine.run();
    auto found = std::move(engine.solutions());
    for (auto& s : found) {
        std::sort(s.begin(), s.end());
    }
    if (!cfg.deterministic) {
        std::sort(found.begin(), found.end());
    }
    if (stats) {
        stats->nodes = engine.nodes();
        stats->solutions = found.size();
        stats->seconds = engine.elapsed();
    }
    return found;
}

} // namespace

std::optional<std::vector<std::size_t>> solve_indices(const Instance& inst, const PatternSet& ps,
                                                      const SearchConfig& cfg, SearchStats* stats) {
    auto found = search(inst, ps, cfg, 1, stats);
    if (found.empty()) {
        return std::nullopt;
    }
    return std::move(found.front());
}

std::optional<Packing> solve(const Instance& inst, const PatternSet& ps, const SearchConfig& cfg,
                             SearchStats* stats) {
    auto indices = solve_indices(inst, ps, cfg, stats);
    if (!indices) {
        return std::nullopt;
    }
    return to_packing(ps, *indices);
}

std::vector<Packing> solve_all(const Instance& inst, const PatternSet& ps, const SearchConfig& cfg,
                               SearchStats* stats) {
    if (cfg.solution_limit && *cfg.solution_limit == 0) {
        throw std::invalid_argument("solution_limit must be at least 1");
    }
    std::size_t limit = cfg.solution_limit.value_or(std::numeric_limits<std::size_t>::max());
    if (cfg.first_solution_only) {
        limit = 1;
    }
    std::vector<Packing> out;
    for (const auto& indices : search(inst, ps, cfg, limit, stats)) {
        out.push_back(to_packing(ps, indices));
    }
    return out;
}

} // namespace distpack
