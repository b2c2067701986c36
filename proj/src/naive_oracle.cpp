#include "distpack/naive_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "distpack/error.hpp"

namespace distpack {

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    BigInt result = 1;
    // result stays integral: after step i it equals C(n - k + i, i).
    for (std::size_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

CountReport count_report(const Instance& inst, const PatternSet& ps) {
    return {ps.size(), binomial(ps.size(), inst.bins)};
}

std::optional<Packing> subset_sweep_solve(const Instance& inst, const PatternSet& ps,
                                          std::size_t cap) {
    if (ps.source_digest != instance_digest(inst)) {
        throw PatternSetMismatch("pattern set was enumerated from a different instance");
    }
    const std::size_t m = ps.size();
    const std::size_t k = inst.bins;
    const BigInt eta = binomial(m, k);
    if (eta > cap) {
        throw OracleTooLarge("literal sweep would visit " + eta.str() +
                             " subsets, above the cap of " + std::to_string(cap));
    }
    if (k > m || k == 0) {
        return std::nullopt;
    }

    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    std::vector<BinPattern> subset(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) {
            subset[i] = ps.patterns[pick[i]];
        }
        if (multiset_equal(spread(subset), inst.items)) {
            return Packing(subset);
        }
        // Next k-combination in lexicographic order.
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == m - k + (i - 1)) {
            --i;
        }
        if (i == 0) {
            return std::nullopt;
        }
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) {
            pick[j] = pick[j - 1] + 1;
        }
    }
}

namespace {

class AssignmentSearch {
public:
    AssignmentSearch(const Instance& inst, EnumerationMode mode)
        : items_(inst.items.to_list()), bins_(inst.bins), per_bin_(inst.per_bin),
          capacity_(inst.capacity), distinct_values_(mode == EnumerationMode::distinct_values) {}

    std::optional<Packing> run() {
        if (bins_ * per_bin_ != items_.size() || per_bin_ == 0) {
            return std::nullopt;
        }
        used_.assign(items_.size(), false);
        if (!next_bin()) {
            return std::nullopt;
        }
        return Packing(packed_);
    }

private:
    // Opens a new bin seeded with the smallest unused item; bin order is
    // thereby fixed and permutations of the same packing are never revisited.
    bool next_bin() {
        if (packed_.size() == bins_) {
            return std::all_of(used_.begin(), used_.end(), [](bool u) { return u; });
        }
        const auto first = std::find(used_.begin(), used_.end(), false) - used_.begin();
        used_[first] = true;
        current_.assign(1, items_[first]);
        const bool ok = fill(static_cast<std::size_t>(first), items_[first]);
        current_.clear();
        used_[first] = false;
        return ok;
    }

    bool fill(std::size_t last, Size total) {
        if (current_.size() == per_bin_) {
            if (total != capacity_) {
                return false;
            }
            BinPattern bin(current_);
            if (std::find(packed_.begin(), packed_.end(), bin) != packed_.end()) {
                return false;
            }
            packed_.push_back(bin);
            auto saved = current_;
            if (next_bin()) {
                return true;
            }
            current_ = std::move(saved);
            packed_.pop_back();
            return false;
        }
        bool tried = false;
        Size tried_value = 0;
        for (std::size_t j = last + 1; j < items_.size(); ++j) {
            if (used_[j] || (tried && items_[j] == tried_value)) {
                continue;
            }
            if (distinct_values_ && items_[j] == current_.back()) {
                continue;
            }
            if (total + items_[j] > capacity_) {
                break;
            }
            tried = true;
            tried_value = items_[j];
            used_[j] = true;
            current_.push_back(items_[j]);
            const bool ok = fill(j, total + items_[j]);
            current_.pop_back();
            used_[j] = false;
            if (ok) {
                return true;
            }
        }
        return false;
    }

    std::vector<Size> items_;
    std::size_t bins_;
    std::size_t per_bin_;
    Size capacity_;
    bool distinct_values_;
    std::vector<bool> used_;
    std::vector<Size> current_;
    std::vector<BinPattern> packed_;
};

} // namespace

std::optional<Packing> brute_force_assign(const Instance& inst, EnumerationMode mode) {
    if (inst.items.total_count() > brute_force_max_items) {
        throw InstanceTooLarge("brute-force assignment handles at most " +
                               std::to_string(brute_force_max_items) + " items, got " +
                               std::to_string(inst.items.total_count()));
    }
    return AssignmentSearch(inst, mode).run();
}

} // namespace distpack
