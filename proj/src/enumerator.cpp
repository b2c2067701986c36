#include "distpack/enumerator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "distpack/error.hpp"

namespace distpack {

namespace {

// Depth-first combination generator over a sorted pool of slots. In
// distinct-values mode each value owns one slot; in multiplicity-bounded mode
// a value owns min(multiplicity, per_bin) slots. Equal values at the same
// depth are skipped so every canonical tuple is produced once.
class PatternGenerator {
public:
    PatternGenerator(std::vector<Size> pool, std::size_t width, Size target, std::size_t cap)
        : pool_(std::move(pool)), width_(width), target_(target), cap_(cap) {
        prefix_.assign(pool_.size() + 1, 0);
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            prefix_[i + 1] = prefix_[i] + pool_[i];
        }
        current_.reserve(width_);
    }

    std::vector<BinPattern> run() {
        if (width_ > 0 && width_ <= pool_.size()) {
            extend(0, width_, target_);
        }
        return std::move(out_);
    }

private:
    // Sum of `count` consecutive slots starting at `from`.
    __int128 window(std::size_t from, std::size_t count) const {
        return prefix_[from + count] - prefix_[from];
    }

    void extend(std::size_t from, std::size_t slots, __int128 rest) {
        if (slots == 0) {
            if (rest == 0) {
                out_.emplace_back(current_);
                if (out_.size() > cap_) {
                    throw PatternExplosion("pattern count exceeds cap of " + std::to_string(cap_));
                }
            }
            return;
        }
        const std::size_t n = pool_.size();
        // The largest completion is the top `slots` slots of the pool.
        if (n - from < slots || window(n - slots, slots) < rest) {
            return;
        }
        for (std::size_t i = from; i + slots <= n; ++i) {
            if (i > from && pool_[i] == pool_[i - 1]) {
                continue;
            }
            // Smallest completion using slot i; the pool is sorted so every
            // later i is at least as large.
            if (window(i, slots) > rest) {
                break;
            }
            if (pool_[i] + window(n - (slots - 1), slots - 1) < rest) {
                continue;
            }
            current_.push_back(pool_[i]);
            extend(i + 1, slots - 1, rest - pool_[i]);
            current_.pop_back();
        }
    }

    std::vector<Size> pool_;
    std::vector<__int128> prefix_;
    std::size_t width_;
    __int128 target_;
    std::size_t cap_;
    std::vector<Size> current_;
    std::vector<BinPattern> out_;
};

} // namespace

std::string_view to_string(EnumerationMode mode) {
    return mode == EnumerationMode::distinct_values ? "distinct-values" : "multiplicity-bounded";
}

std::optional<EnumerationMode> parse_mode(std::string_view text) {
    if (text == "distinct-values") {
        return EnumerationMode::distinct_values;
    }
    if (text == "multiplicity-bounded") {
        return EnumerationMode::multiplicity_bounded;
    }
    return std::nullopt;
}

PatternSet enumerate_patterns(const Multiset& items, std::size_t per_bin, Size capacity,
                              EnumerationMode mode, std::size_t cap) {
    std::vector<Size> pool;
    for (const auto& [value, count] : items.entries()) {
        const std::size_t copies =
            mode == EnumerationMode::distinct_values ? 1 : std::min(count, per_bin);
        pool.insert(pool.end(), copies, value);
    }

    PatternSet ps;
    ps.mode = mode;
    ps.values = extracted_set(items);
    ps.per_bin = per_bin;
    ps.capacity = capacity;
    ps.patterns = PatternGenerator(std::move(pool), per_bin, capacity, cap).run();
    return ps;
}

PatternSet enumerate_patterns(const Instance& inst, EnumerationMode mode, std::size_t cap) {
    const auto report = instance_validate(inst);
    if (!report.ok()) {
        throw std::invalid_argument("instance is not arithmetically feasible:\n" + report.describe());
    }
    auto ps = enumerate_patterns(inst.items, inst.per_bin, inst.capacity, mode, cap);
    ps.source_digest = instance_digest(inst);
    return ps;
}

std::map<Size, std::vector<std::size_t>> value_support(const PatternSet& ps) {
    std::map<Size, std::vector<std::size_t>> support;
    for (Size v : ps.values) {
        support[v];
    }
    for (std::size_t i = 0; i < ps.patterns.size(); ++i) {
        const auto& sizes = ps.patterns[i].sizes();
        for (std::size_t j = 0; j < sizes.size(); ++j) {
            if (j == 0 || sizes[j] != sizes[j - 1]) {
                support[sizes[j]].push_back(i);
            }
        }
    }
    return support;
}

std::string format_pattern_dump(const PatternSet& ps) {
    std::ostringstream out;
    out << "patterns=" << ps.patterns.size() << " per_bin=" << ps.per_bin
        << " capacity=" << ps.capacity << " mode=" << to_string(ps.mode) << '\n';
    for (const auto& p : ps.patterns) {
        const auto& sizes = p.sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            out << (i ? " " : "") << sizes[i];
        }
        out << '\n';
    }
    return out.str();
}

} // namespace distpack
