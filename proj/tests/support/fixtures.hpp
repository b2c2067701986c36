#pragma once

// Shared test data and test-only oracles. Nothing here calls into the
// enumerator or the cover search.

#include <algorithm>
#include <filesystem>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "distpack/model.hpp"

namespace distpack::testing {

using Rng = std::mt19937_64;

inline std::filesystem::path data_dir() { return DISTPACK_DATA_DIR; }

// First Falkenauer triplet instance: 60 items, capacity 1000.
inline std::vector<Size> t60_items() {
    return {251, 251, 252, 254, 255, 256, 257, 258, 258, 260, 260, 261, 262, 264, 265,
            267, 269, 270, 275, 277, 280, 282, 289, 297, 300, 302, 304, 305, 307, 308,
            313, 314, 319, 333, 334, 339, 340, 347, 361, 366, 369, 376, 382, 396, 396,
            399, 402, 403, 409, 411, 412, 423, 426, 444, 447, 462, 465, 468, 473, 475};
}

// Distinct values of t60_items(), as published alongside the instance.
inline std::vector<Size> t60_distinct_values() {
    return {251, 252, 254, 255, 256, 257, 258, 260, 261, 262, 264, 265, 267, 269,
            270, 275, 277, 280, 282, 289, 297, 300, 302, 304, 305, 307, 308, 313,
            314, 319, 333, 334, 339, 340, 347, 361, 366, 369, 376, 382, 396, 399,
            402, 403, 409, 411, 412, 423, 426, 444, 447, 462, 465, 468, 473, 475};
}

inline Instance t60_instance() { return {Multiset::from_list(t60_items()), 20, 3, 1000}; }

// Published 20-triplet packing of t60_instance().
inline std::vector<std::vector<Size>> t60_published_packing() {
    return {{251, 302, 447}, {251, 305, 444}, {252, 339, 409}, {254, 347, 399}, {255, 280, 465},
            {256, 269, 475}, {257, 361, 382}, {258, 319, 423}, {258, 366, 376}, {260, 267, 473},
            {260, 314, 426}, {261, 277, 462}, {262, 270, 468}, {264, 340, 396}, {265, 333, 402},
            {275, 313, 412}, {282, 307, 411}, {289, 308, 403}, {297, 334, 369}, {300, 304, 396}};
}

inline Packing make_packing(const std::vector<std::vector<Size>>& bins) {
    std::vector<BinPattern> patterns;
    for (const auto& b : bins) {
        patterns.emplace_back(b);
    }
    return Packing(std::move(patterns));
}

inline Instance make_instance(std::vector<Size> items, std::size_t bins, std::size_t per_bin,
                              Size capacity, bool relaxed = false) {
    return {Multiset::from_list(items), bins, per_bin, capacity, relaxed};
}

// O(m^3) sweep over value triples a < b < c.
inline std::vector<std::vector<Size>> brute_force_triples(const std::vector<Size>& values, Size target) {
    std::vector<std::vector<Size>> out;
    const auto m = values.size();
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            for (std::size_t c = b + 1; c < m; ++c) {
                if (values[a] + values[b] + values[c] == target) {
                    out.push_back({values[a], values[b], values[c]});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Odometer over every non-decreasing width-tuple of distinct values; no
// pruning at all. `allow_repeats` admits a value up to its multiplicity.
inline std::vector<std::vector<Size>> brute_force_patterns(const Multiset& items, std::size_t width,
                                                           Size target, bool allow_repeats) {
    std::vector<std::vector<Size>> out;
    const auto values = [&] {
        std::vector<Size> v;
        for (const auto& e : items.entries()) {
            v.push_back(e.first);
        }
        return v;
    }();
    const auto m = values.size();
    if (m == 0 || width == 0) {
        return out;
    }
    std::vector<std::size_t> idx(width, 0);
    while (true) {
        bool canonical = true;
        for (std::size_t i = 1; i < width; ++i) {
            if (idx[i] < idx[i - 1] || (!allow_repeats && idx[i] == idx[i - 1])) {
                canonical = false;
            }
        }
        if (canonical) {
            std::vector<Size> tuple;
            Size total = 0;
            for (auto i : idx) {
                tuple.push_back(values[i]);
                total += values[i];
            }
            bool within = true;
            for (auto v : tuple) {
                if (static_cast<std::size_t>(std::count(tuple.begin(), tuple.end(), v)) >
                    items.multiplicity(v)) {
                    within = false;
                }
            }
            if (total == target && within) {
                out.push_back(tuple);
            }
        }
        std::size_t pos = 0;
        while (pos < width && ++idx[pos] == m) {
            idx[pos++] = 0;
        }
        if (pos == width) {
            break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<Size>> as_vectors(const std::vector<BinPattern>& patterns) {
    std::vector<std::vector<Size>> out;
    for (const auto& p : patterns) {
        out.push_back(p.sizes());
    }
    return out;
}

using BinList = std::vector<std::vector<Size>>;

// Every way to split the items into bins of per_bin items, kept when each
// bin sums to capacity and the bins are pairwise distinct. Exponential;
// for n <= 12 only.
inline std::set<BinList> all_distinct_packings(const Instance& inst, bool distinct_values) {
    std::set<BinList> out;
    const auto items = inst.items.to_list();
    if (inst.per_bin == 0 || inst.bins * inst.per_bin != items.size()) {
        return out;
    }
    std::vector<int> owner(items.size(), -1);
    std::vector<std::size_t> fill(inst.bins, 0);
    // Item i goes to bin b only if b is already open or the first empty one,
    // which removes bin relabelings.
    auto place = [&](auto&& self, std::size_t i, std::size_t open) -> void {
        if (i == items.size()) {
            BinList bins(inst.bins);
            for (std::size_t j = 0; j < items.size(); ++j) {
                bins[static_cast<std::size_t>(owner[j])].push_back(items[j]);
            }
            for (auto& b : bins) {
                std::sort(b.begin(), b.end());
                if (std::accumulate(b.begin(), b.end(), Size{0}) != inst.capacity) {
                    return;
                }
                if (distinct_values && std::adjacent_find(b.begin(), b.end()) != b.end()) {
                    return;
                }
            }
            std::sort(bins.begin(), bins.end());
            if (std::adjacent_find(bins.begin(), bins.end()) != bins.end()) {
                return;
            }
            out.insert(bins);
            return;
        }
        for (std::size_t b = 0; b < std::min(open + 1, inst.bins); ++b) {
            if (fill[b] == inst.per_bin) {
                continue;
            }
            owner[i] = static_cast<int>(b);
            ++fill[b];
            self(self, i + 1, std::max(open, b + 1));
            --fill[b];
        }
    };
    place(place, 0, 0);
    return out;
}

inline BinList as_bin_list(const Packing& p) { return as_vectors(p.bins); }

// Random desk-scale instance: n <= 12, sizes in [1, 20], per_bin a proper
// divisor of n, bins = n / per_bin, capacity = sum / bins. Half the draws
// are built bin by bin so that feasible instances are common.
inline Instance random_small_instance(Rng& rng, bool relaxed = false) {
    const std::vector<std::size_t> sizes_n = {4, 6, 8, 9, 10, 12};
    std::uniform_int_distribution<Size> value(1, 20);
    while (true) {
        const std::size_t n = sizes_n[std::uniform_int_distribution<std::size_t>(0, sizes_n.size() - 1)(rng)];
        std::vector<std::size_t> divisors;
        for (std::size_t d = 2; d < n; ++d) {
            if (n % d == 0) {
                divisors.push_back(d);
            }
        }
        const std::size_t per_bin =
            divisors[std::uniform_int_distribution<std::size_t>(0, divisors.size() - 1)(rng)];
        const std::size_t bins = n / per_bin;

        std::vector<Size> items;
        if (std::bernoulli_distribution(0.5)(rng)) {
            const Size capacity = std::uniform_int_distribution<Size>(
                static_cast<Size>(per_bin), static_cast<Size>(per_bin) * 20)(rng);
            bool ok = true;
            for (std::size_t b = 0; b < bins && ok; ++b) {
                ok = false;
                for (int attempt = 0; attempt < 200 && !ok; ++attempt) {
                    std::vector<Size> bin;
                    Size sum = 0;
                    for (std::size_t i = 0; i + 1 < per_bin; ++i) {
                        bin.push_back(value(rng));
                        sum += bin.back();
                    }
                    const Size last = capacity - sum;
                    if (last >= 1 && last <= 20) {
                        bin.push_back(last);
                        items.insert(items.end(), bin.begin(), bin.end());
                        ok = true;
                    }
                }
            }
            if (!ok) {
                continue;
            }
        } else {
            for (std::size_t i = 0; i < n; ++i) {
                items.push_back(value(rng));
            }
            const Size sum = std::accumulate(items.begin(), items.end(), Size{0});
            const Size rem = sum % static_cast<Size>(bins);
            if (rem != 0) {
                const Size up = items.back() + (static_cast<Size>(bins) - rem);
                const Size down = items.back() - rem;
                if (up <= 20) {
                    items.back() = up;
                } else if (down >= 1) {
                    items.back() = down;
                } else {
                    continue;
                }
            }
        }
        std::shuffle(items.begin(), items.end(), rng);
        const Size sum = std::accumulate(items.begin(), items.end(), Size{0});
        const Size capacity = sum / static_cast<Size>(bins);
        if (*std::max_element(items.begin(), items.end()) > capacity) {
            continue;
        }
        return make_instance(items, bins, per_bin, capacity, relaxed);
    }
}

// Triplet instance in the style of the Falkenauer T class: each bin is
// (x, y, 1000 - x - y) with x in [380, 490] and y in [250, (1000 - x) / 2].
inline std::vector<Size> triplet_items(Rng& rng, std::size_t bins) {
    std::vector<Size> items;
    for (std::size_t b = 0; b < bins; ++b) {
        const Size x = std::uniform_int_distribution<Size>(380, 490)(rng);
        const Size y = std::uniform_int_distribution<Size>(250, (1000 - x) / 2)(rng);
        items.insert(items.end(), {x, y, 1000 - x - y});
    }
    std::shuffle(items.begin(), items.end(), rng);
    return items;
}

} // namespace distpack::testing
