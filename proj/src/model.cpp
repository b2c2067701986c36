#include "distpack/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace distpack {

namespace {

std::string int128_string(__int128 value) {
    if (value == 0) {
        return "0";
    }
    const bool negative = value < 0;
    unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(value)
                                     : static_cast<unsigned __int128>(value);
    std::string digits;
    while (mag != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
        mag /= 10;
    }
    if (negative) {
        digits.push_back('-');
    }
    return {digits.rbegin(), digits.rend()};
}

} // namespace

Instance Instance::scaled(Size factor) const {
    Instance out = *this;
    out.items = items.scaled(factor);
    out.capacity = capacity * factor;
    return out;
}

BinPattern::BinPattern(std::vector<Size> sizes) : sizes_(std::move(sizes)) {
    std::sort(sizes_.begin(), sizes_.end());
}

Size BinPattern::sum() const noexcept {
    return std::accumulate(sizes_.begin(), sizes_.end(), Size{0});
}

bool BinPattern::contains(Size value) const noexcept {
    return std::binary_search(sizes_.begin(), sizes_.end(), value);
}

Packing::Packing(std::vector<BinPattern> patterns) : bins(std::move(patterns)) {
    std::sort(bins.begin(), bins.end());
}

Multiset spread(std::span<const BinPattern> patterns) {
    std::vector<Size> all;
    for (const auto& p : patterns) {
        all.insert(all.end(), p.sizes().begin(), p.sizes().end());
    }
    return Multiset::from_list(all);
}

std::string_view to_string(ConstraintKind kind) {
    switch (kind) {
    case ConstraintKind::count_mismatch:
        return "count-mismatch";
    case ConstraintKind::sum_mismatch:
        return "sum-mismatch";
    case ConstraintKind::size_bounds:
        return "size-bounds";
    case ConstraintKind::per_bin_bounds:
        return "per-bin-bounds";
    case ConstraintKind::nonpositive_param:
        return "nonpositive-parameter";
    }
    return "unknown";
}

bool ValidationReport::has(ConstraintKind kind) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const auto& v) { return v.kind == kind; });
}

std::string ValidationReport::describe() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        out << to_string(v.kind) << ": " << v.detail << '\n';
    }
    return out.str();
}

ValidationReport instance_validate(const Instance& inst) {
    ValidationReport report;
    auto add = [&](ConstraintKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
    };

    const auto n = inst.items.total_count();
    if (inst.bins == 0 || inst.per_bin == 0 || inst.capacity <= 0) {
        std::ostringstream d;
        d << "bins=" << inst.bins << " per_bin=" << inst.per_bin << " capacity=" << inst.capacity
          << " must all be positive";
        add(ConstraintKind::nonpositive_param, d.str());
    }

    if (inst.bins * inst.per_bin != n) {
        std::ostringstream d;
        d << "bins*per_bin=" << inst.bins * inst.per_bin << " != n=" << n;
        add(ConstraintKind::count_mismatch, d.str());
    }

    // 128-bit so that neither side can overflow for 64-bit inputs.
    __int128 total = 0;
    for (const auto& [value, count] : inst.items.entries()) {
        total += static_cast<__int128>(value) * static_cast<__int128>(count);
    }
    const __int128 target = static_cast<__int128>(inst.capacity) * static_cast<__int128>(inst.bins);
    if (total != target) {
        std::ostringstream d;
        d << "sum=" << int128_string(total) << " != bins*capacity=" << int128_string(target);
        add(ConstraintKind::sum_mismatch, d.str());
    }

    if (!inst.items.empty()) {
        const Size smallest = inst.items.entries().begin()->first;
        const Size largest = inst.items.entries().rbegin()->first;
        if (smallest <= 0 || largest > inst.capacity) {
            std::ostringstream d;
            d << "item sizes span [" << smallest << ", " << largest << "], must lie in (0, "
              << inst.capacity << "]";
            add(ConstraintKind::size_bounds, d.str());
        }
    }

    if (!inst.relaxed_bounds && !(1 < inst.per_bin && inst.per_bin < n)) {
        std::ostringstream d;
        d << "per_bin=" << inst.per_bin << " outside (1, " << n << ")";
        add(ConstraintKind::per_bin_bounds, d.str());
    }
    return report;
}

std::uint64_t instance_digest(const Instance& inst) {
    // FNV-1a over a fixed-width little-endian encoding.
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t word) {
        for (int i = 0; i < 8; ++i) {
            h ^= (word >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    mix(inst.bins);
    mix(inst.per_bin);
    mix(static_cast<std::uint64_t>(inst.capacity));
    mix(inst.items.distinct_count());
    for (const auto& [value, count] : inst.items.entries()) {
        mix(static_cast<std::uint64_t>(value));
        mix(count);
    }
    return h;
}

} // namespace distpack
