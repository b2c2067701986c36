#include "distpack/verifier.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace distpack {

namespace {

std::string join(const std::vector<Size>& sizes) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        out << (i ? "," : "") << sizes[i];
    }
    out << ')';
    return out.str();
}

} // namespace

std::string_view to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::bin_count:
        return "bin-count";
    case ViolationKind::bin_length:
        return "bin-length";
    case ViolationKind::bin_sum:
        return "bin-sum";
    case ViolationKind::duplicate_bins:
        return "duplicate-bins";
    case ViolationKind::spread_mismatch:
        return "spread-mismatch";
    }
    return "unknown";
}

bool VerifyReport::has(ViolationKind kind) const noexcept {
    return std::any_of(violations.begin(), violations.end(),
                       [kind](const auto& v) { return v.kind == kind; });
}

std::string VerifyReport::describe() const {
    std::ostringstream out;
    for (const auto& v : violations) {
        out << to_string(v.kind) << ": " << v.detail << '\n';
    }
    return out.str();
}

VerifyReport verify(const Instance& inst, const Packing& packing) {
    VerifyReport report;
    auto add = [&](ViolationKind kind, std::string detail) {
        report.violations.push_back({kind, std::move(detail)});
    };

    if (packing.bins.size() != inst.bins) {
        add(ViolationKind::bin_count, "expected " + std::to_string(inst.bins) + " bins, got " +
                                          std::to_string(packing.bins.size()));
    }

    // Canonicalize defensively: Packing sorts, but its fields are public.
    std::vector<std::vector<Size>> bins;
    bins.reserve(packing.bins.size());
    for (const auto& b : packing.bins) {
        auto sizes = b.sizes();
        std::sort(sizes.begin(), sizes.end());
        bins.push_back(std::move(sizes));
    }

    for (std::size_t i = 0; i < bins.size(); ++i) {
        if (bins[i].size() != inst.per_bin) {
            add(ViolationKind::bin_length, "bin " + std::to_string(i) + " " + join(bins[i]) +
                                               " holds " + std::to_string(bins[i].size()) +
                                               " items, expected " + std::to_string(inst.per_bin));
        }
    }

    for (std::size_t i = 0; i < bins.size(); ++i) {
        __int128 total = 0;
        for (Size v : bins[i]) {
            total += v;
        }
        if (total != inst.capacity) {
            add(ViolationKind::bin_sum, "bin " + std::to_string(i) + " " + join(bins[i]) +
                                            " does not sum to " + std::to_string(inst.capacity));
        }
    }

    std::map<std::vector<Size>, std::vector<std::size_t>> seen;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        seen[bins[i]].push_back(i);
    }
    for (const auto& [content, where] : seen) {
        if (where.size() > 1) {
            std::string idx;
            for (std::size_t w : where) {
                idx += (idx.empty() ? "" : ",") + std::to_string(w);
            }
            add(ViolationKind::duplicate_bins,
                join(content) + " appears in bins " + idx);
        }
    }

    std::map<Size, long long> balance;
    for (const auto& b : bins) {
        for (Size v : b) {
            ++balance[v];
        }
    }
    for (const auto& [value, count] : inst.items.entries()) {
        balance[value] -= static_cast<long long>(count);
    }
    std::ostringstream diff;
    for (const auto& [value, delta] : balance) {
        if (delta != 0) {
            diff << ' ' << value << (delta > 0 ? ":+" : ":") << delta;
        }
    }
    if (!diff.str().empty()) {
        add(ViolationKind::spread_mismatch, "packed minus given items:" + diff.str());
    }
    return report;
}

} // namespace distpack
