#include "distpack/multiset.hpp"

#include <stdexcept>
#include <string>

#include "distpack/error.hpp"

namespace distpack {

Multiset Multiset::from_list(std::span<const Size> values) {
    Multiset m;
    for (Size v : values) {
        if (v <= 0) {
            throw NonPositiveValue("item size must be positive, got " + std::to_string(v));
        }
        ++m.entries_[v];
    }
    m.total_ = values.size();
    return m;
}

Multiset Multiset::from_counts(const Entries& counts) {
    Multiset m;
    for (const auto& [value, count] : counts) {
        if (value <= 0) {
            throw NonPositiveValue("item size must be positive, got " + std::to_string(value));
        }
        if (count == 0) {
            throw NonPositiveValue("multiplicity of " + std::to_string(value) + " is zero");
        }
        m.entries_.emplace(value, count);
        m.total_ += count;
    }
    return m;
}

std::size_t Multiset::multiplicity(Size value) const noexcept {
    auto it = entries_.find(value);
    return it == entries_.end() ? 0 : it->second;
}

Size Multiset::sum() const {
    Size total = 0;
    for (const auto& [value, count] : entries_) {
        Size part = 0;
        if (__builtin_mul_overflow(value, static_cast<Size>(count), &part) ||
            __builtin_add_overflow(total, part, &total)) {
            throw std::overflow_error("multiset sum overflows 64-bit size range");
        }
    }
    return total;
}

std::vector<Size> Multiset::to_list() const {
    std::vector<Size> out;
    out.reserve(total_);
    for (const auto& [value, count] : entries_) {
        out.insert(out.end(), count, value);
    }
    return out;
}

Multiset Multiset::scaled(Size factor) const {
    if (factor <= 0) {
        throw NonPositiveValue("scale factor must be positive");
    }
    Multiset m;
    for (const auto& [value, count] : entries_) {
        Size v = 0;
        if (__builtin_mul_overflow(value, factor, &v)) {
            throw std::overflow_error("scaled size overflows 64-bit range");
        }
        m.entries_.emplace(v, count);
    }
    m.total_ = total_;
    return m;
}

bool multiset_equal(const Multiset& a, const Multiset& b) {
    return a.total_count() == b.total_count() && a.entries() == b.entries();
}

std::vector<Size> extracted_set(const Multiset& m) {
    std::vector<Size> out;
    out.reserve(m.distinct_count());
    for (const auto& entry : m.entries()) {
        out.push_back(entry.first);
    }
    return out;
}

} // namespace distpack
