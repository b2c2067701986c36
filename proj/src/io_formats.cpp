#include "distpack/io_formats.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "distpack/error.hpp"
#include "distpack/verifier.hpp"

namespace distpack {

namespace {

struct Line {
    std::size_t number;  // 1-based
    std::string_view text;
};

// Splits on '\n' and strips a trailing '\r'.
std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const auto end = text.find('\n');
        auto line = text.substr(0, end);
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back({number++, line});
        if (end == std::string_view::npos) {
            break;
        }
        text.remove_prefix(end + 1);
    }
    return lines;
}

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::string_view trim(std::string_view s) {
    while (!s.empty() && is_blank(s.front())) {
        s.remove_prefix(1);
    }
    while (!s.empty() && is_blank(s.back())) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && is_blank(s[i])) {
            ++i;
        }
        std::size_t j = i;
        while (j < s.size() && !is_blank(s[j])) {
            ++j;
        }
        if (j > i) {
            out.push_back(s.substr(i, j - i));
        }
        i = j;
    }
    return out;
}

// Base-10 ASCII digits only; no sign, no locale.
template <typename Int>
Int parse_int(std::string_view token, std::size_t line, const char* what) {
    Int value{};
    if (token.empty() || token.front() < '0' || token.front() > '9') {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError(line, std::string(what) + " out of range: " + std::string(token));
    }
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + std::string(token) + "'");
    }
    return value;
}

// Cursor over non-blank lines.
class LineReader {
public:
    explicit LineReader(std::string_view text) : lines_(split_lines(text)) {}

    const Line* next() {
        while (pos_ < lines_.size()) {
            const Line& l = lines_[pos_++];
            if (!trim(l.text).empty()) {
                return &l;
            }
        }
        return nullptr;
    }

    const Line& require(const char* what) {
        const Line* l = next();
        if (!l) {
            throw ParseError(last_line(), std::string("unexpected end of input, expected ") + what);
        }
        return *l;
    }

    std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

private:
    std::vector<Line> lines_;
    std::size_t pos_ = 0;
};

template <typename Int>
Int single_int(const Line& line, const char* what) {
    const auto t = tokens(line.text);
    if (t.size() != 1) {
        throw ParseError(line.number, std::string("expected a single ") + what);
    }
    return parse_int<Int>(t.front(), line.number, what);
}

Size item_size(const Line& line) {
    const auto v = single_int<Size>(line, "item size");
    if (v <= 0) {
        throw ParseError(line.number, "item size must be positive");
    }
    return v;
}

// Fills bins/per_bin/capacity: overrides first, then file values, then
// k = sum / capacity and per_bin = n / k.
Instance derive(std::vector<Size> sizes, std::optional<Size> file_capacity, const Overrides& ov,
                const std::string& name) {
    Instance inst;
    inst.items = Multiset::from_list(sizes);
    inst.relaxed_bounds = ov.relaxed_bounds;
    const std::size_t n = inst.items.total_count();
    const Size total = inst.items.sum();

    std::optional<Size> capacity = ov.capacity ? ov.capacity : file_capacity;
    if (!capacity) {
        if (!ov.bins || *ov.bins == 0) {
            throw DerivationError(name + ": capacity is required unless bins is given");
        }
        if (total % static_cast<Size>(*ov.bins) != 0) {
            throw DerivationError(name + ": item sum " + std::to_string(total) +
                                  " is not divisible by bins " + std::to_string(*ov.bins));
        }
        capacity = total / static_cast<Size>(*ov.bins);
    }
    if (*capacity <= 0) {
        throw DerivationError(name + ": capacity must be positive");
    }
    inst.capacity = *capacity;

    if (ov.bins) {
        inst.bins = *ov.bins;
    } else {
        if (total % inst.capacity != 0) {
            throw DerivationError(name + ": item sum " + std::to_string(total) +
                                  " is not a multiple of capacity " + std::to_string(inst.capacity));
        }
        inst.bins = static_cast<std::size_t>(total / inst.capacity);
    }

    if (ov.per_bin) {
        inst.per_bin = *ov.per_bin;
    } else {
        if (inst.bins == 0 || n % inst.bins != 0) {
            throw DerivationError(name + ": item count " + std::to_string(n) +
                                  " is not divisible by bins " + std::to_string(inst.bins));
        }
        inst.per_bin = n / inst.bins;
    }
    return inst;
}

InstanceFormat detect_format(std::string_view text) {
    LineReader reader(text);
    const Line* first = reader.next();
    if (!first) {
        throw ParseError(1, "empty instance file");
    }
    if (tokens(first->text).size() > 1) {
        return InstanceFormat::list;
    }
    const Line* second = reader.next();
    if (!second) {
        return InstanceFormat::list;
    }
    const auto t = tokens(second->text);
    const bool numeric = t.size() == 1 && t.front().find_first_not_of("0123456789") == std::string_view::npos;
    return numeric ? InstanceFormat::bpplib : InstanceFormat::falkenauer;
}

InstanceFile parse_bpplib(std::string_view text, const Overrides& ov, const std::string& name) {
    LineReader reader(text);
    const auto n = single_int<std::size_t>(reader.require("item count"), "item count");
    const auto capacity = single_int<Size>(reader.require("capacity"), "capacity");
    std::vector<Size> sizes;
    sizes.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        sizes.push_back(item_size(reader.require("item size")));
    }
    if (const Line* extra = reader.next()) {
        throw ParseError(extra->number, "trailing data after " + std::to_string(n) + " items");
    }
    InstanceFile file{InstanceFormat::bpplib, {}};
    file.instances.push_back({name, derive(std::move(sizes), capacity, ov, name)});
    return file;
}

InstanceFile parse_falkenauer(std::string_view text, const Overrides& ov) {
    LineReader reader(text);
    const auto problems = single_int<std::size_t>(reader.require("problem count"), "problem count");
    InstanceFile file{InstanceFormat::falkenauer, {}};
    for (std::size_t p = 0; p < problems; ++p) {
        const Line& id = reader.require("problem identifier");
        const std::string name(trim(id.text));
        const Line& header = reader.require("problem header");
        const auto fields = tokens(header.text);
        if (fields.size() < 2 || fields.size() > 3) {
            throw ParseError(header.number, "expected 'capacity n [best-known]'");
        }
        const auto capacity = parse_int<Size>(fields[0], header.number, "capacity");
        const auto n = parse_int<std::size_t>(fields[1], header.number, "item count");
        if (fields.size() == 3) {
            parse_int<std::size_t>(fields[2], header.number, "best-known bin count");
        }
        std::vector<Size> sizes;
        sizes.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            sizes.push_back(item_size(reader.require("item size")));
        }
        file.instances.push_back({name, derive(std::move(sizes), capacity, ov, name)});
    }
    if (const Line* extra = reader.next()) {
        throw ParseError(extra->number, "trailing data after " + std::to_string(problems) + " problems");
    }
    return file;
}

InstanceFile parse_list(std::string_view text, const Overrides& ov, const std::string& name) {
    std::vector<Size> sizes;
    for (const auto& line : split_lines(text)) {
        for (auto tok : tokens(line.text)) {
            const auto v = parse_int<Size>(tok, line.number, "item size");
            if (v <= 0) {
                throw ParseError(line.number, "item size must be positive");
            }
            sizes.push_back(v);
        }
    }
    InstanceFile file{InstanceFormat::list, {}};
    file.instances.push_back({name, derive(std::move(sizes), std::nullopt, ov, name)});
    return file;
}

void write_bins(std::ostream& out, const Packing& packing) {
    for (const auto& bin : packing.bins) {
        const auto& sizes = bin.sizes();
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            out << (i ? " " : "") << sizes[i];
        }
        out << '\n';
    }
}

} // namespace

std::string_view to_string(InstanceFormat format) {
    switch (format) {
    case InstanceFormat::bpplib:
        return "bpplib";
    case InstanceFormat::falkenauer:
        return "falkenauer";
    case InstanceFormat::list:
        return "list";
    case InstanceFormat::detect:
        return "auto";
    }
    return "unknown";
}

std::optional<InstanceFormat> parse_format(std::string_view text) {
    for (auto f : {InstanceFormat::bpplib, InstanceFormat::falkenauer, InstanceFormat::list,
                   InstanceFormat::detect}) {
        if (text == to_string(f)) {
            return f;
        }
    }
    return std::nullopt;
}

InstanceFile parse_instance(std::string_view text, InstanceFormat format, const Overrides& overrides,
                            const std::string& name) {
    if (format == InstanceFormat::detect) {
        format = detect_format(text);
    }
    switch (format) {
    case InstanceFormat::bpplib:
        return parse_bpplib(text, overrides, name);
    case InstanceFormat::falkenauer:
        return parse_falkenauer(text, overrides);
    case InstanceFormat::list:
    case InstanceFormat::detect:
        break;
    }
    return parse_list(text, overrides, name);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

InstanceFile load_instance_file(const std::filesystem::path& path, InstanceFormat format,
                                const Overrides& overrides) {
    return parse_instance(read_text_file(path), format, overrides, path.stem().string());
}

std::string serialize_solution(const Instance& inst, const Packing& packing) {
    const auto report = verify(inst, packing);
    if (!report.valid()) {
        throw InvalidPacking("refusing to serialize an invalid packing:\n" + report.describe());
    }
    const Packing canonical(packing.bins);
    std::ostringstream out;
    out << "bins=" << inst.bins << " per_bin=" << inst.per_bin << " capacity=" << inst.capacity
        << '\n';
    write_bins(out, canonical);
    return out.str();
}

SolutionFile parse_solution_file(std::string_view text) {
    LineReader reader(text);
    const Line& header = reader.require("solution header");
    const auto fields = tokens(header.text);
    const char* keys[] = {"bins=", "per_bin=", "capacity="};
    if (fields.size() != 3) {
        throw ParseError(header.number, "expected 'bins=<k> per_bin=<l> capacity=<c>'");
    }
    for (std::size_t i = 0; i < 3; ++i) {
        if (!fields[i].starts_with(keys[i])) {
            throw ParseError(header.number, std::string("expected field ") + keys[i]);
        }
    }
    SolutionFile sol;
    sol.bins = parse_int<std::size_t>(fields[0].substr(5), header.number, "bin count");
    sol.per_bin = parse_int<std::size_t>(fields[1].substr(8), header.number, "items per bin");
    sol.capacity = parse_int<Size>(fields[2].substr(9), header.number, "capacity");

    std::vector<BinPattern> bins;
    while (const Line* line = reader.next()) {
        std::vector<Size> sizes;
        for (auto tok : tokens(line->text)) {
            sizes.push_back(parse_int<Size>(tok, line->number, "item size"));
        }
        if (sizes.size() != sol.per_bin) {
            throw ParseError(line->number, "bin holds " + std::to_string(sizes.size()) +
                                               " items but header says per_bin=" +
                                               std::to_string(sol.per_bin));
        }
        bins.emplace_back(std::move(sizes));
    }
    if (bins.size() != sol.bins) {
        throw ParseError(reader.last_line(), "header says bins=" + std::to_string(sol.bins) +
                                                 " but " + std::to_string(bins.size()) +
                                                 " bin lines follow");
    }
    sol.packing = Packing(std::move(bins));
    return sol;
}

Packing parse_solution(std::string_view text) { return parse_solution_file(text).packing; }

nlohmann::json solution_to_json(const Instance& inst, const Packing& packing) {
    nlohmann::json bins = nlohmann::json::array();
    for (const auto& bin : Packing(packing.bins).bins) {
        bins.push_back(bin.sizes());
    }
    return {{"bins", inst.bins},
            {"per_bin", inst.per_bin},
            {"capacity", inst.capacity},
            {"packing", std::move(bins)}};
}

} // namespace distpack
