#include <pybind11/chrono.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "distpack/cover_search.hpp"
#include "distpack/enumerator.hpp"
#include "distpack/error.hpp"
#include "distpack/io_formats.hpp"
#include "distpack/naive_oracle.hpp"
#include "distpack/verifier.hpp"

namespace py = pybind11;
using namespace distpack;

namespace {

using Bins = std::vector<std::vector<Size>>;

Bins to_bins(const Packing& p) {
    Bins out;
    for (const auto& b : p.bins) {
        out.push_back(b.sizes());
    }
    return out;
}

Packing from_bins(const Bins& bins) {
    std::vector<BinPattern> patterns;
    for (const auto& b : bins) {
        patterns.emplace_back(b);
    }
    return Packing(std::move(patterns));
}

std::optional<Bins> maybe_bins(const std::optional<Packing>& p) {
    if (!p) {
        return std::nullopt;
    }
    return to_bins(*p);
}

py::int_ to_pyint(const BigInt& value) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(value.str().c_str(), nullptr, 10));
}

SearchConfig make_config(std::optional<double> timeout, bool deterministic,
                         std::optional<std::size_t> limit) {
    SearchConfig cfg;
    if (timeout) {
        cfg.timeout = std::chrono::duration<double>(*timeout);
    }
    cfg.deterministic = deterministic;
    cfg.solution_limit = limit;
    return cfg;
}

} // namespace

PYBIND11_MODULE(_distpack, m) {
    m.doc() = "Exact distinct bin packing";

    auto base = py::register_exception<Error>(m, "DistpackError", PyExc_RuntimeError);
    py::register_exception<NonPositiveValue>(m, "NonPositiveValue", base.ptr());
    py::register_exception<PatternExplosion>(m, "PatternExplosion", base.ptr());
    py::register_exception<TimeoutExceeded>(m, "TimeoutExceeded", base.ptr());
    py::register_exception<PatternSetMismatch>(m, "PatternSetMismatch", base.ptr());
    py::register_exception<OracleTooLarge>(m, "OracleTooLarge", base.ptr());
    py::register_exception<InstanceTooLarge>(m, "InstanceTooLarge", base.ptr());
    py::register_exception<InvalidPacking>(m, "InvalidPacking", base.ptr());
    py::register_exception<DerivationError>(m, "DerivationError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());

    py::class_<Multiset>(m, "Multiset")
        .def(py::init([](const std::vector<Size>& values) { return Multiset::from_list(values); }),
             py::arg("values") = std::vector<Size>{})
        .def("multiplicity", &Multiset::multiplicity)
        .def_property_readonly("total_count", &Multiset::total_count)
        .def_property_readonly("entries", &Multiset::entries)
        .def("to_list", &Multiset::to_list)
        .def("__len__", &Multiset::total_count)
        .def("__eq__", [](const Multiset& a, const Multiset& b) { return multiset_equal(a, b); })
        .def("__repr__", [](const Multiset& ms) {
            return "Multiset(" + py::repr(py::cast(ms.to_list())).cast<std::string>() + ")";
        });

    m.def("multiset_equal", &multiset_equal);
    m.def("extracted_set", &extracted_set);
    m.def("spread", [](const Bins& bins) { return spread(from_bins(bins).bins); });

    py::class_<Instance>(m, "Instance")
        .def(py::init([](const std::vector<Size>& items, std::size_t bins, std::size_t per_bin,
                         Size capacity, bool relaxed) {
                 return Instance{Multiset::from_list(items), bins, per_bin, capacity, relaxed};
             }),
             py::arg("items"), py::arg("bins"), py::arg("per_bin"), py::arg("capacity"),
             py::arg("relaxed_bounds") = false)
        .def_readonly("items", &Instance::items)
        .def_readonly("bins", &Instance::bins)
        .def_readonly("per_bin", &Instance::per_bin)
        .def_readonly("capacity", &Instance::capacity)
        .def_readonly("relaxed_bounds", &Instance::relaxed_bounds);

    m.def("instance_validate", [](const Instance& inst) {
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& v : instance_validate(inst).violations) {
            out.emplace_back(std::string(to_string(v.kind)), v.detail);
        }
        return out;
    });

    py::enum_<EnumerationMode>(m, "EnumerationMode")
        .value("DISTINCT_VALUES", EnumerationMode::distinct_values)
        .value("MULTIPLICITY_BOUNDED", EnumerationMode::multiplicity_bounded);

    py::class_<PatternSet>(m, "PatternSet")
        .def_property_readonly("patterns", [](const PatternSet& ps) {
            Bins out;
            for (const auto& p : ps.patterns) {
                out.push_back(p.sizes());
            }
            return out;
        })
        .def_readonly("mode", &PatternSet::mode)
        .def_readonly("source_digest", &PatternSet::source_digest)
        .def("__len__", &PatternSet::size);

    m.def("enumerate_patterns",
          py::overload_cast<const Instance&, EnumerationMode, std::size_t>(&enumerate_patterns),
          py::arg("instance"),
          py::arg("mode") = EnumerationMode::distinct_values, py::arg("cap") = default_pattern_cap);
    m.def("value_support", &value_support);
    m.def("format_pattern_dump", &format_pattern_dump);

    m.def(
        "solve",
        [](const Instance& inst, const PatternSet& ps, std::optional<double> timeout, bool deterministic) {
            std::optional<Packing> found;
            {
                py::gil_scoped_release release;
                found = solve(inst, ps, make_config(timeout, deterministic, std::nullopt));
            }
            return maybe_bins(found);
        },
        py::arg("instance"), py::arg("patterns"), py::arg("timeout") = py::none(),
        py::arg("deterministic") = true);
    m.def(
        "solve_all",
        [](const Instance& inst, const PatternSet& ps, std::optional<std::size_t> limit,
           std::optional<double> timeout) {
            std::vector<Packing> found;
            {
                py::gil_scoped_release release;
                found = solve_all(inst, ps, make_config(timeout, true, limit));
            }
            std::vector<Bins> out;
            for (const auto& p : found) {
                out.push_back(to_bins(p));
            }
            return out;
        },
        py::arg("instance"), py::arg("patterns"), py::arg("limit") = py::none(),
        py::arg("timeout") = py::none());

    m.def("verify", [](const Instance& inst, const Bins& bins) {
        const auto report = verify(inst, from_bins(bins));
        std::vector<std::pair<std::string, std::string>> violations;
        for (const auto& v : report.violations) {
            violations.emplace_back(std::string(to_string(v.kind)), v.detail);
        }
        return py::make_tuple(report.valid(), violations);
    });

    m.def("binomial", [](std::size_t n, std::size_t k) { return to_pyint(binomial(n, k)); });
    m.def("count_report", [](const Instance& inst, const PatternSet& ps) {
        const auto r = count_report(inst, ps);
        return py::make_tuple(r.pattern_count, to_pyint(r.subset_count));
    });
    m.def(
        "subset_sweep_solve",
        [](const Instance& inst, const PatternSet& ps, std::size_t cap) {
            return maybe_bins(subset_sweep_solve(inst, ps, cap));
        },
        py::arg("instance"), py::arg("patterns"), py::arg("cap") = default_oracle_cap);
    m.def(
        "brute_force_assign",
        [](const Instance& inst, EnumerationMode mode) { return maybe_bins(brute_force_assign(inst, mode)); },
        py::arg("instance"), py::arg("mode") = EnumerationMode::multiplicity_bounded);

    m.def(
        "parse_instance",
        [](const std::string& text, const std::string& format, std::optional<Size> capacity,
           std::optional<std::size_t> per_bin, std::optional<std::size_t> bins, bool relaxed) {
            const auto fmt = parse_format(format);
            if (!fmt) {
                throw py::value_error("unknown format '" + format + "'");
            }
            auto file = parse_instance(text, *fmt, Overrides{bins, per_bin, capacity, relaxed});
            std::vector<std::pair<std::string, Instance>> out;
            for (auto& named : file.instances) {
                out.emplace_back(std::move(named.name), std::move(named.instance));
            }
            return out;
        },
        py::arg("text"), py::arg("format") = "auto", py::arg("capacity") = py::none(),
        py::arg("per_bin") = py::none(), py::arg("bins") = py::none(),
        py::arg("relaxed_bounds") = false);
    m.def("serialize_solution",
          [](const Instance& inst, const Bins& bins) { return serialize_solution(inst, from_bins(bins)); });
    m.def("parse_solution", [](const std::string& text) { return to_bins(parse_solution(text)); });

    m.attr("__version__") = "0.1.0";
}
