#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "eden/dynamics.hpp"
#include "eden/harness.hpp"

namespace py = pybind11;
using namespace eden;

namespace {

py::object to_pyint(const BigInt& value) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(value.str().c_str(), nullptr, 10));
}

std::vector<std::string> language_strings(const EdgePresentation& p, int n) {
    std::vector<std::string> out;
    for (const Word& w : language(p, n)) out.push_back(format_word(p.alphabet, w));
    return out;
}

}  // namespace

PYBIND11_MODULE(_eden, m) {
    m.doc() = "decision procedures for endomorphisms of subshifts of finite type";

    py::register_exception<Error>(m, "EdenError");

    py::class_<SftSpec>(m, "SftSpec")
        .def_property_readonly("step", [](const SftSpec& s) { return s.step; })
        .def_property_readonly("symbols", [](const SftSpec& s) { return s.alphabet.tokens(); })
        .def_property_readonly("allowed",
                               [](const SftSpec& s) {
                                   std::vector<std::string> out;
                                   for (const Word& w : s.allowed)
                                       out.push_back(format_word(s.alphabet, w));
                                   return out;
                               })
        .def("__repr__", [](const SftSpec& s) {
            return "<SftSpec step=" + std::to_string(s.step) + " alphabet=" +
                   std::to_string(s.alphabet.size()) + " allowed=" +
                   std::to_string(s.allowed.size()) + ">";
        });

    py::class_<EdgePresentation>(m, "EdgePresentation")
        .def_property_readonly("vertex_count", &EdgePresentation::vertex_count)
        .def_property_readonly("edge_count", &EdgePresentation::edge_count)
        .def_property_readonly("empty", &EdgePresentation::empty)
        .def("__repr__", [](const EdgePresentation& p) {
            return "<EdgePresentation vertices=" + std::to_string(p.vertex_count()) +
                   " edges=" + std::to_string(p.edge_count()) + ">";
        });

    py::class_<SlidingBlockCode>(m, "SlidingBlockCode")
        .def_property_readonly("memory", [](const SlidingBlockCode& c) { return c.memory; })
        .def_property_readonly("anticipation",
                               [](const SlidingBlockCode& c) { return c.anticipation; })
        .def("__repr__", [](const SlidingBlockCode& c) {
            return "<SlidingBlockCode memory=" + std::to_string(c.memory) +
                   " anticipation=" + std::to_string(c.anticipation) + ">";
        });

    py::class_<DecisionReport>(m, "DecisionReport")
        .def_readonly("injective", &DecisionReport::injective)
        .def_readonly("surjective", &DecisionReport::surjective)
        .def_readonly("pre_injective", &DecisionReport::pre_injective)
        .def_readonly("ambient_irreducible", &DecisionReport::ambient_irreducible)
        .def_readonly("ambient_nonwandering", &DecisionReport::ambient_nonwandering)
        .def_readonly("moore_consistent", &DecisionReport::moore_consistent)
        .def_readonly("myhill_consistent", &DecisionReport::myhill_consistent)
        .def_readonly("surjunctive_consistent", &DecisionReport::surjunctive_consistent)
        .def("violation", &DecisionReport::violation)
        .def_property_readonly("non_surjective_witness",
                               [](const DecisionReport& r) -> py::object {
                                   if (!r.non_surjective_witness) return py::none();
                                   return py::cast(*r.non_surjective_witness);
                               });

    py::class_<ScanResult>(m, "ScanResult")
        .def_readonly("candidates", &ScanResult::candidates)
        .def_readonly("valid", &ScanResult::valid)
        .def_readonly("injective", &ScanResult::injective)
        .def_readonly("surjective", &ScanResult::surjective)
        .def_readonly("pre_injective", &ScanResult::pre_injective)
        .def_readonly("entropy_cross_checks", &ScanResult::entropy_cross_checks)
        .def_readonly("ambient_irreducible", &ScanResult::ambient_irreducible)
        .def_readonly("ambient_nonwandering", &ScanResult::ambient_nonwandering)
        .def_property_readonly("violations", [](const ScanResult& r) {
            std::vector<std::tuple<long long, std::string, std::string>> out;
            for (const auto& v : r.violations) out.emplace_back(v.code_index, v.kind, v.sbc);
            return out;
        });

    py::class_<Builtin>(m, "Builtin")
        .def_readonly("name", &Builtin::name)
        .def_readonly("ambient", &Builtin::ambient_name)
        .def_readonly("sft", &Builtin::sft)
        .def_readonly("sbc", &Builtin::sbc)
        .def_property_readonly("expected", [](const Builtin& b) {
            py::dict d;
            if (b.expected.injective) d["injective"] = *b.expected.injective;
            if (b.expected.surjective) d["surjective"] = *b.expected.surjective;
            if (b.expected.pre_injective) d["pre_injective"] = *b.expected.pre_injective;
            return d;
        });

    m.def("parse_spec", &parse_spec, py::arg("text"));
    m.def("emit_spec", &emit_spec);
    m.def("higher_block_recode", &higher_block_recode, py::arg("spec"));
    m.def("language", &language_strings, py::arg("presentation"), py::arg("length"));

    m.def("is_irreducible", &is_irreducible);
    m.def("is_mixing", &is_mixing);
    m.def("is_nonwandering", &is_nonwandering);
    m.def("period", &period);
    m.def("mixing_gap", &mixing_gap);
    m.def("entropy", [](const EdgePresentation& p) { return entropy(p).value; });
    m.def("count_periodic",
          [](const EdgePresentation& p, int n) { return to_pyint(count_periodic(p, n)); });
    m.def("count_least_period",
          [](const EdgePresentation& p, int n) { return to_pyint(count_least_period(p, n)); });

    m.def("parse_code",
          [](const std::string& text, const SftSpec& ambient) {
              return parse_code(text, ambient);
          },
          py::arg("text"), py::arg("ambient"));
    m.def("validate_endomorphism",
          [](const SlidingBlockCode& c, const EdgePresentation& p) {
              auto check = validate_endomorphism(c, p);
              return py::make_tuple(check.ok,
                                    format_word(c.ambient.alphabet, check.violating_source));
          });
    m.def("goe_verdict", &goe_verdict, py::arg("code"), py::arg("presentation"));

    m.def("scan",
          [](const SftSpec& spec, int memory_max, int anticipation_max, int window_min,
             int window_max, int workers) {
              ScanConfig cfg;
              cfg.memory_max = memory_max;
              cfg.anticipation_max = anticipation_max;
              cfg.window_min = window_min;
              cfg.window_max = window_max;
              cfg.workers = workers;
              return scan_theorems(spec, cfg);
          },
          py::arg("spec"), py::arg("memory_max") = 1, py::arg("anticipation_max") = 1,
          py::arg("window_min") = 1, py::arg("window_max") = -1, py::arg("workers") = 1);

    m.def("builtin", [](const std::string& name) { return builtin(name); }, py::arg("name"));
    m.def("builtin_names", [] {
        std::vector<std::string> names;
        for (const Builtin& b : builtins()) names.push_back(b.name);
        return names;
    });

    m.def("metric",
          [](const SftSpec& spec, const std::string& u, const std::string& v) {
              return metric(parse_ep(spec.alphabet, u), parse_ep(spec.alphabet, v)).str();
          },
          py::arg("spec"), py::arg("u"), py::arg("v"));
    m.def("are_homoclinic",
          [](const SftSpec& spec, const std::string& u, const std::string& v) {
              return are_homoclinic(parse_ep(spec.alphabet, u), parse_ep(spec.alphabet, v));
          });
    m.def("shadow",
          [](const SftSpec& spec, const std::vector<std::string>& entries,
             const std::string& delta, const std::string& epsilon) {
              EdgePresentation p = higher_block_recode(spec);
              FinitePseudoOrbit po;
              po.delta = MetricValue::parse(delta);
              for (const auto& line : entries) po.entries.push_back(parse_ep(spec.alphabet, line));
              ShadowResult res = shadow(spec, p, po, MetricValue::parse(epsilon));
              std::vector<std::string> dists;
              for (const auto& d : res.distances) dists.push_back(d.str());
              return py::make_tuple(format_ep(spec.alphabet, res.point), dists);
          },
          py::arg("spec"), py::arg("entries"), py::arg("delta"), py::arg("epsilon"));
}
