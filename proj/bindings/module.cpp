#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "hlf/adjunction.hpp"
#include "hlf/census.hpp"
#include "hlf/enumerator.hpp"
#include "hlf/errors.hpp"
#include "hlf/invariants.hpp"
#include "hlf/obstruction.hpp"
#include "hlf/render.hpp"
#include "hlf/twist_words.hpp"

namespace py = pybind11;

namespace {

py::object as_fraction(const hlf::Rational& r) {
  py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(r.num(), r.den());
}

std::string render_census_str(const hlf::CensusResult& r, const std::string& format) {
  std::ostringstream os;
  hlf::render_census(os, r, hlf::parse_format(format));
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_hlfcensus, m) {
  m.doc() = "exact census of singular-fiber-type vectors of hyperelliptic Lefschetz "
            "fibrations over the 2-sphere";

  py::register_exception<hlf::error>(m, "CensusError");

  py::class_<hlf::FiberTypeVector>(m, "FiberTypeVector")
      .def(py::init<int, hlf::i64, std::vector<hlf::i64>>(), py::arg("g"), py::arg("n"),
           py::arg("s"))
      .def_property_readonly("g", &hlf::FiberTypeVector::g)
      .def_property_readonly("n", &hlf::FiberTypeVector::n)
      .def_property_readonly("s", [](const hlf::FiberTypeVector& v) { return v.s(); })
      .def("total", &hlf::FiberTypeVector::total)
      .def("__repr__", [](const hlf::FiberTypeVector& v) {
        return "FiberTypeVector" + v.str();
      })
      .def("__eq__", [](const hlf::FiberTypeVector& a, const hlf::FiberTypeVector& b) {
        return a == b;
      });

  py::class_<hlf::InvariantSet>(m, "InvariantSet")
      .def_readonly("e", &hlf::InvariantSet::e)
      .def_readonly("sigma", &hlf::InvariantSet::sigma)
      .def_readonly("c1_sq", &hlf::InvariantSet::c1_sq)
      .def_readonly("residue", &hlf::InvariantSet::residue)
      .def_readonly("modulus", &hlf::InvariantSet::modulus)
      .def_property_readonly("chi_h",
                             [](const hlf::InvariantSet& i) { return as_fraction(i.chi_h); });

  m.def("modulus", &hlf::modulus, py::arg("g"));
  m.def("separating_weight", &hlf::separating_weight, py::arg("h"));
  m.def("congruence_residue", &hlf::congruence_residue, py::arg("v"));
  m.def("euler_characteristic", &hlf::euler_characteristic, py::arg("v"));
  m.def("signature", &hlf::signature, py::arg("v"));
  m.def("invariant_set", &hlf::invariant_set, py::arg("v"));

  m.def("n_lower_bound", &hlf::n_lower_bound, py::arg("g"));
  m.def(
      "enumerate_vectors",
      [](int g, hlf::i64 budget, std::optional<hlf::i64> n_floor) {
        return hlf::enumerate_vectors({g, budget, n_floor});
      },
      py::arg("g"), py::arg("budget"), py::arg("n_floor_override") = std::nullopt);

  py::enum_<hlf::ProfileKind>(m, "ProfileKind")
      .value("COMPLEX", hlf::ProfileKind::Complex)
      .value("GENERAL", hlf::ProfileKind::General);

  py::class_<hlf::Profile>(m, "Profile")
      .def_static("general", &hlf::Profile::general)
      .def_static("complex_surfaces", &hlf::Profile::complex_surfaces)
      .def_readonly("kind", &hlf::Profile::kind)
      .def_property_readonly("enabled_rules",
                             [](const hlf::Profile& p) { return p.enabled_rules; })
      .def("with_rules", [](hlf::Profile p, const std::string& overrides) {
        hlf::apply_rule_overrides(p, overrides);
        return p;
      });
  m.def("load_profile_file", &hlf::load_profile_file, py::arg("path"));

  py::enum_<hlf::VerdictStatus>(m, "VerdictStatus")
      .value("EXCLUDED", hlf::VerdictStatus::Excluded)
      .value("SURVIVES", hlf::VerdictStatus::Survives);

  py::class_<hlf::TraceEntry>(m, "TraceEntry")
      .def_readonly("rule", &hlf::TraceEntry::rule)
      .def_readonly("fired", &hlf::TraceEntry::fired)
      .def_readonly("citation", &hlf::TraceEntry::citation)
      .def_property_readonly("witnesses", [](const hlf::TraceEntry& t) {
        py::dict d;
        for (const auto& [k, v] : t.witnesses) d[py::str(k)] = v;
        return d;
      });

  py::class_<hlf::Verdict>(m, "Verdict")
      .def_readonly("vector", &hlf::Verdict::vector)
      .def_readonly("invariants", &hlf::Verdict::invariants)
      .def_readonly("status", &hlf::Verdict::status)
      .def_readonly("trace", &hlf::Verdict::trace)
      .def("fired", &hlf::Verdict::fired, py::arg("rule_id"))
      .def("fired_rules", [](const hlf::Verdict& v) {
        std::vector<std::string> out;
        for (const auto& t : v.trace)
          if (t.fired) out.push_back(t.rule);
        return out;
      });

  m.def("evaluate", &hlf::evaluate, py::arg("v"), py::arg("profile"));
  m.def("survivors", &hlf::survivors, py::arg("g"), py::arg("budget"), py::arg("profile"));
  m.def(
      "lower_bound",
      [](int g, hlf::i64 budget, const hlf::Profile& p) {
        hlf::LowerBound b = hlf::lower_bound(g, budget, p);
        return py::make_tuple(b.value, hlf::to_string(b.qualifier));
      },
      py::arg("g"), py::arg("budget"), py::arg("profile"));

  py::class_<hlf::RuledTarget>(m, "RuledTarget")
      .def(py::init<int, int, int>(), py::arg("k"), py::arg("m"), py::arg("gF"))
      .def_readonly("k", &hlf::RuledTarget::k)
      .def_readonly("m", &hlf::RuledTarget::m)
      .def_readonly("gF", &hlf::RuledTarget::gF);

  py::enum_<hlf::AdjunctionOutcome>(m, "AdjunctionOutcome")
      .value("NO_SOLUTION", hlf::AdjunctionOutcome::NoSolution)
      .value("SOLUTIONS_EXIST", hlf::AdjunctionOutcome::SolutionsExist);

  py::class_<hlf::FiberClassSolution>(m, "FiberClassSolution")
      .def_readonly("a", &hlf::FiberClassSolution::a)
      .def_readonly("b", &hlf::FiberClassSolution::b)
      .def_readonly("c", &hlf::FiberClassSolution::c);

  py::class_<hlf::DegreeReport>(m, "DegreeReport")
      .def_readonly("a", &hlf::DegreeReport::a)
      .def_readonly("T", &hlf::DegreeReport::T)
      .def_readonly("solutions", &hlf::DegreeReport::solutions);

  py::class_<hlf::ExistenceVerdict>(m, "ExistenceVerdict")
      .def_readonly("outcome", &hlf::ExistenceVerdict::outcome)
      .def_readonly("per_degree", &hlf::ExistenceVerdict::per_degree);

  m.def("degree_bound", &hlf::degree_bound, py::arg("target"));
  m.def("completion_constant", &hlf::completion_constant, py::arg("target"), py::arg("a"));
  m.def("decide", &hlf::decide, py::arg("target"));

  py::enum_<hlf::McgGroup>(m, "McgGroup")
      .value("FULL", hlf::McgGroup::Full)
      .value("HYPERELLIPTIC", hlf::McgGroup::Hyperelliptic);

  py::class_<hlf::TwistWord>(m, "TwistWord")
      .def_readonly("g", &hlf::TwistWord::g)
      .def("__len__", [](const hlf::TwistWord& w) { return w.tokens.size(); });

  m.def("parse_word", &hlf::parse_word, py::arg("g"), py::arg("text"));
  m.def("to_fiber_vector", &hlf::to_fiber_vector, py::arg("word"));
  m.def("h1_order", &hlf::h1_order, py::arg("g"), py::arg("group"));
  m.def("abelianization_image", &hlf::abelianization_image, py::arg("word"));

  m.def("default_budget", &hlf::default_budget, py::arg("g"));
  m.def(
      "run_census",
      [](int g, hlf::i64 budget, const hlf::Profile& p, unsigned threads) {
        return hlf::run_census(g, budget, p, threads);
      },
      py::arg("g"), py::arg("budget"), py::arg("profile"), py::arg("threads") = 1);
  py::class_<hlf::CensusResult>(m, "CensusResult")
      .def_readonly("g", &hlf::CensusResult::g)
      .def_readonly("budget", &hlf::CensusResult::budget)
      .def_readonly("candidates", &hlf::CensusResult::candidates)
      .def_readonly("survivor_index", &hlf::CensusResult::survivor_index)
      .def_readonly("conclusion", &hlf::CensusResult::conclusion)
      .def("render", &render_census_str, py::arg("format") = "table");
  m.def(
      "bounds_report",
      [](int g, const hlf::Profile& p, std::optional<hlf::i64> budget) {
        hlf::BoundsReport r = hlf::make_bounds_report(g, p, budget);
        py::dict d;
        d["g"] = r.g;
        d["budget"] = r.budget;
        d["lower"] = r.lower.value;
        d["qualifier"] = hlf::to_string(r.lower.qualifier);
        if (r.upper) {
          d["upper"] = r.upper->value;
          d["upper_source"] = hlf::to_string(r.upper->source);
        } else {
          d["upper"] = py::none();
          d["upper_source"] = py::none();
        }
        d["conclusion"] = r.conclusion;
        return d;
      },
      py::arg("g"), py::arg("profile"), py::arg("budget") = std::nullopt);
}
