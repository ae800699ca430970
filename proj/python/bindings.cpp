#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dyckflaws/bijections.hpp"
#include "dyckflaws/closed_forms.hpp"
#include "dyckflaws/enumeration.hpp"
#include "dyckflaws/generating_functions.hpp"
#include "dyckflaws/report.hpp"
#include "dyckflaws/verify.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const dyck::Integer& v) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::list to_py(const dyck::IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_py(c));
  return out;
}

dyck::StatKind stat_arg(const std::string& name) {
  auto s = dyck::parse_stat(name);
  if (!s) throw py::value_error("unknown statistic '" + name + "'");
  return *s;
}

std::string map_word(const std::string& word, dyck::Path (*fn)(const dyck::Path&)) {
  return dyck::render_path(fn(dyck::parse_path(word)));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dyck paths with flaws: statistics, exact counts, bijections and series checks";

  m.def("stats", [](const std::string& word) {
    const auto s = dyck::stats(dyck::parse_path(word));
    py::dict d;
    d["n"] = s.semilength;
    d["m"] = s.flaws;
    d["peaks"] = s.peaks;
    d["valleys"] = s.valleys;
    d["double_ascents"] = s.double_ascents;
    d["double_descents"] = s.double_descents;
    return d;
  }, py::arg("word"));
  m.def("normalize", [](const std::string& w) { return dyck::render_path(dyck::parse_path(w)); },
        py::arg("word"), "Parse a U/D word case-insensitively and render it in upper case.");
  m.def("height_profile", [](const std::string& w) { return dyck::height_profile(dyck::parse_path(w)); },
        py::arg("word"));
  m.def("is_catalan", [](const std::string& w) { return dyck::is_catalan(dyck::parse_path(w)); },
        py::arg("word"));
  m.def("enumerate_paths", [](int n, std::optional<int> flaws) {
    std::vector<std::string> out;
    dyck::for_each_path(n, flaws, [&](std::span<const dyck::Step> s) {
      out.push_back(dyck::render_steps(s));
    });
    return out;
  }, py::arg("n"), py::arg("flaws") = py::none());

  m.def("count_table", [](int n, const std::string& stat) {
    const auto t = dyck::count_table(n, stat_arg(stat));
    py::dict rows;
    for (int mm = 0; mm <= n; ++mm) {
      py::dict row;
      for (int k = 0; k <= n; ++k) {
        if (t.entry(mm, k) != 0) row[py::int_(k)] = to_py(t.entry(mm, k));
      }
      rows[py::int_(mm)] = row;
    }
    return rows;
  }, py::arg("n"), py::arg("stat") = "peak", "Returns {m: {k: count}} with zero counts omitted.");
  m.def("count_table_json", [](int n, const std::string& stat) {
    return dyck::count_table_json(dyck::count_table(n, stat_arg(stat))).dump();
  }, py::arg("n"), py::arg("stat") = "peak");
  m.def("table_polynomial", [](int n, int mm, const std::string& stat) {
    return to_py(dyck::table_polynomial(n, mm, stat_arg(stat)));
  }, py::arg("n"), py::arg("m"), py::arg("stat") = "peak",
     "Coefficient list, lowest power first.");
  m.def("table_polynomial_str", [](int n, int mm, const std::string& stat) {
    return dyck::table_polynomial(n, mm, stat_arg(stat)).to_string();
  }, py::arg("n"), py::arg("m"), py::arg("stat") = "peak");

  m.def("catalan", [](int n) { return to_py(dyck::catalan(n)); }, py::arg("n"));
  m.def("narayana_peak", [](int n, int k) { return to_py(dyck::narayana_peak(n, k)); });
  m.def("narayana_ascent", [](int n, int k) { return to_py(dyck::narayana_ascent(n, k)); });
  m.def("one_flaw_peak", [](int n, int k) { return to_py(dyck::one_flaw_peak(n, k)); });
  m.def("peak_pair_sum", [](int n, int k) { return to_py(dyck::peak_pair_sum(n, k)); });
  m.def("central_peak", [](int n) { return to_py(dyck::central_peak(n)); });
  m.def("recurrence_peak_poly", [](int n, int mm) { return to_py(dyck::recurrence_peak_poly(n, mm)); },
        py::arg("n"), py::arg("m"));

  m.def("complement", [](const std::string& w) { return map_word(w, dyck::complement); });
  m.def("reverse_complement",
        [](const std::string& w) { return map_word(w, dyck::reverse_complement); });
  m.def("cf_step", [](const std::string& w) { return map_word(w, dyck::cf_step); });
  m.def("cf_step_inverse", [](const std::string& w) { return map_word(w, dyck::cf_step_inverse); });
  m.def("cf_decompose", [](const std::string& w) {
    return dyck::cf_decompose_forward(dyck::parse_path(w)).to_string();
  }, "S|R|U|Q|D|T for a path with at least one excursion above the axis.");

  m.def("series_names", &dyck::series_names);
  m.def("series_json", [](const std::string& name, int order) {
    auto s = dyck::named_series(name, order);
    if (!s) throw py::value_error("unknown generating function '" + name + "'");
    return dyck::series_json(*s).dump();
  }, py::arg("name"), py::arg("order"));
  m.def("identity_report_json", [](int order) {
    py::gil_scoped_release release;
    return dyck::identity_report_json(dyck::verify_identity_suite(order)).dump();
  }, py::arg("order"));
  m.def("verify_json", [](const std::string& suite, int n_max, int order) {
    auto suites = dyck::parse_suites(suite);
    if (!suites) throw py::value_error("unknown suite '" + suite + "'");
    std::vector<dyck::SuiteReport> reports;
    {
      py::gil_scoped_release release;
      reports = dyck::run_verification(*suites, {n_max, order, 1});
    }
    dyck::Json out = dyck::Json::array();
    for (const auto& r : reports) out.push_back(dyck::suite_report_json(r));
    return out.dump();
  }, py::arg("suite"), py::arg("n_max"), py::arg("order"));
}
