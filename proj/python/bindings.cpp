#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bsconf/basen.hpp"
#include "bsconf/bsgroup.hpp"
#include "bsconf/cli.hpp"
#include "bsconf/confining.hpp"
#include "bsconf/errors.hpp"
#include "bsconf/nadic.hpp"
#include "bsconf/poset.hpp"
#include "bsconf/wreath.hpp"

namespace py = pybind11;
using namespace bsconf;

namespace {

  BSElement element(std::uint32_t n, std::string const& h, int k) { return {NAryNumber::parse(h, n), k}; }

  FullIdeal full_ideal(std::uint32_t n, std::vector<int> const& zero_set) {
    return FullIdeal::from_zero_set(n, zero_set);
  }

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "Error");

  py::class_<NAryNumber>(m, "NAryNumber")
      .def_static("parse", &NAryNumber::parse)
      .def_static("from_fraction",
                  [](long long num, long long den, std::uint32_t n) {
                    return NAryNumber::from_fraction(BigInt(num), BigInt(den), n);
                  })
      .def_property_readonly("base", &NAryNumber::base)
      .def("to_float", &NAryNumber::to_double)
      .def("__add__", [](NAryNumber const& a, NAryNumber const& b) { return a + b; })
      .def("__sub__", [](NAryNumber const& a, NAryNumber const& b) { return a - b; })
      .def("__neg__", [](NAryNumber const& a) { return -a; })
      .def("shift", [](NAryNumber const& a, int j) { return shift(a, j); })
      .def("__eq__", [](NAryNumber const& a, NAryNumber const& b) { return a == b; })
      .def("__hash__", &NAryNumber::hash)
      .def("__str__", &NAryNumber::to_string)
      .def("__repr__", [](NAryNumber const& a) { return "NAryNumber('" + a.to_string() + "')"; });

  py::class_<NAdic>(m, "NAdic")
      .def(py::init<std::uint32_t, int, std::uint64_t>(), py::arg("base"), py::arg("depth"), py::arg("residue"))
      .def_property_readonly("base", &NAdic::base)
      .def_property_readonly("depth", &NAdic::depth)
      .def_property_readonly("residue", &NAdic::residue)
      .def("digits", &NAdic::digits)
      .def("is_unit", &NAdic::is_unit)
      .def("__add__", &nadic_add)
      .def("__mul__", &nadic_mul)
      .def("__eq__", [](NAdic const& a, NAdic const& b) { return a == b; })
      .def("crt_split", &crt_split);

  m.def("ideal_contains",
        [](std::uint64_t n, std::vector<int> const& zero_set, NAdic const& a) {
          return to_string(ideal_contains(full_ideal(static_cast<std::uint32_t>(n), zero_set).to_spec(), a));
        });
  m.def("normalize", [](std::string const& ideal_json) {
    auto r = full_normalize(ideal_from_json(nlohmann::json::parse(ideal_json)));
    return py::make_tuple(r.full.zero_set(), r.witness_A);
  });

  m.def("poset_json", [](std::uint64_t n) { return build_poset(n).to_json().dump(); });
  m.def("poset_dot", [](std::uint64_t n) { return build_poset(n).to_dot(); });
  m.def("compare", [](std::uint64_t n, std::string const& a, std::string const& b) {
    return to_string(build_poset(n).compare(structure_from_id(a), structure_from_id(b)));
  });

  m.def("word_length", [](std::uint32_t n, std::string const& h, int k, std::vector<int> const& zero_set) {
    return word_length_exact(element(n, h, k), full_ideal(n, zero_set));
  });
  m.def(
      "word_length_bfs",
      [](std::uint32_t n, std::string const& h, int k, std::vector<int> const& zero_set, int radius) {
        return word_length_bfs(element(n, h, k), ConfiningSet::s_of(full_ideal(n, zero_set)), radius);
      },
      py::arg("n"), py::arg("h"), py::arg("k"), py::arg("zero_set"), py::arg("radius"));
  m.def("tree_ball_json", [](std::uint32_t n, std::vector<int> const& zero_set, int radius) {
    return tree_ball(full_ideal(n, zero_set), radius).to_json().dump();
  });
  m.def("h2_displacement",
        [](std::uint32_t n, std::string const& h, int k) { return h2_displacement(element(n, h, k)); });

  m.def("verify_s", [](std::uint32_t n, std::vector<int> const& zero_set, int frac_depth) {
    return to_json(verify_confining(ConfiningSet::s_of(full_ideal(n, zero_set)), Flavor::Alpha,
                                    {1, frac_depth, 2}))
        .dump();
  });

  m.def("qi_facts_json", [](int i, int steps, int max_degree, long max_coeff, int max_terms) {
    QiBounds b;
    b.max_degree = max_degree;
    b.max_coeff  = max_coeff;
    b.max_terms  = max_terms;
    return check_qi_facts(generate_qi(i, steps, b), false).to_json().dump();
  });
  m.def("separation_bound", [](int r, int i, int j) {
    auto s = separation_bound(r, i, j);
    return py::dict(py::arg("k_star") = s.k_star, py::arg("f_min") = s.f_min,
                    py::arg("length_lower_bound") = s.length_lower_bound);
  });

  m.def("run_cli", [](std::vector<std::string> const& argv) {
    std::ostringstream out;
    std::ostringstream err;
    int                rc = cli::run(argv, out, err);
    return py::make_tuple(rc, out.str(), err.str());
  });
}
