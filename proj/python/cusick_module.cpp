#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cusick/bounds.hpp"
#include "cusick/delta.hpp"
#include "cusick/fourier.hpp"
#include "cusick/oracle.hpp"
#include "cusick/spectrum.hpp"

namespace py = pybind11;
using namespace cusick;

namespace {

BitWord to_word(const py::int_& t) { return BitWord::parse(py::repr(t).cast<std::string>()); }

py::int_ to_int(const mpz_class& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::dict spectrum_dict(const Spectrum& s) {
  py::dict out;
  for (const auto& [k, v] : s.entries()) out[py::int_(k)] = v;
  return out;
}

py::dict residue_dict(const ResidueMass& r) {
  py::dict out;
  out["m"] = r.m;
  out["approx"] = r.approx;
  if (r.is_exact()) out["exact"] = r.exact;
  return out;
}

}  // namespace

PYBIND11_MODULE(cusick, m) {
  m.doc() = "Exact binary digit-sum correlation densities";

  py::class_<Dyadic>(m, "Dyadic")
      .def(py::init<>())
      .def(py::init([](const std::string& text) { return Dyadic::parse(text); }))
      .def_property_readonly("numerator", [](const Dyadic& d) { return to_int(d.numerator()); })
      .def_property_readonly("exponent", &Dyadic::exponent)
      .def("to_decimal", &Dyadic::to_decimal, py::arg("digits") = 12)
      .def("as_fraction",
           [](const Dyadic& d) {
             py::object fraction = py::module_::import("fractions").attr("Fraction");
             return fraction(to_int(d.numerator()), py::int_(1).attr("__lshift__")(d.exponent()));
           })
      .def("__float__", &Dyadic::to_double)
      .def("__str__", &Dyadic::to_string)
      .def("__repr__", [](const Dyadic& d) { return "Dyadic('" + d.to_string() + "')"; })
      .def("__hash__", [](const Dyadic& d) { return py::hash(py::str(d.to_string())); })
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self);

  m.def("phi", [](const py::int_& t) { return spectrum_dict(phi(to_word(t))); }, py::arg("t"),
        "phi(., t) as {k: Dyadic}");
  m.def("argmax_set", [](const py::int_& t) { return argmax_set(phi(to_word(t))); },
        py::arg("t"));
  m.def("delta", [](const py::int_& t, std::int64_t k) { return delta_dist(to_word(t)).at(k); },
        py::arg("t"), py::arg("k"));
  m.def("c", [](const py::int_& t) { return c(to_word(t)); }, py::arg("t"));
  m.def(
      "pair_sum",
      [](const py::int_& t) {
        const PairSum p = pair_sum(to_word(t));
        return py::make_tuple(p.c_t, p.c_t_prime, p.sum);
      },
      py::arg("t"), "(c_t, c_t', c_t + c_t')");

  m.def("reflect", [](const py::int_& t) { return to_int(reflect(to_word(t)).value()); },
        py::arg("t"));
  m.def("lambda_of", [](const py::int_& t) { return lambda_of(to_word(t)); }, py::arg("t"));
  m.def("count_blocks", [](const py::int_& t) { return count_blocks(to_word(t)); },
        py::arg("t"));
  m.def("pattern_positions", [](const py::int_& t) { return pattern_positions(to_word(t)); },
        py::arg("t"));
  m.def("alternating", [](std::size_t count) { return to_int(BitWord::alternating(count).value()); },
        py::arg("count"), "sum of 4^i for i < count");

  m.def(
      "omega",
      [](const py::int_& t, std::int64_t j, std::int64_t den) {
        return omega_matrix(to_word(t), RationalAngle(j, den));
      },
      py::arg("t"), py::arg("j"), py::arg("m"), "omega_t(j/m) by the matrix product");
  m.def(
      "omega_direct",
      [](const py::int_& t, std::int64_t j, std::int64_t den) {
        return omega_direct(to_word(t), RationalAngle(j, den));
      },
      py::arg("t"), py::arg("j"), py::arg("m"));
  m.def("psi_direct",
        [](const py::int_& t, std::int64_t mod) { return residue_dict(psi_direct(to_word(t), mod)); },
        py::arg("t"), py::arg("m"));
  m.def("psi_fourier",
        [](const py::int_& t, std::int64_t mod) { return residue_dict(psi_fourier(to_word(t), mod)); },
        py::arg("t"), py::arg("m"));

  py::class_<BoundParams>(m, "BoundParams")
      .def_readonly("epsilon", &BoundParams::epsilon)
      .def_readonly("N", &BoundParams::N)
      .def_readonly("m", &BoundParams::m)
      .def_readonly("M", &BoundParams::M)
      .def_readonly("C", &BoundParams::C)
      .def("error_terms", &BoundParams::error_terms);
  m.def("params_for", &params_for, py::arg("epsilon"));
  m.def("theorem_lower_bound", &theorem_lower_bound, py::arg("params"));
  m.def(
      "verify_main_theorem",
      [](const py::int_& t, double epsilon) {
        const TheoremReport r = verify_main_theorem(to_word(t), epsilon);
        py::dict out;
        out["blocks"] = r.blocks;
        out["hypothesis_met"] = r.hypothesis_met;
        out["c_t"] = r.pair.c_t;
        out["c_t_prime"] = r.pair.c_t_prime;
        out["pair_sum"] = r.pair.sum;
        out["floor_holds"] = r.floor_holds;
        out["residue_bound"] = r.residue_bound;
        out["inequality_holds"] = r.inequality_holds;
        out["hard_violation"] = r.hard_violation();
        return out;
      },
      py::arg("t"), py::arg("epsilon"));

  m.def(
      "oracle_ct",
      [](const py::int_& t, std::uint64_t limit, unsigned jobs) {
        const BitWord w = to_word(t);
        py::gil_scoped_release release;
        return oracle_ct(w, limit, jobs);
      },
      py::arg("t"), py::arg("limit"), py::arg("jobs") = 1);
}
