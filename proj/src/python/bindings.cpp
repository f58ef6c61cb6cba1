#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "arquiver/run.hpp"

namespace py = pybind11;

namespace {

arq::GroupSchemeSpec make_spec(const std::string& family, long n, long p, long r) {
    arq::GroupSchemeSpec spec{arq::family_from_string(family), n, p, r};
    spec.validate();
    return spec;
}

}  // namespace

PYBIND11_MODULE(_arquiver, m) {
    m.doc() = "Exact computations around the stable Auslander-Reiten quiver of "
              "the domestic finite group schemes over SL(2)";

    m.def("char_table_json",
          [](const std::string& family, long n, long p, long r) {
              auto spec = make_spec(family, n, p, r);
              return arq::envelope_for(spec, arq::char_table_json(spec)).dump(2);
          },
          py::arg("family"), py::arg("n") = 1, py::arg("p") = 5, py::arg("r") = 1);

    m.def("mckay_json",
          [](const std::string& family, long n, long p, long r) {
              auto spec = make_spec(family, n, p, r);
              return arq::envelope_for(spec, arq::mckay_json(spec)).dump(2);
          },
          py::arg("family"), py::arg("n") = 1, py::arg("p") = 5, py::arg("r") = 1);

    m.def("separated_json",
          [](const std::string& family, long n, long p, long r) {
              auto spec = make_spec(family, n, p, r);
              return arq::envelope_for(spec, arq::separated_json(spec)).dump(2);
          },
          py::arg("family"), py::arg("n") = 1, py::arg("p") = 5, py::arg("r") = 1);

    m.def("ar_component_json",
          [](const std::string& family, long n, long p, long r, long l, int seed,
             long nu_min, long nu_max) {
              auto spec = make_spec(family, n, p, r);
              return arq::envelope_for(
                         spec, arq::ar_component_json(spec, l, seed, nu_min, nu_max))
                  .dump(2);
          },
          py::arg("family"), py::arg("n") = 1, py::arg("p") = 5, py::arg("r") = 1,
          py::arg("l") = 0, py::arg("seed") = 0, py::arg("nu_min") = -3,
          py::arg("nu_max") = 3);

    m.def("tubes_json",
          [](const std::string& family, long n, long p, long r) {
              auto spec = make_spec(family, n, p, r);
              return arq::envelope_for(spec, arq::tubes_json(spec)).dump(2);
          },
          py::arg("family"), py::arg("n") = 1, py::arg("p") = 5, py::arg("r") = 1);

    m.def("check_json",
          [](const std::string& family, long n, long p, long r) {
              bool ok = false;
              auto spec = make_spec(family, n, p, r);
              auto j = arq::envelope_for(spec, arq::check_json(spec, ok));
              return py::make_tuple(j.dump(2), ok);
          },
          py::arg("family"), py::arg("n") = 1, py::arg("p") = 5, py::arg("r") = 1);

    m.def("expected_affine_type",
          [](const std::string& family, long n, long p, long r) {
              return arq::expected_affine_type(make_spec(family, n, p, r)).str();
          },
          py::arg("family"), py::arg("n") = 1, py::arg("p") = 5, py::arg("r") = 1);

    m.def("tube_window",
          [](long e, long L) {
              auto t = arq::build_tube(e, L);
              py::dict d;
              d["e"] = t.e;
              d["L"] = t.L;
              py::list arrows;
              for (const auto& a : t.arrows)
                  arrows.append(py::make_tuple(a.from, a.to));
              d["arrows"] = arrows;
              py::list tau;
              for (int v = 0; v < t.num_vertices(); ++v) tau.append(t.tau(v));
              d["tau"] = tau;
              return d;
          },
          py::arg("e"), py::arg("L"));
}
