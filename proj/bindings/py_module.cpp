#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swlab/bottoms.hpp"
#include "swlab/direct_method.hpp"
#include "swlab/euler_scheme.hpp"
#include "swlab/experiments.hpp"
#include "swlab/lagrangian.hpp"
#include "swlab/mass_coords.hpp"
#include "swlab/monitors.hpp"

namespace py = pybind11;
using namespace swlab;

PYBIND11_MODULE(_core, m) {
    m.doc() = "structure-preserving shallow-water scheme laboratory";

    py::class_<EulerWindow>(m, "EulerWindow")
        .def(py::init([](double u, double up, double uh, double uhp, double e, double ep,
                         double eh, double ehp, double H, double Hp, double h, double tau) {
                 return EulerWindow{u, up, uh, uhp, e, ep, eh, ehp, H, Hp, h, tau};
             }),
             py::arg("u"), py::arg("up"), py::arg("uh"), py::arg("uhp"), py::arg("e"),
             py::arg("ep"), py::arg("eh"), py::arg("ehp"), py::arg("H"), py::arg("Hp"),
             py::arg("h"), py::arg("tau"));

    py::class_<SchemeFamily>(m, "SchemeFamily")
        .def_readonly("w11", &SchemeFamily::w11)
        .def_readonly("z12", &SchemeFamily::z12)
        .def_readonly("naive", &SchemeFamily::naive)
        .def("sum_w", &SchemeFamily::sum_w)
        .def("sum_z", &SchemeFamily::sum_z)
        .def("sum_B", &SchemeFamily::sum_B)
        .def("sum_a", &SchemeFamily::sum_a)
        .def("sum_b", &SchemeFamily::sum_b);

    m.def("family_coefficients", &family_coefficients, py::arg("w11"), py::arg("z12"));
    m.def("naive_family", &naive_family);
    m.def("residual_F1", &residual_F1);
    m.def("residual_F2", &residual_F2);
    m.def("eval_M1", &eval_M1);
    m.def("eval_M2", &eval_M2);
    m.def("energy_identity_residual",
          py::overload_cast<const EulerWindow&, double, double>(&energy_identity_residual));
    m.def("energy_identity_scale", &energy_identity_scale);
    m.def("naive_energy_defect", &naive_energy_defect);

    m.def("phi_cosh", &phi_cosh, py::arg("tau"), py::arg("beta") = 1.0);
    m.def("phi_cos", &phi_cos, py::arg("tau"), py::arg("beta") = 1.0);
    m.def("tau1", &tau1);
    m.def("tau2", &tau2);
    m.def("thomas_solve", &thomas_solve);
    m.def("determine_phi", &determine_phi, py::arg("tau"), py::arg("seed") = 12345u);
    m.def("q_flux", &q_flux);
    m.def("basin_omega", &basin_omega);
    m.def("solve_alpha_cauchy", &solve_alpha_cauchy, py::arg("rho"), py::arg("S"), py::arg("hs"),
          py::arg("substeps") = 1);

    py::class_<PointState>(m, "PointState")
        .def(py::init([](double t, double x, double u, double eta) {
                 return PointState{t, x, u, eta};
             }),
             py::arg("t"), py::arg("x"), py::arg("u"), py::arg("eta"))
        .def_readwrite("t", &PointState::t)
        .def_readwrite("x", &PointState::x)
        .def_readwrite("u", &PointState::u)
        .def_readwrite("eta", &PointState::eta);
    m.def("chirkunov_from_flat", &chirkunov_from_flat);
    m.def("chirkunov_to_flat", &chirkunov_to_flat);

    m.def("preset_names", &preset_names);
    m.def("run_verifier", [](unsigned seed, std::size_t samples) {
        VerifyResult v = run_verifier(seed, samples);
        return py::make_tuple(v.pass, v.report);
    }, py::arg("seed") = 12345u, py::arg("samples") = 1000);
}
