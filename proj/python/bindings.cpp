#include <cmath>
#include <functional>
#include <map>

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spectral_portrait/airy.hpp"
#include "spectral_portrait/discretize.hpp"
#include "spectral_portrait/errors.hpp"
#include "spectral_portrait/phase.hpp"
#include "spectral_portrait/verify.hpp"

namespace py = pybind11;
using namespace spectral_portrait;

namespace {

BoundaryCondition bc_from(const std::string& s) {
    if (s == "dirichlet") return BoundaryCondition::Dirichlet;
    if (s == "mixed_left_neumann") return BoundaryCondition::MixedLeftNeumann;
    throw ConfigError("bc: expected dirichlet or mixed_left_neumann, got '" + s + "'");
}

SignConvention sign_from(const std::string& s) {
    if (s == "plus_i") return SignConvention::PlusI;
    if (s == "minus_i") return SignConvention::MinusI;
    throw ConfigError("sign: expected plus_i or minus_i, got '" + s + "'");
}

Spectrum filtered(const std::function<Spectrum(int)>& solve, int n) {
    const Spectrum fine = solve(n);
    const Spectrum coarse = solve(std::max(8, static_cast<int>(std::lround(0.8 * n))));
    return filter_spurious(coarse, fine);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spectral portraits of non-self-adjoint model and Orr-Sommerfeld problems";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<Overflow>(m, "Overflow", base.ptr());
    py::register_exception<ConvergenceFailure>(m, "ConvergenceFailure", base.ptr());

    py::class_<Profile>(m, "Profile")
        .def_static("linear", &Profile::linear)
        .def_static("quadratic", &Profile::quadratic, py::arg("beta"))
        .def_static("quadratic_from", &Profile::quadratic_from, py::arg("a2"), py::arg("a1"), py::arg("a0"))
        .def_static("shifted_square", &Profile::shifted_square)
        .def_static("half_sine", &Profile::half_sine)
        .def_property_readonly("label", &Profile::label)
        .def_property_readonly("beta", &Profile::beta)
        .def_property_readonly("scale", &Profile::scale)
        .def_property_readonly("shift", &Profile::shift)
        .def("__call__", [](const Profile& p, cplx z) { return p.eval(z); })
        .def("range", [](const Profile& p) { return range(p); })
        .def("turning_points", [](const Profile& p, cplx lambda) { return turning_points(p, lambda); })
        .def("__repr__", [](const Profile& p) { return "Profile(" + p.label() + ")"; });

    m.def("airy_v", &airy_v, py::arg("xi"), "Decaying Airy solution v(xi) = Ai(xi)");
    m.def("airy_connection_residual", &airy_connection_residual, py::arg("xi"));
    m.def("airy_zeros", [](int k) { return airy_zeros(k).r; }, py::arg("k_max"), "Positive zeros r_k of v(-r)");

    py::class_<Spectrum>(m, "Spectrum")
        .def_readonly("eigenvalues", &Spectrum::eigenvalues)
        .def_property_readonly("kept", &Spectrum::kept)
        .def_property_readonly("spurious",
                               [](const Spectrum& s) {
                                   std::vector<bool> out;
                                   for (const auto& f : s.flags) out.push_back(f.spurious || f.sentinel);
                                   return out;
                               })
        .def("__len__", [](const Spectrum& s) { return s.eigenvalues.size(); });

    m.def(
        "model_spectrum",
        [](const Profile& p, double eps, int n, const std::string& bc, const std::string& sign, bool filter) {
            auto solve = [&](int size) { return model_spectrum(p, eps, bc_from(bc), size, sign_from(sign)); };
            py::gil_scoped_release release;
            return filter ? filtered(solve, n) : solve(n);
        },
        py::arg("profile"), py::arg("eps"), py::arg("n") = 400, py::arg("bc") = "dirichlet",
        py::arg("sign") = "plus_i", py::arg("filter") = true,
        "Spectrum of i c y'' + q y = lambda y, filtered against a grid of 0.8 n unless filter is False");
    m.def(
        "os_spectrum",
        [](const Profile& p, double alpha, double reynolds, int n, const std::string& sign, bool filter) {
            auto solve = [&](int size) { return os_spectrum(p, alpha, reynolds, size, sign_from(sign)); };
            py::gil_scoped_release release;
            return filter ? filtered(solve, n) : solve(n);
        },
        py::arg("profile"), py::arg("alpha"), py::arg("reynolds"), py::arg("n") = 200, py::arg("sign") = "plus_i",
        py::arg("filter") = true);

    py::class_<SpectralCurve>(m, "SpectralCurve")
        .def_property_readonly("tag", [](const SpectralCurve& c) { return std::string(to_string(c.tag)); })
        .def_readonly("samples", &SpectralCurve::samples)
        .def_readonly("phase", &SpectralCurve::phase)
        .def_readonly("excluded", &SpectralCurve::excluded)
        .def_readonly("mirror", &SpectralCurve::mirror);

    py::class_<LimitGraph>(m, "LimitGraph")
        .def_readonly("curves", &LimitGraph::curves)
        .def_property_readonly("knots",
                               [](const LimitGraph& g) {
                                   std::map<std::string, cplx> out;
                                   for (const auto& k : g.knots) out[k.name] = k.point;
                                   return out;
                               })
        .def("distance", [](const LimitGraph& g, cplx z) { return distance_to_curves(z, g.curves); });
    m.def("limit_graph", &build_limit_graph, py::arg("profile"), py::arg("depth") = 6.0, py::arg("n_samples") = 400);

    py::class_<Prediction>(m, "Prediction")
        .def_property_readonly("tag", [](const Prediction& p) { return std::string(to_string(p.tag)); })
        .def_readonly("k", &Prediction::k)
        .def_readonly("mu", &Prediction::mu)
        .def_readonly("radius", &Prediction::radius)
        .def_readonly("mirror", &Prediction::mirror);
    m.def(
        "predict",
        [](const Profile& p, double eps, double delta, double sigma, double depth) {
            if (p.kind() == ProfileKind::Linear) return predict_model_couette(eps, sigma, depth).predictions;
            return predict_wkb(p, eps, build_limit_graph(p, depth), delta);
        },
        py::arg("profile"), py::arg("eps"), py::arg("delta") = 0.1, py::arg("sigma") = 0.5, py::arg("depth") = 6.0,
        "Leading-order eigenvalue predictions of the model problem");
    m.def("predict_os_couette", &predict_os_couette, py::arg("alpha"), py::arg("reynolds"), py::arg("sigma") = 0.5,
          py::arg("depth") = 6.0, py::arg("trust_constant") = default_trust_constant);

    py::class_<MatchReport>(m, "MatchReport")
        .def_property_readonly("matched", [](const MatchReport& r) { return r.pairs.size(); })
        .def_property_readonly("distances",
                               [](const MatchReport& r) {
                                   std::vector<double> d;
                                   for (const auto& p : r.pairs) d.push_back(p.distance);
                                   return d;
                               })
        .def_readonly("unmatched_predictions", &MatchReport::unmatched_predictions)
        .def_property_readonly("uniqueness_violations",
                               [](const MatchReport& r) { return r.uniqueness_violations.size(); })
        .def("matched_fraction", [](const MatchReport& r) { return r.matched_fraction(); });
    m.def(
        "match",
        [](const std::vector<cplx>& eigenvalues, const std::vector<Prediction>& predictions, double floor) {
            return match_predictions(eigenvalues, predictions, 1.0, floor);
        },
        py::arg("eigenvalues"), py::arg("predictions"), py::arg("floor") = 1e-6);

    m.def(
        "q_functionals",
        [](const Profile& p, cplx lambda) {
            const QValues q = q_functionals(p, lambda);
            return py::dict(py::arg("Q") = q.Q, py::arg("Qp") = q.Qp, py::arg("Qm") = q.Qm);
        },
        py::arg("profile"), py::arg("lam"));
    m.def("symmetry_defect", &symmetry_defect, py::arg("eigenvalues"));
    m.def("semistrip_excursion", &semistrip_excursion, py::arg("eigenvalues"), py::arg("profile"));
}
