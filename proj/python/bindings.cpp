// Python bindings for the chiralww core.

#include "chiralww/cli.hpp"
#include "chiralww/dynamics.hpp"
#include "chiralww/error.hpp"
#include "chiralww/model.hpp"
#include "chiralww/oracle.hpp"
#include "chiralww/reduction.hpp"
#include "chiralww/spectral.hpp"

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>

namespace py = pybind11;
using namespace pybind11::literals;
using namespace chiralww;

namespace {

py::dict mixing_dict(const Mixing& mixing) {
    py::dict d;
    if (const auto* cpt = std::get_if<CPTMixing>(&mixing)) {
        d["type"] = "CPT";
        d["p"] = cpt->p;
        d["alpha"] = cpt->alpha;
    } else if (const auto* t = std::get_if<TMixing>(&mixing)) {
        d["type"] = "T";
        d["phi"] = t->phi;
    } else {
        d["type"] = "General";
    }
    return d;
}

py::dict report_dict(const ErrorReport& r) {
    py::dict d;
    d["lambda"] = r.coupling_scale;
    d["max_abs_error_pl"] = r.max_abs_error_pl;
    d["max_abs_error_pr"] = r.max_abs_error_pr;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weisskopf-Wigner reduction and racemization dynamics of a chiral doublet";

    // The module attribute keeps the exception type alive.
    static PyObject* chiral_error = nullptr;
    chiral_error = py::exception<Error>(m, "ChiralError", PyExc_ValueError).ptr();
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            PyErr_SetString(chiral_error, (std::string(to_string(e.kind())) + ": " + e.what()).c_str());
        }
    });

    py::enum_<Invariance>(m, "Invariance")
        .value("CPT", Invariance::CPT)
        .value("T", Invariance::T)
        .value("General", Invariance::General);

    py::enum_<KaonEnvelope>(m, "KaonEnvelope")
        .value("Standard", KaonEnvelope::Standard)
        .value("Full", KaonEnvelope::Full);

    py::class_<DoubletSpec>(m, "DoubletSpec")
        .def(py::init([](double m_, double delta, double epsilon, double theta_max) {
                 return DoubletSpec{m_, delta, epsilon, theta_max};
             }),
             "m"_a = 0.0, "delta"_a = 0.0, "epsilon"_a = 0.0, "theta_max"_a = 1.0)
        .def_readwrite("m", &DoubletSpec::m)
        .def_readwrite("delta", &DoubletSpec::delta)
        .def_readwrite("epsilon", &DoubletSpec::epsilon)
        .def_readwrite("theta_max", &DoubletSpec::theta_max);

    py::class_<LevelSpec>(m, "LevelSpec")
        .def(py::init([](double energy, Complex g_L, Complex g_R) {
                 return LevelSpec{energy, g_L, g_R};
             }),
             "energy"_a, "g_L"_a = Complex{}, "g_R"_a = Complex{})
        .def_readwrite("energy", &LevelSpec::energy)
        .def_readwrite("g_L", &LevelSpec::g_L)
        .def_readwrite("g_R", &LevelSpec::g_R);

    py::class_<ModelSpec>(m, "ModelSpec")
        .def(py::init<>())
        .def_readwrite("doublet", &ModelSpec::doublet)
        .def_readwrite("levels", &ModelSpec::levels)
        .def_readwrite("h_override", &ModelSpec::h_override)
        .def_readwrite("cross_couplings", &ModelSpec::cross_couplings)
        .def_readwrite("degeneracy_tolerance", &ModelSpec::degeneracy_tolerance)
        .def_readwrite("broadening", &ModelSpec::broadening)
        .def_readwrite("invariance", &ModelSpec::invariance);

    py::class_<ValidatedModel>(m, "ValidatedModel")
        .def_property_readonly("spec", &ValidatedModel::spec)
        .def_property_readonly("degenerate", &ValidatedModel::degenerate);

    m.def("validate_model", py::overload_cast<const ModelSpec&>(&validate_model), "spec"_a);
    m.def("doublet_block", &doublet_block, "model"_a);
    m.def("full_hamiltonian", [](const ValidatedModel& model) { return full_hamiltonian(model).matrix; },
          "model"_a);
    m.def("scale_couplings", &scale_couplings, "model"_a, "lambda_"_a);

    m.def("mass_matrix", [](const ValidatedModel& model) { return mass_matrix(model).matrix; },
          "model"_a);
    m.def("decay_matrix", [](const ValidatedModel& model) { return decay_matrix(model).matrix; },
          "model"_a);
    m.def("reduce",
          [](const ValidatedModel& model) {
              const Reduction r = reduce(model);
              py::dict d;
              d["M"] = r.mass.matrix;
              d["Gamma"] = r.decay.matrix;
              d["W"] = r.generator.matrix;
              return d;
          },
          "model"_a, "Mass matrix, decay matrix and generator W = M - i Gamma");

    py::class_<SpectralResult>(m, "SpectralResult")
        .def_readonly("lambda_plus", &SpectralResult::lambda_plus)
        .def_readonly("lambda_minus", &SpectralResult::lambda_minus)
        .def_readonly("psi_plus", &SpectralResult::psi_plus)
        .def_readonly("psi_minus", &SpectralResult::psi_minus)
        .def_readonly("degenerate", &SpectralResult::degenerate)
        .def_property_readonly("mixing", [](const SpectralResult& r) { return mixing_dict(r.mixing); });

    m.def("eigen_cpt", [](const Mat2& mass, double tol) { return eigen_cpt(MassMatrix{mass}, tol); },
          "M"_a, "tol"_a = kDefaultInvarianceTolerance);
    m.def("eigen_t", [](const Mat2& mass, double tol) { return eigen_t(MassMatrix{mass}, tol); },
          "M"_a, "tol"_a = kDefaultInvarianceTolerance);
    m.def("eigen_general", [](const Mat2& mass) { return eigen_general(MassMatrix{mass}); }, "M"_a);
    m.def("oscillation_period",
          [](const Mat2& mass, Invariance mode, double tol) {
              const auto p = oscillation_period(MassMatrix{mass}, mode, tol);
              return py::make_tuple(p.delta_split, p.tau);
          },
          "M"_a, "mode"_a, "tol"_a = kDefaultInvarianceTolerance,
          "Returns (delta_split, tau) with tau = pi / delta_split");

    m.def("time_grid", &time_grid, "t_max"_a, "steps"_a);
    m.def("hs_probabilities",
          [](double delta, double epsilon, double t) {
              const auto p = hs_probabilities(delta, epsilon, t);
              return py::make_tuple(p.p_l, p.p_r);
          },
          "delta"_a, "epsilon"_a, "t"_a);
    m.def("hs_optical_activity", &hs_optical_activity, "delta"_a, "epsilon"_a, "theta_max"_a, "t"_a);
    m.def("evolve_effective",
          [](const Mat2& w, const Vec2& phi0, double t) {
              return evolve_effective(EffectiveGenerator{w}, phi0, t);
          },
          "W"_a, "phi0"_a, "t"_a);
    m.def("multistate_probabilities",
          [](const Mat2& mass, double t, Invariance mode, double tol) {
              const auto p = multistate_probabilities(MassMatrix{mass}, t, mode, tol);
              return py::make_tuple(p.p_l, p.p_r);
          },
          "M"_a, "t"_a, "mode"_a = Invariance::T, "tol"_a = kDefaultInvarianceTolerance);
    m.def("optical_activity",
          [](const Mat2& mass, double theta_max, double t, Invariance mode, double tol) {
              return optical_activity(MassMatrix{mass}, theta_max, t, mode, tol);
          },
          "M"_a, "theta_max"_a, "t"_a, "mode"_a, "tol"_a = kDefaultInvarianceTolerance);
    m.def("time_average_theta",
          [](const Mat2& mass, Invariance mode, double tol) {
              return time_average_theta(MassMatrix{mass}, mode, tol);
          },
          "M"_a, "mode"_a, "tol"_a = kDefaultInvarianceTolerance);

    py::class_<KaonParams>(m, "KaonParams")
        .def(py::init([](double m1, double m2, double gamma1, double gamma2, KaonEnvelope envelope) {
                 return KaonParams{m1, m2, gamma1, gamma2, envelope};
             }),
             "m1"_a, "m2"_a, "gamma1"_a = 0.0, "gamma2"_a = 0.0,
             "envelope"_a = KaonEnvelope::Standard)
        .def_readwrite("m1", &KaonParams::m1)
        .def_readwrite("m2", &KaonParams::m2)
        .def_readwrite("gamma1", &KaonParams::gamma1)
        .def_readwrite("gamma2", &KaonParams::gamma2)
        .def_readwrite("envelope", &KaonParams::envelope);
    m.def("kaon_transition_probability", &kaon_transition_probability, "params"_a, "t"_a);

    m.def("exact_evolve",
          [](const MatX& h, const VecX& psi0, double t) {
              return exact_evolve(FullHamiltonian{h}, psi0, t).amplitudes;
          },
          "H"_a, "psi0"_a, "t"_a);
    m.def("compare_ww",
          [](const ValidatedModel& model, const std::vector<double>& grid) {
              return report_dict(compare_ww(model, grid));
          },
          "model"_a, "t_grid"_a);
    m.def("convergence_study",
          [](const ValidatedModel& model, const std::vector<double>& lambdas,
             const std::vector<double>& grid) {
              py::list out;
              for (const auto& r : convergence_study(model, lambdas, grid)) out.append(report_dict(r));
              return out;
          },
          "model"_a, "lambdas"_a, "t_grid"_a);

    py::class_<RunConfig>(m, "RunConfig")
        .def_readwrite("output", &RunConfig::output)
        .def("serialize", &serialize_config);
    m.def("parse_config", &parse_config, "text"_a);
    m.def("render", &render, "config"_a, "Output bytes (CSV or JSON lines) for a parsed config");
}
