#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

#include "rotns/initial_data.hpp"
#include "rotns/io/snapshot.hpp"
#include "rotns/littlewood_paley.hpp"
#include "rotns/mild_solver.hpp"
#include "rotns/semigroup.hpp"
#include "rotns/spectral.hpp"
#include "rotns/suites.hpp"

namespace py = pybind11;
using namespace rotns;

namespace {

py::array_t<Complex> coefficients(const SpectralField& f) {
  const auto n = static_cast<py::ssize_t>(f.grid().n());
  py::array_t<Complex> out({static_cast<py::ssize_t>(f.components()), n, n, n});
  std::copy(f.data().begin(), f.data().end(), out.mutable_data());
  return out;
}

SpectralField from_coefficients(const Grid& grid, const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
  const auto n = static_cast<py::ssize_t>(grid.n());
  if (a.ndim() != 4 || a.shape(1) != n || a.shape(2) != n || a.shape(3) != n || a.shape(0) < 1 ||
      a.shape(0) > 3) {
    throw std::invalid_argument("coefficients must have shape (components, n, n, n)");
  }
  SpectralField f(grid, static_cast<int>(a.shape(0)));
  std::copy(a.data(), a.data() + a.size(), f.data().begin());
  return f;
}

py::array_t<double> physical_values(const SpectralField& f) {
  const PhysicalField p = to_physical(f);
  const auto n = static_cast<py::ssize_t>(f.grid().n());
  py::array_t<double> out({static_cast<py::ssize_t>(f.components()), n, n, n});
  double* dst = out.mutable_data();
  for (int c = 0; c < f.components(); ++c) {
    const auto comp = p.component(c);
    dst = std::copy(comp.begin(), comp.end(), dst);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pseudo-spectral operators for rotating Navier-Stokes on a periodic box";

  py::class_<Grid>(m, "Grid")
      .def(py::init(&make_grid), py::arg("n"), py::arg("length") = kTwoPi)
      .def_property_readonly("n", &Grid::n)
      .def_property_readonly("length", &Grid::length)
      .def("__repr__", [](const Grid& g) {
        return "Grid(n=" + std::to_string(g.n()) + ", length=" + std::to_string(g.length()) + ")";
      });

  py::class_<FlowParams>(m, "FlowParams")
      .def(py::init([](double nu, double omega, double smallness_c) {
             FlowParams p{nu, omega, smallness_c};
             p.validate();
             return p;
           }),
           py::arg("nu") = 1.0, py::arg("omega") = 1.0, py::arg("smallness_c") = 0.05)
      .def_readwrite("nu", &FlowParams::nu)
      .def_readwrite("omega", &FlowParams::omega)
      .def_readwrite("smallness_c", &FlowParams::smallness_c);

  py::class_<TimeGrid>(m, "TimeGrid")
      .def(py::init([](double T, int M) {
             TimeGrid t{T, M};
             t.validate();
             return t;
           }),
           py::arg("T") = 1.0, py::arg("M") = 64)
      .def_readonly("T", &TimeGrid::T)
      .def_readonly("M", &TimeGrid::M)
      .def("nodes", &TimeGrid::nodes);

  py::class_<SpectralField>(m, "SpectralField")
      .def(py::init<const Grid&, int, double>(), py::arg("grid"), py::arg("components") = 3,
           py::arg("time") = 0.0)
      .def_static("from_coefficients", &from_coefficients, py::arg("grid"), py::arg("coefficients"))
      .def_property_readonly("grid", &SpectralField::grid)
      .def_property_readonly("components", &SpectralField::components)
      .def_property_readonly("time", &SpectralField::time)
      .def("coefficients", &coefficients)
      .def("physical", &physical_values)
      .def("is_solenoidal", [](const SpectralField& f) { return is_solenoidal(f); })
      .def("divergence_residual", &divergence_residual)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def("__mul__", [](const SpectralField& f, double a) { return a * f; })
      .def("__rmul__", [](const SpectralField& f, double a) { return a * f; })
      .def("__eq__", &SpectralField::operator==);

  m.def("random_solenoidal", &random_solenoidal, py::arg("seed"), py::arg("slope"), py::arg("band_lo"),
        py::arg("band_hi"), py::arg("grid"));
  m.def(
      "oscillating_vortex",
      [](int mm, const Grid& g, double omega, double amplitude) {
        return oscillating_vortex(mm, default_envelope(g, amplitude), g, omega);
      },
      py::arg("m"), py::arg("grid"), py::arg("omega") = 0.0, py::arg("amplitude") = 1.0);

  m.def("leray_project", &leray_project);
  m.def("nonlinear_term", &nonlinear_term);
  m.def("lp_norm", py::overload_cast<const SpectralField&, double>(&lp_norm), py::arg("field"), py::arg("p"));
  m.def("sobolev_norm", &sobolev_norm, py::arg("field"), py::arg("s"));
  m.def("besov_norm", &besov_norm, py::arg("field"), py::arg("s"), py::arg("p"), py::arg("q"));
  m.def("hybrid_norm", &hybrid_norm, py::arg("field"), py::arg("s"), py::arg("sigma"), py::arg("p"),
        py::arg("omega"));
  m.def("apply_semigroup", &apply_semigroup, py::arg("u0"), py::arg("t"), py::arg("params"));

  m.def(
      "bilinear_bound_probe",
      [](const Grid& g, const TimeGrid& tg, const FlowParams& params, double p, std::uint64_t seed,
         int ensemble_size) {
        BilinearProbeOptions opt;
        opt.p = p;
        opt.seed = seed;
        opt.ensemble_size = ensemble_size;
        return bilinear_bound_probe(g, tg, params, opt).eta;
      },
      py::arg("grid"), py::arg("tgrid"), py::arg("params"), py::arg("p") = 2.0, py::arg("seed") = 0,
      py::arg("ensemble_size") = 10);

  py::class_<PicardReport>(m, "PicardReport")
      .def_readonly("iterate_norms", &PicardReport::iterate_norms)
      .def_readonly("differences", &PicardReport::differences)
      .def_readonly("ratios", &PicardReport::ratios)
      .def_readonly("data_norm", &PicardReport::data_norm)
      .def_readonly("eta_measured", &PicardReport::eta_measured)
      .def_readonly("residual", &PicardReport::residual)
      .def_readonly("iterations", &PicardReport::iterations)
      .def_readonly("converged", &PicardReport::converged);

  /// Returns (final field, report); the full series stays on the C++ side.
  m.def(
      "picard_solve",
      [](const SpectralField& u0, const TimeGrid& tg, const FlowParams& params, double p, double tol,
         int max_iter) {
        PicardResult r = picard_solve(u0, tg, params, p, tol, max_iter);
        return py::make_tuple(r.solution[r.solution.size() - 1], r.report);
      },
      py::arg("u0"), py::arg("tgrid"), py::arg("params"), py::arg("p") = 2.0, py::arg("tol") = 1e-8,
      py::arg("max_iter") = 50);
  m.def(
      "if_step_final",
      [](const SpectralField& u0, const TimeGrid& tg, const FlowParams& params) {
        const FieldSeries s = if_step_integrate(u0, tg, params);
        return s[s.size() - 1];
      },
      py::arg("u0"), py::arg("tgrid"), py::arg("params"));

  m.def(
      "omega_weights",
      [](int j, double c_weight, double T) {
        const OmegaWeight w = omega_weights(j, WeightSpec{c_weight, T});
        return py::make_tuple(w.e, w.omega);
      },
      py::arg("j"), py::arg("c_weight"), py::arg("T"));

  py::class_<Check>(m, "CheckResult")
      .def_readonly("name", &Check::name)
      .def_readonly("value", &Check::value)
      .def_readonly("lower", &Check::lower)
      .def_readonly("upper", &Check::upper)
      .def_readonly("passed", &Check::pass);
  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::uint64_t seed) {
        SuiteOptions opt;
        opt.seed = seed;
        return run_suite(name, opt).checks;
      },
      py::arg("name"), py::arg("seed") = 0);

  m.def(
      "write_snapshot",
      [](const std::string& path, const SpectralField& f, const FlowParams& params) {
        write_snapshot(path, f, params.nu, params.omega);
      },
      py::arg("path"), py::arg("field"), py::arg("params"));
  m.def(
      "read_snapshot",
      [](const std::string& path) {
        Snapshot s = read_snapshot(path);
        return py::make_tuple(s.field, FlowParams{s.nu, s.omega, FlowParams{}.smallness_c});
      },
      py::arg("path"));
}
