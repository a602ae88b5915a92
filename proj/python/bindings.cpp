#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wandering/basin.hpp"
#include "wandering/core_maps.hpp"
#include "wandering/error.hpp"
#include "wandering/experiments.hpp"
#include "wandering/lemma_verifier.hpp"
#include "wandering/metrics.hpp"
#include "wandering/real_dynamics.hpp"

namespace py = pybind11;
using namespace wandering;

namespace {

py::dict report_dict(const VerificationReport& r) {
  py::dict d;
  d["lemma_id"] = r.lemma_id;
  d["parameter_range"] = r.parameter_range;
  d["samples"] = r.samples;
  d["passed"] = r.pass;
  d["worst_margin"] = r.worst_margin;
  d["witness"] = r.witness.point;
  d["line"] = r.to_line();
  return d;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Inside: return "inside";
    case Verdict::Outside: return "outside";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

py::tuple verdict_tuple(PixelVerdict v) { return py::make_tuple(verdict_name(v.verdict), v.decided_at); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Maps, verifiers and metrics for the wandering domains of z cos z + 2 pi.";

  static py::exception<Error> exc(m, "WanderingError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(exc, (std::string(kind_name(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.attr("N0") = kN0;

  m.def("eval_f", &eval_f, py::arg("z"));
  m.def("eval_f_lambda",
        [](Complex z, Complex lambda) { return eval_f_lambda(z, FamilyParam{lambda}); },
        py::arg("z"), py::arg("lam"));
  m.def("eval_h", &eval_h, py::arg("n"), py::arg("z"));
  m.def("eval_w", &eval_w, py::arg("n"), py::arg("t"));
  m.def("eval_g", &eval_g, py::arg("n"), py::arg("z"));
  m.def("compose_psi", &compose_psi, py::arg("m"), py::arg("n"), py::arg("z"));
  m.def("compose_phi", &compose_phi, py::arg("m"), py::arg("n"), py::arg("z"));
  m.def("eval_q", &eval_q, py::arg("z"));
  m.def("iterate_q", &iterate_q, py::arg("n"), py::arg("z"));
  m.def("mandelbrot_param", [](Complex lambda) { return mandelbrot_param(FamilyParam{lambda}); },
        py::arg("lam"));

  m.def("multiplier", &multiplier, py::arg("x"));
  m.def(
      "find_real_fixed_points",
      [](int n, int scan) {
        py::list out;
        for (const auto& r : find_real_fixed_points(n, scan))
          out.append(py::make_tuple(r.x, r.multiplier, r.eta));
        return out;
      },
      py::arg("window"), py::arg("scan_samples") = 10000,
      "List of (x, multiplier, eta) for the two fixed points in the window.");
  m.def(
      "find_escaping_negative",
      [](double delta, int max_n) {
        const auto w = find_escaping_negative(delta, max_n);
        return py::make_tuple(w.x0, w.n, w.value, verify_escape_witness(w));
      },
      py::arg("delta"), py::arg("max_n") = 1000);

  m.def("check_halfplane_drift", [](int n, int s) { return report_dict(check_halfplane_drift(n, s)); },
        py::arg("n"), py::arg("samples") = 10000);
  m.def("check_disc_inclusion", [](int n, int s) { return report_dict(check_disc_inclusion(n, s)); },
        py::arg("n"), py::arg("samples") = 4096);
  m.def("check_circle_expansion",
        [](int mm, int n, int s) { return report_dict(check_circle_expansion(mm, n, s)); },
        py::arg("m"), py::arg("n"), py::arg("samples") = 4096);
  m.def(
      "check_g_uniform_convergence",
      [](double r, int m_max) {
        auto res = check_g_uniform_convergence(r, m_max);
        py::dict d = report_dict(res.report);
        d["mu"] = res.mu;
        d["sup_deviation"] = res.sup_deviation;
        return d;
      },
      py::arg("r"), py::arg("m_max"));
  m.def("check_phi_approximates_qn",
        [](int n, double r, double eps) { return check_phi_approximates_qn(n, r, eps); },
        py::arg("n"), py::arg("r"), py::arg("epsilon"));
  m.def(
      "check_ordering_sequences",
      [](int mm, double y0, int steps) {
        auto res = check_ordering_sequences(mm, y0, steps);
        py::dict d = report_dict(res.report);
        py::dict items;
        for (std::size_t i = 0; i < res.item_margin.size(); ++i)
          items[kOrderingItemNames[i]] = res.item_margin[i];
        d["items"] = items;
        return d;
      },
      py::arg("m"), py::arg("y0"), py::arg("steps"));

  m.def("classify_cauliflower",
        [](Complex z, int max_iter) { return verdict_tuple(classify_cauliflower(z, max_iter)); },
        py::arg("z"), py::arg("max_iter") = kCauliflowerMaxIter);
  m.def("classify_wandering",
        [](Complex z, int n, int steps) { return verdict_tuple(classify_wandering(z, n, steps)); },
        py::arg("z"), py::arg("n"), py::arg("max_steps") = kWanderingMaxSteps);
  m.def(
      "component_inside_points",
      [](int n, int resolution, int max_steps) {
        return discretize_component(n, resolution, max_steps).inside.points;
      },
      py::arg("n"), py::arg("resolution"), py::arg("max_steps") = kWanderingMaxSteps);
  m.def(
      "cauliflower_inside_points",
      [](int resolution, int max_iter) { return discretize_cauliflower(resolution, max_iter).inside.points; },
      py::arg("resolution"), py::arg("max_iter") = kCauliflowerMaxIter);

  m.def(
      "hausdorff_distance",
      [](std::vector<Complex> a, std::vector<Complex> b, bool brute) {
        return hausdorff_distance(PointSet{std::move(a), "python"}, PointSet{std::move(b), "python"},
                                  brute ? HausdorffMethod::BruteForce : HausdorffMethod::Bucketed)
            .distance;
      },
      py::arg("a"), py::arg("b"), py::arg("brute_force") = false);
  m.def(
      "hyperbolic_distance_halfplane",
      [](double a, double x1, double x2) { return hyperbolic_distance_real(HalfPlaneFrame{a}, x1, x2); },
      py::arg("a"), py::arg("x1"), py::arg("x2"));
  m.def(
      "hyperbolic_distance_disc",
      [](Complex c, double r, double x1, double x2) {
        return hyperbolic_distance_real(DiscFrame{c, r}, x1, x2);
      },
      py::arg("center"), py::arg("radius"), py::arg("x1"), py::arg("x2"));
  m.def(
      "contraction_experiment",
      [](int mm, double t0, int steps) {
        auto r = contraction_experiment(mm, t0, steps);
        py::dict d;
        d["t"] = r.t;
        d["distances"] = r.distances;
        d["bounds"] = r.bounds;
        d["strictly_increasing"] = r.strictly_increasing;
        d["inside_halfplanes"] = r.inside_halfplanes;
        return d;
      },
      py::arg("m"), py::arg("t0"), py::arg("steps"));
  m.def(
      "hausdorff_convergence",
      [](std::vector<int> n_list, int resolution) {
        ConvergenceConfig cfg;
        cfg.n_list = std::move(n_list);
        cfg.resolution = resolution;
        py::list rows;
        for (const auto& r : run_hausdorff_convergence(cfg).rows)
          rows.append(py::make_tuple(r.n, r.d_H, r.undecided_fraction, r.pixel_size));
        return rows;
      },
      py::arg("n_list"), py::arg("resolution"));
}
