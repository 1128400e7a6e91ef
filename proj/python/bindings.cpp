#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>

#include "dubinswind/families.hpp"
#include "dubinswind/geometry.hpp"
#include "dubinswind/planner.hpp"
#include "dubinswind/rootfind.hpp"

namespace py = pybind11;
using namespace dubinswind;

namespace {

Scenario make_scenario(std::pair<double, double> wind, std::pair<double, double> target, double theta_f, double rho,
                       std::optional<std::tuple<double, double, double>> start, double feas_tol,
                       double residual_tol) {
  Scenario s;
  s.wind = {wind.first, wind.second};
  s.target = {target.first, target.second};
  s.theta_f = theta_f;
  s.rho = rho;
  if (start) s.start = Pose{std::get<0>(*start), std::get<1>(*start), std::get<2>(*start)};
  s.tol.feas_tol = feas_tol;
  s.tol.residual_tol = residual_tol;
  return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimum-time paths for a fixed-wing vehicle meeting a goal pose in steady wind";

  py::enum_<Family>(m, "Family")
      .value("SC", Family::SC)
      .value("CC", Family::CC)
      .value("CCC", Family::CCC)
      .value("CSC", Family::CSC);

  py::enum_<Variant>(m, "Variant")
      .value("SR2pi", Variant::SR2pi)
      .value("SL2pi", Variant::SL2pi)
      .value("RL2pi", Variant::RL2pi)
      .value("LR2pi", Variant::LR2pi)
      .value("RLR_short", Variant::RLR_short)
      .value("RLR_long", Variant::RLR_long)
      .value("LRL_short", Variant::LRL_short)
      .value("LRL_long", Variant::LRL_long)
      .value("RSR", Variant::RSR)
      .value("RSL", Variant::RSL)
      .value("LSR", Variant::LSR)
      .value("LSL", Variant::LSL);

  py::class_<ToleranceSet>(m, "ToleranceSet")
      .def(py::init<>())
      .def_readwrite("feas_tol", &ToleranceSet::feas_tol)
      .def_readwrite("residual_tol", &ToleranceSet::residual_tol)
      .def_readwrite("root_tol", &ToleranceSet::root_tol)
      .def_readwrite("zero_angle_eps", &ToleranceSet::zero_angle_eps);

  py::class_<Scenario>(m, "Scenario")
      .def(py::init(&make_scenario), py::arg("wind"), py::arg("target"), py::arg("theta_f"), py::arg("rho") = 1.0,
           py::arg("start") = py::none(), py::arg("feas_tol") = 1e-6, py::arg("residual_tol") = 1e-6)
      .def_property_readonly("wind", [](const Scenario& s) { return std::pair(s.wind.wx, s.wind.wy); })
      .def_property_readonly("target", [](const Scenario& s) { return std::pair(s.target.x, s.target.y); })
      .def_readonly("theta_f", &Scenario::theta_f)
      .def_readonly("rho", &Scenario::rho)
      .def_readonly("tol", &Scenario::tol);

  py::class_<SegmentParams>(m, "SegmentParams")
      .def_readonly("alpha", &SegmentParams::alpha)
      .def_readonly("beta", &SegmentParams::beta)
      .def_readonly("gamma", &SegmentParams::gamma)
      .def_readonly("d", &SegmentParams::d)
      .def_readonly("n", &SegmentParams::n);

  py::class_<PathCandidate>(m, "PathCandidate")
      .def_property_readonly("family", [](const PathCandidate& c) { return c.tag.family; })
      .def_property_readonly("variant", [](const PathCandidate& c) { return c.tag.variant; })
      .def_property_readonly("name", [](const PathCandidate& c) { return std::string(to_string(c.tag.variant)); })
      .def_readonly("params", &PathCandidate::params)
      .def_readonly("total_time", &PathCandidate::total_time)
      .def_readonly("residual", &PathCandidate::residual)
      .def_property_readonly("pieces",
                             [](const PathCandidate& c) {
                               std::vector<std::pair<int, double>> out;
                               for (const auto& p : c.schedule.pieces)
                                 out.emplace_back(static_cast<int>(p.u), p.duration);
                               return out;
                             })
      .def("__repr__", [](const PathCandidate& c) {
        return "<PathCandidate " + std::string(to_string(c.tag.variant)) + " T=" + std::to_string(c.total_time) + ">";
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("position", &ValidationReport::position)
      .def_readonly("heading", &ValidationReport::heading)
      .def_readonly("interception", &ValidationReport::interception)
      .def_readonly("feasible", &ValidationReport::feasible);

  py::class_<PlanResult>(m, "PlanResult")
      .def_readonly("best", &PlanResult::best)
      .def_readonly("all_candidates", &PlanResult::all_candidates)
      .def_readonly("t_f", &PlanResult::t_f)
      .def_readonly("normalized", &PlanResult::normalized)
      .def_readonly("widened", &PlanResult::widened)
      .def_readonly("wall_time", &PlanResult::wall_time)
      .def_property_readonly("feasible", &PlanResult::feasible)
      .def_property_readonly("per_family_times", [](const PlanResult& r) {
        py::dict d;
        for (Family f : {Family::SC, Family::CC, Family::CCC, Family::CSC})
          d[py::str(std::string(to_string(f)))] = r.family_time(f);
        return d;
      });

  m.def("plan", [](const Scenario& s) { return plan(s); }, py::arg("scenario"),
        "Plan the minimum-time path; raises ValueError on invalid input.");
  m.def("validate", &validate, py::arg("candidate"), py::arg("normalized"));
  m.def(
      "sample",
      [](const PlanResult& r, double dt) {
        if (!r.best) throw py::value_error("no feasible candidate to sample");
        if (!(dt > 0.0)) throw py::value_error("dt must be positive");
        std::vector<std::tuple<double, double, double, double, int, double, double>> rows;
        for (const auto& s : sample(*r.best, dt, r.normalized, r.denormalizing_transform))
          rows.emplace_back(s.t, s.x_rel, s.y_rel, s.theta, s.u, s.x_inertial, s.y_inertial);
        return rows;
      },
      py::arg("result"), py::arg("dt"),
      "Rows (t, x_rel, y_rel, theta, u, x_inertial, y_inertial) along the best path.");

  m.def(
      "solve_quadcos",
      [](double c1, double c2, double c3, double c4) { return solve_quadcos({c1, c2, c3, c4}).values(); },
      "Roots in [0, 2pi) of c1 b^2 + c2 b + c3 cos b + c4.");
  m.def(
      "solve_sinusoid", [](double e1, double e2, double e3) { return solve_sinusoid({e1, e2, e3}).values(); },
      "Roots in [0, 2pi) of e1 + e2 sin b + e3 cos b.");
  m.def(
      "solve_envelope",
      [](double f1, double f2, double f3, double f4, double f5) {
        return solve_envelope({f1, f2, f3, f4, f5}).values();
      },
      "Roots in [0, 2pi) of f1 + f2 sin b + f3 cos b + b (f4 sin b + f5 cos b).");
}
