#include "dubinswind/planner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <tuple>

namespace dubinswind {

namespace {

constexpr double kTieWindow = 1e-12;

bool before(const PathCandidate& a, const PathCandidate& b) {
  if (std::abs(a.total_time - b.total_time) > kTieWindow) return a.total_time < b.total_time;
  return std::tuple(static_cast<int>(a.tag.family), static_cast<int>(a.tag.variant)) <
         std::tuple(static_cast<int>(b.tag.family), static_cast<int>(b.tag.variant));
}

std::vector<PathCandidate> collect(const Scenario& s) {
  std::vector<PathCandidate> all;
  for (auto* solver : {&solve_sc, &solve_cc, &solve_ccc, &solve_csc}) {
    for (auto& c : solver(s)) {
      if (validate(c, s).feasible) all.push_back(std::move(c));
    }
  }
  std::stable_sort(all.begin(), all.end(), before);
  return all;
}

}  // namespace

ValidationReport validate(const PathCandidate& candidate, const Scenario& normalized) {
  const TerminalResidual r = terminal_residual(candidate.schedule, normalized);
  const double scale = 1.0 + candidate.schedule.total_duration();
  ValidationReport out;
  out.position = r.position;
  out.heading = r.heading;
  out.interception = r.interception;
  out.feasible = r.position <= normalized.tol.residual_tol * scale && r.heading <= normalized.tol.feas_tol &&
                 r.interception <= normalized.tol.residual_tol * scale;
  return out;
}

PlanResult plan(const Scenario& scenario, const PlanOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  auto [normalized, transform] = normalize(scenario);

  PlanResult result;
  result.denormalizing_transform = transform;
  result.all_candidates = collect(normalized);
  if (result.all_candidates.empty() && options.widen_on_empty) {
    normalized.tol.feas_tol *= 100.0;
    result.all_candidates = collect(normalized);
    result.widened = true;
  }
  result.normalized = normalized;

  for (const auto& c : result.all_candidates) {
    double& slot = result.per_family_times[static_cast<int>(c.tag.family)];
    slot = std::min(slot, c.total_time);
  }
  if (!result.all_candidates.empty()) {
    result.best = result.all_candidates.front();
    result.t_f = result.best->total_time;
  }
  result.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

std::vector<TrajectorySample> sample(const PathCandidate& candidate, double dt, const Scenario& normalized,
                                     const RigidTransform& transform) {
  if (!(dt > 0.0)) return {};
  const auto& pieces = candidate.schedule.pieces;
  const double total = candidate.schedule.total_duration();

  std::vector<double> times;
  for (long k = 0;; ++k) {
    const double t = static_cast<double>(k) * dt;
    if (t >= total - kTieWindow) break;
    times.push_back(t);
  }
  double switch_time = 0.0;
  for (std::size_t i = 0; i + 1 < pieces.size(); ++i) {
    switch_time += pieces[i].duration;
    if (switch_time < total - kTieWindow) times.push_back(switch_time);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(), [](double a, double b) { return b - a <= kTieWindow; }),
              times.end());
  times.push_back(total);

  const Vec2 wind_original = transform.vector_to_original(normalized.wind.vec());
  const WindVector wind{wind_original.x, wind_original.y};

  std::vector<TrajectorySample> rows;
  rows.reserve(times.size());
  RelativeState state = kStartState;
  double state_time = 0.0;
  std::size_t piece = 0;
  double piece_end = pieces.empty() ? 0.0 : pieces[0].duration;
  // Control reported on the final row: the last piece actually flown.
  int final_u = 0;
  for (const auto& p : pieces)
    if (p.duration > 0.0) final_u = static_cast<int>(p.u);
  for (double t : times) {
    // Move to the piece flown just after t, propagating exactly through
    // every piece that has already ended.
    while (piece + 1 < pieces.size() && piece_end <= t) {
      state = propagate(state, pieces[piece].u, piece_end - state_time, normalized.rho);
      state_time = piece_end;
      ++piece;
      piece_end += pieces[piece].duration;
    }
    const RelativeState now =
        pieces.empty() ? state : propagate(state, pieces[piece].u, t - state_time, normalized.rho);
    TrajectorySample row;
    row.t = t;
    const Vec2 rel = transform.point_to_original(now.position());
    row.x_rel = rel.x;
    row.y_rel = rel.y;
    row.theta = transform.heading_to_original(now.theta);
    row.u = t < total ? static_cast<int>(pieces[piece].u) : final_u;
    const Vec2 inertial = to_inertial(rel, t, wind);
    row.x_inertial = inertial.x;
    row.y_inertial = inertial.y;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dubinswind
