// Global minimum-time selection over the four path families.

#pragma once

#include <array>
#include <limits>
#include <optional>
#include <vector>

#include "dubinswind/families.hpp"
#include "dubinswind/geometry.hpp"

namespace dubinswind {

inline constexpr double kNoCandidate = std::numeric_limits<double>::infinity();

struct PlanOptions {
  /// Retry once with feas_tol x100 when nothing survives validation.
  bool widen_on_empty = true;
};

struct PlanResult {
  std::optional<PathCandidate> best;
  std::vector<PathCandidate> all_candidates;  // sorted by total_time, then enum order
  double t_f = kNoCandidate;
  std::array<double, 4> per_family_times{kNoCandidate, kNoCandidate, kNoCandidate, kNoCandidate};
  RigidTransform denormalizing_transform;
  Scenario normalized;
  double wall_time = 0.0;  // seconds
  bool widened = false;

  bool feasible() const noexcept { return best.has_value(); }
  double family_time(Family f) const noexcept { return per_family_times[static_cast<int>(f)]; }
};

/// Runs every family solver on the normalized scenario and keeps the
/// fastest validated candidate. Throws std::invalid_argument on bad input.
PlanResult plan(const Scenario& scenario, const PlanOptions& options = {});

struct ValidationReport {
  double position = 0.0;
  double heading = 0.0;
  double interception = 0.0;
  bool feasible = false;
};

/// Integrates the candidate's schedule and checks it against the moving
/// target of a normalized scenario.
ValidationReport validate(const PathCandidate& candidate, const Scenario& normalized);

struct TrajectorySample {
  double t = 0.0;
  double x_rel = 0.0;
  double y_rel = 0.0;
  double theta = 0.0;
  int u = 0;
  double x_inertial = 0.0;
  double y_inertial = 0.0;
};

/// Samples the path at multiples of dt, at every control switch and at the
/// final time. Relative poses are in the air-relative frame and inertial
/// positions in the original frame; both use the original axes.
std::vector<TrajectorySample> sample(const PathCandidate& candidate, double dt, const Scenario& normalized,
                                     const RigidTransform& transform = {});

}  // namespace dubinswind
