// Reference machinery used to check the planner: a fixed-step RK4
// integrator, an exhaustive search over path parameters, and the classical
// zero-wind Dubins solution. None of it shares code paths with the planner's
// solvers.

#pragma once

#include <optional>
#include <string>

#include "dubinswind/families.hpp"
#include "dubinswind/geometry.hpp"

namespace dubinswind::oracle {

struct GridSpec {
  double angle_step = kTwoPi / 180.0;  // radians
  double length_step = 0.05;           // length units
  int refine_depth = 1;                // Newton passes on each seed (>= 1)

  /// Throws std::invalid_argument unless both steps are positive and depth >= 1.
  void check() const;
};

/// Time error the brute-force search is documented to stay within.
inline constexpr double kGridBound = 0.02;

RelativeState rk4_integrate(const RelativeState& start, const ControlSchedule& schedule, double rho, double step);

struct BruteForceResult {
  bool found = false;
  double time = 0.0;
  Variant variant = Variant::LSL;
  SegmentParams params;
  double residual = 0.0;
  double bound = kGridBound;
};

/// Grid search over every pattern and its subpatterns, each cell scored by
/// the miss distance to the moving target, with Newton refinement from every
/// local minimum of the grid. The scenario must be normalized. With `only`
/// set, the search is restricted to the patterns of that family.
BruteForceResult brute_force(const Scenario& normalized, const GridSpec& grid = {},
                             std::optional<Family> only = std::nullopt);

struct DubinsPath {
  std::string word;  // e.g. "LSR"
  double t = 0.0, p = 0.0, q = 0.0;  // normalized segment lengths
  double length = 0.0;
};

/// Shortest of the six classical words between two poses without wind, or
/// nothing when no word applies (never happens for distinct poses).
std::optional<DubinsPath> classical_dubins_path(const Pose& start, const Pose& goal, double rho);

/// Shortest classical Dubins length.
double classical_dubins(const Pose& start, const Pose& goal, double rho);

}  // namespace dubinswind::oracle
