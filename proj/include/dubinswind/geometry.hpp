// Frames, kinematic state and scenario handling for a constant-speed,
// bounded-curvature vehicle flying in steady wind.
//
// All planning happens in the air-relative frame: a frame that coincides with
// the inertial frame at t = 0 and then translates with the wind. In that frame
// the vehicle obeys plain Dubins kinematics (unit speed, turn radius rho) and
// the inertial goal turns into a target moving with velocity -wind.

#pragma once

#include <numbers>
#include <optional>
#include <utility>
#include <vector>

namespace dubinswind {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kHalfPi = 0.5 * std::numbers::pi;

/// Wraps an angle into [0, 2pi).
double wrap_angle(double angle) noexcept;

/// Signed difference a - b wrapped into [-pi, pi).
double angle_diff(double a, double b) noexcept;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) noexcept { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) noexcept { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(double s, Vec2 a) noexcept { return {s * a.x, s * a.y}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

double dot(Vec2 a, Vec2 b) noexcept;
double cross(Vec2 a, Vec2 b) noexcept;
double norm(Vec2 a) noexcept;

/// Pose in the air-relative frame. theta is kept in [0, 2pi).
struct RelativeState {
  double x = 0.0;
  double y = 0.0;
  double theta = kHalfPi;

  Vec2 position() const noexcept { return {x, y}; }
};

/// Pose in the inertial frame; heading measured counterclockwise from east.
struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = kHalfPi;
};

/// Steady wind velocity, normalized by the vehicle airspeed. Must satisfy
/// wx^2 + wy^2 < 1.
struct WindVector {
  double wx = 0.0;
  double wy = 0.0;

  Vec2 vec() const noexcept { return {wx, wy}; }
  double speed() const noexcept;
};

struct ToleranceSet {
  double feas_tol = 1e-6;        // slack on measure-zero feasibility equalities
  double residual_tol = 1e-6;    // terminal position residual, scaled by (1 + T)
  double root_tol = 1e-12;       // final bracket width of isolated roots
  double zero_angle_eps = 1e-8;  // arcs shorter than this are treated as absent

  /// Throws std::invalid_argument unless every tolerance is finite and positive.
  void check() const;
};

/// One planning problem. target is the inertial goal position, theta_f the
/// required final heading. When start is empty the vehicle starts at the
/// origin heading north, which is also the normalized start.
struct Scenario {
  WindVector wind;
  Vec2 target;
  double theta_f = 0.0;
  double rho = 1.0;
  std::optional<Pose> start;
  ToleranceSet tol;

  /// Throws std::invalid_argument on |wind| >= 1, rho <= 0, non-finite input.
  void check() const;
};

/// Maps original-frame quantities into the normalized frame, where the start
/// pose is (0, 0, pi/2): p_norm = R(rotation) * (p - origin).
struct RigidTransform {
  Vec2 origin;
  double rotation = 0.0;

  static RigidTransform identity() noexcept { return {}; }
  bool is_identity() const noexcept { return origin == Vec2{} && rotation == 0.0; }

  Vec2 point_to_normalized(Vec2 p) const noexcept;
  Vec2 point_to_original(Vec2 p) const noexcept;
  Vec2 vector_to_normalized(Vec2 v) const noexcept;
  Vec2 vector_to_original(Vec2 v) const noexcept;
  double heading_to_normalized(double h) const noexcept;
  double heading_to_original(double h) const noexcept;
};

/// Turn direction / control value. Right is clockwise (u = -1).
enum class Turn : int { Right = -1, Straight = 0, Left = 1 };

struct ControlPiece {
  Turn u = Turn::Straight;
  double duration = 0.0;
};

/// Piecewise-constant control. Candidates produced by the planner have at
/// most three pieces.
struct ControlSchedule {
  std::vector<ControlPiece> pieces;

  double total_duration() const noexcept;
};

/// Rotates and translates the scenario so the start pose becomes (0, 0, pi/2).
/// The returned transform maps original quantities to normalized ones.
std::pair<Scenario, RigidTransform> normalize(const Scenario& scenario);

/// Exact endpoint of a single constant-control piece (arc or line).
RelativeState propagate(const RelativeState& start, Turn u, double duration, double rho) noexcept;

/// Exact endpoint of a piecewise arc/line path.
RelativeState integrate(const RelativeState& start, const ControlSchedule& schedule, double rho) noexcept;

/// Pose after `t` time units along the schedule (clamped to the schedule end).
RelativeState state_at(const RelativeState& start, const ControlSchedule& schedule, double rho,
                       double t) noexcept;

/// Inertial position of an air-relative position at time t.
Vec2 to_inertial(Vec2 relative, double t, const WindVector& wind) noexcept;

/// Position of the goal in the air-relative frame at time t: target - t * wind.
Vec2 target_relative(const Scenario& scenario, double t) noexcept;

/// The normalized start pose.
inline constexpr RelativeState kStartState{0.0, 0.0, kHalfPi};

struct TerminalResidual {
  double position = 0.0;      // |endpoint - target_relative(T)|
  double heading = 0.0;       // |wrapped(theta_end - theta_f)|
  double interception = 0.0;  // | |endpoint - target| - T |w| |, or |endpoint - target| without wind
};

/// Integrates the schedule from the normalized start and compares against the
/// moving target at the schedule's total duration.
TerminalResidual terminal_residual(const ControlSchedule& schedule, const Scenario& normalized);

}  // namespace dubinswind
