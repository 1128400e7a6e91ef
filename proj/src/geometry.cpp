#include "dubinswind/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dubinswind {

double wrap_angle(double angle) noexcept {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round back up to exactly 2pi
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double angle_diff(double a, double b) noexcept {
  double d = wrap_angle(a - b);
  return d >= kPi ? d - kTwoPi : d;
}

double dot(Vec2 a, Vec2 b) noexcept { return a.x * b.x + a.y * b.y; }
double cross(Vec2 a, Vec2 b) noexcept { return a.x * b.y - a.y * b.x; }
double norm(Vec2 a) noexcept { return std::hypot(a.x, a.y); }

double WindVector::speed() const noexcept { return std::hypot(wx, wy); }

void ToleranceSet::check() const {
  auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
  if (!positive(feas_tol)) throw std::invalid_argument("feas_tol must be positive");
  if (!positive(residual_tol)) throw std::invalid_argument("residual_tol must be positive");
  if (!positive(root_tol)) throw std::invalid_argument("root_tol must be positive");
  if (!positive(zero_angle_eps)) throw std::invalid_argument("zero_angle_eps must be positive");
}

void Scenario::check() const {
  if (!std::isfinite(wind.wx) || !std::isfinite(wind.wy))
    throw std::invalid_argument("wind must be finite");
  if (wind.wx * wind.wx + wind.wy * wind.wy >= 1.0)
    throw std::invalid_argument("wind speed must be below the airspeed (wx^2 + wy^2 < 1)");
  if (!std::isfinite(rho) || rho <= 0.0) throw std::invalid_argument("rho must be positive");
  if (!std::isfinite(target.x) || !std::isfinite(target.y))
    throw std::invalid_argument("target must be finite");
  if (!std::isfinite(theta_f)) throw std::invalid_argument("theta_f must be finite");
  if (start && (!std::isfinite(start->x) || !std::isfinite(start->y) || !std::isfinite(start->heading)))
    throw std::invalid_argument("start pose must be finite");
  tol.check();
}

namespace {

Vec2 rotate(Vec2 v, double angle) noexcept {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v.x - s * v.y, s * v.x + c * v.y};
}

}  // namespace

Vec2 RigidTransform::point_to_normalized(Vec2 p) const noexcept {
  if (is_identity()) return p;
  return rotate(p - origin, rotation);
}

Vec2 RigidTransform::point_to_original(Vec2 p) const noexcept {
  if (is_identity()) return p;
  return rotate(p, -rotation) + origin;
}

Vec2 RigidTransform::vector_to_normalized(Vec2 v) const noexcept {
  return rotation == 0.0 ? v : rotate(v, rotation);
}

Vec2 RigidTransform::vector_to_original(Vec2 v) const noexcept {
  return rotation == 0.0 ? v : rotate(v, -rotation);
}

double RigidTransform::heading_to_normalized(double h) const noexcept {
  return wrap_angle(h + rotation);
}

double RigidTransform::heading_to_original(double h) const noexcept {
  return wrap_angle(h - rotation);
}

double ControlSchedule::total_duration() const noexcept {
  double total = 0.0;
  for (const auto& p : pieces) total += p.duration;
  return total;
}

std::pair<Scenario, RigidTransform> normalize(const Scenario& scenario) {
  scenario.check();
  Scenario out = scenario;
  out.theta_f = wrap_angle(scenario.theta_f);
  RigidTransform tf;
  if (scenario.start) {
    const Pose& s = *scenario.start;
    tf.origin = {s.x, s.y};
    const double rot = angle_diff(kHalfPi, wrap_angle(s.heading));
    tf.rotation = rot;
    out.target = tf.point_to_normalized(scenario.target);
    const Vec2 w = tf.vector_to_normalized(scenario.wind.vec());
    out.wind = {w.x, w.y};
    out.theta_f = tf.heading_to_normalized(scenario.theta_f);
  }
  out.start.reset();
  return {out, tf};
}

RelativeState propagate(const RelativeState& s, Turn u, double duration, double rho) noexcept {
  if (u == Turn::Straight) {
    return {s.x + duration * std::cos(s.theta), s.y + duration * std::sin(s.theta), s.theta};
  }
  const double dir = static_cast<double>(static_cast<int>(u));
  const double theta_end = s.theta + dir * duration / rho;
  return {s.x + dir * rho * (std::sin(theta_end) - std::sin(s.theta)),
          s.y - dir * rho * (std::cos(theta_end) - std::cos(s.theta)), wrap_angle(theta_end)};
}

RelativeState integrate(const RelativeState& start, const ControlSchedule& schedule, double rho) noexcept {
  RelativeState s = start;
  for (const auto& piece : schedule.pieces) s = propagate(s, piece.u, piece.duration, rho);
  return s;
}

RelativeState state_at(const RelativeState& start, const ControlSchedule& schedule, double rho,
                       double t) noexcept {
  RelativeState s = start;
  double elapsed = 0.0;
  for (const auto& piece : schedule.pieces) {
    if (t <= elapsed) break;
    const double step = std::min(piece.duration, t - elapsed);
    s = propagate(s, piece.u, step, rho);
    elapsed += piece.duration;
  }
  return s;
}

Vec2 to_inertial(Vec2 relative, double t, const WindVector& wind) noexcept {
  return {relative.x + t * wind.wx, relative.y + t * wind.wy};
}

Vec2 target_relative(const Scenario& scenario, double t) noexcept {
  return {scenario.target.x - t * scenario.wind.wx, scenario.target.y - t * scenario.wind.wy};
}

TerminalResidual terminal_residual(const ControlSchedule& schedule, const Scenario& normalized) {
  const double total = schedule.total_duration();
  const RelativeState end = integrate(kStartState, schedule, normalized.rho);
  TerminalResidual r;
  r.position = norm(end.position() - target_relative(normalized, total));
  r.heading = std::abs(angle_diff(end.theta, normalized.theta_f));
  const double to_target = norm(end.position() - normalized.target);
  const double w = normalized.wind.speed();
  r.interception = w > 0.0 ? std::abs(to_target - total * w) : to_target;
  return r;
}

}  // namespace dubinswind
