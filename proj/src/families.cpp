#include "dubinswind/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace dubinswind {

namespace {

// Below this wind speed the target is treated as stationary and the
// colinearity conditions as vacuous.
constexpr double kCalmWind = 1e-12;

bool calm(const Scenario& s) { return s.wind.speed() < kCalmWind; }

Turn first_turn(Variant v) {
  switch (v) {
    case Variant::RL2pi:
    case Variant::RLR_short:
    case Variant::RLR_long:
    case Variant::RSR:
    case Variant::RSL:
      return Turn::Right;
    case Variant::LR2pi:
    case Variant::LRL_short:
    case Variant::LRL_long:
    case Variant::LSR:
    case Variant::LSL:
      return Turn::Left;
    case Variant::SR2pi:
    case Variant::SL2pi:
      return Turn::Straight;
  }
  return Turn::Straight;
}

Turn last_turn(Variant v) {
  switch (v) {
    case Variant::SR2pi:
    case Variant::LR2pi:
    case Variant::RLR_short:
    case Variant::RLR_long:
    case Variant::RSR:
    case Variant::LSR:
      return Turn::Right;
    default:
      return Turn::Left;
  }
}

Turn opposite(Turn t) { return static_cast<Turn>(-static_cast<int>(t)); }

double snap_full_turn(double angle, double eps) { return angle > kTwoPi - eps ? 0.0 : angle; }

bool same_path(const PathCandidate& a, const PathCandidate& b) {
  constexpr double kEps = 1e-9;
  return a.tag == b.tag && std::abs(a.params.alpha - b.params.alpha) < kEps &&
         std::abs(a.params.beta - b.params.beta) < kEps && std::abs(a.params.gamma - b.params.gamma) < kEps &&
         std::abs(a.params.d - b.params.d) < kEps;
}

void push_unique(std::vector<PathCandidate>& out, PathCandidate c) {
  for (const auto& e : out)
    if (same_path(e, c)) return;
  out.push_back(std::move(c));
}

// Real roots of a1 x^2 + a2 x + a3 = 0; a double root is kept when the
// discriminant is negative only by rounding.
std::vector<double> quadratic_roots(const QuadraticCoeffs& q) {
  std::vector<double> out;
  if (q.a1 == 0.0) {
    if (q.a2 != 0.0) out.push_back(-q.a3 / q.a2);
    return out;
  }
  double disc = q.a2 * q.a2 - 4.0 * q.a1 * q.a3;
  const double disc_scale = q.a2 * q.a2 + std::abs(4.0 * q.a1 * q.a3);
  if (disc < 0.0) {
    if (disc < -1e-12 * disc_scale) return out;
    disc = 0.0;
  }
  const double root = std::sqrt(disc);
  const double t = -0.5 * (q.a2 + std::copysign(root, q.a2));
  if (t == 0.0) {
    out.push_back(0.0);
    return out;
  }
  out.push_back(t / q.a1);
  out.push_back(q.a3 / t);
  std::sort(out.begin(), out.end());
  return out;
}

// CSC geometry for one variant: the endpoint before the straight leg is
// folded in is A(b) = a0 + k rho (sin b, -cos b); the arc total is
// alpha + gamma = s0 + s1 b + 2 pi n, with alpha = wrap(la b + ca) and
// gamma = wrap(lg b + cg).
struct CscShape {
  Vec2 a0;
  double k = 0.0;
  double s0 = 0.0;
  double s1 = 0.0;
  double la = 0.0, ca = 0.0;
  double lg = 0.0, cg = 0.0;
};

CscShape csc_shape(const Scenario& s, Variant v) {
  const double r = s.rho;
  const double sf = std::sin(s.theta_f);
  const double cf = std::cos(s.theta_f);
  const bool right_first = first_turn(v) == Turn::Right;
  const bool right_last = last_turn(v) == Turn::Right;
  CscShape sh;
  const Vec2 first_center = right_first ? Vec2{r, 0.0} : Vec2{-r, 0.0};
  // Final point relative to the centre of the last circle.
  const Vec2 last_radial = right_last ? Vec2{-r * sf, r * cf} : Vec2{r * sf, -r * cf};
  sh.a0 = first_center + last_radial;
  // Radial of the first circle at heading b plus the offset to the last centre.
  sh.k = (right_first ? -1.0 : 1.0) * (right_first == right_last ? 0.0 : 2.0);
  if (right_first) {
    sh.la = -1.0;
    sh.ca = kHalfPi;
  } else {
    sh.la = 1.0;
    sh.ca = -kHalfPi;
  }
  if (right_last) {
    sh.lg = 1.0;
    sh.cg = -s.theta_f;
  } else {
    sh.lg = -1.0;
    sh.cg = s.theta_f;
  }
  sh.s0 = sh.ca + sh.cg;
  sh.s1 = sh.la + sh.lg;
  return sh;
}

Vec2 csc_arc_endpoint(const CscShape& sh, double beta, double rho) {
  return sh.a0 + Vec2{sh.k * rho * std::sin(beta), -sh.k * rho * std::cos(beta)};
}

// Offset of the straight leg that closes the path for a given heading beta and
// arc total; zero-length legs come back as 0, negative ones as NaN.
double csc_straight_length(const Scenario& s, const CscShape& sh, double beta, double arc_total) {
  const Vec2 w = s.wind.vec();
  const Vec2 b = s.target - (s.rho * arc_total) * w - csc_arc_endpoint(sh, beta, s.rho);
  const Vec2 dir = Vec2{std::cos(beta), std::sin(beta)} + w;
  const double d = dot(b, dir) / dot(dir, dir);
  if (d < -s.tol.residual_tol) return std::nan("");
  return std::max(d, 0.0);
}

Vec2 csc_free_vector(const Scenario& s, const CscShape& sh, int n) {
  return s.target - (s.rho * (sh.s0 + kTwoPi * n)) * s.wind.vec() - sh.a0;
}

}  // namespace

Family family_of(Variant v) noexcept {
  switch (v) {
    case Variant::SR2pi:
    case Variant::SL2pi:
      return Family::SC;
    case Variant::RL2pi:
    case Variant::LR2pi:
      return Family::CC;
    case Variant::RLR_short:
    case Variant::RLR_long:
    case Variant::LRL_short:
    case Variant::LRL_long:
      return Family::CCC;
    default:
      return Family::CSC;
  }
}

std::string_view to_string(Family f) noexcept {
  switch (f) {
    case Family::SC: return "SC";
    case Family::CC: return "CC";
    case Family::CCC: return "CCC";
    case Family::CSC: return "CSC";
  }
  return "?";
}

std::string_view to_string(Variant v) noexcept {
  switch (v) {
    case Variant::SR2pi: return "SR2pi";
    case Variant::SL2pi: return "SL2pi";
    case Variant::RL2pi: return "RL2pi";
    case Variant::LR2pi: return "LR2pi";
    case Variant::RLR_short: return "RL<piR";
    case Variant::RLR_long: return "RL>piR";
    case Variant::LRL_short: return "LR<piL";
    case Variant::LRL_long: return "LR>piL";
    case Variant::RSR: return "RSR";
    case Variant::RSL: return "RSL";
    case Variant::LSR: return "LSR";
    case Variant::LSL: return "LSL";
  }
  return "?";
}

Variant mirror(Variant v) noexcept {
  switch (v) {
    case Variant::SR2pi: return Variant::SL2pi;
    case Variant::SL2pi: return Variant::SR2pi;
    case Variant::RL2pi: return Variant::LR2pi;
    case Variant::LR2pi: return Variant::RL2pi;
    case Variant::RLR_short: return Variant::LRL_short;
    case Variant::RLR_long: return Variant::LRL_long;
    case Variant::LRL_short: return Variant::RLR_short;
    case Variant::LRL_long: return Variant::RLR_long;
    case Variant::RSR: return Variant::LSL;
    case Variant::RSL: return Variant::LSR;
    case Variant::LSR: return Variant::RSL;
    case Variant::LSL: return Variant::RSR;
  }
  return v;
}

PathCandidate make_candidate(Variant v, const SegmentParams& p, double rho) {
  PathCandidate c;
  c.tag = {family_of(v), v};
  c.params = p;
  auto& pieces = c.schedule.pieces;
  switch (c.tag.family) {
    case Family::SC:
      pieces = {{Turn::Straight, p.d}, {last_turn(v), kTwoPi * rho}};
      break;
    case Family::CC:
      pieces = {{first_turn(v), rho * p.alpha}, {opposite(first_turn(v)), kTwoPi * rho}};
      break;
    case Family::CCC:
      pieces = {{first_turn(v), rho * p.alpha}, {opposite(first_turn(v)), rho * p.beta}, {first_turn(v), rho * p.gamma}};
      break;
    case Family::CSC:
      pieces = {{first_turn(v), rho * p.alpha}, {Turn::Straight, p.d}, {last_turn(v), rho * p.gamma}};
      break;
  }
  c.total_time = c.schedule.total_duration();
  return c;
}

bool check_candidate(PathCandidate& c, const Scenario& s) {
  const TerminalResidual r = terminal_residual(c.schedule, s);
  c.residual = r.position;
  c.heading_residual = r.heading;
  return r.position <= s.tol.residual_tol * (1.0 + c.total_time) && r.heading <= s.tol.feas_tol;
}

// ---------------------------------------------------------------------------
// SC_2pi

std::vector<PathCandidate> solve_sc(const Scenario& s) {
  std::vector<PathCandidate> out;
  const double tol = s.tol.feas_tol;
  if (std::abs(angle_diff(s.theta_f, kHalfPi)) > tol) return out;

  const double wx = s.wind.wx;
  const double wy = s.wind.wy;
  const double full = kTwoPi * s.rho;
  const double d_raw = (s.target.y - full * wy) / (1.0 + wy);
  if (d_raw < -tol) return out;
  const double d = std::max(d_raw, 0.0);
  const double total = d + full;

  if (!calm(s)) {
    // The endpoint (0, d) must lie on the target's line of motion, at the
    // spot the target reaches at time d + 2 pi rho.
    if (std::abs(wy * s.target.x - wx * (s.target.y - d)) > tol) return out;
    if (std::abs(s.target.x - total * wx) > tol * (1.0 + total)) return out;
  }

  SegmentParams p;
  p.d = d;
  for (Variant v : {Variant::SR2pi, Variant::SL2pi}) {
    p.kappa = static_cast<int>(last_turn(v));
    PathCandidate c = make_candidate(v, p, s.rho);
    if (check_candidate(c, s)) push_unique(out, std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// CC_2pi

QuadraticCoeffs cc_coefficients(const Scenario& s, Turn first) {
  const double r = s.rho;
  const double wx = s.wind.wx;
  const double wy = s.wind.wy;
  const double X = s.target.x;
  const double Y = s.target.y;
  const double w2 = wx * wx + wy * wy;
  // Centre of the full circle: (rho, 0) after a right arc, (-rho, 0) after a left one.
  const double cx = first == Turn::Right ? r : -r;
  const double proj = wy * Y + wx * (X - cx);
  QuadraticCoeffs q;
  q.a1 = r * r * w2;
  q.a2 = 4.0 * kPi * r * r * w2 - 2.0 * r * proj;
  q.a3 = 4.0 * kPi * kPi * r * r * w2 - 4.0 * kPi * r * proj + Y * Y + X * X - 2.0 * cx * X;
  return q;
}

std::vector<PathCandidate> solve_cc(const Scenario& s) {
  std::vector<PathCandidate> out;
  const double tol = s.tol.feas_tol;
  const double r = s.rho;
  for (Turn first : {Turn::Right, Turn::Left}) {
    const bool right = first == Turn::Right;
    const Variant v = right ? Variant::RL2pi : Variant::LR2pi;
    // The terminal heading fixes alpha outright.
    const double alpha_h = right ? wrap_angle(kHalfPi - s.theta_f) : wrap_angle(s.theta_f - kHalfPi);
    const double total_h = r * (alpha_h + kTwoPi);

    std::vector<double> alphas;
    if (calm(s)) {
      alphas.push_back(alpha_h);
    } else {
      const Vec2 end = right ? Vec2{r - r * std::cos(alpha_h), r * std::sin(alpha_h)}
                             : Vec2{-r + r * std::cos(alpha_h), r * std::sin(alpha_h)};
      const Vec2 implied = (1.0 / total_h) * (s.target - end);
      if (std::abs(implied.x - s.wind.wx) > tol || std::abs(implied.y - s.wind.wy) > tol) continue;
      const QuadraticCoeffs q = cc_coefficients(s, first);
      bool match = false;
      for (double a : quadratic_roots(q)) {
        if (a < -tol || a >= kTwoPi + tol) continue;
        match = match || std::abs(angle_diff(wrap_angle(a), alpha_h)) <= tol;
      }
      // Or alpha_h satisfies the quadratic within the relative slack.
      const double q_scale = 1.0 + std::abs(q.a1) * alpha_h * alpha_h + std::abs(q.a2) * alpha_h + std::abs(q.a3);
      match = match || std::abs((q.a1 * alpha_h + q.a2) * alpha_h + q.a3) <= tol * q_scale;
      if (match) alphas.push_back(alpha_h);
    }
    for (double a : alphas) {
      SegmentParams p;
      p.alpha = a;
      p.sigma = static_cast<int>(first);
      p.n = right ? (s.theta_f < kHalfPi ? 0 : 1) : (s.theta_f >= kHalfPi ? 0 : 1);
      PathCandidate c = make_candidate(v, p, r);
      if (check_candidate(c, s)) push_unique(out, std::move(c));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CCC

CccCoeffs ccc_coefficients(const Scenario& s, Turn first, int n) {
  const double r = s.rho;
  const double sf = std::sin(s.theta_f);
  const double cf = std::cos(s.theta_f);
  const bool right = first == Turn::Right;
  CccCoeffs out;
  out.k = (right ? kHalfPi - s.theta_f : s.theta_f - kHalfPi) + kTwoPi * n;
  // Final-circle centre minus first-circle centre, excluding target drift.
  const Vec2 offset = right ? Vec2{r * sf - r, -r * cf} : Vec2{r - r * sf, r * cf};
  const Vec2 w = s.wind.vec();
  out.center_offset = s.target - (r * out.k) * w + offset;
  // |offset - 2 rho beta w|^2 = 16 rho^2 sin^2(beta / 2)
  out.g.c1 = 4.0 * r * r * dot(w, w);
  out.g.c2 = -4.0 * r * dot(out.center_offset, w);
  out.g.c3 = 8.0 * r * r;
  out.g.c4 = dot(out.center_offset, out.center_offset) - 8.0 * r * r;
  return out;
}

std::vector<PathCandidate> solve_ccc(const Scenario& s) {
  std::vector<PathCandidate> out;
  const double r = s.rho;
  const double eps = s.tol.zero_angle_eps;
  const double tol = s.tol.feas_tol;
  const Vec2 w = s.wind.vec();
  for (Turn first : {Turn::Right, Turn::Left}) {
    const bool right = first == Turn::Right;
    for (int n = -2; n <= 2; ++n) {
      const CccCoeffs eq = ccc_coefficients(s, first, n);
      for (const Root& root : solve_quadcos(eq.g, s.tol).roots) {
        const double beta = root.value;
        const double half_sin = std::sin(0.5 * beta);
        if (half_sin <= eps) continue;
        if (beta + eq.k < -tol) continue;

        const Vec2 dvec = eq.center_offset - (2.0 * r * beta) * w;
        const double arg = dvec.x / (4.0 * r * half_sin);
        if (std::abs(arg) > 1.0 + tol) continue;
        const double base = std::acos(std::clamp(arg, -1.0, 1.0));
        const double direction = std::atan2(dvec.y, dvec.x);

        // Direction of the centre-to-centre vector phi gives
        //   RLR: alpha = beta/2 + pi/2 - phi, gamma = phi + beta/2 - theta_f
        //   LRL: alpha = phi - pi/2 + beta/2, gamma = theta_f + beta/2 - phi
        auto alpha_of = [&](double phi) {
          return snap_full_turn(wrap_angle(right ? 0.5 * beta + kHalfPi - phi : phi - kHalfPi + 0.5 * beta), eps);
        };
        auto gamma_of = [&](double phi) {
          return snap_full_turn(wrap_angle(right ? phi + 0.5 * beta - s.theta_f : s.theta_f + 0.5 * beta - phi), eps);
        };
        for (double phi_a : {base, -base}) {
          for (double phi_g : {base, -base}) {
            double alpha = alpha_of(phi_a);
            double gamma = gamma_of(phi_g);
            if (std::abs(alpha + gamma - (beta + eq.k)) > tol) continue;
            // arccos loses precision near +-1; refine on the matching branch.
            if (std::abs(angle_diff(phi_a, direction)) < 1e-6 && std::abs(angle_diff(phi_g, direction)) < 1e-6) {
              alpha = alpha_of(direction);
              gamma = gamma_of(direction);
            }
            SegmentParams p;
            p.alpha = alpha;
            p.beta = beta;
            p.gamma = gamma;
            p.n = n;
            p.sigma = static_cast<int>(first);
            const bool long_middle = beta > kPi;
            const Variant v = right ? (long_middle ? Variant::RLR_long : Variant::RLR_short)
                                    : (long_middle ? Variant::LRL_long : Variant::LRL_short);
            PathCandidate c = make_candidate(v, p, r);
            if (check_candidate(c, s)) push_unique(out, std::move(c));
          }
        }
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// CSC

SinusoidCoeffs csc_sinusoid_coefficients(const Scenario& s, Variant v, int n) {
  const CscShape sh = csc_shape(s, v);
  const Vec2 b0 = csc_free_vector(s, sh, n);
  const double wx = s.wind.wx;
  const double wy = s.wind.wy;
  // (cos b + wx) By - (sin b + wy) Bx = 0, negated.
  return {wy * b0.x - wx * b0.y, b0.x, -b0.y};
}

EnvelopeCoeffs csc_envelope_coefficients(const Scenario& s, Variant v, int n) {
  const CscShape sh = csc_shape(s, v);
  const Vec2 b0 = csc_free_vector(s, sh, n);
  const double r = s.rho;
  const double wx = s.wind.wx;
  const double wy = s.wind.wy;
  EnvelopeCoeffs f;
  f.f1 = wy * b0.x - wx * b0.y - sh.k * r;
  f.f2 = b0.x - sh.k * r * wy;
  f.f3 = -b0.y - sh.k * r * wx;
  f.f4 = -r * sh.s1 * wx;
  f.f5 = r * sh.s1 * wy;
  return f;
}

namespace {

// Builds and validates the CSC path for straight heading beta, accepting it
// only if its wrap count matches the branch n the equation was built for.
void emit_csc(const Scenario& s, Variant v, const CscShape& sh, int n, double beta,
              std::vector<PathCandidate>& out) {
  const double eps = s.tol.zero_angle_eps;
  const double alpha = snap_full_turn(wrap_angle(sh.la * beta + sh.ca), eps);
  const double gamma = snap_full_turn(wrap_angle(sh.lg * beta + sh.cg), eps);
  const double wraps = (alpha + gamma - (sh.s0 + sh.s1 * beta)) / kTwoPi;
  if (std::abs(wraps - n) > 1e-6) return;
  const double d = csc_straight_length(s, sh, beta, alpha + gamma);
  if (std::isnan(d)) return;
  SegmentParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.gamma = gamma;
  p.d = d;
  p.n = n;
  p.sigma = static_cast<int>(first_turn(v));
  p.kappa = static_cast<int>(last_turn(v));
  PathCandidate c = make_candidate(v, p, s.rho);
  if (check_candidate(c, s)) push_unique(out, std::move(c));
}

}  // namespace

std::vector<PathCandidate> solve_csc(const Scenario& s) {
  std::vector<PathCandidate> out;
  const double size = 1.0 + norm(s.target) + s.rho;
  for (Variant v : {Variant::RSR, Variant::RSL, Variant::LSR, Variant::LSL}) {
    const CscShape sh = csc_shape(s, v);
    const bool same_side = sh.k == 0.0;
    for (int n = 0; n <= 2; ++n) {
      if (same_side) {
        const Vec2 b0 = csc_free_vector(s, sh, n);
        if (norm(b0) <= 1e-12 * size) {
          // The two arcs share a circle that already passes through the
          // target: any split of the turn works. Try one heading per
          // wrap-count region plus the boundaries where an arc vanishes.
          std::array<double, 4> marks{0.0, kHalfPi, s.theta_f, kTwoPi};
          std::sort(marks.begin(), marks.end());
          // All of them trace the same arc, so the first valid one is enough.
          const std::size_t before = out.size();
          for (std::size_t i = 0; i + 1 < marks.size() && out.size() == before; ++i) {
            emit_csc(s, v, sh, n, marks[i], out);
            if (out.size() == before && marks[i + 1] > marks[i])
              emit_csc(s, v, sh, n, 0.5 * (marks[i] + marks[i + 1]), out);
          }
          continue;
        }
        for (const Root& root : solve_sinusoid(csc_sinusoid_coefficients(s, v, n), s.tol).roots)
          emit_csc(s, v, sh, n, root.value, out);
      } else {
        for (const Root& root : solve_envelope(csc_envelope_coefficients(s, v, n), s.tol).roots)
          emit_csc(s, v, sh, n, root.value, out);
      }
    }
  }
  return out;
}

}  // namespace dubinswind
