#include "dubinswind/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace dubinswind::oracle {

void GridSpec::check() const {
  if (!(angle_step > 0.0) || !(length_step > 0.0)) throw std::invalid_argument("grid steps must be positive");
  if (refine_depth < 1) throw std::invalid_argument("refine_depth must be at least 1");
}

RelativeState rk4_integrate(const RelativeState& start, const ControlSchedule& schedule, double rho, double step) {
  double x = start.x;
  double y = start.y;
  double th = start.theta;
  for (const auto& piece : schedule.pieces) {
    const double rate = static_cast<double>(static_cast<int>(piece.u)) / rho;
    const long steps = std::max(1L, static_cast<long>(std::ceil(piece.duration / step)));
    const double h = piece.duration / static_cast<double>(steps);
    for (long i = 0; i < steps; ++i) {
      const double k1x = std::cos(th), k1y = std::sin(th);
      const double t2 = th + 0.5 * h * rate;
      const double k2x = std::cos(t2), k2y = std::sin(t2);
      const double k3x = k2x, k3y = k2y;
      const double t4 = th + h * rate;
      const double k4x = std::cos(t4), k4y = std::sin(t4);
      x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      y += h / 6.0 * (k1y + 2.0 * k2y + 2.0 * k3y + k4y);
      th += h * rate;
    }
  }
  return {x, y, wrap_angle(th)};
}

namespace {

struct Pattern {
  Variant variant;  // long/short is decided after solving
  int first;        // +1 left, -1 right
  bool straight;    // middle piece is a line (CSC) or an opposite arc (CCC)
  int last;
};

constexpr std::array<Pattern, 6> kPatterns{{
    {Variant::RSR, -1, true, -1},
    {Variant::RSL, -1, true, 1},
    {Variant::LSR, 1, true, -1},
    {Variant::LSL, 1, true, 1},
    {Variant::RLR_short, -1, false, -1},
    {Variant::LRL_short, 1, false, 1},
}};

// Arc of signed turn `dir` through `sweep` radians, using the turning circle.
void arc(double& x, double& y, double& h, int dir, double sweep, double rho) {
  const double cx = x - dir * rho * std::sin(h);
  const double cy = y + dir * rho * std::cos(h);
  h += dir * sweep;
  x = cx + dir * rho * std::sin(h);
  y = cy - dir * rho * std::cos(h);
}

struct Eval {
  double fx = 0.0, fy = 0.0;  // endpoint minus moving target
  double time = 0.0;
  double gamma = 0.0;
  double miss() const { return std::hypot(fx, fy); }
};

// a is the first-arc radian; b the line length (CSC) or middle-arc radian (CCC).
Eval evaluate(const Pattern& p, const Scenario& s, double a, double b) {
  const double r = s.rho;
  double x = 0.0, y = 0.0, h = kHalfPi;
  arc(x, y, h, p.first, a, r);
  double mid_time;
  if (p.straight) {
    x += b * std::cos(h);
    y += b * std::sin(h);
    mid_time = b;
  } else {
    arc(x, y, h, -p.first, b, r);
    mid_time = r * b;
  }
  double g = std::fmod(p.last * (s.theta_f - h), kTwoPi);
  if (g < 0.0) g += kTwoPi;
  arc(x, y, h, p.last, g, r);
  Eval e;
  e.time = r * a + mid_time + r * g;
  e.gamma = g;
  e.fx = x - (s.target.x - e.time * s.wind.wx);
  e.fy = y - (s.target.y - e.time * s.wind.wy);
  return e;
}

double wrap2pi(double v) {
  v = std::fmod(v, kTwoPi);
  return v < 0.0 ? v + kTwoPi : v;
}

struct Point {
  double a, b;
};

Point clamp_point(const Pattern& p, Point q, double b_max) {
  q.a = wrap2pi(q.a);
  q.b = p.straight ? std::clamp(q.b, 0.0, b_max) : wrap2pi(q.b);
  return q;
}

// Damped Newton on the 2x2 miss vector with a finite-difference Jacobian.
Point newton(const Pattern& p, const Scenario& s, Point q, double b_max) {
  constexpr double kH = 1e-7;
  Eval e = evaluate(p, s, q.a, q.b);
  for (int it = 0; it < 80; ++it) {
    if (e.miss() < 1e-13 * (1.0 + e.time)) break;
    const Eval ap = evaluate(p, s, q.a + kH, q.b), am = evaluate(p, s, q.a - kH, q.b);
    const Eval bp = evaluate(p, s, q.a, q.b + kH), bm = evaluate(p, s, q.a, q.b - kH);
    const double j11 = (ap.fx - am.fx) / (2 * kH), j21 = (ap.fy - am.fy) / (2 * kH);
    const double j12 = (bp.fx - bm.fx) / (2 * kH), j22 = (bp.fy - bm.fy) / (2 * kH);
    const double det = j11 * j22 - j12 * j21;
    double da, db;
    if (std::abs(det) > 1e-14) {
      da = -(j22 * e.fx - j12 * e.fy) / det;
      db = -(-j21 * e.fx + j11 * e.fy) / det;
    } else {
      // Steepest descent on |F|^2 when the Jacobian is singular.
      da = -(j11 * e.fx + j21 * e.fy);
      db = -(j12 * e.fx + j22 * e.fy);
    }
    bool improved = false;
    for (double lambda = 1.0; lambda > 1e-6; lambda *= 0.5) {
      const Point trial = clamp_point(p, {q.a + lambda * da, q.b + lambda * db}, b_max);
      const Eval te = evaluate(p, s, trial.a, trial.b);
      if (te.miss() < e.miss()) {
        q = trial;
        e = te;
        improved = true;
        break;
      }
    }
    if (!improved) break;
  }
  return q;
}

// Local pattern search around a grid seed with a shrinking stencil.
Point polish(const Pattern& p, const Scenario& s, Point q, double da, double db, int depth, double b_max) {
  double best = evaluate(p, s, q.a, q.b).miss();
  for (int level = 0; level < depth; ++level) {
    da *= 0.5;
    db *= 0.5;
    for (int i = -1; i <= 1; ++i) {
      for (int j = -1; j <= 1; ++j) {
        const Point t = clamp_point(p, {q.a + i * da, q.b + j * db}, b_max);
        const double m = evaluate(p, s, t.a, t.b).miss();
        if (m < best) best = m, q = t;
      }
    }
  }
  return q;
}

void consider(BruteForceResult& best, Variant v, double time, const SegmentParams& params, double miss) {
  if (!best.found || time < best.time) {
    best.found = true;
    best.time = time;
    best.variant = v;
    best.params = params;
    best.residual = miss;
  }
}

void search_pattern(const Pattern& p, const Scenario& s, const GridSpec& grid, double d_max,
                    BruteForceResult& best) {
  const int na = static_cast<int>(std::ceil(kTwoPi / grid.angle_step));
  const double da = kTwoPi / na;
  const int nb = p.straight ? static_cast<int>(std::ceil(d_max / grid.length_step)) + 1 : na;
  const double db = p.straight ? d_max / (nb - 1) : da;
  const double b_max = p.straight ? d_max : kTwoPi;

  std::vector<double> miss(static_cast<std::size_t>(na) * nb);
  auto at = [&](int i, int j) -> double& { return miss[static_cast<std::size_t>(i) * nb + j]; };
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j) at(i, j) = evaluate(p, s, i * da, j * db).miss();

  std::vector<std::pair<double, Point>> seeds;
  for (int i = 0; i < na; ++i) {
    for (int j = 0; j < nb; ++j) {
      const double v = at(i, j);
      bool minimum = true;
      for (int di = -1; di <= 1 && minimum; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if (di == 0 && dj == 0) continue;
          const int ii = (i + di + na) % na;
          int jj = j + dj;
          if (p.straight) {
            if (jj < 0 || jj >= nb) continue;
          } else {
            jj = (jj + nb) % nb;
          }
          if (at(ii, jj) < v) {
            minimum = false;
            break;
          }
        }
      }
      if (minimum) seeds.push_back({v, {i * da, j * db}});
    }
  }
  std::sort(seeds.begin(), seeds.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  if (seeds.size() > 4000) seeds.resize(4000);

  for (const auto& [v, seed] : seeds) {
    Point q = polish(p, s, seed, da, db, grid.refine_depth, b_max);
    q = newton(p, s, q, b_max);
    const Eval e = evaluate(p, s, q.a, q.b);
    if (e.miss() > 1e-9 * (1.0 + e.time)) continue;
    SegmentParams params;
    params.alpha = q.a;
    params.gamma = e.gamma;
    params.sigma = p.first;
    params.kappa = p.last;
    Variant v2 = p.variant;
    if (p.straight) {
      params.d = q.b;
    } else {
      params.beta = q.b;
      if (q.b > kPi) v2 = p.first < 0 ? Variant::RLR_long : Variant::LRL_long;
    }
    consider(best, v2, e.time, params, e.miss());
  }
}

void check_full_turn_paths(const Scenario& s, BruteForceResult& best, std::optional<Family> only) {
  const double r = s.rho;
  const double full = kTwoPi * r;
  const double tol = 1e-9;
  // Line then a full circle: the vehicle is back at (0, d) heading north.
  if ((!only || *only == Family::SC) && std::abs(std::remainder(s.theta_f - kHalfPi, kTwoPi)) < 1e-9) {
    const double f0x = -s.target.x + full * s.wind.wx;
    const double f0y = -s.target.y + full * s.wind.wy;
    const double vx = s.wind.wx, vy = 1.0 + s.wind.wy;
    const double d = std::max(0.0, -(f0x * vx + f0y * vy) / (vx * vx + vy * vy));
    const double m = std::hypot(f0x + d * vx, f0y + d * vy);
    if (m <= tol * (1.0 + d + full)) {
      SegmentParams params;
      params.d = d;
      consider(best, Variant::SR2pi, d + full, params, m);
    }
  }
  // One arc fixed by the final heading, then a full opposite circle.
  for (int first : {-1, 1}) {
    if (only && *only != Family::CC) break;
    const double a = wrap2pi(first * (s.theta_f - kHalfPi));
    double x = 0.0, y = 0.0, h = kHalfPi;
    arc(x, y, h, first, a, r);
    const double time = r * a + full;
    const double m = std::hypot(x - (s.target.x - time * s.wind.wx), y - (s.target.y - time * s.wind.wy));
    if (m <= tol * (1.0 + time)) {
      SegmentParams params;
      params.alpha = a;
      params.sigma = first;
      consider(best, first < 0 ? Variant::RL2pi : Variant::LR2pi, time, params, m);
    }
  }
}

}  // namespace

BruteForceResult brute_force(const Scenario& s, const GridSpec& grid, std::optional<Family> only) {
  grid.check();
  BruteForceResult best;
  const double r = s.rho;
  const double w = s.wind.speed();
  // Generous bound on the straight leg of any time-optimal path.
  const double d_max = (norm(s.target) + 4.0 * r + 4.0 * kPi * r) / (1.0 - w) + 4.0 * kPi * r;
  for (const auto& p : kPatterns) {
    const Family f = p.straight ? Family::CSC : Family::CCC;
    if (!only || *only == f) search_pattern(p, s, grid, d_max, best);
  }
  if (!only || *only == Family::SC || *only == Family::CC) check_full_turn_paths(s, best, only);
  return best;
}

namespace {

double mod2pi(double v) { return wrap2pi(v); }

}  // namespace

std::optional<DubinsPath> classical_dubins_path(const Pose& start, const Pose& goal, double rho) {
  const double dx = goal.x - start.x;
  const double dy = goal.y - start.y;
  const double d = std::hypot(dx, dy) / rho;
  const double th = d > 0.0 ? mod2pi(std::atan2(dy, dx)) : start.heading;
  const double a = mod2pi(start.heading - th);
  const double b = mod2pi(goal.heading - th);
  const double sa = std::sin(a), sb = std::sin(b), ca = std::cos(a), cb = std::cos(b);
  const double cab = std::cos(a - b);

  std::optional<DubinsPath> best;
  auto offer = [&](const char* word, double t, double p, double q) {
    const double len = (t + p + q) * rho;
    if (!best || len < best->length) best = DubinsPath{word, t, p, q, len};
  };

  {  // LSL
    const double p2 = 2.0 + d * d - 2.0 * cab + 2.0 * d * (sa - sb);
    if (p2 >= 0.0) {
      const double t1 = std::atan2(cb - ca, d + sa - sb);
      offer("LSL", mod2pi(t1 - a), std::sqrt(p2), mod2pi(b - t1));
    }
  }
  {  // RSR
    const double p2 = 2.0 + d * d - 2.0 * cab + 2.0 * d * (sb - sa);
    if (p2 >= 0.0) {
      const double t1 = std::atan2(ca - cb, d - sa + sb);
      offer("RSR", mod2pi(a - t1), std::sqrt(p2), mod2pi(t1 - b));
    }
  }
  {  // LSR
    const double p2 = -2.0 + d * d + 2.0 * cab + 2.0 * d * (sa + sb);
    if (p2 >= 0.0) {
      const double p = std::sqrt(p2);
      const double t0 = std::atan2(-ca - cb, d + sa + sb) - std::atan2(-2.0, p);
      offer("LSR", mod2pi(t0 - a), p, mod2pi(t0 - b));
    }
  }
  {  // RSL
    const double p2 = -2.0 + d * d + 2.0 * cab - 2.0 * d * (sa + sb);
    if (p2 >= 0.0) {
      const double p = std::sqrt(p2);
      const double t0 = std::atan2(ca + cb, d - sa - sb) - std::atan2(2.0, p);
      offer("RSL", mod2pi(a - t0), p, mod2pi(b - t0));
    }
  }
  {  // RLR
    const double c = (6.0 - d * d + 2.0 * cab + 2.0 * d * (sa - sb)) / 8.0;
    if (std::abs(c) <= 1.0) {
      const double phi = std::atan2(ca - cb, d - sa + sb);
      const double p = mod2pi(kTwoPi - std::acos(c));
      const double t = mod2pi(a - phi + mod2pi(p / 2.0));
      offer("RLR", t, p, mod2pi(a - b - t + mod2pi(p)));
    }
  }
  {  // LRL
    const double c = (6.0 - d * d + 2.0 * cab + 2.0 * d * (sb - sa)) / 8.0;
    if (std::abs(c) <= 1.0) {
      const double phi = std::atan2(ca - cb, d + sa - sb);
      const double p = mod2pi(kTwoPi - std::acos(c));
      const double t = mod2pi(-a - phi + p / 2.0);
      offer("LRL", t, p, mod2pi(mod2pi(b) - a - t + mod2pi(p)));
    }
  }
  return best;
}

double classical_dubins(const Pose& start, const Pose& goal, double rho) {
  const auto path = classical_dubins_path(start, goal, rho);
  return path ? path->length : std::numeric_limits<double>::infinity();
}

}  // namespace dubinswind::oracle
