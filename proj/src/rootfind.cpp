#include "dubinswind/rootfind.hpp"

#include <algorithm>
#include <cmath>

namespace dubinswind {

double QuadCosCoeffs::value(double b) const noexcept { return (c1 * b + c2) * b + c3 * std::cos(b) + c4; }
double QuadCosCoeffs::derivative(double b) const noexcept { return 2.0 * c1 * b + c2 - c3 * std::sin(b); }
double QuadCosCoeffs::second_derivative(double b) const noexcept { return 2.0 * c1 - c3 * std::cos(b); }
double QuadCosCoeffs::scale() const noexcept {
  return 1.0 + std::abs(c1) + std::abs(c2) + std::abs(c3) + std::abs(c4);
}

double SinusoidCoeffs::value(double b) const noexcept { return e1 + e2 * std::sin(b) + e3 * std::cos(b); }
double SinusoidCoeffs::scale() const noexcept { return 1.0 + std::abs(e1) + std::abs(e2) + std::abs(e3); }

double EnvelopeCoeffs::value(double b) const noexcept {
  const double s = std::sin(b);
  const double c = std::cos(b);
  return f1 + f2 * s + f3 * c + b * (f4 * s + f5 * c);
}

double EnvelopeCoeffs::derivative(double b) const noexcept {
  const double s = std::sin(b);
  const double c = std::cos(b);
  return (f2 + f5) * c + (f4 - f3) * s + b * (f4 * c - f5 * s);
}

double EnvelopeCoeffs::scale() const noexcept {
  return 1.0 + std::abs(f1) + std::abs(f2) + std::abs(f3) + std::abs(f4) + std::abs(f5);
}

double EnvelopeCoeffs::slope_bound() const noexcept {
  const double lin = std::abs(f4) + std::abs(f5);
  return std::abs(f2) + std::abs(f3) + lin + kTwoPi * lin;
}

double EnvelopeCoeffs::curvature_bound() const noexcept {
  const double lin = std::abs(f4) + std::abs(f5);
  return std::abs(f2) + std::abs(f3) + 2.0 * lin + kTwoPi * lin;
}

std::vector<double> RootSet::values() const {
  std::vector<double> out;
  out.reserve(roots.size());
  for (const auto& r : roots) out.push_back(r.value);
  return out;
}

namespace {

bool opposite(double a, double b) noexcept { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

// Plain bisection on [a, b] where fa and fb have opposite signs.
template <class F>
Root bisect(const F& f, double a, double b, double fa, double fb, double width) {
  while (b - a > width) {
    const double m = a + 0.5 * (b - a);
    if (m <= a || m >= b) break;
    const double fm = f(m);
    if (fm == 0.0) return {m, a, b, 0.0, false};
    if (opposite(fa, fm)) {
      b = m;
      fb = fm;
    } else {
      a = m;
      fa = fm;
    }
  }
  const bool left = std::abs(fa) <= std::abs(fb);
  return {left ? a : b, a, b, left ? std::abs(fa) : std::abs(fb), false};
}

Root exact_root(double x) { return {x, x, x, 0.0, false}; }

void finish(RootSet& set) {
  auto& r = set.roots;
  std::stable_sort(r.begin(), r.end(), [](const Root& a, const Root& b) { return a.value < b.value; });
  r.erase(std::unique(r.begin(), r.end(), [](const Root& a, const Root& b) { return a.value == b.value; }),
          r.end());
}

}  // namespace

std::vector<double> quadcos_curvature_breaks(const QuadCosCoeffs& k) {
  std::vector<double> out;
  if (k.c3 == 0.0) return out;
  const double ratio = 2.0 * k.c1 / k.c3;
  if (!(std::abs(ratio) <= 1.0)) return out;
  const double r = std::acos(ratio);
  if (r > 0.0) out.push_back(r);
  const double mirror = kTwoPi - r;
  if (mirror > r && mirror < kTwoPi) out.push_back(mirror);
  return out;
}

RootSet solve_quadcos(const QuadCosCoeffs& k, const ToleranceSet& tol) {
  RootSet set;
  if (k.c1 == 0.0 && k.c2 == 0.0 && k.c3 == 0.0 && k.c4 == 0.0) {
    set.identically_zero = true;
    return set;
  }
  const auto g = [&k](double b) { return k.value(b); };
  const auto dg = [&k](double b) { return k.derivative(b); };

  // G' is monotone between consecutive roots of G''.
  std::vector<double> part{0.0};
  for (double b : quadcos_curvature_breaks(k)) part.push_back(b);
  part.push_back(kTwoPi);

  std::vector<double> stationary;
  for (std::size_t i = 0; i + 1 < part.size(); ++i) {
    const double a = part[i];
    const double b = part[i + 1];
    const double da = dg(a);
    const double db = dg(b);
    // Only left endpoints count, so a zero of G' on a shared breakpoint is
    // taken once.
    if (da == 0.0) {
      stationary.push_back(a);
    } else if (opposite(da, db)) {
      stationary.push_back(bisect(dg, a, b, da, db, tol.root_tol).value);
    }
  }
  std::sort(stationary.begin(), stationary.end());

  // G is monotone between consecutive roots of G'.
  std::vector<double> q{0.0};
  for (double s : stationary)
    if (s > q.back()) q.push_back(s);
  if (q.back() < kTwoPi) q.push_back(kTwoPi);

  const double touch = tol.feas_tol * k.scale();
  std::vector<double> gq(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) gq[i] = g(q[i]);

  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    const double a = q[i];
    const double ga = gq[i];
    if (ga == 0.0) {
      Root r = exact_root(a);
      // An exact zero at a stationary point with the same sign on both sides.
      r.tangential = i > 0 && std::binary_search(stationary.begin(), stationary.end(), a) &&
                     !opposite(gq[i - 1], gq[i + 1]);
      set.roots.push_back(r);
    } else if (opposite(ga, gq[i + 1])) {
      set.roots.push_back(bisect(g, a, q[i + 1], ga, gq[i + 1], tol.root_tol));
    } else if (std::abs(ga) <= touch && std::binary_search(stationary.begin(), stationary.end(), a)) {
      // A stationary point that grazes zero with no crossing on either side.
      const bool left_cross = i > 0 && (opposite(gq[i - 1], ga) || gq[i - 1] == 0.0);
      if (!left_cross) set.roots.push_back({a, a, a, std::abs(ga), true});
    }
  }
  finish(set);
  return set;
}

RootSet solve_sinusoid(const SinusoidCoeffs& k, const ToleranceSet& tol) {
  RootSet set;
  const double amp = std::hypot(k.e2, k.e3);
  if (amp == 0.0) {
    set.identically_zero = (k.e1 == 0.0);
    return set;
  }
  const double s = -k.e1 / amp;
  if (std::abs(s) > 1.0 + tol.feas_tol) return set;
  const double phi = std::atan2(k.e3, k.e2);
  auto add = [&](double b, bool tangential) {
    const double v = wrap_angle(b);
    set.roots.push_back({v, v, v, std::abs(k.value(v)), tangential});
  };
  if (std::abs(s) >= 1.0 - tol.feas_tol) {
    add((s > 0.0 ? kHalfPi : -kHalfPi) - phi, std::abs(s) != 1.0);
  } else {
    const double base = std::asin(s);
    add(base - phi, false);
    add(kPi - base - phi, false);
  }
  finish(set);
  return set;
}

RootSet solve_envelope(const EnvelopeCoeffs& k, const ToleranceSet& tol) {
  RootSet set;
  if (k.f1 == 0.0 && k.f2 == 0.0 && k.f3 == 0.0 && k.f4 == 0.0 && k.f5 == 0.0) {
    set.identically_zero = true;
    return set;
  }
  const double slope = k.slope_bound();
  const double curvature = k.curvature_bound();
  const double touch = tol.feas_tol * k.scale();
  const auto g = [&k](double b) { return k.value(b); };

  std::vector<Root> tangential;
  auto process = [&](auto&& self, double a, double b, double ga, double gb) -> void {
    const double h = b - a;
    // |G(a)| + |G(b)| <= slope * h whenever [a, b] holds a zero.
    if (std::abs(ga) + std::abs(gb) > slope * h) return;
    const double m = a + 0.5 * h;
    const bool monotone = std::abs(k.derivative(m)) > 0.5 * curvature * h;
    const bool leaf = h <= tol.root_tol || m <= a || m >= b;
    if (monotone || leaf) {
      if (ga == 0.0) {
        set.roots.push_back(exact_root(a));
      } else if (opposite(ga, gb)) {
        set.roots.push_back(bisect(g, a, b, ga, gb, tol.root_tol));
      } else if (!monotone) {
        const double gm = g(m);
        double best = a;
        double best_abs = std::abs(ga);
        if (std::abs(gm) < best_abs) best = m, best_abs = std::abs(gm);
        if (std::abs(gb) < best_abs) best = b, best_abs = std::abs(gb);
        if (best_abs <= touch && best < kTwoPi) tangential.push_back({best, a, b, best_abs, true});
      }
      return;
    }
    const double gm = g(m);
    self(self, a, m, ga, gm);
    self(self, m, b, gm, gb);
  };
  process(process, 0.0, kTwoPi, g(0.0), g(kTwoPi));

  // Neighbouring leaf cells around one grazing point all report it.
  constexpr double kMerge = 1e-7;
  std::vector<Root> merged;
  for (const auto& t : tangential) {
    if (!merged.empty() && t.value - merged.back().value < kMerge) {
      if (t.residual < merged.back().residual) merged.back() = t;
      continue;
    }
    merged.push_back(t);
  }
  for (const auto& t : merged) {
    const bool near_simple = std::any_of(set.roots.begin(), set.roots.end(), [&](const Root& r) {
      return !r.tangential && std::abs(r.value - t.value) < kMerge;
    });
    if (!near_simple) set.roots.push_back(t);
  }
  finish(set);
  return set;
}

}  // namespace dubinswind
