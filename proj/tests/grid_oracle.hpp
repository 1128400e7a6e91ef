// Dense sign-change scan used as the reference root set for the root
// finders: G is sampled on a uniform grid over [0, 2pi] and every sign
// change (or exact zero) is refined by bisection.

#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dubinswind/rootfind.hpp"

namespace grid_oracle {

template <class F>
std::vector<double> scan(const F& g, std::size_t points) {
  constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
  std::vector<double> roots;
  const double h = kTwoPi / static_cast<double>(points);
  double a = 0.0;
  double ga = g(a);
  for (std::size_t i = 1; i <= points; ++i) {
    const double b = i == points ? kTwoPi : static_cast<double>(i) * h;
    const double gb = g(b);
    if (ga == 0.0) {
      roots.push_back(a);
    } else if ((ga < 0.0) != (gb < 0.0) && gb != 0.0) {
      double lo = a, hi = b, glo = ga;
      for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
        const double m = 0.5 * (lo + hi);
        const double gm = g(m);
        if (gm == 0.0) {
          lo = hi = m;
          break;
        }
        if ((gm < 0.0) == (glo < 0.0)) {
          lo = m;
          glo = gm;
        } else {
          hi = m;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    a = b;
    ga = gb;
  }
  return roots;
}

struct Comparison {
  int missed = 0;      // grid roots with no solver root within the pairing window
  int extra = 0;       // simple solver roots with no grid root nearby and no close twin
  int tangential = 0;  // solver roots flagged tangential (not compared)
  double worst_residual_ratio = 0.0;  // max |G(root)| / scale over solver roots
};

template <class G>
Comparison compare(const dubinswind::RootSet& found, const std::vector<double>& grid, const G& coeffs,
                   double pairing, double grid_step) {
  Comparison c;
  auto near = [&](double x, double y) {
    constexpr double kTwoPi = 2.0 * 3.14159265358979323846;
    const double d = std::abs(x - y);
    return std::min(d, kTwoPi - d) <= pairing;
  };
  for (double r : grid) {
    bool ok = false;
    for (const auto& f : found.roots) ok = ok || near(r, f.value);
    if (!ok) ++c.missed;
  }
  for (std::size_t i = 0; i < found.roots.size(); ++i) {
    const auto& f = found.roots[i];
    c.worst_residual_ratio = std::max(c.worst_residual_ratio, std::abs(coeffs.value(f.value)) / coeffs.scale());
    if (f.tangential) {
      ++c.tangential;
      continue;
    }
    bool ok = false;
    for (double r : grid) ok = ok || near(r, f.value);
    if (ok) continue;
    // Two crossings inside one grid cell cancel in the sign scan.
    bool twin = false;
    for (std::size_t j = 0; j < found.roots.size(); ++j)
      twin = twin || (j != i && std::abs(found.roots[j].value - f.value) <= 2.0 * grid_step);
    if (!twin) ++c.extra;
  }
  return c;
}

}  // namespace grid_oracle
