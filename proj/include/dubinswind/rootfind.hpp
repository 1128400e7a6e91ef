// Root isolation on [0, 2pi) for the three equation shapes that the path
// families reduce to:
//
//   quadratic-plus-cosine   c1 b^2 + c2 b + c3 cos b + c4 = 0
//   constant-plus-sinusoid  e1 + e2 sin b + e3 cos b = 0
//   linear-envelope         f1 + f2 sin b + f3 cos b + b (f4 sin b + f5 cos b) = 0
//
// Every solver returns all real roots in [0, 2pi), sorted, each with the
// bracket it was refined in and its residual.

#pragma once

#include <vector>

#include "dubinswind/geometry.hpp"

namespace dubinswind {

struct QuadCosCoeffs {
  double c1 = 0.0, c2 = 0.0, c3 = 0.0, c4 = 0.0;

  double value(double b) const noexcept;
  double derivative(double b) const noexcept;
  double second_derivative(double b) const noexcept;
  double scale() const noexcept;  // 1 + sum |ci|
};

struct SinusoidCoeffs {
  double e1 = 0.0, e2 = 0.0, e3 = 0.0;

  double value(double b) const noexcept;
  double scale() const noexcept;
};

struct EnvelopeCoeffs {
  double f1 = 0.0, f2 = 0.0, f3 = 0.0, f4 = 0.0, f5 = 0.0;

  double value(double b) const noexcept;
  double derivative(double b) const noexcept;
  double scale() const noexcept;
  /// Upper bound on |G'| over [0, 2pi].
  double slope_bound() const noexcept;
  /// Upper bound on |G''| over [0, 2pi].
  double curvature_bound() const noexcept;
};

struct Root {
  double value = 0.0;
  double lo = 0.0;  // enclosing bracket; lo == hi for closed-form roots
  double hi = 0.0;
  double residual = 0.0;  // |G(value)|
  bool tangential = false;  // touches zero without a sign change
};

struct RootSet {
  std::vector<Root> roots;
  /// Set when the equation vanishes identically (all coefficients zero);
  /// `roots` is empty in that case and callers must fall back to geometry.
  bool identically_zero = false;

  std::vector<double> values() const;
  bool empty() const noexcept { return roots.empty(); }
  std::size_t size() const noexcept { return roots.size(); }
};

/// Improved bisection: G'' roots in closed form split [0, 2pi) into pieces on
/// which G' is monotone; G' roots found there split it into pieces on which G
/// is monotone; G roots are then bisected in each piece.
RootSet solve_quadcos(const QuadCosCoeffs& coeffs, const ToleranceSet& tol = {});

/// Interior roots of G'' = 2 c1 - c3 cos b in (0, 2pi), sorted. These are the
/// breakpoints of the first partition of solve_quadcos.
std::vector<double> quadcos_curvature_breaks(const QuadCosCoeffs& coeffs);

/// Closed form via e2 sin b + e3 cos b = R sin(b + phi).
RootSet solve_sinusoid(const SinusoidCoeffs& coeffs, const ToleranceSet& tol = {});

/// Exhaustive isolation guarded by global bounds on |G'| and |G''|: a cell is
/// dropped when its endpoint values rule out a zero, bisected once G is
/// certified monotone on it, and split otherwise.
RootSet solve_envelope(const EnvelopeCoeffs& coeffs, const ToleranceSet& tol = {});

}  // namespace dubinswind
