// Closed-form candidate generation for the four path families that contain
// the minimum-time path to a target drifting with -wind:
//
//   SC_2pi : straight line, then a full turn           (SR2pi, SL2pi)
//   CC_2pi : one arc, then a full opposite turn         (RL2pi, LR2pi)
//   CCC    : three arcs with alternating directions     (RLR, LRL; middle arc < or > pi)
//   CSC    : arc, straight line, arc                    (RSR, RSL, LSR, LSL)
//
// Every solver takes a normalized scenario (start at (0, 0, pi/2)) and
// returns only candidates whose schedule, integrated exactly, lands on the
// moving target with the requested heading.

#pragma once

#include <string_view>
#include <vector>

#include "dubinswind/geometry.hpp"
#include "dubinswind/rootfind.hpp"

namespace dubinswind {

enum class Family : int { SC = 0, CC = 1, CCC = 2, CSC = 3 };

// Declaration order is the deterministic tie-break order.
enum class Variant : int {
  SR2pi = 0,
  SL2pi,
  RL2pi,
  LR2pi,
  RLR_short,
  RLR_long,
  LRL_short,
  LRL_long,
  RSR,
  RSL,
  LSR,
  LSL,
};

inline constexpr int kVariantCount = 12;

struct FamilyTag {
  Family family = Family::CSC;
  Variant variant = Variant::LSL;

  friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

Family family_of(Variant v) noexcept;
std::string_view to_string(Family f) noexcept;
std::string_view to_string(Variant v) noexcept;
/// The variant obtained by reflecting the path across the start heading (L <-> R).
Variant mirror(Variant v) noexcept;

/// Path parameters. Angles are arc radians in [0, 2pi); for CSC, beta is the
/// heading of the straight segment, for CCC the radian of the middle arc.
/// Fields a variant does not use stay zero.
struct SegmentParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double d = 0.0;
  int n = 0;      // branch index used to build the equation
  int sigma = 0;  // first-arc turn (-1 right, +1 left)
  int kappa = 0;  // last-arc turn (CSC only)
};

struct PathCandidate {
  FamilyTag tag;
  SegmentParams params;
  double total_time = 0.0;  // sum of schedule durations
  ControlSchedule schedule;
  double residual = 0.0;  // terminal position residual after validation
  double heading_residual = 0.0;
};

/// Builds the schedule for a variant from its parameters and fills
/// total_time; residuals are left at zero.
PathCandidate make_candidate(Variant v, const SegmentParams& p, double rho);

/// Fills the residual fields and reports whether the candidate reaches the
/// moving target within tolerance.
bool check_candidate(PathCandidate& c, const Scenario& normalized);

// Coefficients of the reduced equations. Exposed for regression tests.

struct QuadraticCoeffs {
  double a1 = 0.0, a2 = 0.0, a3 = 0.0;
};

/// Quadratic in the first-arc radian alpha for RL2pi (first = Right) or
/// LR2pi (first = Left): the endpoint circle condition after eliminating
/// the interception time.
QuadraticCoeffs cc_coefficients(const Scenario& s, Turn first);

struct CccCoeffs {
  QuadCosCoeffs g;
  Vec2 center_offset;  // centre-to-centre vector at beta = 0 (M, N or P, Q up to sign)
  double k = 0.0;      // alpha + gamma - beta for this branch
};

/// Quadratic-plus-cosine equation in the middle arc beta for RLR (first =
/// Right) or LRL (first = Left), for branch n.
CccCoeffs ccc_coefficients(const Scenario& s, Turn first, int n);

/// Constant-plus-sinusoid equation in the straight heading beta for RSR/LSL,
/// branch n (number of 2pi wraps in alpha + gamma).
SinusoidCoeffs csc_sinusoid_coefficients(const Scenario& s, Variant v, int n);

/// Linear-envelope equation in beta for RSL/LSR, branch n.
EnvelopeCoeffs csc_envelope_coefficients(const Scenario& s, Variant v, int n);

std::vector<PathCandidate> solve_sc(const Scenario& normalized);
std::vector<PathCandidate> solve_cc(const Scenario& normalized);
std::vector<PathCandidate> solve_ccc(const Scenario& normalized);
std::vector<PathCandidate> solve_csc(const Scenario& normalized);

}  // namespace dubinswind
