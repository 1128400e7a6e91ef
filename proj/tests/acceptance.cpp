// Acceptance checks. Prints one PASS/FAIL line per criterion (plus indented
// detail lines) and exits non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dubinswind/oracle.hpp"
#include "dubinswind/planner.hpp"
#include "dubinswind/rootfind.hpp"
#include "grid_oracle.hpp"

using namespace dubinswind;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& text) {
  std::printf("%s [%d] %s\n", ok ? "PASS" : "FAIL", id, text.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

__attribute__((format(printf, 1, 2))) void detail(const char* fmt, ...) {
  std::va_list args;
  va_start(args, fmt);
  std::printf("       ");
  std::vprintf(fmt, args);
  std::printf("\n");
  va_end(args);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

Scenario random_scenario(std::mt19937_64& rng, double max_wind, double rho = 1.0) {
  std::uniform_real_distribution<double> unit(0.0, 1.0), ang(0.0, kTwoPi);
  Scenario s;
  s.rho = rho;
  const double speed = max_wind * unit(rng);
  const double wd = ang(rng);
  s.wind = {speed * std::cos(wd), speed * std::sin(wd)};
  const double r = 10.0 * rho * std::sqrt(unit(rng));
  const double td = ang(rng);
  s.target = {r * std::cos(td), r * std::sin(td)};
  s.theta_f = ang(rng);
  return s;
}

struct Expect {
  Variant variant;
  double time;
};

// Checks that each expected (variant, time) has a candidate within tol.
bool check_candidates(const PlanResult& r, const std::vector<Expect>& expected, double tol) {
  bool ok = true;
  for (const auto& e : expected) {
    double closest = kNoCandidate;
    for (const auto& c : r.all_candidates)
      if (c.tag.variant == e.variant && std::abs(c.total_time - e.time) < std::abs(closest - e.time))
        closest = c.total_time;
    const bool hit = std::abs(closest - e.time) <= tol;
    ok = ok && hit;
    const std::string name(to_string(e.variant));
    detail("%-7s expected %.4f  closest %.6f  %s", name.c_str(), e.time, closest, hit ? "ok" : "MISS");
  }
  return ok;
}

void criterion_1() {
  Scenario s;
  s.wind = {0.475, -0.155};
  s.target = {5.0, -2.0};
  s.theta_f = 72.0 * kPi / 180.0;
  std::vector<double> runs;
  PlanResult r;
  for (int i = 0; i < 21; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    r = plan(s);
    runs.push_back(seconds_since(t0));
  }
  const double runtime = median(runs);
  const std::vector<Expect> expected{{Variant::RLR_long, 11.9937}, {Variant::RLR_short, 8.1420},
                                     {Variant::LRL_long, 11.7152}, {Variant::LRL_short, 7.5570},
                                     {Variant::RSR, 8.1157},       {Variant::LSL, 7.5294}};
  const bool best_ok = r.feasible() && r.best->tag.variant == Variant::LSL && std::abs(r.t_f - 7.5294) <= 1e-3;
  detail("best %s t_f %.6f (expected LSL 7.5294 +- 1e-3)",
         r.feasible() ? std::string(to_string(r.best->tag.variant)).c_str() : "none", r.t_f);
  const bool set_ok = check_candidates(r, expected, 1e-3);
  detail("median runtime %.3f ms (limit 10 ms)", runtime * 1e3);
  verdict(1, best_ok && set_ok && runtime < 10e-3,
          "windy example: best LSL 7.5294 and six candidate times within 1e-3, runtime < 10 ms");

  // Same scenario with the wind given as 0.5 at -18 deg instead of the
  // rounded components; reported for reference only.
  Scenario u = s;
  u.wind = {0.5 * std::cos(kPi / 10.0), -0.5 * std::sin(kPi / 10.0)};
  const PlanResult ru = plan(u);
  detail("reference, wind 0.5 at -18 deg (unrounded components):");
  const bool u_ok = check_candidates(ru, expected, 1e-3) && ru.best->tag.variant == Variant::LSL &&
                    std::abs(ru.t_f - 7.5294) <= 1e-3;
  detail("reference run %s", u_ok ? "matches all six times" : "does not match");
}

void criterion_2() {
  Scenario s;
  s.wind = {0.0, -(4.0 + 2.0 * std::sqrt(2.0)) / (9.0 * kPi)};
  s.target = {1.0 - 1.0 / std::sqrt(2.0), -1.0};
  s.theta_f = kPi / 4.0;
  const PlanResult r = plan(s);
  const bool best_ok = r.feasible() && r.best->tag.variant == Variant::RL2pi && std::abs(r.t_f - 7.0686) <= 1e-3 &&
                       std::abs(r.t_f - 2.25 * kPi) <= 1e-9;
  detail("best %s t_f %.6f (expected RL2pi 7.0686, 2.25 pi = %.6f)",
         r.feasible() ? std::string(to_string(r.best->tag.variant)).c_str() : "none", r.t_f, 2.25 * kPi);
  const bool set_ok = check_candidates(
      r, {{Variant::LSL, 15.7929}, {Variant::LRL_long, 9.5686}, {Variant::RLR_long, 12.1137}}, 1e-3);
  verdict(2, best_ok && set_ok, "pure crosswind example: best RL2pi 7.0686 and three candidate times within 1e-3");
}

void criterion_3() {
  std::mt19937_64 rng(1001);
  int candidates = 0, bad = 0;
  double worst_pos = 0.0, worst_heading = 0.0;
  for (int i = 0; i < 500; ++i) {
    std::uniform_real_distribution<double> rho(0.5, 2.0);
    const Scenario s = random_scenario(rng, 0.9, rho(rng));
    const PlanResult r = plan(s);
    for (const auto& c : r.all_candidates) {
      ++candidates;
      const TerminalResidual res = terminal_residual(c.schedule, r.normalized);
      worst_pos = std::max(worst_pos, res.position / (1.0 + c.total_time));
      worst_heading = std::max(worst_heading, res.heading);
      if (res.position > 1e-6 * (1.0 + c.total_time) || res.heading > 1e-8) ++bad;
    }
  }
  detail("%d candidates, worst position %.2e x (1 + T), worst heading %.2e rad", candidates, worst_pos,
         worst_heading);
  verdict(3, bad == 0 && candidates > 0,
          "500 random scenarios: every candidate within 1e-6 (1 + T) in position and 1e-8 rad in heading");
}

void criterion_4() {
  std::mt19937_64 rng(2002);
  const oracle::GridSpec grid;
  int bad = 0, infeasible = 0;
  double worst_above = 0.0, worst_below = 0.0, bound = 0.0;
  for (int i = 0; i < 200; ++i) {
    const Scenario s = random_scenario(rng, 0.5);
    const PlanResult r = plan(s);
    const auto ref = oracle::brute_force(r.normalized, grid);
    bound = std::max(bound, ref.bound);
    if (!r.feasible() || !ref.found) {
      ++infeasible;
      ++bad;
      continue;
    }
    const double diff = r.t_f - ref.time;
    worst_above = std::max(worst_above, diff);
    worst_below = std::min(worst_below, diff);
    if (diff < -1e-6 || diff > ref.bound) {
      ++bad;
      detail("scenario %d: planner %.9f oracle %.9f (%s)", i, r.t_f, ref.time,
             std::string(to_string(ref.variant)).c_str());
    }
  }
  detail("planner - oracle in [%.2e, %.2e], oracle bound %.3f, %d without a result", worst_below, worst_above, bound,
         infeasible);
  verdict(4, bad == 0 && bound <= 0.02, "200 random scenarios: oracle - 1e-6 <= t_f <= oracle + bound (bound <= 0.02)");
}

void criterion_5() {
  std::mt19937_64 rng(3003);
  std::uniform_real_distribution<double> unit(0.0, 1.0), ang(0.0, kTwoPi);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    Scenario s;
    const double r = 4.0 + 1e-6 + 16.0 * unit(rng);
    const double d = ang(rng);
    s.target = {r * std::cos(d), r * std::sin(d)};
    s.theta_f = ang(rng);
    const PlanResult p = plan(s);
    const double ref = oracle::classical_dubins({0.0, 0.0, kHalfPi}, {s.target.x, s.target.y, s.theta_f}, 1.0);
    const double err = p.feasible() ? std::abs(p.t_f - ref) : kNoCandidate;
    worst = std::max(worst, err);
    if (!(err <= 1e-9)) ++bad;
  }
  detail("worst |t_f - classical| = %.2e", worst);
  verdict(5, bad == 0, "100 calm goals beyond 4 rho: t_f equals the classical Dubins length within 1e-9");
}

template <class Coeffs, class Solve>
grid_oracle::Comparison root_batch(std::mt19937_64& rng, int count, Solve solve, int& cases_bad) {
  constexpr std::size_t kPoints = 1000000;
  std::uniform_real_distribution<double> c(-10.0, 10.0);
  grid_oracle::Comparison total;
  for (int i = 0; i < count; ++i) {
    Coeffs k;
    double* f = reinterpret_cast<double*>(&k);
    for (std::size_t j = 0; j < sizeof(Coeffs) / sizeof(double); ++j) f[j] = c(rng);
    const RootSet set = solve(k);
    const auto grid = grid_oracle::scan([&](double b) { return k.value(b); }, kPoints);
    const auto cmp = grid_oracle::compare(set, grid, k, 1e-6, kTwoPi / kPoints);
    total.missed += cmp.missed;
    total.extra += cmp.extra;
    total.tangential += cmp.tangential;
    total.worst_residual_ratio = std::max(total.worst_residual_ratio, cmp.worst_residual_ratio);
    if (cmp.missed || cmp.extra || cmp.worst_residual_ratio > 1e-9) ++cases_bad;
  }
  return total;
}

void criterion_6() {
  std::mt19937_64 rng(4004);
  int bad_q = 0, bad_e = 0;
  const auto q = root_batch<QuadCosCoeffs>(rng, 1000, [](const QuadCosCoeffs& k) { return solve_quadcos(k); }, bad_q);
  detail("quadratic-plus-cosine: missed %d, unmatched %d, tangential %d, worst residual %.2e x scale", q.missed,
         q.extra, q.tangential, q.worst_residual_ratio);
  const auto e =
      root_batch<EnvelopeCoeffs>(rng, 1000, [](const EnvelopeCoeffs& k) { return solve_envelope(k); }, bad_e);
  detail("linear-envelope: missed %d, unmatched %d, tangential %d, worst residual %.2e x scale", e.missed, e.extra,
         e.tangential, e.worst_residual_ratio);
  verdict(6, bad_q == 0 && bad_e == 0,
          "1000 + 1000 random equations: root sets match a 1e6-point grid scan (1e-6 pairing, residual <= 1e-9 scale)");
}

void criterion_7() {
  std::mt19937_64 rng(5005);
  std::uniform_real_distribution<double> c(-10.0, 10.0);
  std::vector<double> root_times;
  std::size_t sink = 0;
  for (int i = 0; i < 2000; ++i) {
    const QuadCosCoeffs k{c(rng), c(rng), c(rng), c(rng)};
    const auto t0 = std::chrono::steady_clock::now();
    sink += solve_quadcos(k).size();
    root_times.push_back(seconds_since(t0));
  }
  std::vector<double> plan_times;
  for (int i = 0; i < 500; ++i) {
    const Scenario s = random_scenario(rng, 0.9);
    const auto t0 = std::chrono::steady_clock::now();
    sink += plan(s).all_candidates.size();
    plan_times.push_back(seconds_since(t0));
  }
  const double mr = median(root_times), mp = median(plan_times);
  detail("median root set %.2f us (limit 100 us), median plan %.3f ms (limit 1 ms) [%zu]", mr * 1e6, mp * 1e3, sink);
  verdict(7, mr <= 100e-6 && mp <= 1e-3, "median root-set time <= 100 us and median plan time <= 1 ms");
}

void criterion_8() {
  std::mt19937_64 rng(6006);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 500; ++i) {
    const Scenario s = random_scenario(rng, 0.9);
    Scenario m = s;
    m.wind.wx = -s.wind.wx;
    m.target.x = -s.target.x;
    m.theta_f = wrap_angle(kPi - s.theta_f);
    const PlanResult a = plan(s);
    const PlanResult b = plan(m);
    if (a.feasible() != b.feasible()) {
      ++bad;
      continue;
    }
    if (!a.feasible()) continue;
    const double diff = std::abs(a.t_f - b.t_f);
    worst = std::max(worst, diff);
    if (diff > 1e-9 || mirror(a.best->tag.variant) != b.best->tag.variant) {
      ++bad;
      detail("pair %d: %s %.12f vs %s %.12f", i, std::string(to_string(a.best->tag.variant)).c_str(), a.t_f,
             std::string(to_string(b.best->tag.variant)).c_str(), b.t_f);
    }
  }
  detail("worst |t_f - t_f mirrored| = %.2e", worst);
  verdict(8, bad == 0, "500 mirrored pairs: equal t_f within 1e-9 and L/R-swapped winners");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
