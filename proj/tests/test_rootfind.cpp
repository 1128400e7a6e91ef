#include <doctest.h>

#include <cmath>
#include <random>

#include "dubinswind/rootfind.hpp"
#include "grid_oracle.hpp"

using namespace dubinswind;

namespace {

void check_values(const RootSet& set, std::vector<double> expected, double tol = 1e-10) {
  REQUIRE(set.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) CHECK(std::abs(set.roots[i].value - expected[i]) < tol);
}

}  // namespace

TEST_CASE("quadcos: closed-form examples") {
  check_values(solve_quadcos({0, 0, 1, 0}), {kHalfPi, 3 * kHalfPi});
  check_values(solve_quadcos({1, 0, 0, -kPi * kPi}), {kPi});
  CHECK(solve_quadcos({0, 0, 0, 1}).empty());
  CHECK(solve_quadcos({0, 0, 0, 0}).identically_zero);
}

TEST_CASE("quadcos: tangential root is flagged") {
  // 1 + cos b touches zero at pi without crossing.
  const RootSet set = solve_quadcos({0, 0, 1, 1});
  REQUIRE(set.size() == 1);
  CHECK(set.roots[0].tangential);
  CHECK(std::abs(set.roots[0].value - kPi) < 1e-7);
}

TEST_CASE("quadcos: curvature breaks split G' into monotone pieces") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> c(-10.0, 10.0);
  for (int i = 0; i < 300; ++i) {
    const QuadCosCoeffs k{c(rng), c(rng), c(rng), c(rng)};
    std::vector<double> part{0.0};
    for (double b : quadcos_curvature_breaks(k)) part.push_back(b);
    part.push_back(kTwoPi);
    for (std::size_t j = 0; j + 1 < part.size(); ++j) {
      int sign = 0;
      for (int s = 1; s < 50; ++s) {
        const double b = part[j] + (part[j + 1] - part[j]) * s / 50.0;
        const double v = k.second_derivative(b);
        const int sv = v > 0 ? 1 : (v < 0 ? -1 : 0);
        if (sign == 0) sign = sv;
        CHECK((sv == 0 || sv == sign));
      }
    }
  }
}

TEST_CASE("quadcos: matches the dense grid oracle") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> c(-10.0, 10.0);
  constexpr std::size_t kPoints = 100000;
  for (int i = 0; i < 200; ++i) {
    const QuadCosCoeffs k{c(rng), c(rng), c(rng), c(rng)};
    const RootSet set = solve_quadcos(k);
    const auto grid = grid_oracle::scan([&](double b) { return k.value(b); }, kPoints);
    const auto cmp = grid_oracle::compare(set, grid, k, 1e-6, kTwoPi / kPoints);
    CHECK(cmp.missed == 0);
    CHECK(cmp.extra == 0);
    CHECK(cmp.worst_residual_ratio <= 1e-9);
    for (const auto& r : set.roots) CHECK(r.hi - r.lo <= 1e-12);
  }
}

TEST_CASE("quadcos: bit-identical on repeat") {
  const QuadCosCoeffs k{0.3, -2.0, 4.0, 1.0};
  const auto a = solve_quadcos(k).values();
  const auto b = solve_quadcos(k).values();
  CHECK(a == b);
}

TEST_CASE("sinusoid: closed-form examples") {
  check_values(solve_sinusoid({0, 1, 0}), {0.0, kPi});
  CHECK(solve_sinusoid({2, 1, 0}).empty());
  check_values(solve_sinusoid({-1, 1, 0}), {kHalfPi});
}

TEST_CASE("envelope: factored zeros") {
  check_values(solve_envelope({0, 0, 0, 0, 1}), {0.0, kHalfPi, 3 * kHalfPi}, 1e-9);
}

TEST_CASE("envelope: reduces to the sinusoid when f4 = f5 = 0") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> c(-10.0, 10.0);
  for (int i = 0; i < 100; ++i) {
    const double f1 = c(rng), f2 = c(rng), f3 = c(rng);
    const auto env = solve_envelope({f1, f2, f3, 0, 0});
    const auto sin = solve_sinusoid({f1, f2, f3});
    REQUIRE(env.size() == sin.size());
    for (std::size_t j = 0; j < env.size(); ++j) CHECK(std::abs(env.roots[j].value - sin.roots[j].value) < 1e-8);
  }
}

TEST_CASE("envelope: matches the dense grid oracle") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> c(-10.0, 10.0);
  constexpr std::size_t kPoints = 100000;
  for (int i = 0; i < 200; ++i) {
    const EnvelopeCoeffs k{c(rng), c(rng), c(rng), c(rng), c(rng)};
    const RootSet set = solve_envelope(k);
    const auto grid = grid_oracle::scan([&](double b) { return k.value(b); }, kPoints);
    const auto cmp = grid_oracle::compare(set, grid, k, 1e-6, kTwoPi / kPoints);
    CHECK(cmp.missed == 0);
    CHECK(cmp.extra == 0);
    CHECK(cmp.worst_residual_ratio <= 1e-9);
  }
}

TEST_CASE("envelope: derivative and bounds are consistent") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> c(-10.0, 10.0), b(0.0, kTwoPi);
  for (int i = 0; i < 100; ++i) {
    const EnvelopeCoeffs k{c(rng), c(rng), c(rng), c(rng), c(rng)};
    for (int j = 0; j < 20; ++j) {
      const double x = b(rng);
      const double h = 1e-6;
      const double fd = (k.value(x + h) - k.value(x - h)) / (2 * h);
      CHECK(std::abs(fd - k.derivative(x)) < 1e-5 * k.scale());
      CHECK(std::abs(k.derivative(x)) <= k.slope_bound() + 1e-12);
    }
  }
}
