#include "flowbound/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "flowbound/numeric.hpp"

using namespace flowbound;
using oracle::BoxDomain;
using oracle::GridSpec;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("pairwise_sum matches exact sums and is deterministic") {
  std::vector<double> xs(1000);
  for (int i = 0; i < 1000; ++i) xs[i] = 1.0 / (1 + i % 7);
  const double a = numeric::pairwise_sum(xs);
  const double b = numeric::pairwise_sum(xs);
  CHECK(a == b);

  std::vector<double> ones(4096, 1.0);
  CHECK(numeric::pairwise_sum(ones) == 4096.0);
  CHECK(numeric::pairwise_dot(ones, ones) == 4096.0);
}

TEST_CASE("simpson: 1d, constant exactness, inlet profile") {
  const BoxDomain seg{{0.0, 0.0, 0.0}, {kPi, 0.0, 0.0}};
  const double s2 = oracle::simpson_nd(
      [](const std::array<double, 3>& p) { return std::sin(p[0]) * std::sin(p[0]); },
      seg, {{129, 1, 1}}, 1);
  CHECK(std::abs(s2 - kPi / 2.0) <= 1e-10);

  const BoxDomain box{{-1.0, -2.0, 0.5}, {1.5, 2.0, 3.0}};
  const double vol = 2.5 * 4.0 * 2.5;
  const double c = oracle::simpson_nd([](const std::array<double, 3>&) { return 3.25; },
                                      box, {{5, 9, 7}}, 3);
  CHECK(c == doctest::Approx(3.25 * vol).epsilon(1e-14));

  // Squared cosine-bump inlet profile integrates to (A L)^2.
  const double A = 2.0, L = 1.0;
  const BoxDomain face{{-L, -L, 0.0}, {L, L, 0.0}};
  const double got = oracle::simpson_nd(
      [&](const std::array<double, 3>& p) {
        const double v = A * std::cos(kPi * p[0] / (2 * L)) * std::cos(kPi * p[1] / (2 * L));
        return v * v;
      },
      face, {{257, 257, 1}}, 2);
  CHECK(std::abs(got - A * A * L * L) <= 1e-10 * A * A * L * L);
}

TEST_CASE("simpson rejects even node counts and bad dims") {
  const BoxDomain seg{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  auto one = [](const std::array<double, 3>&) { return 1.0; };
  CHECK_THROWS_AS(oracle::simpson_nd(one, seg, {{4, 1, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(oracle::simpson_nd(one, seg, {{1, 1, 1}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(oracle::simpson_nd(one, seg, {{5, 1, 1}}, 0), std::invalid_argument);
}

TEST_CASE("simpson fourth-order convergence on a non-periodic integrand") {
  const BoxDomain seg{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}};
  auto f = [](const std::array<double, 3>& p) { return std::exp(p[0]); };
  const double exact = std::exp(1.0) - 1.0;
  const double e17 = std::abs(oracle::simpson_nd(f, seg, {{17, 1, 1}}, 1) - exact);
  const double e33 = std::abs(oracle::simpson_nd(f, seg, {{33, 1, 1}}, 1) - exact);
  CHECK(std::log2(e17 / e33) >= 3.5);
}

TEST_CASE("eigenvalue oracle on separable boxes") {
  // Unit-pi cube: lambda1 -> 1+1+1.
  const BoxDomain cube{{0.0, 0.0, 0.0}, {kPi, kPi, kPi}};
  const double lam24 = oracle::box_eigenvalue_fd(cube, {{24, 24, 24}});
  CHECK(std::abs(lam24 - 3.0) / 3.0 <= 0.01);

  // Second-order convergence against the continuum value.
  const double lam12 = oracle::box_eigenvalue_fd(cube, {{12, 12, 12}});
  const double e12 = std::abs(lam12 - 3.0);
  const double e24 = std::abs(lam24 - 3.0);
  const double order = std::log(e12 / e24) / std::log(25.0 / 13.0);
  CHECK(order >= 1.8);

  // Anisotropic box, lengths (4, 2, 2): lambda1 = pi^2 (1/16 + 1/4 + 1/4).
  const BoxDomain slab{{-1.0, -1.0, -1.0}, {3.0, 1.0, 1.0}};
  const double exact = 9.0 * kPi * kPi / 16.0;
  const double lam = oracle::box_eigenvalue_fd(slab, {{24, 24, 24}});
  CHECK(std::abs(lam - exact) / exact <= 0.01);
}

TEST_CASE("eigenvalue oracle validates inputs") {
  CHECK_THROWS_AS(
      oracle::box_eigenvalue_fd({{0.0, 0.0, 0.0}, {1.0, 1.0, 0.0}}, {{4, 4, 4}}),
      std::invalid_argument);
  CHECK_THROWS_AS(
      oracle::box_eigenvalue_fd({{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}}, {{0, 4, 4}}),
      std::invalid_argument);
}

TEST_CASE("divergence residual: constants, linear fields, and a source") {
  const BoxDomain box{{-1.0, -1.0, -1.0}, {1.0, 1.0, 1.0}};
  const GridSpec grid{{6, 6, 6}};

  const double c = oracle::divergence_residual_fd(
      [](const std::array<double, 3>&) {
        return std::array<double, 3>{1.0, -2.0, 0.5};
      },
      box, grid, 1e-3);
  CHECK(c <= 1e-14);

  // Solenoidal linear field: central differences are exact on linears.
  const double lin = oracle::divergence_residual_fd(
      [](const std::array<double, 3>& p) {
        return std::array<double, 3>{p[0], p[1], -2.0 * p[2]};
      },
      box, grid, 1e-3);
  CHECK(lin <= 1e-11);

  // Non-solenoidal sanity: div(x,y,z) = 3.
  const double src = oracle::divergence_residual_fd(
      [](const std::array<double, 3>& p) {
        return std::array<double, 3>{p[0], p[1], p[2]};
      },
      box, grid, 1e-3);
  CHECK(src == doctest::Approx(3.0).epsilon(1e-9));

  CHECK_THROWS_AS(oracle::divergence_residual_fd(
                      [](const std::array<double, 3>& p) {
                        return std::array<double, 3>{p[0], 0.0, 0.0};
                      },
                      box, grid, 0.0),
                  std::invalid_argument);
}
