#include "flowbound/geometry.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "test_support.hpp"

using namespace flowbound;
using geometry::ChannelGeometry;
using geometry::MinBranch;

namespace {

// Independent recoding of the M formula in extended precision, summing the
// bracket in reverse order.  Shares only the named coefficients with the
// implementation.
long double bogovskii_M_long_double(const ChannelGeometry& g) {
  const long double L = g.L, a = g.a, b = g.b, c = g.c;
  const long double sigma =
      7.0L * L * L * L - (a + b + c) * L * L - (a * b + a * c + b * c) * L - a * b * c;
  const long double gamma = 6.0L * L * L * L - 2.0L * (a + b + c) * L * L -
                            2.0L * (a * b + a * c + b * c) * L + 6.0L * a * b * c;
  const long double gap = L - a;
  const long double inner =
      static_cast<long double>(geometry::kExtCoeffTraceBase) +
      static_cast<long double>(geometry::kExtCoeffTraceSlope) * sqrtl(sigma) /
          powl(gap, 1.5L);
  long double bracket = (144.0L * L * L / (gap * gap)) * inner * inner;
  bracket += static_cast<long double>(geometry::kExtCoeffSigma) * sigma /
             (gap * gap * gap);
  bracket += static_cast<long double>(geometry::kExtCoeffSqrtSigma) * sqrtl(sigma) /
             powl(gap, 1.5L);
  bracket += static_cast<long double>(geometry::kExtCoeffBase);
  return sqrtl(12.0L * (1.0L + 16.0L / gamma * (L * L * L - a * b * c))) *
         sqrtl(bracket);
}

}  // namespace

TEST_CASE("validate accepts strict geometries and reports violations") {
  CHECK(geometry::validate({1.0, 0.5, 0.5, 0.5, 0.3}).empty());

  const auto v1 = geometry::validate({1.0, 1.0, 0.5, 0.5, 0.3});
  REQUIRE(v1.size() == 1);
  CHECK(v1[0] == "a < L violated");

  const auto v2 = geometry::validate({1.0, 0.5, 0.5, 0.5, 2.0});  // 8abc = 1
  REQUIRE(v2.size() == 1);
  CHECK(v2[0] == "vol_K <= 8abc violated");

  CHECK(!geometry::validate({1.0, 0.5, 0.6, 0.5, 0.3}).empty());  // b > a
  CHECK(!geometry::validate({1.0, 0.5, 0.5, -0.1, 0.3}).empty());
  CHECK(!geometry::validate({1.0, 0.5, 0.5, 0.5, 0.0}).empty());
  CHECK_THROWS_AS(geometry::ensure_valid({1.0, 1.0, 0.5, 0.5, 0.3}),
                  std::invalid_argument);
}

TEST_CASE("sigma and gamma match exact rational evaluations") {
  // (L=2, a=b=c=1): sigma = 56-12-6-1 = 37, gamma = 48-24-12+6 = 18, exact
  // in integer arithmetic.
  const auto sg1 = geometry::derived_sigma_gamma({2.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(sg1.sigma == doctest::Approx(37.0).epsilon(1e-15));
  CHECK(sg1.gamma == doctest::Approx(18.0).epsilon(1e-15));

  // (L=1, a=b=c=0.5): scales by 1/8 (cubic homogeneity): 37/8, 18/8.
  const auto sg2 = geometry::derived_sigma_gamma({1.0, 0.5, 0.5, 0.5, 0.3});
  CHECK(sg2.sigma == doctest::Approx(4.625).epsilon(1e-15));
  CHECK(sg2.gamma == doctest::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("cube identity: gamma = 6(L-a)^2(L+a) when a=b=c") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 2000; ++i) {
    ChannelGeometry g = fbtest::random_geometry(rng);
    g.b = g.c = g.a;
    g.vol_K = 4.0 * g.a * g.a * g.a;
    const auto sg = geometry::derived_sigma_gamma(g);
    const double expected = 6.0 * (g.L - g.a) * (g.L - g.a) * (g.L + g.a);
    CHECK(sg.gamma == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("sigma, gamma, M positive over random valid geometries") {
  std::mt19937_64 rng(202);
  for (int i = 0; i < 5000; ++i) {
    const ChannelGeometry g = fbtest::random_geometry(rng);
    const auto bc = geometry::bogovskii_constants(g);
    CHECK(bc.sigma > 0.0);
    CHECK(bc.gamma > 0.0);
    CHECK(bc.M > 0.0);
    CHECK(std::isfinite(bc.M));
  }
}

TEST_CASE("M dual evaluation") {
  // Frozen from a 40-digit evaluation of the same formula (mpmath).
  const double frozen = 26478.604150252628855;
  const double got = geometry::bogovskii_constant_M({2.0, 1.0, 1.0, 1.0, 1.0});
  CHECK(std::abs(got - frozen) / frozen <= 1e-12);

  std::mt19937_64 rng(303);
  for (int i = 0; i < 500; ++i) {
    const ChannelGeometry g = fbtest::random_geometry(rng);
    const double impl = geometry::bogovskii_constant_M(g);
    const long double indep = bogovskii_M_long_double(g);
    CHECK(std::abs(impl - static_cast<double>(indep)) / impl <= 1e-12);
  }
}

TEST_CASE("M grows as the box approaches the channel wall") {
  const ChannelGeometry near{1.0, 0.9, 0.25, 0.25, 0.2};
  const ChannelGeometry far{1.0, 0.5, 0.25, 0.25, 0.2};
  CHECK(geometry::bogovskii_constant_M(near) > geometry::bogovskii_constant_M(far));
}

TEST_CASE("min_branch picks the smaller argument and labels it") {
  constexpr double kPi = std::numbers::pi;

  const auto cube = geometry::min_branch({1.0, 0.9, 0.9, 0.9, 5.0});
  CHECK(cube.branch == MinBranch::CubeRoot);
  CHECK(cube.m == doctest::Approx(std::cbrt(9.0 / (2.0 * kPi))).epsilon(1e-14));
  CHECK(cube.m < 4.0 / 3.0);

  const auto box = geometry::min_branch({1.0, 0.2, 0.2, 0.2, 0.05});
  CHECK(box.branch == MinBranch::Box);
  CHECK(box.m == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  CHECK(std::cbrt(1.5 * 7.95 / kPi) > 4.0 / 3.0);
}

TEST_CASE("min_branch is continuous at the break-even volume") {
  // |Q|/(|Q|-|K|) = 81/(16 pi) makes both arguments equal to 4L/3.
  const double L = 1.0;
  const double vol_Q = 8.0 * L * L * L;
  const double vol_star = vol_Q * (1.0 - 1.0 / geometry::break_even_ratio());
  const ChannelGeometry g{L, 0.8, 0.8, 0.8, vol_star};
  const double cube_root = std::cbrt(1.5 * (vol_Q - vol_star) / std::numbers::pi);
  CHECK(std::abs(cube_root - 4.0 * L / 3.0) <= 1e-10);
  CHECK(std::abs(geometry::min_branch(g).m - 4.0 * L / 3.0) <= 1e-10);

  // The CubeRoot label at a tie applies to exact floating-point ties; scan
  // the ulp neighborhood of the break-even volume for one.
  for (double dir : {0.0, 8.0}) {
    double vol = vol_star;
    for (int k = 0; k < 100; ++k) {
      const double arg = std::cbrt(1.5 * (vol_Q - vol) / std::numbers::pi);
      if (arg == 4.0 * L / 3.0) {
        ChannelGeometry tie = g;
        tie.vol_K = vol;
        CHECK(geometry::min_branch(tie).branch == MinBranch::CubeRoot);
        break;
      }
      vol = std::nextafter(vol, dir);
    }
  }
}

TEST_CASE("conda threshold and implication") {
  CHECK(geometry::conda_volume_threshold(1.0) ==
        doctest::Approx(3.0355079054383514).epsilon(1e-14));
  CHECK(geometry::conda_check({1.0, 0.8, 0.8, 0.8, 3.1}));
  CHECK(!geometry::conda_check({1.0, 0.5, 0.5, 0.5, 0.3}));

  std::mt19937_64 rng(404);
  for (int i = 0; i < 1000; ++i) {
    const ChannelGeometry g = fbtest::random_conda_cube(rng);
    REQUIRE(geometry::validate(g).empty());
    REQUIRE(geometry::conda_check(g));
    CHECK(geometry::min_branch(g).branch == MinBranch::CubeRoot);
  }

  // And on unconstrained geometries the implication still holds whenever the
  // volume condition fires.
  for (int i = 0; i < 1000; ++i) {
    const ChannelGeometry g = fbtest::random_geometry(rng);
    if (geometry::conda_check(g))
      CHECK(geometry::min_branch(g).branch == MinBranch::CubeRoot);
  }
}
