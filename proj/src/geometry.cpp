#include "flowbound/geometry.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace flowbound::geometry {

namespace {
constexpr double kPi = std::numbers::pi;
}

double break_even_ratio() { return 81.0 / (16.0 * kPi); }

double conda_volume_threshold(double L) {
  return (8.0 / 81.0) * (81.0 - 16.0 * kPi) * L * L * L;
}

std::vector<std::string> validate(const ChannelGeometry& g) {
  std::vector<std::string> violations;
  auto reject = [&](const std::string& msg) { violations.push_back(msg); };

  if (!(std::isfinite(g.L) && std::isfinite(g.a) && std::isfinite(g.b) &&
        std::isfinite(g.c) && std::isfinite(g.vol_K))) {
    reject("all geometry fields must be finite");
    return violations;
  }
  if (!(g.c > 0.0)) reject("c > 0 violated");
  if (!(g.b >= g.c)) reject("b >= c violated");
  if (!(g.a >= g.b)) reject("a >= b violated");
  if (!(g.L > g.a)) reject("a < L violated");
  if (!(g.vol_K > 0.0)) reject("vol_K > 0 violated");
  const double box_volume = 8.0 * g.a * g.b * g.c;
  if (g.c > 0.0 && !(g.vol_K <= box_volume)) reject("vol_K <= 8abc violated");
  if (!violations.empty()) return violations;
  if (!(g.vol_Q() - g.vol_K > 0.0)) reject("vol_Q - vol_K > 0 violated");
  return violations;
}

void ensure_valid(const ChannelGeometry& g) {
  const auto violations = validate(g);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid geometry:";
  for (const auto& v : violations) msg << " [" << v << "]";
  throw std::invalid_argument(msg.str());
}

SigmaGamma derived_sigma_gamma(const ChannelGeometry& g) {
  ensure_valid(g);
  const double L = g.L, a = g.a, b = g.b, c = g.c;
  const double e1 = a + b + c;
  const double e2 = a * b + a * c + b * c;
  const double e3 = a * b * c;
  SigmaGamma sg;
  sg.sigma = 7.0 * L * L * L - e1 * L * L - e2 * L - e3;
  sg.gamma = 6.0 * L * L * L - 2.0 * e1 * L * L - 2.0 * e2 * L + 6.0 * e3;
  return sg;
}

double bogovskii_constant_M(const ChannelGeometry& g) {
  const SigmaGamma sg = derived_sigma_gamma(g);
  const double L = g.L, a = g.a;
  const double gap = L - a;
  const double gap32 = std::pow(gap, 1.5);
  const double sqrt_sigma = std::sqrt(sg.sigma);
  const double front =
      std::sqrt(12.0 * (1.0 + (16.0 / sg.gamma) * (L * L * L - g.a * g.b * g.c)));
  const double trace = kExtCoeffTraceBase + kExtCoeffTraceSlope * sqrt_sigma / gap32;
  const double bracket = kExtCoeffBase + kExtCoeffSqrtSigma * sqrt_sigma / gap32 +
                         kExtCoeffSigma * sg.sigma / (gap * gap * gap) +
                         (144.0 * L * L / (gap * gap)) * trace * trace;
  return front * std::sqrt(bracket);
}

BogovskiiConstants bogovskii_constants(const ChannelGeometry& g) {
  const SigmaGamma sg = derived_sigma_gamma(g);
  return BogovskiiConstants{sg.sigma, sg.gamma, bogovskii_constant_M(g)};
}

MinBranchResult min_branch(const ChannelGeometry& g) {
  ensure_valid(g);
  const double cube_root = std::cbrt(1.5 * (g.vol_Q() - g.vol_K) / kPi);
  const double box = 4.0 * g.L / 3.0;
  if (cube_root <= box) return {cube_root, MinBranch::CubeRoot};
  return {box, MinBranch::Box};
}

bool conda_check(const ChannelGeometry& g) {
  ensure_valid(g);
  return g.vol_K > conda_volume_threshold(g.L);
}

}  // namespace flowbound::geometry
