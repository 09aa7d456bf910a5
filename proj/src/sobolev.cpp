#include "flowbound/sobolev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flowbound::sobolev {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGnDomainCap = 2.0 + 1e-6;

// Denominator pi^2/m^2 - 2/L^2 of the V(Omega) bounds.
double v_denominator(const geometry::ChannelGeometry& g, double m) {
  const double den = kPi * kPi / (m * m) - 2.0 / (g.L * g.L);
  if (!(den > 0.0)) throw std::logic_error("V-space denominator violated");
  return den;
}

}  // namespace

double poincare_coeff_vstar(const geometry::ChannelGeometry& g) {
  return geometry::min_branch(g).m / kPi;
}

double l6_coeff_vstar() { return 2.0 / (std::sqrt(3.0) * std::pow(kPi, 2.0 / 3.0)); }

double poincare_coeff_v(const geometry::ChannelGeometry& g) {
  const double m = geometry::min_branch(g).m;
  return std::sqrt(3.0) / std::sqrt(v_denominator(g, m));
}

double l6_coeff_v(const geometry::ChannelGeometry& g) {
  const double m = geometry::min_branch(g).m;
  // 2 pi^(1/3) (1/m) / sqrt(pi^2/m^2 - 2/L^2) == 2 pi^(1/3)/sqrt(pi^2 - 2m^2/L^2)
  return 2.0 * std::cbrt(kPi) / (m * std::sqrt(v_denominator(g, m)));
}

double gn_constant(double p) {
  if (!(p >= kGnDomainCap && p <= 6.0))
    throw std::domain_error("gn_constant: p must lie in [2 + 1e-6, 6]");
  const double num_arg = (p + 2.0) / (p - 2.0);
  const double den_arg = (10.0 - p) / (2.0 * (p - 2.0));
  const double gamma_ratio =
      std::exp(((p - 2.0) / (2.0 * p)) * (std::lgamma(num_arg) - std::lgamma(den_arg)));
  const double front = std::pow((p * p - 4.0) / (24.0 * kPi), 3.0 * (p - 2.0) / (4.0 * p));
  const double tail = std::pow((10.0 - p) / (2.0 * (p + 2.0)), (10.0 - p) / (4.0 * p));
  return front * gamma_ratio * tail;
}

double lp_coeff_vstar(const geometry::ChannelGeometry& g, double p) {
  const double m = geometry::min_branch(g).m;
  const double exponent = (4.0 * p - p * p + 12.0) / (2.0 * p * (p + 2.0));
  return std::pow(2.0, (p - 2.0) / (2.0 * p)) * gn_constant(p) *
         std::pow(m / kPi, exponent);
}

double l3_coeff_vstar(const geometry::ChannelGeometry& g) {
  const double m = geometry::min_branch(g).m;
  const double prefactor = (1.0 / std::sqrt(5.0)) *
                           std::pow(std::pow(7.0, 7.0 / 3.0) / 3.0, 0.25) *
                           std::pow(1.0 / (2.0 * std::pow(kPi, 5.0)), 1.0 / 6.0);
  return prefactor * std::sqrt(m);
}

EmbeddingBounds embedding_bounds(const geometry::ChannelGeometry& g) {
  const auto mb = geometry::min_branch(g);
  EmbeddingBounds eb;
  eb.m = mb.m;
  eb.branch = mb.branch;
  const double ks2 = poincare_coeff_vstar(g);
  const double ks6 = l6_coeff_vstar();
  const double ks3 = l3_coeff_vstar(g);
  const double kj2 = poincare_coeff_v(g);
  const double kj6 = l6_coeff_v(g);
  eb.s2_lb = 1.0 / (ks2 * ks2);
  eb.s3_lb = 1.0 / (ks3 * ks3);
  eb.s6_lb = 1.0 / (ks6 * ks6);
  eb.j2_lb = 1.0 / (kj2 * kj2);
  eb.j6_lb = 1.0 / (kj6 * kj6);
  return eb;
}

}  // namespace flowbound::sobolev
