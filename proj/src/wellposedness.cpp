#include "flowbound/wellposedness.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace flowbound::wellposedness {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* what) {
  if (!(v > 0.0)) {
    std::ostringstream msg;
    msg << what << " must be positive";
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

double threshold_general(double s3_lb, double j6_lb, double eta) {
  require_positive(s3_lb, "s3_lb");
  require_positive(j6_lb, "j6_lb");
  require_positive(eta, "eta");
  const double root_s3 = std::sqrt(s3_lb);
  const double denom = 1.0 + root_s3 * eta;
  return eta * eta / (2.0 * std::sqrt(2.0)) * std::sqrt(j6_lb) * s3_lb /
         (denom * denom);
}

double threshold_explicit(const geometry::ChannelGeometry& g, double eta) {
  require_positive(eta, "eta");
  const double m = geometry::min_branch(g).m;
  const double j6_root = std::sqrt(kPi * kPi - 2.0 * m * m / (g.L * g.L));
  const double s3_inv_root = (1.0 / std::sqrt(5.0)) *
                             std::pow(std::pow(7.0, 7.0 / 3.0) / 3.0, 0.25) *
                             std::pow(1.0 / (2.0 * std::pow(kPi, 5.0)), 1.0 / 6.0) *
                             std::sqrt(m);
  const double denom = eta + s3_inv_root;
  return eta * eta / (4.0 * std::sqrt(2.0) * std::cbrt(kPi)) * j6_root /
         (denom * denom);
}

double contraction_beta(double phi, double s3_lb, double s6_lb, double j6_lb,
                        double eta) {
  require_positive(s3_lb, "s3_lb");
  require_positive(s6_lb, "s6_lb");
  require_positive(j6_lb, "j6_lb");
  require_positive(eta, "eta");
  if (phi < 0.0) throw std::invalid_argument("phi must be >= 0");
  const double root_s3_eta = std::sqrt(s3_lb) * eta;
  return std::sqrt(2.0) / root_s3_eta *
         (1.0 / std::sqrt(j6_lb) + 1.0 / std::sqrt(s6_lb)) *
         (1.0 + 1.0 / root_s3_eta) * phi;
}

double gradient_bound_sharp(double phi, double s3_lb, double s6_lb, double j6_lb,
                            double eta) {
  require_positive(s3_lb, "s3_lb");
  require_positive(s6_lb, "s6_lb");
  require_positive(j6_lb, "j6_lb");
  require_positive(eta, "eta");
  if (phi < 0.0) throw std::invalid_argument("phi must be >= 0");
  const double sqrt2 = std::sqrt(2.0);
  const double pair = std::sqrt(s6_lb) + std::sqrt(j6_lb);
  const double one_plus = 1.0 + std::sqrt(s3_lb) * eta;
  const double numer = sqrt2 * pair * one_plus * phi * phi;
  const double denom =
      std::sqrt(j6_lb * s6_lb) * s3_lb * eta * eta - sqrt2 * pair * one_plus * phi;
  if (!(denom > 0.0)) throw std::runtime_error("sharp bound inapplicable");
  return sqrt2 * (1.0 + 2.0 / (std::sqrt(j6_lb * s3_lb) * eta) * numer / denom) * phi;
}

double gradient_bound_rough(double phi, double s3_lb, double eta) {
  require_positive(s3_lb, "s3_lb");
  require_positive(eta, "eta");
  if (phi < 0.0) throw std::invalid_argument("phi must be >= 0");
  return (std::sqrt(2.0) + 1.0 / (std::sqrt(s3_lb) * eta)) * phi;
}

double stokes_gradient_bound(double phi, double g_norm_3_2, double s3_lb, double eta) {
  require_positive(s3_lb, "s3_lb");
  require_positive(eta, "eta");
  if (phi < 0.0 || g_norm_3_2 < 0.0)
    throw std::invalid_argument("phi and g_norm must be >= 0");
  return std::sqrt(2.0) * (phi + g_norm_3_2 / (std::sqrt(s3_lb) * eta));
}

CertifyResult certify(const geometry::ChannelGeometry& g, const FluidParams& fluid,
                      const inflow::InflowDatum& datum, double compat_tol) {
  geometry::ensure_valid(g);
  require_positive(fluid.eta, "viscosity");

  const auto violations = inflow::compatibility_check(datum, g, compat_tol);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "inflow datum violates the inlet-boundary compatibility condition at "
        << violations.size() << " node(s); first at (iy=" << violations[0].iy
        << ", iz=" << violations[0].iz << ", |h|=" << violations[0].magnitude << ")";
    throw std::invalid_argument(msg.str());
  }

  CertifyResult r;
  r.geom = g;
  r.fluid = fluid;
  r.datum = datum;
  r.compat_tol = compat_tol;
  r.bogovskii = geometry::bogovskii_constants(g);
  r.emb = sobolev::embedding_bounds(g);
  r.norms = inflow::inflow_norms(datum, g);

  Certificate& cert = r.cert;
  cert.phi = inflow::phi_of_h(r.norms, r.bogovskii.M, g);
  cert.threshold = threshold_explicit(g, fluid.eta);
  cert.margin = cert.threshold - cert.phi;
  cert.status = cert.phi <= cert.threshold ? Status::Certified : Status::NotCertified;
  cert.beta =
      contraction_beta(cert.phi, r.emb.s3_lb, r.emb.s6_lb, r.emb.j6_lb, fluid.eta);
  cert.grad_bound_rough = gradient_bound_rough(cert.phi, r.emb.s3_lb, fluid.eta);
  if (cert.beta < 1.0) {
    cert.grad_bound_sharp =
        gradient_bound_sharp(cert.phi, r.emb.s3_lb, r.emb.s6_lb, r.emb.j6_lb, fluid.eta);
  } else {
    cert.grad_bound_sharp = std::numeric_limits<double>::infinity();
    cert.warnings.push_back(
        {"sharp_bound_inapplicable",
         "contraction factor >= 1; the sharp gradient bound degenerates and is "
         "reported as inf",
         {{"beta", cert.beta}}});
  }

  if (std::holds_alternative<inflow::AnalyticInflow>(datum)) {
    // The two published evaluations of Phi for the cosine profile differ by a
    // factor of L; the pipeline uses the definition-level value and reports
    // both.  They coincide at L = 1.
    const double A = std::get<inflow::AnalyticInflow>(datum).amplitude;
    const double phi_display =
        std::sqrt(2.0 * g.L) *
        ((1.0 + r.bogovskii.M) / (g.L - g.a) + kPi / (std::sqrt(2.0) * g.L)) * A;
    cert.warnings.push_back(
        {"phi_l_factor_discrepancy",
         "for the analytic inlet profile the definition of Phi evaluates to "
         "sqrt(2L)A[(1+M)L/(L-a) + pi/sqrt(2)], while the drag/lift corollary "
         "display uses sqrt(2L)A[(1+M)/(L-a) + pi/(sqrt(2)L)]; the certificate is "
         "computed from the former and both values are reported",
         {{"phi_definition", cert.phi}, {"phi_corollary_display", phi_display}}});
  }

  if (cert.status == Status::NotCertified) {
    cert.warnings.push_back(
        {"uncertified_formal_values",
         "phi exceeds the threshold; beta and the gradient bounds are formal "
         "values reported for diagnostics only",
         {}});
  }
  return r;
}

}  // namespace flowbound::wellposedness
