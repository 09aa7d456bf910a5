#ifndef FLOWBOUND_WELLPOSEDNESS_HPP_
#define FLOWBOUND_WELLPOSEDNESS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "flowbound/geometry.hpp"
#include "flowbound/inflow.hpp"
#include "flowbound/sobolev.hpp"

namespace flowbound::wellposedness {

struct FluidParams {
  double eta = 0.0;  // kinematic viscosity, > 0
};

enum class Status { Certified, NotCertified };

struct Warning {
  std::string code;
  std::string message;
  // Numeric payload, serialized alongside the message.
  std::vector<std::pair<std::string, double>> data;
};

// A Certified status asserts existence and uniqueness of the weak solution
// within the fixed-point ball B0 (not global uniqueness), with the gradient
// bounds below.  When NotCertified, beta and the gradient bounds are formal
// diagnostic values; status is the authoritative field.
struct Certificate {
  double phi = 0.0;
  double threshold = 0.0;
  double margin = 0.0;  // threshold - phi
  double beta = 0.0;
  double grad_bound_sharp = 0.0;  // +inf when beta >= 1 (see warnings)
  double grad_bound_rough = 0.0;
  Status status = Status::NotCertified;
  std::vector<Warning> warnings;
};

// eta^2/(2 sqrt2) * sqrt(J6) S3 / (1 + sqrt(S3) eta)^2, evaluated at the
// supplied lower bounds.  Nondecreasing in each argument, so lower bounds of
// the true constants only shrink the certified region.
double threshold_general(double s3_lb, double j6_lb, double eta);

// The fully explicit form of the threshold in terms of the geometry; equals
// threshold_general at this module's embedding lower bounds (algebraic
// identity S3/(1+sqrt(S3) eta)^2 = 1/(eta + 1/sqrt(S3))^2).
double threshold_explicit(const geometry::ChannelGeometry& g, double eta);

// beta = (sqrt2/(sqrt(S3) eta))(1/sqrt(J6)+1/sqrt(S6))(1+1/(sqrt(S3) eta)) phi.
// beta < 1 whenever phi <= threshold_general(s3_lb, j6_lb, eta).
double contraction_beta(double phi, double s3_lb, double s6_lb, double j6_lb,
                        double eta);

// Sharp a-priori bound on ||grad u||.  Throws std::runtime_error
// ("sharp bound inapplicable") when the denominator is nonpositive, i.e.
// beta >= 1; cannot happen for phi <= threshold.
double gradient_bound_sharp(double phi, double s3_lb, double s6_lb, double j6_lb,
                            double eta);

// Rougher bound (sqrt2 + 1/(sqrt(S3) eta)) phi.
double gradient_bound_rough(double phi, double s3_lb, double eta);

// Stokes estimate with external forcing: sqrt2 (phi + g_norm/(sqrt(S3) eta)).
double stokes_gradient_bound(double phi, double g_norm_3_2, double s3_lb, double eta);

// Everything certify produced, kept together so reports can be re-derived
// bit-identically from the inputs alone.
struct CertifyResult {
  geometry::ChannelGeometry geom;
  FluidParams fluid;
  inflow::InflowDatum datum;
  double compat_tol = inflow::kDefaultCompatTol;
  std::string grid_file;  // set when the datum came from a CSV file
  geometry::BogovskiiConstants bogovskii;
  sobolev::EmbeddingBounds emb;
  inflow::InflowNorms norms;
  Certificate cert;
};

// Full pipeline: embedding bounds -> inflow norms -> Phi -> explicit
// threshold -> status, beta and both gradient bounds.  Analytic data always
// carry the `phi_l_factor_discrepancy` warning (see README).  Throws on
// invalid geometry/fluid/datum or failed compatibility.
CertifyResult certify(const geometry::ChannelGeometry& g, const FluidParams& fluid,
                      const inflow::InflowDatum& datum,
                      double compat_tol = inflow::kDefaultCompatTol);

}  // namespace flowbound::wellposedness

#endif  // FLOWBOUND_WELLPOSEDNESS_HPP_
