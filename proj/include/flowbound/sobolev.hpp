#ifndef FLOWBOUND_SOBOLEV_HPP_
#define FLOWBOUND_SOBOLEV_HPP_

#include "flowbound/geometry.hpp"

namespace flowbound::sobolev {

// Certified lower bounds for the embedding constants of
//   V*(Omega) = { H^1 fields vanishing on inlet + walls }   -> S_p
//   V(Omega)  = { H^1 fields vanishing on walls only }      -> J_p
// These are lower bounds for the true variational constants, never the
// constants themselves; using them downstream only shrinks the certified
// region.
struct EmbeddingBounds {
  double s2_lb = 0.0;
  double s3_lb = 0.0;
  double s6_lb = 0.0;
  double j2_lb = 0.0;
  double j6_lb = 0.0;
  double m = 0.0;  // min-branch value the bounds were evaluated at
  geometry::MinBranch branch = geometry::MinBranch::Box;
};

// kappa* with ||u||_2 <= kappa* ||grad u||_2 on V*(Omega); kappa* = m/pi.
double poincare_coeff_vstar(const geometry::ChannelGeometry& g);

// Geometry-independent coefficient for ||u||_6 on V*(Omega):
// 2/(sqrt(3) pi^(2/3)).
double l6_coeff_vstar();

// kappa with ||u||_2 <= kappa ||grad u||_2 on V(Omega):
// sqrt(3)/sqrt(pi^2/m^2 - 2/L^2).  Throws std::logic_error if the
// denominator is nonpositive (unreachable for valid geometries since
// m <= 4L/3 < pi L/sqrt(2)).
double poincare_coeff_v(const geometry::ChannelGeometry& g);

// Coefficient for ||u||_6 on V(Omega): 2 pi^(1/3)/sqrt(pi^2 - 2m^2/L^2).
double l6_coeff_v(const geometry::ChannelGeometry& g);

// Gagliardo-Nirenberg interpolation constant C(p), p in (2,6].  Gamma
// evaluations via std::lgamma; arguments blow up as p -> 2+, so evaluation
// is capped at p >= 2 + 1e-6 (std::domain_error below the cap or above 6).
double gn_constant(double p);

// Coefficient for ||u||_p on V*(Omega), p in (2,6]:
// 2^((p-2)/(2p)) C(p) (m/pi)^((4p - p^2 + 12)/(2p(p+2))).
double lp_coeff_vstar(const geometry::ChannelGeometry& g, double p);

// p = 3 closed form: (1/sqrt5)(7^(7/3)/3)^(1/4)(1/(2 pi^5))^(1/6) m^(1/2).
// Equals lp_coeff_vstar(g, 3); 1/coeff^2 is the S_3 lower bound used by the
// explicit threshold.
double l3_coeff_vstar(const geometry::ChannelGeometry& g);

EmbeddingBounds embedding_bounds(const geometry::ChannelGeometry& g);

}  // namespace flowbound::sobolev

#endif  // FLOWBOUND_SOBOLEV_HPP_
