#ifndef FLOWBOUND_FORCES_HPP_
#define FLOWBOUND_FORCES_HPP_

#include <array>

#include "flowbound/geometry.hpp"
#include "flowbound/wellposedness.hpp"

namespace flowbound::forces {

// C^1 piecewise-cubic cutoff: 1 on [-1,1], 0 outside (-1-eps, 1+eps), cubic
// blend on the shells.  Evaluated in factored form so the defining
// conditions phi(0)=1, phi(+-(1+eps))=0, phi'(+-1)=0 hold exactly in
// floating point.  sup|phi'| = 3/(2 eps), sup|phi''| = 6/eps^2.
struct CutoffEval {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;  // one-sided (shell) value at the breakpoints
};
CutoffEval phi_eps_eval(double eps, double t);

enum class Axis { e1, e3 };

// Solenoidal extension of e_axis: equals e_axis on the closed box P, zero
// outside the (1+eps)-inflated box, divergence-free in between.  Any eps > 0
// is accepted here for oracle experiments; the published norm bounds hold
// only for eps = (L-a)/(2a).
struct ExtensionField {
  geometry::ChannelGeometry geom;
  double eps = 0.0;
  Axis axis = Axis::e1;
};

ExtensionField make_extension_field(const geometry::ChannelGeometry& g, Axis axis);
ExtensionField make_extension_field(const geometry::ChannelGeometry& g, Axis axis,
                                    double eps);

// eps used by the published norm bounds: (L-a)/(2a).
double default_eps(const geometry::ChannelGeometry& g);

struct FieldEval {
  std::array<double, 3> value{0.0, 0.0, 0.0};
  // jacobian[i][j] = d q_i / d x_j, analytic.
  std::array<std::array<double, 3>, 3> jacobian{};
};
FieldEval q_field_eval(const ExtensionField& field, const std::array<double, 3>& point);

// Closed-form upper bounds on ||q_i||_{L^3} and ||grad q_i||_{L^2} for the
// extension fields at eps = (L-a)/(2a).
struct QNormBounds {
  double q1_l3 = 0.0;
  double q3_l3 = 0.0;
  double q1_h1 = 0.0;
  double q3_h1 = 0.0;
};
QNormBounds q_norm_bounds(const geometry::ChannelGeometry& g);

// (2 eta ||grad q|| + ||grad u|| ||q||_3 / sqrt(J6)) ||grad u||; valid for
// any geometry given the matching q-norm bounds.
double drag_lift_bound_general(double eta, double j6_lb, double grad_u_bound,
                               double q_l3, double q_h1);

// Cubic-box specialization Psi of the drag/lift bound.  Requires a = b = c
// and the obstacle-volume condition that forces the cube-root branch; throws
// std::invalid_argument otherwise (use drag_lift_bound_general then).
double psi_bound(const geometry::ChannelGeometry& g, double eta, double grad_u_bound);

struct ForceBounds {
  QNormBounds q;
  double grad_u_bound = 0.0;
  double drag_bound = 0.0;
  double lift_bound = 0.0;
  double psi = 0.0;
};

enum class GradBoundKind { Rough, Sharp };

struct ForceCertificate {
  ForceBounds bounds;
  wellposedness::CertifyResult certify;
};

// Cubic-box drag/lift pipeline for the analytic inlet profile with amplitude
// A: admissibility via the certify pipeline, then Psi from the selected
// gradient bound.  drag_bound = lift_bound = psi here.  NotCertified results
// carry formal bounds plus the uncertified warning; exit-code policy lives
// in the CLI.
ForceCertificate force_certificate(const geometry::ChannelGeometry& g,
                                   const wellposedness::FluidParams& fluid, double A,
                                   GradBoundKind kind = GradBoundKind::Rough);

}  // namespace flowbound::forces

#endif  // FLOWBOUND_FORCES_HPP_
