#include "flowbound/forces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace flowbound::forces {

namespace {

constexpr double kPi = std::numbers::pi;

struct Cutoff1D {
  double value, d1, d2;
};

// Scaled cutoff along one axis: phi_eps(x/half) with chain-rule factors.
Cutoff1D scaled_cutoff(double eps, double x, double half) {
  const CutoffEval e = phi_eps_eval(eps, x / half);
  return {e.value, e.d1 / half, e.d2 / (half * half)};
}

}  // namespace

CutoffEval phi_eps_eval(double eps, double t) {
  if (!(eps > 0.0)) throw std::invalid_argument("phi_eps_eval requires eps > 0");
  const double s = std::abs(t);
  const double edge = 1.0 + eps;
  if (s > edge) return {0.0, 0.0, 0.0};
  if (s < 1.0) return {1.0, 0.0, 0.0};
  // Shell: factored cubic with a double root at 1+eps.
  const double eps3 = eps * eps * eps;
  const double r = s - edge;
  const double sign = t < 0.0 ? -1.0 : 1.0;
  CutoffEval out;
  out.value = r * r * (2.0 * s + eps - 2.0) / eps3;
  out.d1 = sign * 6.0 * (s - 1.0) * r / eps3;
  out.d2 = 6.0 * (2.0 * s - 2.0 - eps) / eps3;
  return out;
}

double default_eps(const geometry::ChannelGeometry& g) {
  geometry::ensure_valid(g);
  return (g.L - g.a) / (2.0 * g.a);
}

ExtensionField make_extension_field(const geometry::ChannelGeometry& g, Axis axis) {
  return make_extension_field(g, axis, default_eps(g));
}

ExtensionField make_extension_field(const geometry::ChannelGeometry& g, Axis axis,
                                    double eps) {
  geometry::ensure_valid(g);
  if (!(eps > 0.0)) throw std::invalid_argument("extension field requires eps > 0");
  return ExtensionField{g, eps, axis};
}

FieldEval q_field_eval(const ExtensionField& field, const std::array<double, 3>& point) {
  const auto& g = field.geom;
  const double x = point[0], y = point[1], z = point[2];
  const Cutoff1D u = scaled_cutoff(field.eps, x, g.a);
  const Cutoff1D v = scaled_cutoff(field.eps, y, g.b);
  const Cutoff1D w = scaled_cutoff(field.eps, z, g.c);

  const double xi = u.value * v.value * w.value;
  const double xi_x = u.d1 * v.value * w.value;
  const double xi_y = u.value * v.d1 * w.value;
  const double xi_z = u.value * v.value * w.d1;
  const double xi_xx = u.d2 * v.value * w.value;
  const double xi_yy = u.value * v.d2 * w.value;
  const double xi_zz = u.value * v.value * w.d2;
  const double xi_xy = u.d1 * v.d1 * w.value;
  const double xi_xz = u.d1 * v.value * w.d1;
  const double xi_yz = u.value * v.d1 * w.d1;

  FieldEval out;
  if (field.axis == Axis::e1) {
    // q1 = xi e1 + (1/2) grad(xi) x (0, -z, y)
    out.value = {xi + 0.5 * (y * xi_y + z * xi_z), -0.5 * y * xi_x, -0.5 * z * xi_x};
    out.jacobian[0] = {xi_x + 0.5 * (y * xi_xy + z * xi_xz),
                       xi_y + 0.5 * (xi_y + y * xi_yy + z * xi_yz),
                       xi_z + 0.5 * (y * xi_yz + xi_z + z * xi_zz)};
    out.jacobian[1] = {-0.5 * y * xi_xx, -0.5 * (xi_x + y * xi_xy), -0.5 * y * xi_xz};
    out.jacobian[2] = {-0.5 * z * xi_xx, -0.5 * z * xi_xy, -0.5 * (xi_x + z * xi_xz)};
  } else {
    // q3 = xi e3 + (1/2) grad(xi) x (-y, x, 0)
    out.value = {-0.5 * x * xi_z, -0.5 * y * xi_z, xi + 0.5 * (x * xi_x + y * xi_y)};
    out.jacobian[0] = {-0.5 * (xi_z + x * xi_xz), -0.5 * x * xi_yz, -0.5 * x * xi_zz};
    out.jacobian[1] = {-0.5 * y * xi_xz, -0.5 * (xi_z + y * xi_yz), -0.5 * y * xi_zz};
    out.jacobian[2] = {xi_x + 0.5 * (xi_x + x * xi_xx + y * xi_xy),
                       xi_y + 0.5 * (x * xi_xy + xi_y + y * xi_yy),
                       xi_z + 0.5 * (x * xi_xz + y * xi_yz)};
  }
  return out;
}

QNormBounds q_norm_bounds(const geometry::ChannelGeometry& g) {
  geometry::ensure_valid(g);
  const double L = g.L, a = g.a, b = g.b, c = g.c;
  const double inv2 = 1.0 / (a * a) + 1.0 / (b * b) + 1.0 / (c * c);
  const double root_inv2 = std::sqrt(inv2);
  const double cbrt_abc = std::cbrt(a * b * c);

  QNormBounds q;
  q.q1_l3 = cbrt_abc / a * (1.0 + 0.75 * std::sqrt(b * b + c * c) * root_inv2) * (L + a);
  q.q3_l3 = cbrt_abc / a * (1.0 + 0.75 * std::sqrt(a * a + b * b) * root_inv2) * (L + a);

  const double front = 3.0 * std::sqrt(b * c * (L - a));
  const double ratio = 0.75 * (L + a) / (L - a);
  const double sa = std::sqrt(64.0 / (9.0 * a * a) + 1.0 / (b * b) + 1.0 / (c * c));
  const double sb = std::sqrt(1.0 / (a * a) + 64.0 / (9.0 * b * b) + 1.0 / (c * c));
  const double sc = std::sqrt(1.0 / (a * a) + 1.0 / (b * b) + 64.0 / (9.0 * c * c));

  q.q1_h1 = front * (root_inv2 + 1.0 / a + 0.5 / b + 0.5 / c +
                     ratio * ((b + c) / a * sa + sb + sc));
  q.q3_h1 = front * (root_inv2 + 1.0 / c + 0.5 / a + 0.5 / b +
                     ratio * ((a + b) / c * sc + sa + sb));
  return q;
}

double drag_lift_bound_general(double eta, double j6_lb, double grad_u_bound,
                               double q_l3, double q_h1) {
  if (!(eta > 0.0) || !(j6_lb > 0.0))
    throw std::invalid_argument("drag_lift_bound_general requires eta, j6_lb > 0");
  if (grad_u_bound < 0.0 || q_l3 < 0.0 || q_h1 < 0.0)
    throw std::invalid_argument("drag_lift_bound_general requires nonnegative bounds");
  return (2.0 * eta * q_h1 + grad_u_bound * q_l3 / std::sqrt(j6_lb)) * grad_u_bound;
}

double psi_bound(const geometry::ChannelGeometry& g, double eta, double grad_u_bound) {
  geometry::ensure_valid(g);
  if (!g.cubic_box())
    throw std::invalid_argument("psi requires cubic bounding box (a = b = c)");
  if (!geometry::conda_check(g))
    throw std::invalid_argument(
        "psi requires the obstacle-volume condition vol_K > (8/81)(81-16pi)L^3; "
        "use drag_lift_bound_general for this geometry");
  if (!(eta > 0.0)) throw std::invalid_argument("psi requires eta > 0");
  if (grad_u_bound < 0.0) throw std::invalid_argument("psi requires grad_u_bound >= 0");

  const double L = g.L, a = g.a;
  const double linear = 6.0 * eta * std::sqrt(L - a) *
                        (2.0 + std::sqrt(3.0) + std::sqrt(82.0) * (L + a) / (L - a));
  const double m2 = std::pow(1.5 * (g.vol_Q() - g.vol_K) / kPi, 2.0 / 3.0);
  const double quad = (1.0 + 0.75 * std::sqrt(6.0)) * 2.0 * std::cbrt(kPi) * (L + a) /
                      std::sqrt(kPi * kPi - 2.0 / (L * L) * m2);
  return linear * grad_u_bound + quad * grad_u_bound * grad_u_bound;
}

ForceCertificate force_certificate(const geometry::ChannelGeometry& g,
                                   const wellposedness::FluidParams& fluid, double A,
                                   GradBoundKind kind) {
  geometry::ensure_valid(g);
  if (!g.cubic_box())
    throw std::invalid_argument(
        "force_certificate requires a cubic bounding box (a = b = c)");
  if (!geometry::conda_check(g))
    throw std::invalid_argument(
        "force_certificate requires vol_K > (8/81)(81-16pi)L^3");
  if (A < 0.0) throw std::invalid_argument("amplitude must be >= 0");

  ForceCertificate fc;
  fc.certify = wellposedness::certify(g, fluid, inflow::AnalyticInflow{A});
  const auto& cert = fc.certify.cert;
  fc.bounds.q = q_norm_bounds(g);
  fc.bounds.grad_u_bound =
      kind == GradBoundKind::Rough ? cert.grad_bound_rough : cert.grad_bound_sharp;
  fc.bounds.psi = psi_bound(g, fluid.eta, fc.bounds.grad_u_bound);
  fc.bounds.drag_bound = fc.bounds.psi;
  fc.bounds.lift_bound = fc.bounds.psi;
  return fc;
}

}  // namespace flowbound::forces
