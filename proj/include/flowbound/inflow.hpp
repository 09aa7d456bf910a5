#ifndef FLOWBOUND_INFLOW_HPP_
#define FLOWBOUND_INFLOW_HPP_

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "flowbound/geometry.hpp"

namespace flowbound::inflow {

// Inlet datum h on the inlet face, either the cosine-bump profile
// A cos(pi y/2L) cos(pi z/2L) e1 or raw samples on the closed uniform
// tensor grid over [-L,L]^2 (boundary nodes included).
struct AnalyticInflow {
  double amplitude = 0.0;  // A >= 0
};

struct SampledInflow {
  int n_y = 0;  // odd, >= 3
  int n_z = 0;  // odd, >= 3
  // Row-major, y outer: values[i*n_z + j] at (y_i, z_j),
  // y_i = -L + 2L i/(n_y-1), z_j = -L + 2L j/(n_z-1).
  std::vector<std::array<double, 3>> values;
};

using InflowDatum = std::variant<AnalyticInflow, SampledInflow>;

inline constexpr double kDefaultCompatTol = 1e-8;

// The three boundary norms feeding Phi(h): ||h||, ||grad h||, and the
// in-plane divergence ||dh2/dy + dh3/dz||, all on the inlet face.
struct InflowNorms {
  double l2 = 0.0;
  double grad_l2 = 0.0;
  double div_l2 = 0.0;
};

struct CompatViolation {
  int iy = 0;
  int iz = 0;
  double y = 0.0;
  double z = 0.0;
  double magnitude = 0.0;
};

// Derivative stencils for the sampled path.  Interior nodes always use
// fourth-order central differences; the enum selects the boundary-layer
// treatment (nodes 0, 1, n-2, n-1).  FourthOrderOneSided is the default:
// with second-order boundary stencils the O(h^2) layer error enters the H^1
// quadrature at O(h^3) and dominates the Simpson error, measured in
// test_inflow.cpp.  Grids with n < 5 fall back to second order.
enum class BoundaryStencil { SecondOrderOneSided, FourthOrderOneSided };

// Throws std::invalid_argument on malformed sample containers (even or
// undersized node counts, wrong value count, non-finite entries).
void validate_structure(const SampledInflow& s);

// Empty result = compatible (h vanishes on the inlet-face boundary).
// Analytic data are compatible identically; sampled data are checked node by
// node against compat_tol * max |h| over the grid.
std::vector<CompatViolation> compatibility_check(const InflowDatum& datum,
                                                 const geometry::ChannelGeometry& g,
                                                 double compat_tol = kDefaultCompatTol);

// Analytic: closed forms (A L, A pi/sqrt(2), 0).
// Sampled: composite-Simpson quadrature of |h|^2, |grad h|^2 and
// (dh2/dy + dh3/dz)^2 with finite-difference surface derivatives.
InflowNorms inflow_norms(const InflowDatum& datum, const geometry::ChannelGeometry& g,
                         BoundaryStencil stencil = BoundaryStencil::FourthOrderOneSided);

// Phi = sqrt(2L) [ (1+M)/(L-a) ||h|| + ||grad h|| + M ||dh2/dy + dh3/dz|| ].
double phi_of_h(const InflowNorms& norms, double M, const geometry::ChannelGeometry& g);

// Cosine-bump profile value at (y, z).
std::array<double, 3> analytic_profile(double A, double L, double y, double z);

// Samples the analytic profile onto a closed n_y x n_z grid.
SampledInflow sample_analytic(double A, const geometry::ChannelGeometry& g, int n_y,
                              int n_z);

// Reads the CSV interchange format (header `y,z,h1,h2,h3`, row-major with y
// outer); infers the grid shape and validates the nodes against the uniform
// grid for the given geometry.  Throws std::runtime_error with a line
// diagnostic on malformed input.
SampledInflow read_sampled_csv(const std::string& path,
                               const geometry::ChannelGeometry& g);

}  // namespace flowbound::inflow

#endif  // FLOWBOUND_INFLOW_HPP_
