#ifndef FLOWBOUND_VERIFY_HPP_
#define FLOWBOUND_VERIFY_HPP_

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "flowbound/forces.hpp"
#include "flowbound/geometry.hpp"
#include "flowbound/oracle.hpp"

namespace flowbound::verify {

// One row of the verification table.
struct Check {
  std::string name;
  double observed = 0.0;
  double expected = 0.0;
  std::string detail;
  bool pass = false;
};

// Eigenvalue study at two resolutions against the separable continuum value.
struct EigenStudy {
  double lambda_coarse = 0.0;
  double lambda_fine = 0.0;
  double err_coarse = 0.0;
  double err_fine = 0.0;
  double order = 0.0;
};
EigenStudy eigen_study(const oracle::BoxDomain& box, double exact, int n_coarse,
                       int n_fine);

// Sampled suprema of |phi_eps'| and |phi_eps''| on piecewise grids at the
// given resolution (breakpoints included as nodes).
struct CutoffSupStudy {
  double sup_d1 = 0.0;
  double sup_d2 = 0.0;
};
CutoffSupStudy cutoff_sup_study(double eps, double resolution);

// Uniform sample box inside the inflated support of the extension fields
// whose nodes all sit at least `margin` away from the cutoff breakpoint
// planes, so central differences see smooth field values.
oracle::BoxDomain divergence_sample_box(const geometry::ChannelGeometry& g, double eps,
                                        double margin, int nodes_per_axis);

// Max |div q| by central differences at three halving steps plus the two
// observed decay orders.
struct DivergenceStudy {
  std::array<double, 3> steps{};
  std::array<double, 3> residuals{};
  std::array<double, 2> orders{};
};
DivergenceStudy divergence_study(const geometry::ChannelGeometry& g, forces::Axis axis,
                                 const std::array<double, 3>& steps);

// Simpson quadrature of ||q||_{L^3} and ||grad q||_{L^2} over the inflated
// support box, for comparison against the closed-form bounds.
double q_l3_quadrature(const forces::ExtensionField& field, int nodes_per_axis);
double q_h1_quadrature(const forces::ExtensionField& field, int nodes_per_axis);

// Full oracle verification suite: eigenvalues, quadrature, divergence, and
// cutoff sup-norms, with pinned expectations.
std::vector<Check> run_suite();

// Prints the table; returns true iff every check passed.
bool print_report(const std::vector<Check>& checks, std::ostream& out);

}  // namespace flowbound::verify

#endif  // FLOWBOUND_VERIFY_HPP_
