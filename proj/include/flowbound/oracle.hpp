#ifndef FLOWBOUND_ORACLE_HPP_
#define FLOWBOUND_ORACLE_HPP_

#include <array>
#include <functional>

namespace flowbound::oracle {

// Axis-aligned box; only the first `dim` axes are consulted by the
// dimension-generic routines.
struct BoxDomain {
  std::array<double, 3> lo{0.0, 0.0, 0.0};
  std::array<double, 3> hi{0.0, 0.0, 0.0};
};

// Node counts per axis.  Eigenvalue solves read them as interior point
// counts; Simpson reads them as node counts and requires odd values >= 3.
struct GridSpec {
  std::array<int, 3> n{0, 0, 0};
};

using ScalarField = std::function<double(const std::array<double, 3>&)>;
using VectorField = std::function<std::array<double, 3>(const std::array<double, 3>&)>;

// Smallest eigenvalue of the 7-point finite-difference Dirichlet Laplacian,
// by inverse power iteration (fixed zero shift) with a matrix-free CG inner
// solve.  Iterates until the relative eigenresidual ||A y - lambda y||/lambda||y||
// drops below 1e-10; throws std::runtime_error if that does not happen
// within the iteration cap.  Converges to sum_i pi^2/(hi_i-lo_i)^2 at second
// order in the mesh width.
double box_eigenvalue_fd(const BoxDomain& box, const GridSpec& grid);

// Tensor-product composite Simpson over the first `dim` axes.  Node counts
// must be odd and >= 3 (std::invalid_argument otherwise).  The reduction is
// pairwise per z-line, then pairwise across lines, so results are
// bit-reproducible for a fixed grid.
double simpson_nd(const ScalarField& f, const BoxDomain& box, const GridSpec& grid,
                  int dim);

// Max magnitude over the grid nodes of the central-difference divergence of
// `field` with displacement `step` per axis.  For fields that are smooth near
// every sampled node the result decays at O(step^2).
double divergence_residual_fd(const VectorField& field, const BoxDomain& box,
                              const GridSpec& grid, double step);

}  // namespace flowbound::oracle

#endif  // FLOWBOUND_ORACLE_HPP_
