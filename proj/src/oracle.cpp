#include "flowbound/oracle.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "flowbound/numeric.hpp"

namespace flowbound::oracle {

namespace {

using numeric::pairwise_dot;
using numeric::pairwise_sum;

// Matrix-free 7-point Dirichlet Laplacian on the interior grid of `box`.
class FdLaplacian {
 public:
  FdLaplacian(const BoxDomain& box, const GridSpec& grid) {
    for (int d = 0; d < 3; ++d) {
      n_[d] = grid.n[d];
      if (n_[d] < 1) throw std::invalid_argument("eigen grid needs n >= 1 per axis");
      const double len = box.hi[d] - box.lo[d];
      if (!(len > 0.0)) throw std::invalid_argument("box must have hi > lo per axis");
      h_[d] = len / (n_[d] + 1);
      inv_h2_[d] = 1.0 / (h_[d] * h_[d]);
    }
    size_ = static_cast<std::size_t>(n_[0]) * n_[1] * n_[2];
  }

  std::size_t size() const { return size_; }

  void apply(const std::vector<double>& x, std::vector<double>& y) const {
    const int nx = n_[0], ny = n_[1], nz = n_[2];
    const double diag = 2.0 * (inv_h2_[0] + inv_h2_[1] + inv_h2_[2]);
    const std::size_t sy = static_cast<std::size_t>(nz);
    const std::size_t sx = static_cast<std::size_t>(ny) * nz;
    for (int i = 0; i < nx; ++i) {
      for (int j = 0; j < ny; ++j) {
        const std::size_t base = i * sx + j * sy;
        for (int k = 0; k < nz; ++k) {
          const std::size_t id = base + k;
          double v = diag * x[id];
          if (i > 0) v -= inv_h2_[0] * x[id - sx];
          if (i < nx - 1) v -= inv_h2_[0] * x[id + sx];
          if (j > 0) v -= inv_h2_[1] * x[id - sy];
          if (j < ny - 1) v -= inv_h2_[1] * x[id + sy];
          if (k > 0) v -= inv_h2_[2] * x[id - 1];
          if (k < nz - 1) v -= inv_h2_[2] * x[id + 1];
          y[id] = v;
        }
      }
    }
  }

 private:
  int n_[3];
  double h_[3];
  double inv_h2_[3];
  std::size_t size_;
};

// Plain CG on the SPD operator; warm-started from x.  Returns iterations
// used (capped).
int conjugate_gradient(const FdLaplacian& A, const std::vector<double>& b,
                       std::vector<double>& x, double rel_tol, int max_iter) {
  const std::size_t n = A.size();
  std::vector<double> r(n), p(n), Ap(n);
  A.apply(x, Ap);
  for (std::size_t i = 0; i < n; ++i) r[i] = b[i] - Ap[i];
  p = r;
  double rr = pairwise_dot(r, r);
  const double bb = pairwise_dot(b, b);
  const double stop = rel_tol * rel_tol * bb;
  int it = 0;
  while (rr > stop && it < max_iter) {
    A.apply(p, Ap);
    const double pAp = pairwise_dot(p, Ap);
    const double alpha = rr / pAp;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += alpha * p[i];
      r[i] -= alpha * Ap[i];
    }
    const double rr_new = pairwise_dot(r, r);
    const double beta = rr_new / rr;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    rr = rr_new;
    ++it;
  }
  return it;
}

}  // namespace

double box_eigenvalue_fd(const BoxDomain& box, const GridSpec& grid) {
  const FdLaplacian A(box, grid);
  const std::size_t n = A.size();
  constexpr double kResidualTol = 1e-10;
  constexpr int kMaxOuter = 500;
  constexpr int kMaxInner = 20000;

  std::vector<double> x(n, 1.0), y(n, 0.0), Ay(n);
  {
    const double nrm = std::sqrt(pairwise_dot(x, x));
    for (auto& v : x) v /= nrm;
  }

  double lambda = 0.0;
  double inner_tol = 1e-8;
  for (int outer = 0; outer < kMaxOuter; ++outer) {
    // Warm start: y from the previous step approximates A^{-1} x up to
    // normalization, so scale it back instead of restarting from zero.
    if (outer > 0 && lambda > 0.0) {
      for (std::size_t i = 0; i < n; ++i) y[i] = x[i] / lambda;
    } else {
      for (std::size_t i = 0; i < n; ++i) y[i] = 0.0;
    }
    conjugate_gradient(A, x, y, inner_tol, kMaxInner);

    const double yy = pairwise_dot(y, y);
    A.apply(y, Ay);
    lambda = pairwise_dot(y, Ay) / yy;

    double res2 = 0.0;
    {
      std::vector<double> diff(n);
      for (std::size_t i = 0; i < n; ++i) diff[i] = Ay[i] - lambda * y[i];
      res2 = pairwise_dot(diff, diff);
    }
    const double rel_res = std::sqrt(res2 / yy) / lambda;
    const double nrm = std::sqrt(yy);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / nrm;
    if (rel_res <= kResidualTol) return lambda;
    inner_tol = std::max(1e-13, std::min(1e-8, 0.05 * rel_res));
  }
  throw std::runtime_error("box_eigenvalue_fd: inverse power iteration did not converge");
}

double simpson_nd(const ScalarField& f, const BoxDomain& box, const GridSpec& grid,
                  int dim) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("simpson_nd: dim must be 1..3");
  int n[3] = {1, 1, 1};
  double h[3] = {0.0, 0.0, 0.0};
  for (int d = 0; d < dim; ++d) {
    n[d] = grid.n[d];
    if (n[d] < 3 || n[d] % 2 == 0)
      throw std::invalid_argument("simpson_nd: node counts must be odd and >= 3");
    h[d] = (box.hi[d] - box.lo[d]) / (n[d] - 1);
  }

  auto weight = [](int idx, int count) -> double {
    if (idx == 0 || idx == count - 1) return 1.0;
    return (idx % 2 == 1) ? 4.0 : 2.0;
  };
  auto node = [&](int d, int idx) -> double { return box.lo[d] + h[d] * idx; };

  std::vector<double> line(n[2]);
  std::vector<double> line_sums;
  line_sums.reserve(static_cast<std::size_t>(n[0]) * n[1]);
  std::array<double, 3> pt{box.lo[0], box.lo[1], box.lo[2]};
  for (int i = 0; i < n[0]; ++i) {
    if (dim >= 1) pt[0] = node(0, i);
    const double wi = (dim >= 1) ? weight(i, n[0]) : 1.0;
    for (int j = 0; j < n[1]; ++j) {
      if (dim >= 2) pt[1] = node(1, j);
      const double wj = (dim >= 2) ? weight(j, n[1]) : 1.0;
      for (int k = 0; k < n[2]; ++k) {
        if (dim >= 3) pt[2] = node(2, k);
        const double wk = (dim >= 3) ? weight(k, n[2]) : 1.0;
        line[k] = wi * wj * wk * f(pt);
      }
      line_sums.push_back(pairwise_sum(std::span<const double>(line.data(), n[2])));
    }
  }
  double scale = 1.0;
  for (int d = 0; d < dim; ++d) scale *= h[d] / 3.0;
  return scale * pairwise_sum(line_sums);
}

double divergence_residual_fd(const VectorField& field, const BoxDomain& box,
                              const GridSpec& grid, double step) {
  if (!(step > 0.0)) throw std::invalid_argument("divergence step must be positive");
  double worst = 0.0;
  for (int i = 0; i < grid.n[0]; ++i) {
    for (int j = 0; j < grid.n[1]; ++j) {
      for (int k = 0; k < grid.n[2]; ++k) {
        std::array<double, 3> pt;
        const int counts[3] = {grid.n[0], grid.n[1], grid.n[2]};
        const int idx[3] = {i, j, k};
        for (int d = 0; d < 3; ++d) {
          pt[d] = (counts[d] == 1)
                      ? 0.5 * (box.lo[d] + box.hi[d])
                      : box.lo[d] + (box.hi[d] - box.lo[d]) * idx[d] / (counts[d] - 1);
        }
        double div = 0.0;
        for (int d = 0; d < 3; ++d) {
          auto plus = pt, minus = pt;
          plus[d] += step;
          minus[d] -= step;
          div += (field(plus)[d] - field(minus)[d]) / (2.0 * step);
        }
        worst = std::max(worst, std::abs(div));
      }
    }
  }
  return worst;
}

}  // namespace flowbound::oracle
