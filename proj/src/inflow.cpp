#include "flowbound/inflow.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "flowbound/numeric.hpp"

namespace flowbound::inflow {

namespace {

constexpr double kPi = std::numbers::pi;

using numeric::pairwise_sum;

// First derivative of one sample line, spacing h.  Fourth-order central in
// the interior; boundary layers per `stencil`.
void differentiate_line(const std::vector<double>& f, double h, BoundaryStencil stencil,
                        std::vector<double>& df) {
  const int n = static_cast<int>(f.size());
  df.resize(n);
  const bool fourth = stencil == BoundaryStencil::FourthOrderOneSided && n >= 5;
  if (n < 5) {
    // Degenerate grids: second-order everywhere.
    df[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (int i = 1; i + 1 < n; ++i) df[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    df[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return;
  }
  if (fourth) {
    df[0] = (-25.0 * f[0] + 48.0 * f[1] - 36.0 * f[2] + 16.0 * f[3] - 3.0 * f[4]) /
            (12.0 * h);
    df[1] = (-3.0 * f[0] - 10.0 * f[1] + 18.0 * f[2] - 6.0 * f[3] + f[4]) / (12.0 * h);
    df[n - 2] = (3.0 * f[n - 1] + 10.0 * f[n - 2] - 18.0 * f[n - 3] + 6.0 * f[n - 4] -
                 f[n - 5]) /
                (12.0 * h);
    df[n - 1] = (25.0 * f[n - 1] - 48.0 * f[n - 2] + 36.0 * f[n - 3] - 16.0 * f[n - 4] +
                 3.0 * f[n - 5]) /
                (12.0 * h);
  } else {
    df[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    df[1] = (-3.0 * f[1] + 4.0 * f[2] - f[3]) / (2.0 * h);
    df[n - 2] = (3.0 * f[n - 2] - 4.0 * f[n - 3] + f[n - 4]) / (2.0 * h);
    df[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
  }
  for (int i = 2; i + 2 < n; ++i)
    df[i] = (f[i - 2] - 8.0 * f[i - 1] + 8.0 * f[i + 1] - f[i + 2]) / (12.0 * h);
}

double simpson_weight(int idx, int count) {
  if (idx == 0 || idx == count - 1) return 1.0;
  return (idx % 2 == 1) ? 4.0 : 2.0;
}

// Simpson quadrature of an index-addressed integrand over the closed grid.
template <class Getter>
double simpson2d_indexed(int n_y, int n_z, double h_y, double h_z, Getter&& value) {
  std::vector<double> line(n_z);
  std::vector<double> line_sums;
  line_sums.reserve(static_cast<std::size_t>(n_y));
  for (int i = 0; i < n_y; ++i) {
    const double wi = simpson_weight(i, n_y);
    for (int j = 0; j < n_z; ++j)
      line[j] = wi * simpson_weight(j, n_z) * value(i, j);
    line_sums.push_back(pairwise_sum(line));
  }
  return (h_y / 3.0) * (h_z / 3.0) * pairwise_sum(line_sums);
}

InflowNorms sampled_norms(const SampledInflow& s, const geometry::ChannelGeometry& g,
                          BoundaryStencil stencil) {
  validate_structure(s);
  const int ny = s.n_y, nz = s.n_z;
  const double hy = 2.0 * g.L / (ny - 1);
  const double hz = 2.0 * g.L / (nz - 1);
  const std::size_t count = static_cast<std::size_t>(ny) * nz;

  // Per-component derivatives along y (columns) and z (rows).
  std::array<std::vector<double>, 3> dy, dz;
  for (auto& v : dy) v.assign(count, 0.0);
  for (auto& v : dz) v.assign(count, 0.0);
  std::vector<double> line, dline;
  for (int comp = 0; comp < 3; ++comp) {
    line.resize(nz);
    for (int i = 0; i < ny; ++i) {
      for (int j = 0; j < nz; ++j) line[j] = s.values[i * nz + j][comp];
      differentiate_line(line, hz, stencil, dline);
      for (int j = 0; j < nz; ++j) dz[comp][i * nz + j] = dline[j];
    }
    line.resize(ny);
    for (int j = 0; j < nz; ++j) {
      for (int i = 0; i < ny; ++i) line[i] = s.values[i * nz + j][comp];
      differentiate_line(line, hy, stencil, dline);
      for (int i = 0; i < ny; ++i) dy[comp][i * nz + j] = dline[i];
    }
  }

  auto sq = [](double v) { return v * v; };
  InflowNorms out;
  out.l2 = std::sqrt(simpson2d_indexed(ny, nz, hy, hz, [&](int i, int j) {
    const auto& v = s.values[i * nz + j];
    return sq(v[0]) + sq(v[1]) + sq(v[2]);
  }));
  out.grad_l2 = std::sqrt(simpson2d_indexed(ny, nz, hy, hz, [&](int i, int j) {
    const std::size_t id = static_cast<std::size_t>(i) * nz + j;
    double acc = 0.0;
    for (int comp = 0; comp < 3; ++comp) acc += sq(dy[comp][id]) + sq(dz[comp][id]);
    return acc;
  }));
  out.div_l2 = std::sqrt(simpson2d_indexed(ny, nz, hy, hz, [&](int i, int j) {
    const std::size_t id = static_cast<std::size_t>(i) * nz + j;
    return sq(dy[1][id] + dz[2][id]);
  }));
  return out;
}

}  // namespace

void validate_structure(const SampledInflow& s) {
  if (s.n_y < 3 || s.n_z < 3)
    throw std::invalid_argument("sampled inflow grid too coarse (need n >= 3 per axis)");
  if (s.n_y % 2 == 0 || s.n_z % 2 == 0)
    throw std::invalid_argument("sampled inflow grid sizes must be odd (Simpson)");
  if (s.values.size() != static_cast<std::size_t>(s.n_y) * s.n_z)
    throw std::invalid_argument("sampled inflow value count does not match grid shape");
  for (const auto& v : s.values)
    for (double x : v)
      if (!std::isfinite(x))
        throw std::invalid_argument("sampled inflow contains non-finite values");
}

std::vector<CompatViolation> compatibility_check(const InflowDatum& datum,
                                                 const geometry::ChannelGeometry& g,
                                                 double compat_tol) {
  geometry::ensure_valid(g);
  std::vector<CompatViolation> violations;
  if (std::holds_alternative<AnalyticInflow>(datum)) {
    const auto& an = std::get<AnalyticInflow>(datum);
    if (an.amplitude < 0.0)
      throw std::invalid_argument("analytic inflow amplitude must be >= 0");
    return violations;  // cosine profile vanishes on the face boundary identically
  }
  const auto& s = std::get<SampledInflow>(datum);
  validate_structure(s);
  double max_mag = 0.0;
  for (const auto& v : s.values)
    max_mag = std::max(max_mag,
                       std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]));
  const double threshold = compat_tol * max_mag;
  const double hy = 2.0 * g.L / (s.n_y - 1);
  const double hz = 2.0 * g.L / (s.n_z - 1);
  for (int i = 0; i < s.n_y; ++i) {
    for (int j = 0; j < s.n_z; ++j) {
      const bool boundary = i == 0 || i == s.n_y - 1 || j == 0 || j == s.n_z - 1;
      if (!boundary) continue;
      const auto& v = s.values[i * s.n_z + j];
      const double mag = std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
      if (mag > threshold)
        violations.push_back({i, j, -g.L + hy * i, -g.L + hz * j, mag});
    }
  }
  return violations;
}

InflowNorms inflow_norms(const InflowDatum& datum, const geometry::ChannelGeometry& g,
                         BoundaryStencil stencil) {
  geometry::ensure_valid(g);
  if (std::holds_alternative<AnalyticInflow>(datum)) {
    const double A = std::get<AnalyticInflow>(datum).amplitude;
    if (A < 0.0) throw std::invalid_argument("analytic inflow amplitude must be >= 0");
    // Closed forms: integral of cos^2 over (-L,L) is L per axis, h2 = h3 = 0.
    return InflowNorms{A * g.L, A * kPi / std::sqrt(2.0), 0.0};
  }
  return sampled_norms(std::get<SampledInflow>(datum), g, stencil);
}

double phi_of_h(const InflowNorms& norms, double M,
                const geometry::ChannelGeometry& g) {
  geometry::ensure_valid(g);
  if (!(M > 0.0)) throw std::invalid_argument("phi_of_h requires M > 0");
  return std::sqrt(2.0 * g.L) * ((1.0 + M) / (g.L - g.a) * norms.l2 + norms.grad_l2 +
                                 M * norms.div_l2);
}

std::array<double, 3> analytic_profile(double A, double L, double y, double z) {
  return {A * std::cos(kPi * y / (2.0 * L)) * std::cos(kPi * z / (2.0 * L)), 0.0, 0.0};
}

SampledInflow sample_analytic(double A, const geometry::ChannelGeometry& g, int n_y,
                              int n_z) {
  SampledInflow s;
  s.n_y = n_y;
  s.n_z = n_z;
  s.values.resize(static_cast<std::size_t>(n_y) * n_z);
  const double hy = 2.0 * g.L / (n_y - 1);
  const double hz = 2.0 * g.L / (n_z - 1);
  for (int i = 0; i < n_y; ++i)
    for (int j = 0; j < n_z; ++j)
      s.values[i * n_z + j] = analytic_profile(A, g.L, -g.L + hy * i, -g.L + hz * j);
  validate_structure(s);
  return s;
}

SampledInflow read_sampled_csv(const std::string& path,
                               const geometry::ChannelGeometry& g) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open inflow grid file: " + path);

  std::string header;
  if (!std::getline(in, header))
    throw std::runtime_error(path + ":1: empty inflow grid file");
  {
    std::string stripped;
    for (char ch : header)
      if (!std::isspace(static_cast<unsigned char>(ch))) stripped += ch;
    if (stripped != "y,z,h1,h2,h3")
      throw std::runtime_error(path + ":1: expected header `y,z,h1,h2,h3`, got `" +
                               header + "`");
  }

  std::vector<double> ys, zs;
  std::vector<std::array<double, 3>> values;
  std::string linebuf;
  int lineno = 1;
  while (std::getline(in, linebuf)) {
    ++lineno;
    if (linebuf.empty()) continue;
    std::istringstream row(linebuf);
    double fields[5];
    char comma = ',';
    for (int f = 0; f < 5; ++f) {
      if (!(row >> fields[f]))
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected 5 numeric fields");
      if (f < 4 && !(row >> comma && comma == ','))
        throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                 ": expected comma-separated fields");
    }
    ys.push_back(fields[0]);
    zs.push_back(fields[1]);
    values.push_back({fields[2], fields[3], fields[4]});
  }
  const std::size_t rows = values.size();
  if (rows < 9) throw std::runtime_error(path + ": too few rows for a 3x3 grid");

  // Row-major with y outer: n_z = run length of the leading y value.
  std::size_t n_z = 1;
  while (n_z < rows && ys[n_z] == ys[0]) ++n_z;
  if (n_z < 3 || rows % n_z != 0)
    throw std::runtime_error(path + ": rows do not form a tensor grid");
  const std::size_t n_y = rows / n_z;

  SampledInflow s;
  s.n_y = static_cast<int>(n_y);
  s.n_z = static_cast<int>(n_z);
  s.values = std::move(values);
  validate_structure(s);

  const double tol = 1e-9 * g.L;
  for (std::size_t i = 0; i < n_y; ++i) {
    const double y_expect = -g.L + 2.0 * g.L * static_cast<double>(i) / (n_y - 1);
    for (std::size_t j = 0; j < n_z; ++j) {
      const double z_expect = -g.L + 2.0 * g.L * static_cast<double>(j) / (n_z - 1);
      const std::size_t r = i * n_z + j;
      if (std::abs(ys[r] - y_expect) > tol || std::abs(zs[r] - z_expect) > tol)
        throw std::runtime_error(path + ":" + std::to_string(r + 2) +
                                 ": node does not match the uniform tensor grid");
    }
  }
  return s;
}

}  // namespace flowbound::inflow
