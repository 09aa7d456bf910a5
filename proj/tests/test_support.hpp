#ifndef FLOWBOUND_TESTS_TEST_SUPPORT_HPP_
#define FLOWBOUND_TESTS_TEST_SUPPORT_HPP_

#include <random>

#include "flowbound/geometry.hpp"
#include "flowbound/numeric.hpp"

namespace fbtest {

using flowbound::geometry::ChannelGeometry;
using flowbound::numeric::unit_double;

// Valid geometry with all ordering constraints strict.  L in [0.5, 4].
inline ChannelGeometry random_geometry(std::mt19937_64& rng) {
  ChannelGeometry g;
  g.L = 0.5 + 3.5 * unit_double(rng);
  g.a = g.L * (0.05 + 0.90 * unit_double(rng));
  g.b = g.a * (0.10 + 0.90 * unit_double(rng));
  g.c = g.b * (0.10 + 0.90 * unit_double(rng));
  g.vol_K = 8.0 * g.a * g.b * g.c * (0.02 + 0.98 * unit_double(rng));
  return g;
}

// Cubic-box geometry satisfying the obstacle-volume condition that forces
// the cube-root branch (needs a/L > (3.0355/8)^(1/3) ~ 0.7232).
inline ChannelGeometry random_conda_cube(std::mt19937_64& rng) {
  ChannelGeometry g;
  g.L = 0.5 + 3.5 * unit_double(rng);
  const double a = g.L * (0.76 + 0.22 * unit_double(rng));
  g.a = g.b = g.c = a;
  const double lo = flowbound::geometry::conda_volume_threshold(g.L);
  const double hi = 8.0 * a * a * a;
  g.vol_K = lo + (hi - lo) * (0.05 + 0.90 * unit_double(rng));
  return g;
}

inline const ChannelGeometry kSeedGeometry{1.0, 0.8, 0.8, 0.8, 3.1};

}  // namespace fbtest

#endif  // FLOWBOUND_TESTS_TEST_SUPPORT_HPP_
