#ifndef FLOWBOUND_NUMERIC_HPP_
#define FLOWBOUND_NUMERIC_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace flowbound::numeric {

// Pairwise (cascade) summation. Deterministic for a fixed input order and
// platform-stable to within a couple of ulps; every quadrature and dot
// product in the oracle paths reduces through this.
double pairwise_sum(std::span<const double> xs);

// Dot product reduced blockwise-pairwise (block 4096, then pairwise over
// block sums). Same reduction order on every call.
double pairwise_dot(std::span<const double> xs, std::span<const double> ys);

// Static-partition parallel map: body(i) for i in [0, n), evaluated on up to
// hardware_concurrency() threads. Caller owns output placement by index, so
// results are independent of the thread schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

// Uniform double in [0,1) from the top 53 bits of a 64-bit generator draw.
// Avoids std::uniform_real_distribution, whose output is
// implementation-defined.
template <class Rng>
double unit_double(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace flowbound::numeric

#endif  // FLOWBOUND_NUMERIC_HPP_
