#include "flowbound/numeric.hpp"

#include <algorithm>
#include <thread>

namespace flowbound::numeric {

namespace {

double pairwise_sum_impl(const double* xs, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += xs[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum_impl(xs, half) + pairwise_sum_impl(xs + half, n - half);
}

}  // namespace

double pairwise_sum(std::span<const double> xs) {
  return pairwise_sum_impl(xs.data(), xs.size());
}

double pairwise_dot(std::span<const double> xs, std::span<const double> ys) {
  constexpr std::size_t kBlock = 4096;
  const std::size_t n = xs.size();
  std::vector<double> block_sums;
  block_sums.reserve(n / kBlock + 1);
  for (std::size_t start = 0; start < n; start += kBlock) {
    const std::size_t end = std::min(start + kBlock, n);
    double s = 0.0;
    for (std::size_t i = start; i < end; ++i) s += xs[i] * ys[i];
    block_sums.push_back(s);
  }
  return pairwise_sum(block_sums);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += workers) body(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace flowbound::numeric
