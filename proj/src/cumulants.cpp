#include "frobstat/cumulants.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

namespace frobstat {

const std::vector<std::vector<std::vector<int>>>& set_partitions(int k) {
  if (k < 1 || k > 12) throw OrderOutOfRange("set_partitions: k outside [1, 12]");
  static std::map<int, std::vector<std::vector<std::vector<int>>>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;

  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  std::vector<std::vector<std::vector<int>>> result;
  std::vector<int> a(k, 0);
  while (true) {
    const int blocks = *std::max_element(a.begin(), a.end()) + 1;
    std::vector<std::vector<int>> partition(blocks);
    for (int i = 0; i < k; ++i) partition[a[i]].push_back(i);
    result.push_back(std::move(partition));

    int i = k - 1;
    for (; i > 0; --i) {
      const int cap = 1 + *std::max_element(a.begin(), a.begin() + i);
      if (a[i] < cap) break;
      a[i] = 0;
    }
    if (i == 0) break;
    ++a[i];
  }
  return cache.emplace(k, std::move(result)).first->second;
}

namespace {

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

GwsTensor gws_tensor(const ExponentialFamily& family, const ParamPoint& beta, int order) {
  if (order < 2 || order > 6) throw OrderOutOfRange("gws_tensor: order outside [2, 6]");
  const ProbabilityVector rho = density(family, beta);
  const ScoreMatrix s = score_matrix(family, beta);
  const int n = family.n;
  const auto& partitions = set_partitions(order);

  // Central moment over one block of the index multiset.
  auto block_moment = [&](const std::vector<int>& block, const std::vector<int>& idx) {
    double acc = 0.0;
    for (int w = 0; w < family.omega_size; ++w) {
      double prod = 1.0;
      for (int r : block) prod *= s.d_ell(idx[r], w);
      acc += rho[w] * prod;
    }
    return acc;
  };

  DenseTensor y(order, n);
  std::vector<int> idx(order, 0);
  // Ascending multi-indices only; set_sym mirrors to all permutations.
  while (true) {
    double kappa = 0.0;
    for (const auto& partition : partitions) {
      bool has_singleton = false;
      for (const auto& block : partition)
        if (block.size() == 1) {
          has_singleton = true;
          break;
        }
      if (has_singleton) continue;
      const int blocks = static_cast<int>(partition.size());
      double term = (blocks % 2 == 1 ? 1.0 : -1.0) * factorial(blocks - 1);
      for (const auto& block : partition) term *= block_moment(block, idx);
      kappa += term;
    }
    y.set_sym(idx, kappa);

    int pos = order - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    const int next = idx[pos] + 1;
    for (int r = pos; r < order; ++r) idx[r] = next;
  }
  return GwsTensor{order, std::move(y)};
}

double gws_contract(const GwsTensor& yt, const std::vector<Vec>& vectors) {
  const int order = yt.order;
  const int n = yt.y.dim();
  if (static_cast<int>(vectors.size()) != order)
    throw DimensionMismatch("gws_contract: need one vector per tensor slot");
  for (const Vec& v : vectors)
    if (v.size() != n) throw DimensionMismatch("gws_contract: vector length mismatch");

  double acc = 0.0;
  std::vector<int> idx(order, 0);
  while (true) {
    double prod = yt.y.at(idx);
    for (int r = 0; r < order; ++r) prod *= vectors[r][idx[r]];
    acc += prod;

    int pos = order - 1;
    while (pos >= 0 && idx[pos] == n - 1) {
      idx[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++idx[pos];
  }
  return acc;
}

double expansion_residual(const ExponentialFamily& family, const ParamPoint& beta0,
                          const Vec& delta, int order_max) {
  if (order_max < 1 || order_max > 6)
    throw OrderOutOfRange("expansion_residual: order_max outside [1, 6]");
  if (delta.size() != family.n)
    throw DimensionMismatch("expansion_residual: delta length mismatch");
  if (delta.norm() > 1.0)
    throw InvalidArgument("expansion_residual: ||delta|| must be at most 1");

  const double psi0 = log_partition(family, beta0);
  const double psi1 = log_partition(family, beta0 + delta);
  double series = psi0 - expectation_params(family, beta0).dot(delta);
  for (int k = 2; k <= order_max; ++k) {
    const GwsTensor yk = gws_tensor(family, beta0, k);
    const std::vector<Vec> dirs(k, delta);
    series += gws_contract(yk, dirs) / factorial(k);
  }
  return std::fabs(psi1 - series);
}

}  // namespace frobstat
