#ifndef FROBSTAT_CUMULANTS_HPP
#define FROBSTAT_CUMULANTS_HPP

#include <vector>

#include "frobstat/exponential_family.hpp"
#include "frobstat/types.hpp"

namespace frobstat {

// Order-n derivative tensor of the log-partition, i.e. the order-n joint
// cumulant tensor of the centered negated statistics. Order 2 is the Fisher
// metric, order 3 the skewness tensor.
struct GwsTensor {
  int order;
  DenseTensor y;
};

// All set partitions of {0..k-1}; each partition is a list of blocks, each
// block an ascending list of element indices. Enumerated via restricted
// growth strings; memoized per k.
const std::vector<std::vector<std::vector<int>>>& set_partitions(int k);

// Moments-to-cumulants over set partitions of the index multiset:
// kappa = sum_pi (-1)^{|pi|-1} (|pi|-1)! prod_B mu_B, with mu_B the central
// moment over the block. Partitions containing singleton blocks are skipped
// (their central-moment factor is exactly zero). order in [2, 6].
GwsTensor gws_tensor(const ExponentialFamily& family, const ParamPoint& beta, int order);

// Full multilinear contraction of yt against one direction vector per slot.
double gws_contract(const GwsTensor& yt, const std::vector<Vec>& vectors);

// |psi(beta0 + delta) - sum_{k=0}^{order_max} (1/k!) Y_k(delta,...,delta)|
// with Y_0 = psi(beta0) and Y_1 = -eta contraction. order_max in [1, 6],
// ||delta|| <= 1.
double expansion_residual(const ExponentialFamily& family, const ParamPoint& beta0,
                          const Vec& delta, int order_max);

}  // namespace frobstat

#endif
