#ifndef FROBSTAT_TYPES_HPP
#define FROBSTAT_TYPES_HPP

#include <Eigen/Dense>

#include "frobstat/errors.hpp"
#include "frobstat/tensor.hpp"

namespace frobstat {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

// Natural parameters beta. Operations validate finiteness on entry.
using ParamPoint = Vec;

// Strictly positive per-atom probabilities summing to 1 within 1e-12.
struct ProbabilityVector {
  Vec rho;

  explicit ProbabilityVector(Vec values);

  int size() const { return static_cast<int>(rho.size()); }
  double operator[](int w) const { return rho[w]; }
};

// Row i holds the score d_i ell(omega) over atoms; each row has zero mean
// under the density it was computed at.
struct ScoreMatrix {
  Mat d_ell;
};

// Fisher metric with its inverse. Built by fisher_metric, which rejects
// badly conditioned points; the inverse comes from the eigendecomposition
// and is symmetric by construction.
struct MetricTensor {
  Mat g;
  Mat g_inv;
};

struct SkewnessTensor {
  Tensor3 t;
};

// Fourth derivative tensor of the log-partition (fourth joint cumulant).
struct QuarticCumulant {
  Tensor4 kappa4;
};

// t with the first index raised: t_bar(k,i,j) = g^{km} t_{ijm}.
struct MixedTensor {
  Tensor3 t_bar;
};

// Christoffel coefficients gamma(k,i,j) = Gamma^k_ij of the alpha-connection
// at one parameter point, in natural coordinates.
struct ConnectionField {
  double alpha;
  Tensor3 gamma;
};

// r(l,k,i,j) = R^l_{kij}; antisymmetric in the last two slots.
struct CurvatureTensor {
  Tensor4 r;
};

}  // namespace frobstat

#endif
