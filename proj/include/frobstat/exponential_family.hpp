#ifndef FROBSTAT_EXPONENTIAL_FAMILY_HPP
#define FROBSTAT_EXPONENTIAL_FAMILY_HPP

#include "frobstat/types.hpp"

namespace frobstat {

// Finite discrete exponential family rho_beta(w) = exp(-beta.X(w) - psi(beta))
// over omega_size atoms, with sufficient statistics X stored row-wise in an
// n x omega_size matrix. Minimality: the stat rows together with the constant
// row must be linearly independent.
struct ExponentialFamily {
  int omega_size;
  int n;
  Mat stats;
};

// Validates dimensions, finiteness, and the rank of [1; stats].
ExponentialFamily build_family(int omega_size, const Mat& stats);

// psi(beta) = ln sum_w exp(-beta.X(w)), evaluated with max-subtraction.
double log_partition(const ExponentialFamily& family, const ParamPoint& beta);

ProbabilityVector density(const ExponentialFamily& family, const ParamPoint& beta);

// d_i ell(w) = -X_i(w) + E[X_i]; rows are centered under the density.
ScoreMatrix score_matrix(const ExponentialFamily& family, const ParamPoint& beta);

// g_ij = sum_w rho(w) d_i ell(w) d_j ell(w), the covariance of X.
MetricTensor fisher_metric(const ExponentialFamily& family, const ParamPoint& beta);

// t_ijk = sum_w rho(w) d_i ell d_j ell d_k ell = -(third central moment of X).
SkewnessTensor skewness_tensor(const ExponentialFamily& family, const ParamPoint& beta);

// kappa4_ijkl = mu4_ijkl - g_ij g_kl - g_ik g_jl - g_il g_jk, the fourth
// derivative of psi; needed for exact curvature.
QuarticCumulant quartic_cumulant(const ExponentialFamily& family, const ParamPoint& beta);

// eta_i = E[X_i] = -d psi / d beta_i.
Vec expectation_params(const ExponentialFamily& family, const ParamPoint& beta);

// Newton inversion of expectation_params: finds beta with eta(beta) = eta.
// eta must lie in the interior of the convex hull of the stat columns.
Vec invert_expectation(const ExponentialFamily& family, const Vec& eta,
                       const Vec& beta_init);

// Legendre dual value phi(eta) = -beta.eta - psi(beta), equal to the negative
// Shannon entropy sum rho ln rho; satisfies psi + phi + beta.eta = 0.
double dual_potential(const ExponentialFamily& family, const ParamPoint& beta);

// K(p||q) = sum_w p(w) (ln p(w) - ln q(w)).
double kl_divergence(const ProbabilityVector& rho_p, const ProbabilityVector& rho_q);

}  // namespace frobstat

#endif
