#ifndef FROBSTAT_FROBENIUS_HPP
#define FROBSTAT_FROBENIUS_HPP

#include "frobstat/exponential_family.hpp"
#include "frobstat/types.hpp"

namespace frobstat {

// t_bar(k,i,j) = sum_m g^{km} t_{ijm}.
MixedTensor mixed_tensor(const MetricTensor& g, const SkewnessTensor& t);

// (u o v)^k = sum_ij t_bar(k,i,j) u^i v^j; commutative.
Vec circle_product(const Vec& u, const Vec& v, const MixedTensor& tbar);

// max over basis triples of |g(e_i o e_j, e_l) - g(e_i, e_j o e_l)|.
double associativity_residual(const MetricTensor& g, const MixedTensor& tbar);

// Gamma^(alpha)k_ij = ((1+alpha)/2) t_bar(k,i,j) in natural coordinates.
// Written as the two-term sum 0.5 v + (0.5 alpha) v so that alpha = -1 gives
// exact zeros and the pencil identity Gamma(alpha) = Gamma(0) + (alpha/2) t_bar
// is bitwise.
ConnectionField christoffels(const ExponentialFamily& family, const ParamPoint& beta,
                             double alpha);

// max |d_k g_ij - Gamma_{ki,j} - Gamma_{kj,i} + alpha t_kij| with the metric
// derivative taken by central differences of step h; the alpha-connection
// satisfies nabla^alpha g = -alpha t, so this vanishes for every alpha.
double metric_compatibility_residual(const ExponentialFamily& family,
                                     const ParamPoint& beta, double alpha, double h);

// R^l_{kij} = d_i Gamma^l_{jk} - d_j Gamma^l_{ik}
//           + Gamma^l_{im} Gamma^m_{jk} - Gamma^l_{jm} Gamma^m_{ik},
// with the Christoffel derivatives in closed form:
// d_m g^{-1} = -g^{-1} T_m g^{-1} and d_m t_ijl = kappa4_{mijl}.
CurvatureTensor curvature(const ExponentialFamily& family, const ParamPoint& beta,
                          double alpha);

// Same contraction with d Gamma by central differences over beta; cross-check
// oracle for the closed form.
CurvatureTensor curvature_fd(const ExponentialFamily& family, const ParamPoint& beta,
                             double alpha, double h = 1e-4);

// max absolute curvature component.
double flatness_residual(const ExponentialFamily& family, const ParamPoint& beta,
                         double alpha);

// max over (a,b,c,d) of |t_abe g^ef t_fcd - t_bce g^ef t_fad - g_ad g_bc + g_ab g_cd|;
// the metric terms are the unit channel of the score algebra. Vanishes identically
// on maximal families (omega_size == n + 1); not an identity on thinner ones, where
// score products leave the span of scores and constants.
double wdvv_residual(const MetricTensor& g, const SkewnessTensor& t);

// max over index triples of |third central difference of psi - t_ijk|.
double potential_consistency(const ExponentialFamily& family, const ParamPoint& beta,
                             double h);

// max over index pairs of |second central difference of psi - g_ij|.
double hessian_consistency(const ExponentialFamily& family, const ParamPoint& beta,
                           double h);

}  // namespace frobstat

#endif
