#include "frobstat/frobenius.hpp"

#include <cmath>

#include "frobstat/finite_diff.hpp"

namespace frobstat {

MixedTensor mixed_tensor(const MetricTensor& g, const SkewnessTensor& t) {
  const int n = static_cast<int>(g.g.rows());
  if (t.t.dim() != n) throw DimensionMismatch("mixed_tensor: dimension mismatch");
  Tensor3 tbar(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) acc += g.g_inv(k, m) * t.t(i, j, m);
        tbar(k, i, j) = acc;
        tbar(k, j, i) = acc;
      }
  return MixedTensor{std::move(tbar)};
}

Vec circle_product(const Vec& u, const Vec& v, const MixedTensor& tbar) {
  const int n = tbar.t_bar.dim();
  if (u.size() != n || v.size() != n)
    throw DimensionMismatch("circle_product: vector length mismatch");
  Vec out = Vec::Zero(n);
  for (int k = 0; k < n; ++k) {
    double acc = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) acc += tbar.t_bar(k, i, j) * u[i] * v[j];
    out[k] = acc;
  }
  return out;
}

double associativity_residual(const MetricTensor& g, const MixedTensor& tbar) {
  const int n = tbar.t_bar.dim();
  if (g.g.rows() != n) throw DimensionMismatch("associativity_residual: dimension mismatch");
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) {
        double lhs = 0.0;  // g(e_i o e_j, e_l)
        double rhs = 0.0;  // g(e_i, e_j o e_l)
        for (int k = 0; k < n; ++k) {
          lhs += g.g(k, l) * tbar.t_bar(k, i, j);
          rhs += g.g(i, k) * tbar.t_bar(k, j, l);
        }
        worst = std::max(worst, std::fabs(lhs - rhs));
      }
  return worst;
}

ConnectionField christoffels(const ExponentialFamily& family, const ParamPoint& beta,
                             double alpha) {
  const MetricTensor g = fisher_metric(family, beta);
  const SkewnessTensor t = skewness_tensor(family, beta);
  const MixedTensor tbar = mixed_tensor(g, t);
  const int n = family.n;
  Tensor3 gamma(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double v = tbar.t_bar(k, i, j);
        gamma(k, i, j) = 0.5 * v + (0.5 * alpha) * v;
      }
  return ConnectionField{alpha, std::move(gamma)};
}

double metric_compatibility_residual(const ExponentialFamily& family,
                                     const ParamPoint& beta, double alpha, double h) {
  if (h < 1e-6 || h > 1e-2)
    throw InvalidArgument("metric_compatibility_residual: h outside [1e-6, 1e-2]");
  const int n = family.n;
  const MetricTensor g = fisher_metric(family, beta);
  const SkewnessTensor t = skewness_tensor(family, beta);
  const ConnectionField conn = christoffels(family, beta, alpha);

  // Lowered symbols Gamma_{ki,j} = g_jm Gamma^m_{ki}.
  Tensor3 lowered(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double acc = 0.0;
        for (int m = 0; m < n; ++m) acc += g.g(j, m) * conn.gamma(m, k, i);
        lowered(k, i, j) = acc;
      }

  double worst = 0.0;
  Vec shifted = beta;
  for (int k = 0; k < n; ++k) {
    const double b0 = beta[k];
    shifted[k] = b0 + h;
    const Mat g_plus = fisher_metric(family, shifted).g;
    shifted[k] = b0 - h;
    const Mat g_minus = fisher_metric(family, shifted).g;
    shifted[k] = b0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const double dg = (g_plus(i, j) - g_minus(i, j)) / (2.0 * h);
        const double r =
            dg - lowered(k, i, j) - lowered(k, j, i) + alpha * t.t(k, i, j);
        worst = std::max(worst, std::fabs(r));
      }
  }
  return worst;
}

namespace {

// Assembles R from Gamma at the point and its derivatives dgamma[m](l,j,k).
CurvatureTensor assemble_curvature(int n, const Tensor3& gamma,
                                   const std::vector<Tensor3>& dgamma) {
  Tensor4 r(n);
  for (int l = 0; l < n; ++l)
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          double acc = dgamma[i](l, j, k) - dgamma[j](l, i, k);
          for (int m = 0; m < n; ++m)
            acc += gamma(l, i, m) * gamma(m, j, k) - gamma(l, j, m) * gamma(m, i, k);
          r(l, k, i, j) = acc;
        }
  return CurvatureTensor{std::move(r)};
}

}  // namespace

CurvatureTensor curvature(const ExponentialFamily& family, const ParamPoint& beta,
                          double alpha) {
  const int n = family.n;
  const MetricTensor g = fisher_metric(family, beta);
  const SkewnessTensor t = skewness_tensor(family, beta);
  const QuarticCumulant k4 = quartic_cumulant(family, beta);
  const ConnectionField conn = christoffels(family, beta, alpha);
  const double c = 0.5 + 0.5 * alpha;

  // d_m Gamma^l_{jk} = c (d_m g^{la} t_jka + g^{la} kappa4_{mjka}) with
  // d_m g^{-1} = -g^{-1} T_m g^{-1}, (T_m)_{ab} = t_mab.
  std::vector<Tensor3> dgamma(n, Tensor3(n));
  for (int m = 0; m < n; ++m) {
    Mat tm(n, n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) tm(a, b) = t.t(m, a, b);
    const Mat dginv = -(g.g_inv * tm * g.g_inv);
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          double acc = 0.0;
          for (int a = 0; a < n; ++a)
            acc += dginv(l, a) * t.t(j, k, a) + g.g_inv(l, a) * k4.kappa4(m, j, k, a);
          dgamma[m](l, j, k) = c * acc;
        }
  }
  return assemble_curvature(n, conn.gamma, dgamma);
}

CurvatureTensor curvature_fd(const ExponentialFamily& family, const ParamPoint& beta,
                             double alpha, double h) {
  if (h <= 0.0) throw InvalidArgument("curvature_fd: step must be positive");
  const int n = family.n;
  const ConnectionField conn = christoffels(family, beta, alpha);
  std::vector<Tensor3> dgamma(n, Tensor3(n));
  Vec shifted = beta;
  for (int m = 0; m < n; ++m) {
    const double b0 = beta[m];
    shifted[m] = b0 + h;
    const ConnectionField plus = christoffels(family, shifted, alpha);
    shifted[m] = b0 - h;
    const ConnectionField minus = christoffels(family, shifted, alpha);
    shifted[m] = b0;
    for (int l = 0; l < n; ++l)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          dgamma[m](l, j, k) =
              (plus.gamma(l, j, k) - minus.gamma(l, j, k)) / (2.0 * h);
  }
  return assemble_curvature(n, conn.gamma, dgamma);
}

double flatness_residual(const ExponentialFamily& family, const ParamPoint& beta,
                         double alpha) {
  return curvature(family, beta, alpha).r.max_abs();
}

double wdvv_residual(const MetricTensor& g, const SkewnessTensor& t) {
  const int n = t.t.dim();
  if (g.g.rows() != n) throw DimensionMismatch("wdvv_residual: dimension mismatch");

  // lhs(x,y,z,w) = t_xye g^ef t_fzw; the equation compares (a,b|c,d) with (b,c|a,d).
  // The algebra carries a unit (the constant function): on a maximal family the
  // score products satisfy s_a s_b = g_ab 1 + tbar^k_ab s_k, so the unit channel
  // contributes g_ad g_bc - g_ab g_cd between the two associations. Without that
  // term the residual measures det-like products of g, not associativity.
  auto contraction = [&](int x, int y, int z, int w) {
    double acc = 0.0;
    for (int e = 0; e < n; ++e)
      for (int f = 0; f < n; ++f) acc += t.t(x, y, e) * g.g_inv(e, f) * t.t(f, z, w);
    return acc;
  };

  double worst = 0.0;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const double unit_channel =
              g.g(a, d) * g.g(b, c) - g.g(a, b) * g.g(c, d);
          worst = std::max(worst, std::fabs(contraction(a, b, c, d) -
                                            contraction(b, c, a, d) - unit_channel));
        }
  return worst;
}

double potential_consistency(const ExponentialFamily& family, const ParamPoint& beta,
                             double h) {
  if (h < 1e-5 || h > 1e-2)
    throw InvalidArgument("potential_consistency: h outside [1e-5, 1e-2]");
  const SkewnessTensor t = skewness_tensor(family, beta);
  ScalarField psi = [&](const Vec& b) { return log_partition(family, b); };
  double worst = 0.0;
  const int n = family.n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      for (int k = j; k < n; ++k) {
        const double d3 = central_diff(psi, beta, {i, j, k}, h);
        worst = std::max(worst, std::fabs(d3 - t.t(i, j, k)));
      }
  return worst;
}

double hessian_consistency(const ExponentialFamily& family, const ParamPoint& beta,
                           double h) {
  if (h < 1e-6 || h > 1e-2)
    throw InvalidArgument("hessian_consistency: h outside [1e-6, 1e-2]");
  const MetricTensor g = fisher_metric(family, beta);
  ScalarField psi = [&](const Vec& b) { return log_partition(family, b); };
  double worst = 0.0;
  const int n = family.n;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const double d2 = central_diff(psi, beta, {i, j}, h);
      worst = std::max(worst, std::fabs(d2 - g.g(i, j)));
    }
  return worst;
}

}  // namespace frobstat
