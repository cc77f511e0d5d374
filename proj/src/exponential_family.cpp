#include "frobstat/exponential_family.hpp"

#include <cmath>
#include <string>

namespace frobstat {

namespace {

void require_finite(const Mat& m, const char* what) {
  if (!m.allFinite()) throw NonFinite(std::string(what) + ": non-finite entry");
}

void require_point(const ExponentialFamily& family, const ParamPoint& beta) {
  if (beta.size() != family.n)
    throw DimensionMismatch("beta has length " + std::to_string(beta.size()) +
                            ", family has n = " + std::to_string(family.n));
  if (!beta.allFinite()) throw NonFinite("beta: non-finite entry");
}

// -beta.X per atom, the unnormalized log-weights.
Vec log_weights(const ExponentialFamily& family, const ParamPoint& beta) {
  return -(family.stats.transpose() * beta);
}

}  // namespace

ExponentialFamily build_family(int omega_size, const Mat& stats) {
  if (omega_size < 2) throw DimensionMismatch("omega_size must be at least 2");
  const int n = static_cast<int>(stats.rows());
  if (n < 1) throw DimensionMismatch("stats must have at least one row");
  if (static_cast<int>(stats.cols()) != omega_size)
    throw DimensionMismatch("stats has " + std::to_string(stats.cols()) +
                            " columns, omega_size is " + std::to_string(omega_size));
  require_finite(stats, "stats");

  // Minimal parametrization: [1; stats] must have full row rank n+1.
  Mat extended(n + 1, omega_size);
  extended.row(0).setOnes();
  extended.bottomRows(n) = stats;
  Eigen::JacobiSVD<Mat> svd(extended);
  const Vec& sigma = svd.singularValues();
  const double smax = sigma(0);
  const double smin = sigma(sigma.size() - 1);
  if (n + 1 > omega_size || smin <= 1e-12 * smax)
    throw RankDeficient("stat rows plus the constant row are linearly dependent");

  return ExponentialFamily{omega_size, n, stats};
}

double log_partition(const ExponentialFamily& family, const ParamPoint& beta) {
  require_point(family, beta);
  const Vec a = log_weights(family, beta);
  const double amax = a.maxCoeff();
  double acc = 0.0;
  for (int w = 0; w < family.omega_size; ++w) acc += std::exp(a[w] - amax);
  const double psi = amax + std::log(acc);
  if (!std::isfinite(psi)) throw NonFinite("log_partition overflow");
  return psi;
}

ProbabilityVector density(const ExponentialFamily& family, const ParamPoint& beta) {
  const double psi = log_partition(family, beta);
  const Vec a = log_weights(family, beta);
  Vec rho(family.omega_size);
  for (int w = 0; w < family.omega_size; ++w) rho[w] = std::exp(a[w] - psi);
  return ProbabilityVector(std::move(rho));
}

ProbabilityVector::ProbabilityVector(Vec values) : rho(std::move(values)) {
  if (rho.size() < 1) throw InvalidArgument("probability vector is empty");
  if (!rho.allFinite()) throw NonFinite("probability vector: non-finite entry");
  for (int w = 0; w < rho.size(); ++w)
    if (rho[w] <= 0.0)
      throw InvalidArgument("probability vector entry " + std::to_string(w) +
                            " is not strictly positive");
  if (std::fabs(rho.sum() - 1.0) > 1e-12)
    throw InvalidArgument("probability vector does not sum to 1");
}

ScoreMatrix score_matrix(const ExponentialFamily& family, const ParamPoint& beta) {
  const ProbabilityVector rho = density(family, beta);
  const Vec eta = family.stats * rho.rho;
  Mat d_ell(family.n, family.omega_size);
  for (int i = 0; i < family.n; ++i)
    for (int w = 0; w < family.omega_size; ++w)
      d_ell(i, w) = eta[i] - family.stats(i, w);
  return ScoreMatrix{std::move(d_ell)};
}

MetricTensor fisher_metric(const ExponentialFamily& family, const ParamPoint& beta) {
  const ProbabilityVector rho = density(family, beta);
  const ScoreMatrix s = score_matrix(family, beta);
  const int n = family.n;
  Mat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      double acc = 0.0;
      for (int w = 0; w < family.omega_size; ++w)
        acc += rho[w] * (s.d_ell(i, w) * s.d_ell(j, w));
      g(i, j) = acc;
      g(j, i) = acc;
    }
  }

  Eigen::SelfAdjointEigenSolver<Mat> eig(g);
  const Vec& lambda = eig.eigenvalues();
  const double lmin = lambda(0);
  const double lmax = lambda(n - 1);
  if (lmin <= 0.0 || lmax / lmin > 1e12)
    throw SingularMetric("Fisher metric condition number exceeds 1e12");
  const Mat g_inv =
      eig.eigenvectors() * lambda.cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
  return MetricTensor{std::move(g), std::move(g_inv)};
}

SkewnessTensor skewness_tensor(const ExponentialFamily& family, const ParamPoint& beta) {
  const ProbabilityVector rho = density(family, beta);
  const ScoreMatrix s = score_matrix(family, beta);
  const int n = family.n;
  Tensor3 t(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        double acc = 0.0;
        for (int w = 0; w < family.omega_size; ++w)
          acc += rho[w] * (s.d_ell(i, w) * s.d_ell(j, w) * s.d_ell(k, w));
        t.set_sym(i, j, k, acc);
      }
    }
  }
  return SkewnessTensor{std::move(t)};
}

QuarticCumulant quartic_cumulant(const ExponentialFamily& family, const ParamPoint& beta) {
  const ProbabilityVector rho = density(family, beta);
  const ScoreMatrix s = score_matrix(family, beta);
  const MetricTensor metric = fisher_metric(family, beta);
  const int n = family.n;
  Tensor4 kappa(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        for (int l = k; l < n; ++l) {
          double mu4 = 0.0;
          for (int w = 0; w < family.omega_size; ++w)
            mu4 += rho[w] *
                   (s.d_ell(i, w) * s.d_ell(j, w) * s.d_ell(k, w) * s.d_ell(l, w));
          const double v = mu4 - metric.g(i, j) * metric.g(k, l) -
                           metric.g(i, k) * metric.g(j, l) -
                           metric.g(i, l) * metric.g(j, k);
          kappa.set_sym(i, j, k, l, v);
        }
      }
    }
  }
  return QuarticCumulant{std::move(kappa)};
}

Vec expectation_params(const ExponentialFamily& family, const ParamPoint& beta) {
  const ProbabilityVector rho = density(family, beta);
  return family.stats * rho.rho;
}

Vec invert_expectation(const ExponentialFamily& family, const Vec& eta,
                       const Vec& beta_init) {
  if (eta.size() != family.n)
    throw DimensionMismatch("eta has length " + std::to_string(eta.size()) +
                            ", family has n = " + std::to_string(family.n));
  if (!eta.allFinite()) throw NonFinite("eta: non-finite entry");
  require_point(family, beta_init);

  Vec beta = beta_init;
  Vec gap = expectation_params(family, beta) - eta;
  for (int it = 0; it < 200; ++it) {
    if (gap.cwiseAbs().maxCoeff() < 1e-14) return beta;
    const MetricTensor metric = fisher_metric(family, beta);
    // d eta / d beta = -g, so the Newton step for eta(beta) = eta is
    // beta += g^{-1} (eta(beta) - eta).
    Vec step = metric.g_inv * gap;
    Vec cand;
    Vec cand_gap;
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving) {
      cand = beta + step;
      if (cand.allFinite()) {
        cand_gap = expectation_params(family, cand) - eta;
        if (cand_gap.cwiseAbs().maxCoeff() <= gap.cwiseAbs().maxCoeff()) {
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) throw NewtonDivergence("expectation inversion stalled");
    beta = cand;
    gap = cand_gap;
  }
  if (gap.cwiseAbs().maxCoeff() < 1e-10) return beta;
  throw NewtonDivergence("expectation inversion did not converge");
}

double dual_potential(const ExponentialFamily& family, const ParamPoint& beta) {
  const double psi = log_partition(family, beta);
  const Vec eta = expectation_params(family, beta);
  return -beta.dot(eta) - psi;
}

double kl_divergence(const ProbabilityVector& rho_p, const ProbabilityVector& rho_q) {
  if (rho_p.size() != rho_q.size())
    throw DimensionMismatch("kl_divergence: probability vectors differ in length");
  double acc = 0.0;
  for (int w = 0; w < rho_p.size(); ++w)
    acc += rho_p[w] * (std::log(rho_p[w]) - std::log(rho_q[w]));
  return acc;
}

}  // namespace frobstat
