#include "frobstat/learning.hpp"

#include <cmath>
#include <string>

namespace frobstat {

LearningTrace learn(const ExponentialFamily& family, const ParamPoint& beta_init,
                    const ProbabilityVector& target, LearnMethod method, double step,
                    double tol, int max_iter, double intersection_tol) {
  if (target.size() != family.omega_size)
    throw DimensionMismatch("learn: target length does not match omega_size");
  if (beta_init.size() != family.n)
    throw DimensionMismatch("learn: beta_init length does not match family dimension");
  if (!beta_init.allFinite()) throw NonFinite("learn: beta_init has non-finite entry");
  if (step <= 0.0) throw InvalidArgument("learn: step must be positive");
  if (tol <= 0.0) throw InvalidArgument("learn: tol must be positive");
  if (max_iter < 0) throw InvalidArgument("learn: max_iter must be non-negative");

  const Vec eta_star = family.stats * target.rho;
  auto kl_at = [&](const Vec& b) { return kl_divergence(target, density(family, b)); };

  std::vector<LearningTrace::Iterate> iterates;
  Vec beta = beta_init;
  double kl = kl_at(beta);
  iterates.push_back({beta, kl});

  for (int it = 0; it < max_iter; ++it) {
    const Vec eta = expectation_params(family, beta);
    if (kl < tol && (eta - eta_star).cwiseAbs().maxCoeff() < 1e-12) break;

    const MetricTensor metric = fisher_metric(family, beta);
    const Vec direction = metric.g_inv * (eta - eta_star);

    if (method == LearnMethod::newton) {
      Vec d = direction;
      bool accepted = false;
      Vec cand;
      double kl_cand = 0.0;
      for (int halving = 0; halving < 60; ++halving) {
        cand = beta + d;
        if (cand.allFinite()) {
          kl_cand = kl_at(cand);
          if (kl_cand <= kl) {
            accepted = true;
            break;
          }
        }
        d *= 0.5;
      }
      // No decreasing step exists: already at the numeric optimum.
      if (!accepted) break;
      beta = cand;
      kl = kl_cand;
    } else {
      beta = beta + step * direction;
      if (!beta.allFinite()) throw NonFinite("learn: natural-gradient step diverged");
      kl = kl_at(beta);
    }
    iterates.push_back({beta, kl});
  }

  const bool converged = kl < tol;
  const Vec beta_target = invert_expectation(family, eta_star, beta);

  Curve gamma_plus = e_geodesic(family, beta_init, beta, 33);
  Curve gamma_minus = m_geodesic(family, beta, beta_target, 33);
  Curve projected = project_curve(gamma_minus, family, beta);
  const IntersectionResult isect =
      intersection_count(gamma_plus, projected, intersection_tol);

  return LearningTrace{std::move(iterates), converged,       beta,
                       eta_star,            isect.count,     isect.coincident,
                       std::move(gamma_plus), std::move(gamma_minus),
                       std::move(projected)};
}

LearningTrace learn(const ExponentialFamily& family, const ParamPoint& beta_init,
                    const Vec& target, LearnMethod method, double step, double tol,
                    int max_iter, double intersection_tol) {
  if (target.size() != family.omega_size)
    throw DimensionMismatch("learn: target length does not match omega_size");
  for (int w = 0; w < target.size(); ++w)
    if (!(target[w] > 0.0))
      throw TargetOutsideSimplexInterior("learn: target entry " + std::to_string(w) +
                                         " is not strictly positive");
  if (std::fabs(target.sum() - 1.0) > 1e-12)
    throw TargetOutsideSimplexInterior("learn: target does not sum to 1");
  return learn(family, beta_init, ProbabilityVector(target), method, step, tol,
               max_iter, intersection_tol);
}

}  // namespace frobstat
