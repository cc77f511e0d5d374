#ifndef FROBSTAT_LEARNING_HPP
#define FROBSTAT_LEARNING_HPP

#include <vector>

#include "frobstat/curves.hpp"
#include "frobstat/exponential_family.hpp"

namespace frobstat {

enum class LearnMethod { newton, natural_gradient };

struct LearningTrace {
  struct Iterate {
    Vec beta;
    double kl;
  };

  std::vector<Iterate> iterates;
  bool converged = false;
  Vec beta_final;
  Vec eta_target;

  // Intersection diagnostics: e-geodesic beta_init -> beta_final against the
  // projected m-geodesic beta_final -> beta_target.
  int intersections = 0;
  bool coincident = false;
  Curve gamma_plus;
  Curve gamma_minus;
  Curve gamma_minus_projected;
};

// Minimizes K(target || rho_beta) over beta starting from beta_init. Newton
// mode solves g dbeta = eta(beta) - eta* with step halving while KL
// increases; natural-gradient mode takes beta += step g^{-1} (eta(beta) - eta*).
// Iteration also stops once the moments match to 1e-12, so converged runs end
// at machine-precision stationarity rather than at the first KL < tol
// iterate. converged = final KL < tol; exceeding max_iter is not an error.
LearningTrace learn(const ExponentialFamily& family, const ParamPoint& beta_init,
                    const ProbabilityVector& target, LearnMethod method, double step,
                    double tol, int max_iter, double intersection_tol = 1e-6);

// Same, validating a raw probability vector first: non-positive entries or a
// sum away from 1 raise TargetOutsideSimplexInterior.
LearningTrace learn(const ExponentialFamily& family, const ParamPoint& beta_init,
                    const Vec& target, LearnMethod method, double step, double tol,
                    int max_iter, double intersection_tol = 1e-6);

}  // namespace frobstat

#endif
