#ifndef FROBSTAT_CURVES_HPP
#define FROBSTAT_CURVES_HPP

#include <utility>
#include <vector>

#include "frobstat/exponential_family.hpp"
#include "frobstat/types.hpp"

namespace frobstat {

// Sampled curve s -> point in the natural chart; s strictly increasing from
// 0 to 1, at least two samples, constant dimension.
struct Curve {
  std::vector<double> s;
  std::vector<Vec> points;

  Curve(std::vector<double> s_values, std::vector<Vec> point_values);

  int size() const { return static_cast<int>(s.size()); }
  int dim() const { return static_cast<int>(points.front().size()); }
};

// e_pm components of a curve pair, samplewise.
struct SplitCurve {
  Curve gamma_plus;
  Curve gamma_minus;
};

struct IntersectionResult {
  int count = 0;
  bool coincident = false;
};

// Straight line in natural coordinates; geodesic of the pencil end whose
// Christoffels vanish there (alpha = -1 under this sign convention).
Curve e_geodesic(const ExponentialFamily& family, const Vec& beta0, const Vec& beta1,
                 int steps);

// Straight line in expectation coordinates, mapped back to beta by Newton
// inversion per sample; geodesic of the opposite end (alpha = +1).
Curve m_geodesic(const ExponentialFamily& family, const Vec& beta0, const Vec& beta1,
                 int steps);

// max over interior samples of |dd gamma^k + Gamma^(alpha)k_ij dgamma^i dgamma^j|
// with derivatives along s by second-order differences (non-uniform grids
// supported).
double geodesic_residual(const ExponentialFamily& family, const Curve& curve,
                         double alpha);

// Samplewise idempotent split of the pair (a, b) read as a + b eps per axis:
// gamma_plus = a + b, gamma_minus = a - b.
SplitCurve fiber_split(const Curve& curve_a, const Curve& curve_b);

// Inverse of fiber_split: recovers (a, b).
std::pair<Curve, Curve> fiber_unsplit(const SplitCurve& sc);

// Affine projection through p_ref onto the coordinate subspace spanned by
// axes, orthogonal in the Fisher metric at p_ref:
// P(x) = p_ref + B (B^T g B)^{-1} B^T g (x - p_ref).
// Default axes = the full chart, for which the projection is the identity.
Curve project_curve(const Curve& curve, const ExponentialFamily& family,
                    const Vec& p_ref, const std::vector<int>& axes = {});

// Counts crossings of the piecewise-linear graphs (s, x) of the two curves:
// segment pairs closer than tol, with adjacent hits merged into one event.
// coincident is set when every segment of both curves participates in a hit.
IntersectionResult intersection_count(const Curve& curve_a, const Curve& curve_b,
                                      double tol);

}  // namespace frobstat

#endif
