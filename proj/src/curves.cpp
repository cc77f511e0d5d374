#include "frobstat/curves.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "frobstat/frobenius.hpp"

namespace frobstat {

Curve::Curve(std::vector<double> s_values, std::vector<Vec> point_values)
    : s(std::move(s_values)), points(std::move(point_values)) {
  if (s.size() < 2) throw InvalidArgument("curve needs at least two samples");
  if (s.size() != points.size())
    throw DimensionMismatch("curve: sample count mismatch between s and points");
  if (std::fabs(s.front()) > 1e-15 || std::fabs(s.back() - 1.0) > 1e-15)
    throw InvalidArgument("curve parameter must run from 0 to 1");
  const auto d = points.front().size();
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isfinite(s[i])) throw NonFinite("curve: non-finite parameter value");
    if (i > 0 && s[i] <= s[i - 1])
      throw InvalidArgument("curve parameter must be strictly increasing");
    if (points[i].size() != d) throw DimensionMismatch("curve: dimension changes along samples");
    if (!points[i].allFinite()) throw NonFinite("curve: non-finite sample");
  }
}

namespace {

std::vector<double> uniform_grid(int steps) {
  if (steps < 2) throw InvalidArgument("geodesic needs at least 2 steps");
  std::vector<double> s(steps);
  for (int i = 0; i < steps; ++i) s[i] = static_cast<double>(i) / (steps - 1);
  return s;
}

void require_endpoint(const ExponentialFamily& family, const Vec& beta, const char* name) {
  if (beta.size() != family.n)
    throw DimensionMismatch(std::string(name) + ": length does not match family dimension");
  if (!beta.allFinite()) throw NonFinite(std::string(name) + ": non-finite entry");
}

}  // namespace

Curve e_geodesic(const ExponentialFamily& family, const Vec& beta0, const Vec& beta1,
                 int steps) {
  require_endpoint(family, beta0, "beta0");
  require_endpoint(family, beta1, "beta1");
  std::vector<double> s = uniform_grid(steps);
  std::vector<Vec> points(steps);
  for (int i = 0; i < steps; ++i) points[i] = (1.0 - s[i]) * beta0 + s[i] * beta1;
  return Curve(std::move(s), std::move(points));
}

Curve m_geodesic(const ExponentialFamily& family, const Vec& beta0, const Vec& beta1,
                 int steps) {
  require_endpoint(family, beta0, "beta0");
  require_endpoint(family, beta1, "beta1");
  const Vec eta0 = expectation_params(family, beta0);
  const Vec eta1 = expectation_params(family, beta1);
  std::vector<double> s = uniform_grid(steps);
  std::vector<Vec> points(steps);
  points[0] = beta0;
  for (int i = 1; i < steps; ++i) {
    const Vec eta_s = (1.0 - s[i]) * eta0 + s[i] * eta1;
    // Warm start from the previous sample keeps the Newton steps short.
    points[i] = invert_expectation(family, eta_s, points[i - 1]);
  }
  points[steps - 1] = beta1;
  return Curve(std::move(s), std::move(points));
}

double geodesic_residual(const ExponentialFamily& family, const Curve& curve,
                         double alpha) {
  if (curve.size() < 3)
    throw InvalidArgument("geodesic_residual needs at least 3 samples");
  if (curve.dim() != family.n)
    throw DimensionMismatch("geodesic_residual: curve dimension does not match family");

  double worst = 0.0;
  for (int i = 1; i + 1 < curve.size(); ++i) {
    const double h1 = curve.s[i] - curve.s[i - 1];
    const double h2 = curve.s[i + 1] - curve.s[i];
    const Vec& xm = curve.points[i - 1];
    const Vec& x0 = curve.points[i];
    const Vec& xp = curve.points[i + 1];
    const Vec vel = (xp - xm) / (h1 + h2);
    const Vec acc = 2.0 * (h1 * xp - (h1 + h2) * x0 + h2 * xm) / (h1 * h2 * (h1 + h2));
    const ConnectionField conn = christoffels(family, x0, alpha);
    for (int k = 0; k < family.n; ++k) {
      double r = acc[k];
      for (int i2 = 0; i2 < family.n; ++i2)
        for (int j2 = 0; j2 < family.n; ++j2)
          r += conn.gamma(k, i2, j2) * vel[i2] * vel[j2];
      worst = std::max(worst, std::fabs(r));
    }
  }
  return worst;
}

SplitCurve fiber_split(const Curve& curve_a, const Curve& curve_b) {
  if (curve_a.size() != curve_b.size())
    throw GridMismatch("fiber_split: curves have different sample counts");
  if (curve_a.dim() != curve_b.dim())
    throw GridMismatch("fiber_split: curves have different dimensions");
  for (int i = 0; i < curve_a.size(); ++i)
    if (std::fabs(curve_a.s[i] - curve_b.s[i]) > 1e-15)
      throw GridMismatch("fiber_split: curves are sampled on different grids");

  std::vector<Vec> plus(curve_a.size());
  std::vector<Vec> minus(curve_a.size());
  for (int i = 0; i < curve_a.size(); ++i) {
    plus[i] = curve_a.points[i] + curve_b.points[i];
    minus[i] = curve_a.points[i] - curve_b.points[i];
  }
  return SplitCurve{Curve(curve_a.s, std::move(plus)), Curve(curve_a.s, std::move(minus))};
}

std::pair<Curve, Curve> fiber_unsplit(const SplitCurve& sc) {
  const Curve& p = sc.gamma_plus;
  const Curve& m = sc.gamma_minus;
  if (p.size() != m.size() || p.dim() != m.dim())
    throw GridMismatch("fiber_unsplit: component curves disagree");
  std::vector<Vec> a(p.size());
  std::vector<Vec> b(p.size());
  for (int i = 0; i < p.size(); ++i) {
    a[i] = 0.5 * (p.points[i] + m.points[i]);
    b[i] = 0.5 * (p.points[i] - m.points[i]);
  }
  return {Curve(p.s, std::move(a)), Curve(p.s, std::move(b))};
}

Curve project_curve(const Curve& curve, const ExponentialFamily& family,
                    const Vec& p_ref, const std::vector<int>& axes) {
  require_endpoint(family, p_ref, "p_ref");
  if (curve.dim() != family.n)
    throw DimensionMismatch("project_curve: curve dimension does not match family");

  const int n = family.n;
  std::vector<int> selected = axes;
  if (selected.empty()) {
    selected.resize(n);
    for (int i = 0; i < n; ++i) selected[i] = i;
  }
  std::sort(selected.begin(), selected.end());
  if (std::adjacent_find(selected.begin(), selected.end()) != selected.end())
    throw InvalidArgument("project_curve: repeated axis");
  for (int a : selected)
    if (a < 0 || a >= n) throw InvalidArgument("project_curve: axis out of range");

  // Full chart: the projection is the identity.
  if (static_cast<int>(selected.size()) == n) return curve;

  const MetricTensor metric = fisher_metric(family, p_ref);
  const int k = static_cast<int>(selected.size());
  Mat basis = Mat::Zero(n, k);
  for (int c = 0; c < k; ++c) basis(selected[c], c) = 1.0;
  const Mat gram = basis.transpose() * metric.g * basis;
  const Mat projector = basis * gram.ldlt().solve(basis.transpose() * metric.g);

  std::vector<Vec> points(curve.size());
  for (int i = 0; i < curve.size(); ++i)
    points[i] = p_ref + projector * (curve.points[i] - p_ref);
  return Curve(curve.s, std::move(points));
}

namespace {

// Minimal distance between segments p0-p1 and q0-q1 in R^d.
double segment_distance(const Vec& p0, const Vec& p1, const Vec& q0, const Vec& q1) {
  const Vec d1 = p1 - p0;
  const Vec d2 = q1 - q0;
  const Vec r = p0 - q0;
  const double a = d1.dot(d1);
  const double e = d2.dot(d2);
  const double f = d2.dot(r);
  auto clamp01 = [](double v) { return std::min(1.0, std::max(0.0, v)); };

  double s = 0.0;
  double t = 0.0;
  if (a <= 1e-30 && e <= 1e-30) {
    // Both degenerate to points.
  } else if (a <= 1e-30) {
    t = clamp01(f / e);
  } else {
    const double c = d1.dot(r);
    if (e <= 1e-30) {
      s = clamp01(-c / a);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      if (denom > 1e-30) s = clamp01((b * f - c * e) / denom);
      t = (b * s + f) / e;
      if (t < 0.0) {
        t = 0.0;
        s = clamp01(-c / a);
      } else if (t > 1.0) {
        t = 1.0;
        s = clamp01((b - c) / a);
      }
    }
  }
  return (p0 + s * d1 - (q0 + t * d2)).norm();
}

// Graph-space embedding: sample i becomes (s_i, x_i) in R^{1+n}.
std::vector<Vec> graph_points(const Curve& curve) {
  std::vector<Vec> pts(curve.size());
  for (int i = 0; i < curve.size(); ++i) {
    Vec p(curve.dim() + 1);
    p[0] = curve.s[i];
    p.tail(curve.dim()) = curve.points[i];
    pts[i] = p;
  }
  return pts;
}

}  // namespace

IntersectionResult intersection_count(const Curve& curve_a, const Curve& curve_b,
                                      double tol) {
  if (curve_a.dim() != curve_b.dim())
    throw DimensionMismatch("intersection_count: curves have different dimensions");
  if (tol <= 0.0) throw InvalidArgument("intersection_count: tol must be positive");

  const std::vector<Vec> pa = graph_points(curve_a);
  const std::vector<Vec> pb = graph_points(curve_b);
  const int na = static_cast<int>(pa.size()) - 1;  // segment counts
  const int nb = static_cast<int>(pb.size()) - 1;

  std::vector<std::pair<int, int>> hits;
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < nb; ++j)
      if (segment_distance(pa[i], pa[i + 1], pb[j], pb[j + 1]) < tol)
        hits.emplace_back(i, j);

  // Merge adjacent hits (tangential near-misses span neighboring segment
  // pairs) by counting connected components under 8-neighborhood adjacency.
  const int h = static_cast<int>(hits.size());
  std::vector<int> parent(h);
  for (int i = 0; i < h; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  for (int u = 0; u < h; ++u)
    for (int v = u + 1; v < h; ++v)
      if (std::abs(hits[u].first - hits[v].first) <= 1 &&
          std::abs(hits[u].second - hits[v].second) <= 1)
        parent[find(u)] = find(v);

  int count = 0;
  for (int i = 0; i < h; ++i)
    if (find(i) == i) ++count;

  std::vector<char> seg_a(na, 0);
  std::vector<char> seg_b(nb, 0);
  for (const auto& [i, j] : hits) {
    seg_a[i] = 1;
    seg_b[j] = 1;
  }
  const bool coincident =
      h > 0 && std::count(seg_a.begin(), seg_a.end(), 1) == na &&
      std::count(seg_b.begin(), seg_b.end(), 1) == nb;
  return IntersectionResult{count, coincident};
}

}  // namespace frobstat
