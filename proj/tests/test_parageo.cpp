#include <cmath>

#include <doctest.h>

#include "frobstat/curves.hpp"
#include "frobstat/errors.hpp"
#include "frobstat/frobenius.hpp"
#include "frobstat/paracomplex.hpp"
#include "frobstat/rng.hpp"
#include "support/families.hpp"

using namespace frobstat;
using namespace frobstat::testing;

namespace {
const double kLn3 = std::log(3.0);
}

TEST_CASE("paracomplex unit squares to one exactly") {
  const ParacomplexNumber eps{0.0, 1.0};
  const ParacomplexNumber sq = pc_mul(eps, eps);
  CHECK(sq.re == 1.0);
  CHECK(sq.im == 0.0);

  const ParacomplexNumber a{0.375, -1.25};
  const ParacomplexNumber b{-2.5, 0.0625};
  const ParacomplexNumber ab = pc_mul(a, b);
  const ParacomplexNumber ba = pc_mul(b, a);
  CHECK(ab.re == ba.re);
  CHECK(ab.im == ba.im);
}

TEST_CASE("split diagonalizes the product on dyadic inputs") {
  const ParacomplexNumber a{0.375, -1.25};
  const ParacomplexNumber b{-2.5, 0.0625};
  const ParaSplit sa = split(a);
  const ParaSplit sb = split(b);
  const ParaSplit sab = split(pc_mul(a, b));
  CHECK(sab.plus == sa.plus * sb.plus);
  CHECK(sab.minus == sa.minus * sb.minus);

  const ParacomplexNumber back = unsplit(split(a));
  CHECK(back.re == a.re);
  CHECK(back.im == a.im);
}

TEST_CASE("split and product nearly commute on random inputs") {
  Rng rng(987654321);
  for (int trial = 0; trial < 200; ++trial) {
    const ParacomplexNumber a{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const ParacomplexNumber b{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    const ParaSplit lhs = split(pc_mul(a, b));
    const ParaSplit sa = split(a);
    const ParaSplit sb = split(b);
    CHECK(std::abs(lhs.plus - sa.plus * sb.plus) < 1e-14);
    CHECK(std::abs(lhs.minus - sa.minus * sb.minus) < 1e-14);
    const ParacomplexNumber back = unsplit(split(a));
    CHECK(std::abs(back.re - a.re) < 1e-15);
    CHECK(std::abs(back.im - a.im) < 1e-15);
  }
}

TEST_CASE("curve construction enforces the parameter grid") {
  Vec p0 = vec1(0.0), p1 = vec1(1.0);
  CHECK_NOTHROW(Curve({0.0, 1.0}, {p0, p1}));
  CHECK_THROWS_AS(Curve({0.0}, {p0}), InvalidArgument);
  CHECK_THROWS_AS(Curve({0.1, 1.0}, {p0, p1}), InvalidArgument);
  CHECK_THROWS_AS(Curve({0.0, 0.9}, {p0, p1}), InvalidArgument);
  CHECK_THROWS_AS(Curve({0.0, 0.5, 0.5, 1.0}, {p0, p1, p0, p1}), InvalidArgument);
  CHECK_THROWS_AS(Curve({0.0, 1.0}, {p0, vec2(0.0, 1.0)}), DimensionMismatch);
  Vec bad = vec1(std::nan(""));
  CHECK_THROWS_AS(Curve({0.0, 1.0}, {p0, bad}), NonFinite);
}

TEST_CASE("e-geodesics are straight in natural coordinates") {
  const ExponentialFamily fam = bernoulli();
  const Curve geo = e_geodesic(fam, vec1(0.0), vec1(kLn3), 33);
  CHECK(geo.size() == 33);
  CHECK(geo.points.front()[0] == 0.0);
  CHECK(geo.points.back()[0] == kLn3);
  CHECK(geo.points[16][0] == doctest::Approx(0.5 * kLn3).epsilon(1e-14));
  CHECK(geodesic_residual(fam, geo, -1.0) < 1e-10);
}

TEST_CASE("m-geodesics are straight in expectation coordinates") {
  const ExponentialFamily fam = bernoulli();
  const Curve geo = m_geodesic(fam, vec1(0.0), vec1(kLn3), 33);
  CHECK(geo.points.front()[0] == 0.0);
  CHECK(geo.points.back()[0] == kLn3);
  // eta midpoint (1/2 + 1/4)/2 = 3/8 pulls back to ln(5/3).
  CHECK(geo.points[16][0] == doctest::Approx(std::log(5.0 / 3.0)).epsilon(1e-12));
  // The moment curve is affine: eta(s) interpolates endpoint moments.
  const Vec eta0 = expectation_params(fam, geo.points.front());
  const Vec eta1 = expectation_params(fam, geo.points.back());
  for (int i = 0; i < geo.size(); ++i) {
    const Vec eta = expectation_params(fam, geo.points[i]);
    const double s = geo.s[i];
    CHECK(std::abs(eta[0] - ((1 - s) * eta0[0] + s * eta1[0])) < 1e-12);
  }
  CHECK(geodesic_residual(fam, m_geodesic(fam, vec1(0.0), vec1(kLn3), 1001), 1.0) <
        1e-6);
}

TEST_CASE("geodesic residual separates the two pencil ends") {
  const ExponentialFamily cat = categorical3();
  const Vec b0 = vec2(0.0, 0.0);
  // Span kept moderate: the m-geodesic check discretizes eta-space, and its
  // O(h^2) truncation grows with the fourth derivatives along the path.
  const Vec b1 = vec2(0.6, -0.4);
  const Curve e_geo = e_geodesic(cat, b0, b1, 33);
  const Curve m_geo = m_geodesic(cat, b0, b1, 1001);
  CHECK(geodesic_residual(cat, e_geo, -1.0) < 1e-10);
  CHECK(geodesic_residual(cat, m_geo, 1.0) < 1e-6);
  // Each curve badly violates the opposite equation and the midpoint one.
  CHECK(geodesic_residual(cat, e_geo, 1.0) > 1e-3);
  CHECK(geodesic_residual(cat, m_geo, -1.0) > 1e-3);
  CHECK(geodesic_residual(cat, e_geo, 0.0) > 1e-3);
  CHECK(geodesic_residual(cat, m_geo, 0.0) > 1e-3);
}

TEST_CASE("fiber split and unsplit are inverse gauges") {
  const ExponentialFamily cat = categorical3();
  const Curve a = e_geodesic(cat, vec2(0.0, 0.0), vec2(1.0, 0.5), 9);
  const Curve b = e_geodesic(cat, vec2(0.2, -0.1), vec2(-0.4, 0.3), 9);
  const SplitCurve sc = fiber_split(a, b);
  for (int i = 0; i < a.size(); ++i) {
    CHECK((sc.gamma_plus.points[i] - (a.points[i] + b.points[i])).norm() == 0.0);
    CHECK((sc.gamma_minus.points[i] - (a.points[i] - b.points[i])).norm() == 0.0);
  }
  const auto [ra, rb] = fiber_unsplit(sc);
  for (int i = 0; i < a.size(); ++i) {
    CHECK((ra.points[i] - a.points[i]).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((rb.points[i] - b.points[i]).cwiseAbs().maxCoeff() < 1e-15);
  }

  const Curve short_b = e_geodesic(cat, vec2(0.2, -0.1), vec2(-0.4, 0.3), 5);
  CHECK_THROWS_AS(fiber_split(a, short_b), GridMismatch);
}

TEST_CASE("projection onto the full chart is the identity") {
  const ExponentialFamily cat = categorical3();
  const Curve a = e_geodesic(cat, vec2(0.0, 0.0), vec2(1.0, -0.5), 7);
  const Curve proj = project_curve(a, cat, vec2(0.3, 0.3));
  for (int i = 0; i < a.size(); ++i) {
    CHECK(proj.points[i][0] == a.points[i][0]);
    CHECK(proj.points[i][1] == a.points[i][1]);
  }
}

TEST_CASE("projection onto one axis is metric-orthogonal and idempotent") {
  const ExponentialFamily cat = categorical3();
  const Vec p_ref = vec2(0.4, -0.2);
  const Curve a = e_geodesic(cat, vec2(-0.5, 0.8), vec2(1.2, 0.3), 7);
  const Curve proj = project_curve(a, cat, p_ref, {0});
  const Mat g = fisher_metric(cat, p_ref).g;
  for (int i = 0; i < a.size(); ++i) {
    // Lives on the affine line through p_ref along axis 0.
    CHECK(std::abs(proj.points[i][1] - p_ref[1]) < 1e-14);
    // Residual is g-orthogonal to the axis direction.
    const Vec resid = a.points[i] - proj.points[i];
    CHECK(std::abs((g * resid)[0]) < 1e-12);
  }
  const Curve twice = project_curve(proj, cat, p_ref, {0});
  for (int i = 0; i < a.size(); ++i)
    CHECK((twice.points[i] - proj.points[i]).cwiseAbs().maxCoeff() < 1e-13);

  CHECK_THROWS_AS(project_curve(a, cat, p_ref, {0, 0}), InvalidArgument);
  CHECK_THROWS_AS(project_curve(a, cat, p_ref, {2}), InvalidArgument);
}

TEST_CASE("intersection counting on piecewise-linear graphs") {
  auto line = [](std::initializer_list<double> xs) {
    std::vector<double> s;
    std::vector<Vec> pts;
    const int n = static_cast<int>(xs.size());
    int i = 0;
    for (double x : xs) {
      s.push_back(static_cast<double>(i) / (n - 1));
      pts.push_back(vec1(x));
      ++i;
    }
    return Curve(s, pts);
  };

  // One transversal crossing, away from the sample grid.
  const Curve up = line({0.0, 0.25, 0.5, 0.75, 1.0});
  const Curve down = line({0.9, 0.675, 0.45, 0.225, 0.0});
  const IntersectionResult one = intersection_count(up, down, 1e-9);
  CHECK(one.count == 1);
  CHECK(!one.coincident);

  // Parallel separated graphs never meet.
  const Curve low = line({0.0, 0.0, 0.0});
  const Curve high = line({1.0, 1.0, 1.0});
  const IntersectionResult none = intersection_count(low, high, 1e-6);
  CHECK(none.count == 0);
  CHECK(!none.coincident);

  // Zigzag through zero: three well-separated crossings.
  const Curve zig = line({1.0, 0.5, -0.5, -1.0, -0.5, 0.5, 1.0, 0.5, -0.5});
  const Curve axis = line({0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0});
  const IntersectionResult three = intersection_count(zig, axis, 1e-9);
  CHECK(three.count == 3);
  CHECK(!three.coincident);

  // A curve against itself: one merged event covering everything.
  const IntersectionResult self = intersection_count(zig, zig, 1e-9);
  CHECK(self.count == 1);
  CHECK(self.coincident);
}
