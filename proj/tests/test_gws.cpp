#include <cmath>
#include <set>

#include <doctest.h>

#include "frobstat/cumulants.hpp"
#include "frobstat/errors.hpp"
#include "frobstat/finite_diff.hpp"
#include "support/families.hpp"

using namespace frobstat;
using namespace frobstat::testing;

TEST_CASE("set partitions enumerate the Bell numbers") {
  const int bell[] = {0, 1, 2, 5, 15, 52, 203};
  for (int k = 1; k <= 6; ++k) {
    const auto& parts = set_partitions(k);
    CHECK(static_cast<int>(parts.size()) == bell[k]);
    for (const auto& partition : parts) {
      std::set<int> seen;
      for (const auto& block : partition) {
        CHECK(!block.empty());
        for (size_t r = 1; r < block.size(); ++r) CHECK(block[r - 1] < block[r]);
        seen.insert(block.begin(), block.end());
      }
      CHECK(static_cast<int>(seen.size()) == k);
    }
  }
  CHECK_THROWS_AS(set_partitions(0), OrderOutOfRange);
  CHECK_THROWS_AS(set_partitions(13), OrderOutOfRange);
}

TEST_CASE("orders two and three reproduce the metric and skewness") {
  const ExponentialFamily cat = categorical3();
  const Vec beta = vec2(0.45, -0.3);
  const GwsTensor y2 = gws_tensor(cat, beta, 2);
  const GwsTensor y3 = gws_tensor(cat, beta, 3);
  const MetricTensor g = fisher_metric(cat, beta);
  const SkewnessTensor t = skewness_tensor(cat, beta);

  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(y2.y.at({i, j}) == g.g(i, j));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) CHECK(y3.y.at({i, j, k}) == t.t(i, j, k));
}

TEST_CASE("order four has the exact dyadic value at the symmetric point") {
  const ExponentialFamily fam = bernoulli();
  const GwsTensor y4 = gws_tensor(fam, vec1(0.0), 4);
  // kappa4 of a fair coin statistic: 1/16 - 3 (1/4)^2 = -1/8, all dyadic.
  CHECK(y4.y.at({0, 0, 0, 0}) == -0.125);

  const QuarticCumulant k4 = quartic_cumulant(fam, vec1(0.0));
  CHECK(k4.kappa4(0, 0, 0, 0) == -0.125);

  // Order five vanishes at the symmetric point, order six is 1/4.
  CHECK(gws_tensor(fam, vec1(0.0), 5).y.at({0, 0, 0, 0, 0}) == 0.0);
  CHECK(gws_tensor(fam, vec1(0.0), 6).y.at({0, 0, 0, 0, 0, 0}) == 0.25);
}

TEST_CASE("order four matches the pairing formula everywhere") {
  const ExponentialFamily cat = categorical3();
  const Vec beta = vec2(0.8, 0.2);
  const GwsTensor y4 = gws_tensor(cat, beta, 4);
  const QuarticCumulant k4 = quartic_cumulant(cat, beta);
  double gap = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d)
          gap = std::max(gap, std::abs(y4.y.at({a, b, c, d}) - k4.kappa4(a, b, c, d)));
  CHECK(gap < 1e-15);
}

TEST_CASE("cumulants are derivatives of the log partition") {
  const ExponentialFamily fam = bernoulli();
  const ScalarField psi = [&](const Vec& b) { return log_partition(fam, b); };
  const Vec beta = vec1(0.0);

  // Fourth derivative needs one Richardson level to get under 1e-6.
  const double d4 = central_diff_richardson(psi, beta, {0, 0, 0, 0}, 1e-2);
  CHECK(std::abs(d4 - (-0.125)) < 1e-6);

  // Orders five and six against plain differences, loose scale-aware bounds.
  const double d5 = central_diff_richardson(psi, beta, {0, 0, 0, 0, 0}, 2e-2);
  CHECK(std::abs(d5 - gws_tensor(fam, beta, 5).y.at({0, 0, 0, 0, 0})) < 1e-4);
  const double d6 = central_diff_richardson(psi, beta, {0, 0, 0, 0, 0, 0}, 3e-2);
  CHECK(std::abs(d6 - gws_tensor(fam, beta, 6).y.at({0, 0, 0, 0, 0, 0})) < 1e-2);

  // Mixed fourth derivative on two parameters.
  const ExponentialFamily cat = categorical3();
  const ScalarField psic = [&](const Vec& b) { return log_partition(cat, b); };
  const Vec bc = vec2(0.3, -0.2);
  const double dm = central_diff_richardson(psic, bc, {0, 0, 1, 1}, 1e-2);
  CHECK(std::abs(dm - gws_tensor(cat, bc, 4).y.at({0, 0, 1, 1})) < 1e-6);
}

TEST_CASE("tensors are symmetric under index permutations") {
  const ExponentialFamily cat = categorical3();
  const Vec beta = vec2(-0.5, 0.9);
  const GwsTensor y5 = gws_tensor(cat, beta, 5);
  CHECK(y5.y.at({0, 1, 0, 1, 1}) == y5.y.at({1, 1, 1, 0, 0}));
  CHECK(y5.y.at({0, 0, 0, 1, 0}) == y5.y.at({1, 0, 0, 0, 0}));
}

TEST_CASE("contraction folds every slot") {
  const ExponentialFamily fam = bernoulli();
  const GwsTensor y4 = gws_tensor(fam, vec1(0.0), 4);
  Vec one(1);
  one << 1.0;
  CHECK(gws_contract(y4, {one, one, one, one}) == -0.125);
  Vec two(1);
  two << 2.0;
  CHECK(gws_contract(y4, {two, one, one, one}) == -0.25);
  CHECK_THROWS_AS(gws_contract(y4, {one, one, one}), DimensionMismatch);
  Vec wide(2);
  wide << 1.0, 1.0;
  CHECK_THROWS_AS(gws_contract(y4, {wide, one, one, one}), DimensionMismatch);

  // Contracting order two against basis vectors reads off the metric.
  const ExponentialFamily cat = categorical3();
  const Vec beta = vec2(0.1, 0.4);
  const GwsTensor y2 = gws_tensor(cat, beta, 2);
  Vec e0 = Vec::Zero(2), e1 = Vec::Zero(2);
  e0[0] = 1.0;
  e1[1] = 1.0;
  CHECK(gws_contract(y2, {e0, e1}) == fisher_metric(cat, beta).g(0, 1));
}

TEST_CASE("order bounds are enforced") {
  const ExponentialFamily fam = bernoulli();
  CHECK_THROWS_AS(gws_tensor(fam, vec1(0.0), 1), OrderOutOfRange);
  CHECK_THROWS_AS(gws_tensor(fam, vec1(0.0), 7), OrderOutOfRange);
}

TEST_CASE("truncated expansions tighten with order") {
  const ExponentialFamily cat = categorical3();
  const Vec beta = vec2(0.2, -0.1);
  const Vec delta = vec2(0.15, -0.1);
  double prev = expansion_residual(cat, beta, delta, 1);
  for (int order = 2; order <= 6; ++order) {
    const double res = expansion_residual(cat, beta, delta, order);
    CHECK(res < prev);
    prev = res;
  }
  CHECK(prev < 1e-8);

  Vec big = vec2(2.0, 0.0);
  CHECK_THROWS_AS(expansion_residual(cat, beta, big, 4), InvalidArgument);
  CHECK_THROWS_AS(expansion_residual(cat, beta, delta, 0), OrderOutOfRange);
  CHECK_THROWS_AS(expansion_residual(cat, beta, delta, 7), OrderOutOfRange);
}
