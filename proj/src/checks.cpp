#include "frobstat/checks.hpp"

#include <cmath>

#include "frobstat/cumulants.hpp"
#include "frobstat/frobenius.hpp"

namespace frobstat {

namespace {

CheckItem make_item(std::string name, double value, double threshold,
                    std::string relation) {
  CheckItem item;
  item.name = std::move(name);
  item.value = value;
  item.threshold = threshold;
  item.relation = std::move(relation);
  item.passed = item.relation == "<" ? value < threshold : value > threshold;
  return item;
}

CheckItem make_skipped(std::string name, double value, std::string note) {
  CheckItem item;
  item.name = std::move(name);
  item.value = value;
  item.status = "skipped";
  item.passed = true;
  item.note = std::move(note);
  return item;
}

double tensor_gap(const DenseTensor& y, const Tensor3& t) {
  double worst = 0.0;
  const int n = t.dim();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::fabs(y.at({i, j, k}) - t(i, j, k)));
  return worst;
}

double matrix_gap(const DenseTensor& y, const Mat& g) {
  double worst = 0.0;
  const int n = static_cast<int>(g.rows());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      worst = std::max(worst, std::fabs(y.at({i, j}) - g(i, j)));
  return worst;
}

}  // namespace

CheckReport run_check_suite(const ExponentialFamily& family, const ParamPoint& beta,
                            const CheckOptions& options) {
  CheckReport report;
  const int n = family.n;

  const MetricTensor g = fisher_metric(family, beta);
  const SkewnessTensor t = skewness_tensor(family, beta);
  const MixedTensor tbar = mixed_tensor(g, t);

  Eigen::SelfAdjointEigenSolver<Mat> eig(g.g);
  report.items.push_back(
      make_item("metric_positive_definite", eig.eigenvalues()(0), 0.0, ">"));

  const ProbabilityVector rho = density(family, beta);
  const ScoreMatrix scores = score_matrix(family, beta);
  double centering = 0.0;
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int w = 0; w < family.omega_size; ++w) acc += rho[w] * scores.d_ell(i, w);
    centering = std::max(centering, std::fabs(acc));
  }
  report.items.push_back(make_item("score_centering", centering, 1e-12, "<"));

  report.items.push_back(make_item("associativity", associativity_residual(g, tbar),
                                   options.tol_algebraic, "<"));
  if (family.omega_size == n + 1) {
    report.items.push_back(
        make_item("wdvv", wdvv_residual(g, t), options.tol_algebraic, "<"));
  } else {
    report.items.push_back(make_skipped("wdvv", wdvv_residual(g, t),
                                        "family is not maximal (omega_size > n+1)"));
  }
  report.items.push_back(
      make_item("potential_consistency",
                potential_consistency(family, beta, options.h_third),
                options.tol_numeric, "<"));

  for (double alpha : {-1.0, 0.0, 1.0}) {
    const std::string suffix = alpha < 0 ? "-1" : (alpha > 0 ? "+1" : "0");
    report.items.push_back(
        make_item("metric_compatibility_alpha_" + suffix,
                  metric_compatibility_residual(family, beta, alpha, options.h),
                  options.tol_numeric, "<"));
  }

  report.items.push_back(make_item(
      "flatness_alpha_-1", flatness_residual(family, beta, -1.0), 1e-10, "<"));
  report.items.push_back(make_item(
      "flatness_alpha_+1", flatness_residual(family, beta, 1.0), 1e-8, "<"));
  const double flat0 = flatness_residual(family, beta, 0.0);
  if (n == 1) {
    report.items.push_back(
        make_skipped("flatness_alpha_0", flat0, "n=1 (trivially flat)"));
  } else if (t.t.max_abs() <= 1e-10) {
    report.items.push_back(
        make_skipped("flatness_alpha_0", flat0, "t = 0 at this point"));
  } else {
    // Non-flat Levi-Civita connection is the expected outcome.
    report.items.push_back(make_item("flatness_alpha_0", flat0, 1e-3, ">"));
  }

  report.items.push_back(make_item("cumulant_order2_matches_metric",
                                   matrix_gap(gws_tensor(family, beta, 2).y, g.g),
                                   1e-12, "<"));
  report.items.push_back(make_item("cumulant_order3_matches_skewness",
                                   tensor_gap(gws_tensor(family, beta, 3).y, t.t),
                                   1e-12, "<"));

  report.overall = true;
  for (const CheckItem& item : report.items) report.overall = report.overall && item.passed;
  return report;
}

std::pair<ExponentialFamily, Vec> random_family(Rng& rng) {
  const int m = rng.uniform_int(2, 6);
  const int n = rng.uniform_int(1, std::min(3, m - 1));
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Mat stats(n, m);
    for (int i = 0; i < n; ++i)
      for (int w = 0; w < m; ++w) stats(i, w) = rng.uniform(-1.0, 1.0);

    Mat extended(n + 1, m);
    extended.row(0).setOnes();
    extended.bottomRows(n) = stats;
    Eigen::JacobiSVD<Mat> svd(extended);
    const Vec& sigma = svd.singularValues();
    if (sigma(sigma.size() - 1) < 1e-3 * sigma(0)) continue;

    Vec beta(n);
    for (int i = 0; i < n; ++i) beta[i] = rng.uniform(-2.0, 2.0);
    return {build_family(m, stats), beta};
  }
  throw Error("random_family: could not draw a well-conditioned family");
}

SweepResult run_sweep(std::uint64_t seed, int count) {
  if (count < 1) throw InvalidArgument("run_sweep: count must be positive");
  Rng rng(seed);
  SweepResult result;
  result.families = count;
  for (int rep = 0; rep < count; ++rep) {
    const auto [family, beta] = random_family(rng);
    const MetricTensor g = fisher_metric(family, beta);
    const SkewnessTensor t = skewness_tensor(family, beta);
    const MixedTensor tbar = mixed_tensor(g, t);

    result.max_flatness_plus =
        std::max(result.max_flatness_plus, flatness_residual(family, beta, 1.0));
    result.max_flatness_minus =
        std::max(result.max_flatness_minus, flatness_residual(family, beta, -1.0));
    result.max_associativity =
        std::max(result.max_associativity, associativity_residual(g, tbar));
    if (family.omega_size == family.n + 1) {
      result.max_wdvv = std::max(result.max_wdvv, wdvv_residual(g, t));
      ++result.wdvv_families;
    }
    result.max_potential =
        std::max(result.max_potential, potential_consistency(family, beta, 1e-3));
    result.max_hessian =
        std::max(result.max_hessian, hessian_consistency(family, beta, 1e-4));
    result.max_cumulant_order2 = std::max(
        result.max_cumulant_order2,
        [&] {
          const GwsTensor y2 = gws_tensor(family, beta, 2);
          double worst = 0.0;
          for (int i = 0; i < family.n; ++i)
            for (int j = 0; j < family.n; ++j)
              worst = std::max(worst, std::fabs(y2.y.at({i, j}) - g.g(i, j)));
          return worst;
        }());
    result.max_cumulant_order3 = std::max(
        result.max_cumulant_order3,
        [&] {
          const GwsTensor y3 = gws_tensor(family, beta, 3);
          double worst = 0.0;
          for (int i = 0; i < family.n; ++i)
            for (int j = 0; j < family.n; ++j)
              for (int k = 0; k < family.n; ++k)
                worst = std::max(worst, std::fabs(y3.y.at({i, j, k}) - t.t(i, j, k)));
          return worst;
        }());
  }
  return result;
}

}  // namespace frobstat
