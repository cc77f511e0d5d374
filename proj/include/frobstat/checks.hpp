#ifndef FROBSTAT_CHECKS_HPP
#define FROBSTAT_CHECKS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frobstat/exponential_family.hpp"
#include "frobstat/rng.hpp"

namespace frobstat {

struct CheckOptions {
  double h = 1e-4;          // step for metric-derivative and Hessian checks
  double h_third = 1e-3;    // step for the third-derivative potentiality check
  double tol_algebraic = 1e-10;
  double tol_numeric = 1e-5;
};

// relation is "<" or ">": pass means value relation threshold. status is
// "ran" or "skipped"; skipped checks pass and carry a note.
struct CheckItem {
  std::string name;
  double value = 0.0;
  double threshold = 0.0;
  std::string relation = "<";
  bool passed = false;
  std::string status = "ran";
  std::string note;
};

struct CheckReport {
  std::vector<CheckItem> items;
  bool overall = false;
};

// Runs, in order: metric positivity, score centering, associativity, WDVV
// (skipped with a note unless the family is maximal), potentiality, metric
// compatibility (alpha -1/0/+1), flatness (alpha -1/0/+1, with alpha=0
// expected non-flat when n >= 2 and t != 0), and the order-2/3 cumulant
// identities.
CheckReport run_check_suite(const ExponentialFamily& family, const ParamPoint& beta,
                            const CheckOptions& options = {});

// Random family for sweeps: 2 <= m <= 6, 1 <= n <= min(3, m-1), stats
// entries uniform in [-1, 1] resampled until sigma_min([1; stats]) >=
// 1e-3 sigma_max, beta uniform in [-2, 2]^n.
std::pair<ExponentialFamily, Vec> random_family(Rng& rng);

// Worst residuals over `count` random families.
struct SweepResult {
  int families = 0;
  double max_flatness_plus = 0.0;   // alpha = +1
  double max_flatness_minus = 0.0;  // alpha = -1
  double max_associativity = 0.0;
  double max_wdvv = 0.0;   // over maximal families only (omega_size == n + 1)
  int wdvv_families = 0;   // how many families entered max_wdvv
  double max_potential = 0.0;       // third differences at h = 1e-3
  double max_hessian = 0.0;         // second differences at h = 1e-4
  double max_cumulant_order2 = 0.0;
  double max_cumulant_order3 = 0.0;
};

SweepResult run_sweep(std::uint64_t seed, int count);

constexpr std::uint64_t kDefaultSweepSeed = 12345;

}  // namespace frobstat

#endif
