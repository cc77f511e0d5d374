#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "frobstat/frobenius.hpp"
#include "frobstat/io.hpp"

namespace {

using namespace frobstat;

// Exit codes: 0 pass, 1 check failure, 2 parse/validation/usage error.
constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

void emit(const Json& report) { std::cout << render(report); }

int cmd_check(const std::string& path, const CheckOptions& options, int sweep,
              std::uint64_t seed) {
  const FamilySpec spec = parse_spec(path);
  CheckReport report = run_check_suite(spec.family, spec.beta, options);

  Json j = to_json(report);
  j["conventions"] = convention_header();
  j["input"] = spec_echo(spec);

  if (sweep > 0) {
    const SweepResult s = run_sweep(seed, sweep);
    const auto sweep_item = [&](std::string name, double value, double threshold) {
      CheckItem item;
      item.name = std::move(name);
      item.value = value;
      item.threshold = threshold;
      item.relation = "<";
      item.passed = value < threshold;
      return item;
    };
    std::vector<CheckItem> extra = {
        sweep_item("sweep_flatness_alpha_+1", s.max_flatness_plus, 1e-8),
        sweep_item("sweep_flatness_alpha_-1", s.max_flatness_minus, 1e-10),
        sweep_item("sweep_associativity", s.max_associativity, options.tol_algebraic),
        sweep_item("sweep_wdvv", s.max_wdvv, options.tol_algebraic),
        sweep_item("sweep_potential_consistency", s.max_potential, options.tol_numeric),
        sweep_item("sweep_hessian_consistency", s.max_hessian, 5e-6),
        sweep_item("sweep_cumulant_order2", s.max_cumulant_order2, 1e-12),
        sweep_item("sweep_cumulant_order3", s.max_cumulant_order3, 1e-12),
    };
    bool sweep_pass = true;
    Json sweep_checks = Json::array();
    for (const CheckItem& item : extra) {
      sweep_pass = sweep_pass && item.passed;
      sweep_checks.push_back(Json{{"name", item.name},
                                  {"value", item.value},
                                  {"threshold", item.threshold},
                                  {"relation", item.relation},
                                  {"pass", item.passed}});
    }
    j["sweep"] = Json{{"families", s.families},
                      {"wdvv_families", s.wdvv_families},
                      {"seed", seed},
                      {"checks", std::move(sweep_checks)}};
    if (!sweep_pass) j["overall"] = "fail";
  }

  emit(j);
  return j["overall"] == "pass" ? kExitPass : kExitCheckFailed;
}

int cmd_tensors(const std::string& path, double alpha) {
  const FamilySpec spec = parse_spec(path);
  const auto& family = spec.family;
  const Vec& beta = spec.beta;

  const MetricTensor g = fisher_metric(family, beta);
  const SkewnessTensor t = skewness_tensor(family, beta);
  const MixedTensor tbar = mixed_tensor(g, t);
  const ConnectionField conn = christoffels(family, beta, alpha);
  const CurvatureTensor r = curvature(family, beta, alpha);

  Json j{{"input", spec_echo(spec)},
         {"alpha", alpha},
         {"psi", log_partition(family, beta)},
         {"eta", to_json(expectation_params(family, beta))},
         {"dual_potential", dual_potential(family, beta)},
         {"g", to_json(g.g)},
         {"g_inv", to_json(g.g_inv)},
         {"t", to_json(t.t)},
         {"t_bar", to_json(tbar.t_bar)},
         {"gamma", to_json(conn.gamma)},
         {"curvature", to_json(r.r)}};
  emit(j);
  return kExitPass;
}

int cmd_gws(const std::string& path, int order) {
  const FamilySpec spec = parse_spec(path);
  const GwsTensor y = gws_tensor(spec.family, spec.beta, order);
  Json j{{"input", spec_echo(spec)},
         {"order", order},
         {"dim", spec.family.n},
         {"y", to_json(y.y)}};
  emit(j);
  return kExitPass;
}

int cmd_learn(const std::string& path, const std::string& method, double step,
              double tol, int max_iter) {
  const FamilySpec spec = parse_spec(path);
  if (!spec.target)
    throw ValidationError("target: required by the learn command");
  const LearnMethod lm =
      method == "newton" ? LearnMethod::newton : LearnMethod::natural_gradient;
  const LearningTrace trace =
      learn(spec.family, spec.beta, *spec.target, lm, step, tol, max_iter);
  Json j = to_json(trace);
  j["input"] = spec_echo(spec);
  j["method"] = method;
  emit(j);
  return kExitPass;
}

int cmd_geodesic(const std::string& path, const std::string& to_str,
                 const std::string& kind, int steps) {
  const FamilySpec spec = parse_spec(path);

  std::vector<double> endpoint;
  std::stringstream ss(to_str);
  std::string tokens;
  while (std::getline(ss, tokens, ',')) {
    try {
      endpoint.push_back(std::stod(tokens));
    } catch (const std::exception&) {
      throw ValidationError("--to: expected comma-separated numbers");
    }
  }
  if (static_cast<int>(endpoint.size()) != spec.family.n)
    throw ValidationError("--to: length does not match the family dimension");
  Vec beta1(spec.family.n);
  for (int i = 0; i < spec.family.n; ++i) beta1[i] = endpoint[i];

  const Curve curve = kind == "e"
                          ? e_geodesic(spec.family, spec.beta, beta1, steps)
                          : m_geodesic(spec.family, spec.beta, beta1, steps);
  // Residual against the pencil end that is flat for this kind.
  const double alpha = kind == "e" ? -1.0 : 1.0;
  Json j{{"input", spec_echo(spec)},
         {"kind", kind},
         {"steps", steps},
         {"alpha", alpha},
         {"residual", geodesic_residual(spec.family, curve, alpha)},
         {"curve", to_json(curve)}};
  emit(j);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite exponential families: tensors, curvature, cumulants, learning"};
  app.require_subcommand(1);
  // --h is a numeric step option below, so help must not claim -h.
  app.set_help_flag("--help", "print this help and exit");

  CheckOptions options;
  std::string spec_path;
  int sweep = 0;
  std::uint64_t seed = kDefaultSweepSeed;
  double alpha = 0.0;
  int order = 2;
  std::string method = "newton";
  double step = 1.0;
  double tol = 1e-12;
  int max_iter = 50;
  std::string to_str;
  std::string kind = "e";
  int steps = 33;

  CLI::App* check = app.add_subcommand("check", "run the verification suite");
  check->set_help_flag("--help", "print this help and exit");
  check->add_option("spec", spec_path, "family spec file")->required();
  check->add_option("--h", options.h, "step for metric-derivative checks");
  check->add_option("--h3", options.h_third, "step for third-derivative checks");
  check->add_option("--tol-algebraic", options.tol_algebraic, "algebraic tolerance");
  check->add_option("--tol-numeric", options.tol_numeric, "finite-difference tolerance");
  check->add_option("--sweep", sweep, "also verify N random families");
  check->add_option("--seed", seed, "sweep RNG seed");

  CLI::App* tensors = app.add_subcommand("tensors", "dump g, t, t_bar, Gamma, R");
  tensors->set_help_flag("--help", "print this help and exit");
  tensors->add_option("spec", spec_path, "family spec file")->required();
  tensors->add_option("--alpha", alpha, "connection parameter");

  CLI::App* gws = app.add_subcommand("gws", "dump a cumulant tensor of the potential");
  gws->set_help_flag("--help", "print this help and exit");
  gws->add_option("spec", spec_path, "family spec file")->required();
  gws->add_option("--order", order, "tensor order (2..6)")->required();

  CLI::App* learn_cmd = app.add_subcommand("learn", "KL minimization with diagnostics");
  learn_cmd->set_help_flag("--help", "print this help and exit");
  learn_cmd->add_option("spec", spec_path, "family spec file (needs a target)")->required();
  learn_cmd->add_option("--method", method, "newton or ngrad")
      ->check(CLI::IsMember({"newton", "ngrad"}));
  learn_cmd->add_option("--step", step, "natural-gradient step size");
  learn_cmd->add_option("--tol", tol, "KL convergence tolerance");
  learn_cmd->add_option("--max-iter", max_iter, "iteration cap");

  CLI::App* geo = app.add_subcommand("geodesic", "sample a geodesic from beta to --to");
  geo->set_help_flag("--help", "print this help and exit");
  geo->add_option("spec", spec_path, "family spec file")->required();
  geo->add_option("--to", to_str, "endpoint, comma-separated")->required();
  geo->add_option("--kind", kind, "e (natural straight) or m (expectation straight)")
      ->check(CLI::IsMember({"e", "m"}));
  geo->add_option("--steps", steps, "sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // CLI11's own help/usage handling; map usage errors to exit code 2.
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitBadInput;
  }

  try {
    if (check->parsed()) return cmd_check(spec_path, options, sweep, seed);
    if (tensors->parsed()) return cmd_tensors(spec_path, alpha);
    if (gws->parsed()) return cmd_gws(spec_path, order);
    if (learn_cmd->parsed()) return cmd_learn(spec_path, method, step, tol, max_iter);
    if (geo->parsed()) return cmd_geodesic(spec_path, to_str, kind, steps);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
