#include "frobstat/io.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace frobstat {

namespace {

Vec parse_vector(const Json& j, const std::string& key) {
  if (!j.is_array()) throw ValidationError(key + ": expected an array of numbers");
  Vec v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) throw ValidationError(key + ": expected an array of numbers");
    v[i] = j[i].get<double>();
  }
  return v;
}

Mat parse_matrix(const Json& j, const std::string& key) {
  if (!j.is_array() || j.empty()) throw ValidationError(key + ": expected an array of rows");
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array()) throw ValidationError(key + ": expected an array of rows");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols) throw ValidationError(key + ": rows differ in length");
  }
  if (cols == 0) throw ValidationError(key + ": rows are empty");
  Mat m(j.size(), cols);
  for (std::size_t r = 0; r < j.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[r][c].is_number()) throw ValidationError(key + ": expected numeric entries");
      m(r, c) = j[r][c].get<double>();
    }
  return m;
}

}  // namespace

FamilySpec parse_spec_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.is_object()) throw ValidationError("spec: expected a JSON object");

  static const std::set<std::string> known = {"omega_size", "stats", "beta", "target",
                                             "labels"};
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!known.count(key)) throw ValidationError("unknown key '" + key + "'");
  }
  for (const char* required : {"omega_size", "stats", "beta"})
    if (!j.contains(required))
      throw ValidationError(std::string(required) + ": missing required key");

  if (!j["omega_size"].is_number_integer())
    throw ValidationError("omega_size: expected an integer");
  const int omega_size = j["omega_size"].get<int>();
  if (omega_size < 2) throw ValidationError("omega_size: must be at least 2");

  const Mat stats = parse_matrix(j["stats"], "stats");
  if (static_cast<int>(stats.cols()) != omega_size)
    throw ValidationError("stats: row length does not equal omega_size");

  ExponentialFamily family = [&] {
    try {
      return build_family(omega_size, stats);
    } catch (const RankDeficient& e) {
      throw ValidationError(std::string("stats: ") + e.what());
    } catch (const Error& e) {
      throw ValidationError(std::string("stats: ") + e.what());
    }
  }();

  const Vec beta = parse_vector(j["beta"], "beta");
  if (beta.size() != family.n)
    throw ValidationError("beta: length does not equal the number of stat rows");
  if (!beta.allFinite()) throw ValidationError("beta: entries must be finite");

  FamilySpec spec{std::move(family), beta, std::nullopt, std::nullopt};

  if (j.contains("target")) {
    const Vec target = parse_vector(j["target"], "target");
    if (target.size() != omega_size)
      throw ValidationError("target: length does not equal omega_size");
    for (int w = 0; w < target.size(); ++w)
      if (!(target[w] > 0.0))
        throw ValidationError("target: entries must be strictly positive");
    if (std::fabs(target.sum() - 1.0) > 1e-12)
      throw ValidationError("target: entries must sum to 1");
    spec.target = target;
  }

  if (j.contains("labels")) {
    const Json& jl = j["labels"];
    if (!jl.is_array()) throw ValidationError("labels: expected an array of strings");
    if (static_cast<int>(jl.size()) != omega_size)
      throw ValidationError("labels: length does not equal omega_size");
    std::vector<std::string> labels;
    for (const Json& item : jl) {
      if (!item.is_string()) throw ValidationError("labels: expected an array of strings");
      labels.push_back(item.get<std::string>());
    }
    spec.labels = std::move(labels);
  }
  return spec;
}

FamilySpec parse_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str());
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (int i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

Json to_json(const Mat& m) {
  Json out = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const Tensor3& t) {
  const int n = t.dim();
  Json out = Json::array();
  for (int a = 0; a < n; ++a) {
    Json plane = Json::array();
    for (int b = 0; b < n; ++b) {
      Json row = Json::array();
      for (int c = 0; c < n; ++c) row.push_back(t(a, b, c));
      plane.push_back(std::move(row));
    }
    out.push_back(std::move(plane));
  }
  return out;
}

Json to_json(const Tensor4& t) {
  const int n = t.dim();
  Json out = Json::array();
  for (int a = 0; a < n; ++a) {
    Json cube = Json::array();
    for (int b = 0; b < n; ++b) {
      Json plane = Json::array();
      for (int c = 0; c < n; ++c) {
        Json row = Json::array();
        for (int d = 0; d < n; ++d) row.push_back(t(a, b, c, d));
        plane.push_back(std::move(row));
      }
      cube.push_back(std::move(plane));
    }
    out.push_back(std::move(cube));
  }
  return out;
}

namespace {

Json dense_to_json_rec(const DenseTensor& t, std::vector<int>& idx, int depth) {
  if (depth == t.rank()) return Json(t.at(idx));
  Json out = Json::array();
  for (int i = 0; i < t.dim(); ++i) {
    idx[depth] = i;
    out.push_back(dense_to_json_rec(t, idx, depth + 1));
  }
  return out;
}

}  // namespace

Json to_json(const DenseTensor& t) {
  std::vector<int> idx(t.rank(), 0);
  return dense_to_json_rec(t, idx, 0);
}

Json to_json(const Curve& curve) {
  Json samples = Json::array();
  for (int i = 0; i < curve.size(); ++i)
    samples.push_back(Json{{"s", curve.s[i]}, {"point", to_json(curve.points[i])}});
  return Json{{"samples", std::move(samples)}};
}

Json to_json(const CheckReport& report) {
  Json checks = Json::array();
  for (const CheckItem& item : report.items) {
    Json entry{{"name", item.name},
               {"value", item.value},
               {"status", item.status},
               {"pass", item.passed}};
    if (item.status == "ran") {
      entry["threshold"] = item.threshold;
      entry["relation"] = item.relation;
    }
    if (!item.note.empty()) entry["note"] = item.note;
    checks.push_back(std::move(entry));
  }
  return Json{{"checks", std::move(checks)},
              {"overall", report.overall ? "pass" : "fail"}};
}

Json to_json(const LearningTrace& trace) {
  Json iterates = Json::array();
  for (const auto& it : trace.iterates)
    iterates.push_back(Json{{"beta", to_json(it.beta)}, {"kl", it.kl}});
  return Json{{"iterates", std::move(iterates)},
              {"converged", trace.converged},
              {"beta_final", to_json(trace.beta_final)},
              {"eta_target", to_json(trace.eta_target)},
              {"intersections",
               Json{{"count", trace.intersections}, {"coincident", trace.coincident}}},
              {"gamma_plus", to_json(trace.gamma_plus)},
              {"gamma_minus", to_json(trace.gamma_minus)},
              {"gamma_minus_projected", to_json(trace.gamma_minus_projected)}};
}

Json spec_echo(const FamilySpec& spec) {
  Json out{{"omega_size", spec.family.omega_size},
           {"stats", to_json(spec.family.stats)},
           {"beta", to_json(spec.beta)}};
  if (spec.target) out["target"] = to_json(*spec.target);
  if (spec.labels) out["labels"] = *spec.labels;
  return out;
}

Json convention_header() {
  return Json{
      {"density", "rho(w) = exp(-beta.X(w) - psi(beta))"},
      {"alpha_affine_in_natural_coordinates", -1.0},
      {"metric_compatibility", "nabla^alpha g = -alpha t"},
      {"bregman_kl_order", "D_psi(beta1, beta2) = KL(rho(beta2) || rho(beta1))"},
  };
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace frobstat
