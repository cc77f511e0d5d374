#include <cmath>

#include <doctest.h>

#include "frobstat/checks.hpp"
#include "frobstat/io.hpp"
#include "support/families.hpp"

using namespace frobstat;
using namespace frobstat::testing;

namespace {

const char* kBernoulliSpec = R"({
  "omega_size": 2,
  "stats": [[0.0, 1.0]],
  "beta": [0.0],
  "target": [0.7, 0.3]
})";

}  // namespace

TEST_CASE("a well-formed spec parses into a family") {
  const FamilySpec spec = parse_spec_text(kBernoulliSpec);
  CHECK(spec.family.omega_size == 2);
  CHECK(spec.family.n == 1);
  CHECK(spec.family.stats(0, 1) == 1.0);
  CHECK(spec.beta[0] == 0.0);
  REQUIRE(spec.target.has_value());
  CHECK((*spec.target)[0] == 0.7);
  CHECK(!spec.labels.has_value());

  const FamilySpec labeled = parse_spec_text(
      R"({"omega_size": 3, "stats": [[0,1,0],[0,0,1]], "beta": [0,0],
          "labels": ["a","b","c"]})");
  REQUIRE(labeled.labels.has_value());
  CHECK(labeled.labels->size() == 3);
  CHECK((*labeled.labels)[2] == "c");
}

TEST_CASE("malformed JSON raises a parse error") {
  CHECK_THROWS_AS(parse_spec_text("{\"omega_size\": 2,"), ParseError);
  CHECK_THROWS_AS(parse_spec_text(""), ParseError);
  CHECK_THROWS_AS(parse_spec(__FILE__ "/does-not-exist.json"), ParseError);
}

TEST_CASE("structural mistakes raise validation errors") {
  CHECK_THROWS_AS(parse_spec_text("[1, 2, 3]"), ValidationError);
  CHECK_THROWS_AS(parse_spec_text(R"({"stats": [[0,1]], "beta": [0]})"),
                  ValidationError);  // missing omega_size
  CHECK_THROWS_AS(parse_spec_text(R"({"omega_size": 2, "beta": [0]})"),
                  ValidationError);  // missing stats
  CHECK_THROWS_AS(parse_spec_text(R"({"omega_size": 2, "stats": [[0,1]]})"),
                  ValidationError);  // missing beta
  CHECK_THROWS_WITH_AS(
      parse_spec_text(
          R"({"omega_size": 2, "stats": [[0,1]], "beta": [0], "extra": 1})"),
      "unknown key 'extra'", ValidationError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"omega_size": 2.5, "stats": [[0,1]], "beta": [0]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"omega_size": 1, "stats": [[0]], "beta": [0]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"omega_size": 2, "stats": [[0,1],[1]], "beta": [0,0]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"omega_size": 3, "stats": [[0,1]], "beta": [0]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"omega_size": 2, "stats": [[0,1]], "beta": [0,0]})"),
                  ValidationError);
  CHECK_THROWS_AS(parse_spec_text(
                      R"({"omega_size": 2, "stats": [[2,2]], "beta": [0]})"),
                  ValidationError);  // rank-deficient statistics
  CHECK_THROWS_AS(
      parse_spec_text(
          R"({"omega_size": 2, "stats": [[0,1]], "beta": [0], "target": [0.7, 0.2]})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_spec_text(
          R"({"omega_size": 2, "stats": [[0,1]], "beta": [0], "target": [1.0, 0.0]})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_spec_text(
          R"({"omega_size": 2, "stats": [[0,1]], "beta": [0], "labels": ["a"]})"),
      ValidationError);
  CHECK_THROWS_AS(
      parse_spec_text(
          R"({"omega_size": 2, "stats": [[0,1]], "beta": [0], "labels": [1, 2]})"),
      ValidationError);
}

TEST_CASE("rendering is deterministic with sorted keys") {
  Json j;
  j["zeta"] = 1.0;
  j["alpha"] = 2.0;
  j["mid"] = Json::array({0.1, 0.25, 1.0 / 3.0});
  const std::string once = render(j);
  const std::string twice = render(j);
  CHECK(once == twice);
  CHECK(once.find("alpha") < once.find("mid"));
  CHECK(once.find("mid") < once.find("zeta"));
  CHECK(once.back() == '\n');
  // Shortest round-trip float forms.
  CHECK(once.find("0.1") != std::string::npos);
  CHECK(once.find("0.25") != std::string::npos);
  CHECK(Json::parse(once) == j);
}

TEST_CASE("vectors, matrices, and tensors serialize by nesting") {
  Vec v(2);
  v << 0.5, -1.5;
  CHECK(to_json(v).dump() == "[0.5,-1.5]");

  Mat m(2, 2);
  m << 1.0, 2.0, 3.0, 4.0;
  CHECK(to_json(m).dump() == "[[1.0,2.0],[3.0,4.0]]");

  Tensor3 t(1);
  t.set_sym(0, 0, 0, -0.5);
  CHECK(to_json(t).dump() == "[[[-0.5]]]");

  DenseTensor dt(2, 2);
  dt.set_sym({0, 0}, 1.0);
  dt.set_sym({0, 1}, 2.0);
  dt.set_sym({1, 1}, 3.0);
  CHECK(to_json(dt).dump() == "[[1.0,2.0],[2.0,3.0]]");
}

TEST_CASE("curves serialize as sampled graphs") {
  const ExponentialFamily fam = bernoulli();
  const Curve geo = e_geodesic(fam, vec1(0.0), vec1(1.0), 3);
  const Json j = to_json(geo);
  REQUIRE(j.contains("samples"));
  REQUIRE(j["samples"].size() == 3);
  CHECK(j["samples"][0]["s"] == 0.0);
  CHECK(j["samples"][2]["s"] == 1.0);
  CHECK(j["samples"][1]["point"][0] == 0.5);
}

TEST_CASE("check reports carry named residuals and an overall verdict") {
  const FamilySpec spec = parse_spec_text(kBernoulliSpec);
  const CheckReport report = run_check_suite(spec.family, spec.beta);
  CHECK(report.overall);
  const Json j = to_json(report);
  CHECK(j["overall"] == "pass");
  REQUIRE(j.contains("checks"));
  bool saw_skip = false;
  for (const auto& item : j["checks"]) {
    REQUIRE(item.contains("name"));
    REQUIRE(item.contains("pass"));
    REQUIRE(item.contains("value"));
    if (item["status"] == "skipped") {
      saw_skip = true;
      CHECK(item.contains("note"));
    }
  }
  // One parameter: the interior-connection curvature check cannot run.
  CHECK(saw_skip);
  CHECK(j["checks"][0]["name"] == "metric_positive_definite");
}

TEST_CASE("convention header pins the sign choices") {
  const Json j = convention_header();
  CHECK(j["alpha_affine_in_natural_coordinates"] == -1.0);
  CHECK(j.contains("density"));
  CHECK(j.contains("metric_compatibility"));
  CHECK(j.contains("bregman_kl_order"));
}
