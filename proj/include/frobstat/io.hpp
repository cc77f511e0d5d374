#ifndef FROBSTAT_IO_HPP
#define FROBSTAT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "frobstat/checks.hpp"
#include "frobstat/curves.hpp"
#include "frobstat/cumulants.hpp"
#include "frobstat/exponential_family.hpp"
#include "frobstat/learning.hpp"

namespace frobstat {

class ParseError : public Error {
public:
  using Error::Error;
};

// Carries the name of the offending key.
class ValidationError : public Error {
public:
  using Error::Error;
};

// Parsed and validated family specification. Keys: omega_size, stats, beta,
// and optionally target and labels.
struct FamilySpec {
  ExponentialFamily family;
  Vec beta;
  std::optional<Vec> target;
  std::optional<std::vector<std::string>> labels;
};

FamilySpec parse_spec_text(const std::string& text);
FamilySpec parse_spec(const std::string& path);

// json built exclusively from nlohmann's default (sorted-key) object type;
// dumping gives byte-identical output for identical inputs.
using Json = nlohmann::json;

Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const Tensor3& t);
Json to_json(const Tensor4& t);
Json to_json(const DenseTensor& t);
Json to_json(const Curve& curve);
Json to_json(const CheckReport& report);
Json to_json(const LearningTrace& trace);

// Input echo (omega_size, stats, beta, optional target/labels).
Json spec_echo(const FamilySpec& spec);

// Fixed convention block included in check reports.
Json convention_header();

// dump with 2-space indent and trailing newline.
std::string render(const Json& j);

}  // namespace frobstat

#endif
