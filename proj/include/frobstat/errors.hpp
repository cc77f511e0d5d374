#ifndef FROBSTAT_ERRORS_HPP
#define FROBSTAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace frobstat {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// Sufficient-statistic rows together with the constant row fail to be
// linearly independent: the family is not minimally parametrized.
class RankDeficient : public Error {
public:
  using Error::Error;
};

class NonFinite : public Error {
public:
  using Error::Error;
};

// Condition number of the metric above the admissible bound: the
// parameters are effectively degenerate at this point.
class SingularMetric : public Error {
public:
  using Error::Error;
};

class OrderOutOfRange : public Error {
public:
  using Error::Error;
};

class NewtonDivergence : public Error {
public:
  using Error::Error;
};

class GridMismatch : public Error {
public:
  using Error::Error;
};

class TargetOutsideSimplexInterior : public Error {
public:
  using Error::Error;
};

class InvalidArgument : public Error {
public:
  using Error::Error;
};

}  // namespace frobstat

#endif
