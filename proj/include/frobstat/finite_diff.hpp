#ifndef FROBSTAT_FINITE_DIFF_HPP
#define FROBSTAT_FINITE_DIFF_HPP

#include <functional>
#include <vector>

#include "frobstat/types.hpp"

namespace frobstat {

using ScalarField = std::function<double(const Vec&)>;

// Mixed partial derivative of f at x along the directions listed in dirs
// (repeats allowed), by recursively composed central differences with step h
// per application. Truncation is O(h^2); cost is 2^|dirs| evaluations.
double central_diff(const ScalarField& f, const Vec& x, const std::vector<int>& dirs,
                    double h);

// One Richardson level on central_diff: (4 D_{h/2} - D_h) / 3, truncation
// O(h^4). Used where plain O(h^2) cannot reach the required agreement.
double central_diff_richardson(const ScalarField& f, const Vec& x,
                               const std::vector<int>& dirs, double h);

}  // namespace frobstat

#endif
