#include "frobstat/finite_diff.hpp"

namespace frobstat {

namespace {

double diff_rec(const ScalarField& f, Vec& x, const std::vector<int>& dirs,
                std::size_t depth, double h) {
  if (depth == 0) return f(x);
  const int d = dirs[depth - 1];
  const double x0 = x[d];
  x[d] = x0 + h;
  const double fp = diff_rec(f, x, dirs, depth - 1, h);
  x[d] = x0 - h;
  const double fm = diff_rec(f, x, dirs, depth - 1, h);
  x[d] = x0;
  return (fp - fm) / (2.0 * h);
}

}  // namespace

double central_diff(const ScalarField& f, const Vec& x, const std::vector<int>& dirs,
                    double h) {
  if (h <= 0.0) throw InvalidArgument("central_diff: step must be positive");
  for (int d : dirs)
    if (d < 0 || d >= x.size()) throw DimensionMismatch("central_diff: direction out of range");
  Vec work = x;
  return diff_rec(f, work, dirs, dirs.size(), h);
}

double central_diff_richardson(const ScalarField& f, const Vec& x,
                               const std::vector<int>& dirs, double h) {
  const double coarse = central_diff(f, x, dirs, h);
  const double fine = central_diff(f, x, dirs, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace frobstat
