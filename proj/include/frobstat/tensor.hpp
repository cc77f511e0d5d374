#ifndef FROBSTAT_TENSOR_HPP
#define FROBSTAT_TENSOR_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "frobstat/errors.hpp"

namespace frobstat {

// Dense cubic array of coordinates t_{abc}.  No symmetry is imposed by the
// container itself; symmetric objects are filled through set_sym so that
// permuted entries are bitwise identical.
class Tensor3 {
public:
  explicit Tensor3(int dim) : n_(dim), data_(static_cast<std::size_t>(dim) * dim * dim, 0.0) {
    if (dim < 1) throw InvalidArgument("Tensor3: dim must be positive");
  }

  int dim() const { return n_; }

  double& operator()(int a, int b, int c) { return data_[idx(a, b, c)]; }
  double operator()(int a, int b, int c) const { return data_[idx(a, b, c)]; }

  // Writes one value into all six permutations of (a, b, c).
  void set_sym(int a, int b, int c, double v) {
    (*this)(a, b, c) = v;
    (*this)(a, c, b) = v;
    (*this)(b, a, c) = v;
    (*this)(b, c, a) = v;
    (*this)(c, a, b) = v;
    (*this)(c, b, a) = v;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
  }

  const std::vector<double>& data() const { return data_; }

private:
  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a) * n_ + b) * n_ + c;
  }

  int n_;
  std::vector<double> data_;
};

class Tensor4 {
public:
  explicit Tensor4(int dim)
      : n_(dim), data_(static_cast<std::size_t>(dim) * dim * dim * dim, 0.0) {
    if (dim < 1) throw InvalidArgument("Tensor4: dim must be positive");
  }

  int dim() const { return n_; }

  double& operator()(int a, int b, int c, int d) { return data_[idx(a, b, c, d)]; }
  double operator()(int a, int b, int c, int d) const { return data_[idx(a, b, c, d)]; }

  // Writes one value into every permutation of (a, b, c, d).
  void set_sym(int a, int b, int c, int d, double v) {
    int p[4] = {a, b, c, d};
    std::sort(p, p + 4);
    do {
      (*this)(p[0], p[1], p[2], p[3]) = v;
    } while (std::next_permutation(p, p + 4));
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
  }

  const std::vector<double>& data() const { return data_; }

private:
  std::size_t idx(int a, int b, int c, int d) const {
    return ((static_cast<std::size_t>(a) * n_ + b) * n_ + c) * n_ + d;
  }

  int n_;
  std::vector<double> data_;
};

// Fully symmetric array of arbitrary rank, used for cumulant tensors whose
// order is a runtime quantity.  Storage is dense; reads and writes go
// through a multi-index.
class DenseTensor {
public:
  DenseTensor(int rank, int dim) : rank_(rank), n_(dim) {
    if (rank < 1) throw InvalidArgument("DenseTensor: rank must be positive");
    if (dim < 1) throw InvalidArgument("DenseTensor: dim must be positive");
    std::size_t size = 1;
    for (int r = 0; r < rank; ++r) size *= static_cast<std::size_t>(dim);
    data_.assign(size, 0.0);
  }

  int rank() const { return rank_; }
  int dim() const { return n_; }

  double at(const std::vector<int>& idx) const { return data_[flat(idx)]; }

  // Writes one value into every permutation of idx.
  void set_sym(std::vector<int> idx, double v) {
    std::sort(idx.begin(), idx.end());
    do {
      data_[flat(idx)] = v;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::fabs(v));
    return m;
  }

  const std::vector<double>& data() const { return data_; }

private:
  std::size_t flat(const std::vector<int>& idx) const {
    if (static_cast<int>(idx.size()) != rank_)
      throw DimensionMismatch("DenseTensor: multi-index rank mismatch");
    std::size_t f = 0;
    for (int r = 0; r < rank_; ++r) {
      if (idx[r] < 0 || idx[r] >= n_) throw DimensionMismatch("DenseTensor: index out of range");
      f = f * static_cast<std::size_t>(n_) + static_cast<std::size_t>(idx[r]);
    }
    return f;
  }

  int rank_;
  int n_;
  std::vector<double> data_;
};

}  // namespace frobstat

#endif
