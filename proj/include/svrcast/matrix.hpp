#ifndef SVRCAST_MATRIX_HPP
#define SVRCAST_MATRIX_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace svrcast {

// Dense row-major matrix. Datasets here are a few hundred rows, so a flat
// vector is all we need.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

  double* operator[](std::size_t i) { return data.data() + i * cols; }
  const double* operator[](std::size_t i) const { return data.data() + i * cols; }

  std::span<const double> row(std::size_t i) const {
    return {data.data() + i * cols, cols};
  }
  std::span<double> row(std::size_t i) {
    return {data.data() + i * cols, cols};
  }

  bool empty() const { return rows == 0 || cols == 0; }
};

inline double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    s += d * d;
  }
  return s;
}

}  // namespace svrcast

#endif  // SVRCAST_MATRIX_HPP
