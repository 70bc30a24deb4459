#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "vwa/error.hpp"
#include "vwa/simd/kernels.hpp"

namespace vwa {

using cplx = std::complex<double>;

template <class T>
inline constexpr bool is_scalar_v = std::is_same_v<T, double> || std::is_same_v<T, cplx>;

template <class T>
concept Scalar = is_scalar_v<T>;

inline double conj(double v) { return v; }
inline cplx conj(cplx v) { return std::conj(v); }

inline bool is_finite(double v) { return std::isfinite(v); }
inline bool is_finite(cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

template <Scalar T>
void require_finite(std::span<const T> v, const char* what) {
  for (const T& e : v) {
    if (!is_finite(e)) throw Error(ErrorCode::NonFinite, std::string(what) + " contains a non-finite entry");
  }
}

template <Scalar T>
std::vector<cplx> to_complex(std::span<const T> v) {
  return std::vector<cplx>(v.begin(), v.end());
}

template <Scalar T>
double max_abs(std::span<const T> v) {
  double m = 0.0;
  for (const T& e : v) m = std::max(m, std::abs(e));
  return m;
}

// Dense column-major matrix. Columns are contiguous so the vector kernels
// run down them directly.
template <Scalar T>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
  }

  // `column_major` holds rows*cols entries, which must all be finite.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> column_major)
      : rows_(rows), cols_(cols), data_(std::move(column_major)) {
    if (rows == 0 || cols == 0) throw Error(ErrorCode::DimensionMismatch, "matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw Error(ErrorCode::DimensionMismatch, "entry count does not match dimensions");
    require_finite<T>(data_, "matrix");
  }

  static DenseMatrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const std::size_t m = rows.size();
    const std::size_t k = m ? rows.begin()->size() : 0;
    DenseMatrix a(m, k);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != k) throw Error(ErrorCode::DimensionMismatch, "ragged row list");
      std::size_t j = 0;
      for (const T& v : row) a(i, j++) = v;
      ++i;
    }
    require_finite<T>(a.data_, "matrix");
    return a;
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = T(1);
    return a;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[j * rows_ + i]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[j * rows_ + i]; }

  std::span<T> col(std::size_t j) { return {data_.data() + j * rows_, rows_}; }
  std::span<const T> col(std::size_t j) const { return {data_.data() + j * rows_, rows_}; }

  std::span<const T> data() const noexcept { return data_; }

  double norm_inf() const {
    double best = 0.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
      best = std::max(best, s);
    }
    return best;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<T> data_;
};

// y = A x, accumulated column by column in index order.
template <Scalar T>
std::vector<T> matvec(const DenseMatrix<T>& a, std::span<const T> x) {
  if (x.size() != a.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "matvec: vector length " + std::to_string(x.size()) +
                                                  " does not match " + std::to_string(a.cols()) + " columns");
  }
  std::vector<T> y(a.rows(), T(0));
  for (std::size_t j = 0; j < a.cols(); ++j) simd::axpy(std::span<T>(y), x[j], a.col(j));
  return y;
}

}  // namespace vwa
