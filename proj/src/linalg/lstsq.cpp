#include "vwa/linalg/lstsq.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vwa {
namespace {

template <Scalar T>
T unit_phase(T v) {
  const double mag = std::abs(v);
  if (mag == 0.0) return T(1);
  return v / mag;
}

}  // namespace

template <Scalar T>
LstsqResult<T> lstsq(const DenseMatrix<T>& a, std::span<const T> b, RankPolicy policy) {
  const std::size_t m = a.rows();
  const std::size_t k = a.cols();
  if (b.size() != m) {
    throw Error(ErrorCode::DimensionMismatch,
                "lstsq: right-hand side has length " + std::to_string(b.size()) + ", expected " + std::to_string(m));
  }
  if (m < k) {
    throw Error(ErrorCode::DimensionMismatch,
                "lstsq: " + std::to_string(m) + " rows cannot determine " + std::to_string(k) + " unknowns");
  }
  require_finite(b, "right-hand side");

  DenseMatrix<T> r = a;
  std::vector<T> rhs(b.begin(), b.end());
  std::vector<T> v(m);
  std::vector<T> diag(k, T(0));
  double largest = 0.0;
  double smallest = 0.0;
  bool deficient = false;

  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t len = m - j;
    std::span<T> head = r.col(j).subspan(j);
    const double norm = std::sqrt(simd::squared_norm(std::span<const T>(head)));

    if (norm == 0.0) {
      diag[j] = T(0);
    } else {
      const T alpha = -unit_phase(head[0]) * norm;
      std::span<T> reflector(v.data(), len);
      std::copy(head.begin(), head.end(), reflector.begin());
      reflector[0] = head[0] - alpha;
      const double vtv = simd::squared_norm(std::span<const T>(reflector));

      for (std::size_t c = j + 1; c < k; ++c) {
        std::span<T> target = r.col(c).subspan(j);
        const T s = simd::dot(std::span<const T>(reflector), std::span<const T>(target));
        simd::axpy(target, T(-2.0) * s / vtv, std::span<const T>(reflector));
      }
      std::span<T> rhs_tail(rhs.data() + j, len);
      const T s = simd::dot(std::span<const T>(reflector), std::span<const T>(rhs_tail));
      simd::axpy(rhs_tail, T(-2.0) * s / vtv, std::span<const T>(reflector));
      diag[j] = alpha;
    }

    const double mag = std::abs(diag[j]);
    largest = std::max(largest, mag);
    smallest = j == 0 ? mag : std::min(smallest, mag);
    if (mag < kRankTolerance * largest || largest == 0.0) deficient = true;
  }

  if (deficient && policy == RankPolicy::Throw) {
    throw Error(ErrorCode::RankDeficient,
                "lstsq: Householder diagonal ratio " + std::to_string(largest > 0 ? smallest / largest : 0.0) +
                    " is below " + std::to_string(kRankTolerance));
  }

  LstsqResult<T> result;
  result.rank_deficient = deficient;
  result.diagonal_ratio = largest > 0 ? smallest / largest : 0.0;
  result.x.assign(k, T(0));
  for (std::size_t jj = k; jj-- > 0;) {
    if (diag[jj] == T(0)) {
      result.x[jj] = T(0);
      continue;
    }
    T acc = rhs[jj];
    for (std::size_t c = jj + 1; c < k; ++c) acc -= r(jj, c) * result.x[c];
    result.x[jj] = acc / diag[jj];
  }
  return result;
}

LstsqResult<cplx> lstsq(const DenseMatrix<cplx>& a, std::span<const double> b, RankPolicy policy) {
  const std::vector<cplx> promoted = to_complex(b);
  return lstsq<cplx>(a, promoted, policy);
}

template LstsqResult<double> lstsq<double>(const DenseMatrix<double>&, std::span<const double>, RankPolicy);
template LstsqResult<cplx> lstsq<cplx>(const DenseMatrix<cplx>&, std::span<const cplx>, RankPolicy);

}  // namespace vwa
