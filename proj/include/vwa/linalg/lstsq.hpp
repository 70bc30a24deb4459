#pragma once

#include <vector>

#include "vwa/linalg/dense.hpp"

namespace vwa {

enum class RankPolicy {
  Throw,  // raise ErrorCode::RankDeficient
  Warn,   // finish the solve and report it in LstsqResult::rank_deficient
};

template <Scalar T>
struct LstsqResult {
  std::vector<T> x;
  bool rank_deficient = false;
  // min |R_jj| / max |R_jj| over the Householder diagonal.
  double diagonal_ratio = 1.0;
};

// Relative size below which a Householder diagonal counts as numerically zero.
inline constexpr double kRankTolerance = 1e-14;

// Least-squares solve of A x ~ b by Householder QR without column pivoting.
// Requires rows >= cols. Under RankPolicy::Warn, components whose diagonal is
// exactly zero are set to zero.
template <Scalar T>
LstsqResult<T> lstsq(const DenseMatrix<T>& a, std::span<const T> b, RankPolicy policy = RankPolicy::Throw);

// Real right-hand side against a complex matrix.
LstsqResult<cplx> lstsq(const DenseMatrix<cplx>& a, std::span<const double> b,
                        RankPolicy policy = RankPolicy::Throw);

}  // namespace vwa
