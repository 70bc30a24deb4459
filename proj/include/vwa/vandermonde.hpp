#pragma once

// Classical polynomial fitting in the monomial basis. Kept deliberately
// unstabilized: it is the baseline whose ill-conditioning the Arnoldi path
// removes.

#include <span>
#include <vector>

#include "vwa/linalg/dense.hpp"
#include "vwa/linalg/lstsq.hpp"

namespace vwa {

// p(x) = sum_k coeffs[k] x^k.
template <Scalar T>
struct PlainModel {
  int degree = 0;
  std::vector<T> coeffs;
  // Fit f ~ Re p(z) with Im coeffs[0] == 0. Only meaningful for complex T.
  bool realpart = false;
  // The Householder solve met a numerically zero diagonal.
  bool rank_warning = false;
};

// Column j holds x^j, lowest power first, built by repeated multiplication.
template <Scalar T>
DenseMatrix<T> build_vandermonde(std::span<const T> x, int degree);

template <Scalar T>
PlainModel<T> polyfit(std::span<const T> x, std::span<const T> f, int degree);

template <Scalar T>
std::vector<T> polyval(const PlainModel<T>& model, std::span<const T> s);

// Least-squares fit of real data by Re(sum c_k z^k), c_0 real.
PlainModel<cplx> polyfit_realpart(std::span<const cplx> z, std::span<const double> f, int degree);

std::vector<double> polyval_realpart(const PlainModel<cplx>& model, std::span<const cplx> s);

// Shared argument checks for every fitting routine.
namespace detail {

// `unknowns` is the number of real or complex columns in the solve.
template <Scalar T>
void check_fit_inputs(std::span<const T> x, std::size_t f_size, int degree, std::size_t unknowns);

// Splits a complex basis into [Re B | Im B(:, 1..n)] and folds the solution
// (a; beta) back into a - i (0; beta), so that Re(sum c_k b_k) matches the
// fitted real combination.
DenseMatrix<double> realpart_system(const DenseMatrix<cplx>& basis);
std::vector<cplx> fold_realpart(std::span<const double> stacked, int degree);

}  // namespace detail

}  // namespace vwa
