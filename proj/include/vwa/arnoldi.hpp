#pragma once

// Vandermonde with Arnoldi: least-squares polynomial fitting in a discrete
// orthogonal basis built on the fly by Arnoldi iteration with X = diag(x),
// and evaluation by replaying the same recurrence at new points.

#include <optional>
#include <span>
#include <vector>

#include "vwa/linalg/dense.hpp"
#include "vwa/linalg/lstsq.hpp"

namespace vwa {

// The (n+1) x n recurrence matrix with X Q_- = Q H. Column k holds the
// coefficients used to orthogonalize x * q_k against q_0..q_k, plus the
// normalizing subdiagonal H(k+1, k) > 0. Entries with j > k+1 are structural
// zeros. Stored densely, column-major.
template <Scalar T>
class HessenbergRecurrence {
 public:
  HessenbergRecurrence() = default;
  explicit HessenbergRecurrence(int degree)
      : degree_(degree), entries_(static_cast<std::size_t>(degree + 1) * degree, T(0)) {}

  int degree() const noexcept { return degree_; }
  std::size_t rows() const noexcept { return static_cast<std::size_t>(degree_) + 1; }
  std::size_t cols() const noexcept { return static_cast<std::size_t>(degree_); }

  T& operator()(std::size_t j, std::size_t k) { return entries_[k * rows() + j]; }
  const T& operator()(std::size_t j, std::size_t k) const { return entries_[k * rows() + j]; }

  std::span<const T> column_major() const noexcept { return entries_; }

  double max_abs() const { return vwa::max_abs<T>(entries_); }

  // Checks shape, finiteness, structural zeros and a real positive subdiagonal.
  static HessenbergRecurrence from_column_major(int degree, std::vector<T> entries);

 private:
  int degree_ = 0;
  std::vector<T> entries_;
};

template <Scalar T>
struct ArnoldiModel {
  int degree = 0;
  // Coefficients d in the orthogonal basis, length degree + 1.
  std::vector<T> coeffs;
  HessenbergRecurrence<T> hessenberg;
  // Fit f ~ Re(W d) with Im d_0 == 0. Only meaningful for complex T.
  bool realpart = false;
  bool rank_warning = false;
};

struct ArnoldiOptions {
  // Extra Gram-Schmidt sweeps per column (0 or 1).
  int reorth = 0;
  // Keep Q and its orthogonality defect in the diagnostics.
  bool keep_basis = false;
};

template <Scalar T>
struct ArnoldiDiagnostics {
  std::optional<DenseMatrix<T>> basis;
  // max |Q^H Q / m - I|; only computed with keep_basis.
  std::optional<double> orthogonality_defect;
};

template <Scalar T>
struct ArnoldiFit {
  ArnoldiModel<T> model;
  ArnoldiDiagnostics<T> diagnostics;
};

// Relative threshold on H(k+1, k) / max|x| that signals Krylov breakdown.
inline constexpr double kBreakdownTolerance = 1e-14;

// Runs n Arnoldi steps on the nodes. Returns Q (m x (n+1), columns of
// 2-norm sqrt(m)) and H.
template <Scalar T>
std::pair<DenseMatrix<T>, HessenbergRecurrence<T>> arnoldi_basis(std::span<const T> x, int degree, int reorth = 0);

// Rebuilds the basis at the points s from H: S W_- = W H.
template <Scalar T>
DenseMatrix<T> evaluate_basis(const HessenbergRecurrence<T>& h, std::span<const T> s);

template <Scalar T>
ArnoldiFit<T> arnoldi_fit(std::span<const T> x, std::span<const T> f, int degree, const ArnoldiOptions& opts = {});

template <Scalar T>
std::vector<T> arnoldi_eval(const ArnoldiModel<T>& model, std::span<const T> s);

ArnoldiFit<cplx> arnoldi_fit_realpart(std::span<const cplx> z, std::span<const double> f, int degree,
                                      const ArnoldiOptions& opts = {});

std::vector<double> arnoldi_eval_realpart(const ArnoldiModel<cplx>& model, std::span<const cplx> s);

// max |Q^H Q / m - I|.
template <Scalar T>
double orthogonality_defect(const DenseMatrix<T>& q);

}  // namespace vwa
