#include "vwa/arnoldi.hpp"

#include <cmath>
#include <string>

#include "vwa/vandermonde.hpp"

namespace vwa {
namespace {

template <Scalar T>
double real_part(T v) {
  return std::real(v);
}

template <Scalar T>
void check_options(const ArnoldiOptions& opts) {
  if (opts.reorth < 0 || opts.reorth > 1) throw Error(ErrorCode::InvalidArgument, "reorth must be 0 or 1");
}

}  // namespace

template <Scalar T>
HessenbergRecurrence<T> HessenbergRecurrence<T>::from_column_major(int degree, std::vector<T> entries) {
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
  HessenbergRecurrence h(degree);
  if (entries.size() != h.entries_.size()) {
    throw Error(ErrorCode::DimensionMismatch, "Hessenberg entry count " + std::to_string(entries.size()) +
                                                  " does not match degree " + std::to_string(degree));
  }
  require_finite<T>(entries, "Hessenberg matrix");
  h.entries_ = std::move(entries);
  for (std::size_t k = 0; k < h.cols(); ++k) {
    for (std::size_t j = k + 2; j < h.rows(); ++j) {
      if (h(j, k) != T(0)) throw Error(ErrorCode::InvalidArgument, "Hessenberg matrix has fill below the subdiagonal");
    }
    const T sub = h(k + 1, k);
    if (!(std::real(sub) > 0.0) || std::imag(sub) != 0.0) {
      throw Error(ErrorCode::InvalidArgument, "Hessenberg subdiagonal must be real and positive");
    }
  }
  return h;
}

template <Scalar T>
std::pair<DenseMatrix<T>, HessenbergRecurrence<T>> arnoldi_basis(std::span<const T> x, int degree, int reorth) {
  const std::size_t m = x.size();
  const auto n = static_cast<std::size_t>(degree);
  const double scale = std::sqrt(static_cast<double>(m));
  const double breakdown_at = kBreakdownTolerance * max_abs(x);

  DenseMatrix<T> q(m, n + 1);
  HessenbergRecurrence<T> h(degree);
  std::fill(q.col(0).begin(), q.col(0).end(), T(1));

  std::vector<T> v(m);
  for (std::size_t k = 1; k <= n; ++k) {
    std::span<T> w(v);
    simd::mul(w, x, std::span<const T>(q.col(k - 1)));
    for (int sweep = 0; sweep <= reorth; ++sweep) {
      for (std::size_t j = 0; j < k; ++j) {
        const T coef = simd::dot(std::span<const T>(q.col(j)), std::span<const T>(w)) / static_cast<double>(m);
        h(j, k - 1) += coef;
        simd::axpy(w, -coef, std::span<const T>(q.col(j)));
      }
    }
    const double norm = std::sqrt(simd::squared_norm(std::span<const T>(w))) / scale;
    if (!(norm > breakdown_at)) {
      throw Error(ErrorCode::Breakdown, "Arnoldi breakdown at step " + std::to_string(k) + ": residual norm " +
                                            std::to_string(norm));
    }
    h(k, k - 1) = T(norm);
    simd::divide(q.col(k), std::span<const T>(w), norm);
  }
  return {std::move(q), std::move(h)};
}

template <Scalar T>
DenseMatrix<T> evaluate_basis(const HessenbergRecurrence<T>& h, std::span<const T> s) {
  const auto n = static_cast<std::size_t>(h.degree());
  DenseMatrix<T> w(s.size(), n + 1);
  std::fill(w.col(0).begin(), w.col(0).end(), T(1));
  std::vector<T> v(s.size());
  for (std::size_t k = 1; k <= n; ++k) {
    std::span<T> acc(v);
    simd::mul(acc, s, std::span<const T>(w.col(k - 1)));
    for (std::size_t j = 0; j < k; ++j) simd::axpy(acc, -h(j, k - 1), std::span<const T>(w.col(j)));
    simd::divide(w.col(k), std::span<const T>(acc), real_part(h(k, k - 1)));
  }
  return w;
}

template <Scalar T>
double orthogonality_defect(const DenseMatrix<T>& q) {
  const double m = static_cast<double>(q.rows());
  double worst = 0.0;
  for (std::size_t i = 0; i < q.cols(); ++i) {
    for (std::size_t j = 0; j < q.cols(); ++j) {
      const T g = simd::dot(q.col(i), q.col(j)) / m;
      worst = std::max(worst, std::abs(g - T(i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

template <Scalar T>
ArnoldiFit<T> arnoldi_fit(std::span<const T> x, std::span<const T> f, int degree, const ArnoldiOptions& opts) {
  check_options<T>(opts);
  detail::check_fit_inputs(x, f.size(), degree, static_cast<std::size_t>(degree) + 1);
  require_finite(f, "values");

  auto [q, h] = arnoldi_basis(x, degree, opts.reorth);
  auto solved = lstsq(q, f, RankPolicy::Warn);

  ArnoldiFit<T> fit;
  fit.model.degree = degree;
  fit.model.coeffs = std::move(solved.x);
  fit.model.hessenberg = std::move(h);
  fit.model.rank_warning = solved.rank_deficient;
  if (opts.keep_basis) {
    fit.diagnostics.orthogonality_defect = orthogonality_defect(q);
    fit.diagnostics.basis = std::move(q);
  }
  return fit;
}

template <Scalar T>
std::vector<T> arnoldi_eval(const ArnoldiModel<T>& model, std::span<const T> s) {
  if (s.empty()) return {};
  require_finite(s, "evaluation points");
  const DenseMatrix<T> w = evaluate_basis(model.hessenberg, s);
  return matvec(w, std::span<const T>(model.coeffs));
}

ArnoldiFit<cplx> arnoldi_fit_realpart(std::span<const cplx> z, std::span<const double> f, int degree,
                                      const ArnoldiOptions& opts) {
  check_options<cplx>(opts);
  detail::check_fit_inputs(z, f.size(), degree, 2 * static_cast<std::size_t>(degree) + 1);
  require_finite(f, "values");

  auto [q, h] = arnoldi_basis(z, degree, opts.reorth);
  auto solved = lstsq(detail::realpart_system(q), f, RankPolicy::Warn);

  ArnoldiFit<cplx> fit;
  fit.model.degree = degree;
  fit.model.coeffs = detail::fold_realpart(solved.x, degree);
  fit.model.hessenberg = std::move(h);
  fit.model.realpart = true;
  fit.model.rank_warning = solved.rank_deficient;
  if (opts.keep_basis) {
    fit.diagnostics.orthogonality_defect = orthogonality_defect(q);
    fit.diagnostics.basis = std::move(q);
  }
  return fit;
}

std::vector<double> arnoldi_eval_realpart(const ArnoldiModel<cplx>& model, std::span<const cplx> s) {
  const std::vector<cplx> values = arnoldi_eval(model, s);
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
  return out;
}

template class HessenbergRecurrence<double>;
template class HessenbergRecurrence<cplx>;
template std::pair<DenseMatrix<double>, HessenbergRecurrence<double>> arnoldi_basis<double>(std::span<const double>,
                                                                                             int, int);
template std::pair<DenseMatrix<cplx>, HessenbergRecurrence<cplx>> arnoldi_basis<cplx>(std::span<const cplx>, int, int);
template DenseMatrix<double> evaluate_basis<double>(const HessenbergRecurrence<double>&, std::span<const double>);
template DenseMatrix<cplx> evaluate_basis<cplx>(const HessenbergRecurrence<cplx>&, std::span<const cplx>);
template double orthogonality_defect<double>(const DenseMatrix<double>&);
template double orthogonality_defect<cplx>(const DenseMatrix<cplx>&);
template ArnoldiFit<double> arnoldi_fit<double>(std::span<const double>, std::span<const double>, int,
                                                const ArnoldiOptions&);
template ArnoldiFit<cplx> arnoldi_fit<cplx>(std::span<const cplx>, std::span<const cplx>, int, const ArnoldiOptions&);
template std::vector<double> arnoldi_eval<double>(const ArnoldiModel<double>&, std::span<const double>);
template std::vector<cplx> arnoldi_eval<cplx>(const ArnoldiModel<cplx>&, std::span<const cplx>);

}  // namespace vwa
