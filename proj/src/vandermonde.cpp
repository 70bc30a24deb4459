#include "vwa/vandermonde.hpp"

#include <string>
#include <unordered_set>

namespace vwa {
namespace detail {
namespace {

struct NodeHash {
  std::size_t operator()(double v) const noexcept { return std::hash<double>{}(v); }
  std::size_t operator()(cplx v) const noexcept {
    return std::hash<double>{}(v.real()) * 31u ^ std::hash<double>{}(v.imag());
  }
};

}  // namespace

template <Scalar T>
void check_fit_inputs(std::span<const T> x, std::size_t f_size, int degree, std::size_t unknowns) {
  if (x.empty()) throw Error(ErrorCode::DimensionMismatch, "no sample points");
  if (f_size != x.size()) {
    throw Error(ErrorCode::DimensionMismatch, "got " + std::to_string(x.size()) + " nodes but " +
                                                  std::to_string(f_size) + " values");
  }
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
  if (unknowns > x.size()) {
    throw Error(ErrorCode::DegreeTooHigh, "degree " + std::to_string(degree) + " needs " + std::to_string(unknowns) +
                                              " samples, got " + std::to_string(x.size()));
  }
  require_finite(x, "nodes");
  // Exact equality; -0.0 and 0.0 compare equal and hash alike.
  std::unordered_set<T, NodeHash> seen;
  seen.reserve(x.size());
  for (const T& v : x) {
    const T key = v == T(0) ? T(0) : v;
    if (!seen.insert(key).second) throw Error(ErrorCode::DuplicateNodes, "repeated node in sample points");
  }
}

template void check_fit_inputs<double>(std::span<const double>, std::size_t, int, std::size_t);
template void check_fit_inputs<cplx>(std::span<const cplx>, std::size_t, int, std::size_t);

DenseMatrix<double> realpart_system(const DenseMatrix<cplx>& basis) {
  const std::size_t m = basis.rows();
  const std::size_t n = basis.cols() - 1;
  DenseMatrix<double> stacked(m, 2 * n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    for (std::size_t i = 0; i < m; ++i) stacked(i, j) = basis(i, j).real();
  }
  for (std::size_t j = 1; j <= n; ++j) {
    for (std::size_t i = 0; i < m; ++i) stacked(i, n + j) = basis(i, j).imag();
  }
  return stacked;
}

std::vector<cplx> fold_realpart(std::span<const double> stacked, int degree) {
  const auto n = static_cast<std::size_t>(degree);
  std::vector<cplx> c(n + 1);
  c[0] = cplx(stacked[0], 0.0);
  for (std::size_t k = 1; k <= n; ++k) c[k] = cplx(stacked[k], -stacked[n + k]);
  return c;
}

}  // namespace detail

template <Scalar T>
DenseMatrix<T> build_vandermonde(std::span<const T> x, int degree) {
  if (x.empty()) throw Error(ErrorCode::DimensionMismatch, "no points");
  if (degree < 0) throw Error(ErrorCode::InvalidArgument, "degree must be non-negative");
  require_finite(x, "nodes");
  DenseMatrix<T> a(x.size(), static_cast<std::size_t>(degree) + 1);
  std::fill(a.col(0).begin(), a.col(0).end(), T(1));
  for (std::size_t j = 1; j < a.cols(); ++j) {
    simd::mul(a.col(j), std::span<const T>(a.col(j - 1)), x);
  }
  return a;
}

template <Scalar T>
PlainModel<T> polyfit(std::span<const T> x, std::span<const T> f, int degree) {
  detail::check_fit_inputs(x, f.size(), degree, static_cast<std::size_t>(degree) + 1);
  require_finite(f, "values");
  const DenseMatrix<T> a = build_vandermonde(x, degree);
  auto solved = lstsq(a, f, RankPolicy::Warn);
  PlainModel<T> model;
  model.degree = degree;
  model.coeffs = std::move(solved.x);
  model.rank_warning = solved.rank_deficient;
  return model;
}

template <Scalar T>
std::vector<T> polyval(const PlainModel<T>& model, std::span<const T> s) {
  if (s.empty()) return {};
  const DenseMatrix<T> a = build_vandermonde(s, model.degree);
  return matvec(a, std::span<const T>(model.coeffs));
}

PlainModel<cplx> polyfit_realpart(std::span<const cplx> z, std::span<const double> f, int degree) {
  detail::check_fit_inputs(z, f.size(), degree, 2 * static_cast<std::size_t>(degree) + 1);
  require_finite(f, "values");
  const DenseMatrix<cplx> a = build_vandermonde(z, degree);
  auto solved = lstsq(detail::realpart_system(a), f, RankPolicy::Warn);
  PlainModel<cplx> model;
  model.degree = degree;
  model.coeffs = detail::fold_realpart(solved.x, degree);
  model.realpart = true;
  model.rank_warning = solved.rank_deficient;
  return model;
}

std::vector<double> polyval_realpart(const PlainModel<cplx>& model, std::span<const cplx> s) {
  const std::vector<cplx> values = polyval(model, s);
  std::vector<double> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i].real();
  return out;
}

template DenseMatrix<double> build_vandermonde<double>(std::span<const double>, int);
template DenseMatrix<cplx> build_vandermonde<cplx>(std::span<const cplx>, int);
template PlainModel<double> polyfit<double>(std::span<const double>, std::span<const double>, int);
template PlainModel<cplx> polyfit<cplx>(std::span<const cplx>, std::span<const cplx>, int);
template std::vector<double> polyval<double>(const PlainModel<double>&, std::span<const double>);
template std::vector<cplx> polyval<cplx>(const PlainModel<cplx>&, std::span<const cplx>);

}  // namespace vwa
