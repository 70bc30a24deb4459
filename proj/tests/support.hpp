#pragma once

// Test-only oracles and generators. Nothing here calls into the library's
// solver paths, so results from it are independent checks.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace vwa::test {

using cplx = std::complex<double>;

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

inline std::vector<double> uniform(std::mt19937_64& g, std::size_t n, double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> d(lo, hi);
  std::vector<double> v(n);
  for (auto& e : v) e = d(g);
  return v;
}

inline std::vector<cplx> uniform_c(std::mt19937_64& g, std::size_t n) {
  std::uniform_real_distribution<double> d(-1.0, 1.0);
  std::vector<cplx> v(n);
  for (auto& e : v) e = {d(g), d(g)};
  return v;
}

// m distinct nodes in [-1, 1] with spacing at least 0.5 * 2/m: jittered
// equispaced points.
inline std::vector<double> spread_nodes(std::mt19937_64& g, std::size_t m) {
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  std::vector<double> x(m);
  if (m == 1) return {jitter(g)};
  const double h = 2.0 / static_cast<double>(m - 1);
  for (std::size_t i = 0; i < m; ++i) x[i] = std::clamp(-1.0 + h * (static_cast<double>(i) + jitter(g)), -1.0, 1.0);
  return x;
}

template <class T>
T conj_of(T v) {
  if constexpr (std::is_same_v<T, cplx>) return std::conj(v);
  else return v;
}

// Dense row-major matrix for oracle computations.
template <class T>
struct RowMatrix {
  std::size_t rows, cols;
  std::vector<T> a;
  T& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  T operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// Gaussian elimination with partial pivoting on a square system.
template <class T>
std::vector<T> gauss_solve(RowMatrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(a(i, k)) > std::abs(a(p, k))) p = i;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(b[k], b[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const T l = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= l * a(k, j);
      b[i] -= l * b[k];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

// Least squares through the normal equations A^H A x = A^H b.
template <class T>
std::vector<T> normal_equations(const RowMatrix<T>& a, std::span<const T> b) {
  RowMatrix<T> g{a.cols, a.cols, std::vector<T>(a.cols * a.cols)};
  std::vector<T> r(a.cols);
  for (std::size_t i = 0; i < a.cols; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      T s{};
      for (std::size_t k = 0; k < a.rows; ++k) s += conj_of(a(k, i)) * a(k, j);
      g(i, j) = s;
    }
    T s{};
    for (std::size_t k = 0; k < a.rows; ++k) s += conj_of(a(k, i)) * b[k];
    r[i] = s;
  }
  return gauss_solve(g, r);
}

template <class T>
double max_abs_diff(std::span<const T> a, std::span<const T> b) {
  double w = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) w = std::max(w, std::abs(a[i] - b[i]));
  return w;
}

template <class T>
double inf_norm(std::span<const T> a) {
  double w = 0.0;
  for (const T& v : a) w = std::max(w, std::abs(v));
  return w;
}

inline bool same_bits(double a, double b) { return std::bit_cast<std::uint64_t>(a) == std::bit_cast<std::uint64_t>(b); }
inline bool same_bits(cplx a, cplx b) { return same_bits(a.real(), b.real()) && same_bits(a.imag(), b.imag()); }

template <class T>
bool same_bits(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!same_bits(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace vwa::test
