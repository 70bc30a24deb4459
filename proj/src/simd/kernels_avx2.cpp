// AVX2 variants. Compiled with -mavx2 only (no FMA), so every product and sum
// rounds exactly as in the scalar reference.

#include <immintrin.h>

#include "vwa/simd/kernels.hpp"

namespace vwa::simd {
namespace {

void mul_r(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

// (ar + i ai)(br + i bi) for two entries per register.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d a_re = _mm256_movedup_pd(a);
  const __m256d a_im = _mm256_permute_pd(a, 0b1111);
  const __m256d b_swap = _mm256_permute_pd(b, 0b0101);
  return _mm256_addsub_pd(_mm256_mul_pd(a_re, b), _mm256_mul_pd(a_im, b_swap));
}

void mul_c(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    _mm256_storeu_pd(out + 2 * i, cmul(_mm256_loadu_pd(a + 2 * i), _mm256_loadu_pd(b + 2 * i)));
  }
  if (i < n) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    out[2 * i] = ar * br - ai * bi;
    out[2 * i + 1] = ar * bi + ai * br;
  }
}

void axpy_r(double* y, double alpha, const double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x + i));
    _mm256_storeu_pd(y + i, _mm256_add_pd(_mm256_loadu_pd(y + i), p));
  }
  for (; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void axpy_c(double* y, double alpha_re, double alpha_im, const double* x, std::size_t n) {
  const __m256d va_re = _mm256_set1_pd(alpha_re);
  const __m256d va_im = _mm256_set1_pd(alpha_im);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d vx = _mm256_loadu_pd(x + 2 * i);
    const __m256d x_swap = _mm256_permute_pd(vx, 0b0101);
    const __m256d p = _mm256_addsub_pd(_mm256_mul_pd(va_re, vx), _mm256_mul_pd(va_im, x_swap));
    _mm256_storeu_pd(y + 2 * i, _mm256_add_pd(_mm256_loadu_pd(y + 2 * i), p));
  }
  if (i < n) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double pr = alpha_re * xr - alpha_im * xi;
    const double pi = alpha_re * xi + alpha_im * xr;
    y[2 * i] = y[2 * i] + pr;
    y[2 * i + 1] = y[2 * i + 1] + pi;
  }
}

void div_r(double* y, const double* x, double d, std::size_t n) {
  const __m256d vd = _mm256_set1_pd(d);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, _mm256_div_pd(_mm256_loadu_pd(x + i), vd));
  for (; i < n; ++i) y[i] = x[i] / d;
}

void div_c(double* y, const double* x, double d, std::size_t n) { div_r(y, x, d, 2 * n); }

double dot_r(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  const std::size_t blocked = n & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  alignas(32) double s[4];
  _mm256_store_pd(s, acc);
  double total = (s[0] + s[1]) + (s[2] + s[3]);
  for (std::size_t i = blocked; i < n; ++i) total = total + a[i] * b[i];
  return total;
}

void dot_c(const double* a, const double* b, std::size_t n, double* re, double* im) {
  __m256d same = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  const std::size_t blocked = n & ~std::size_t{1};
  for (std::size_t i = 0; i < blocked; i += 2) {
    const __m256d va = _mm256_loadu_pd(a + 2 * i);
    const __m256d vb = _mm256_loadu_pd(b + 2 * i);
    same = _mm256_add_pd(same, _mm256_mul_pd(va, vb));
    cross = _mm256_add_pd(cross, _mm256_mul_pd(va, _mm256_permute_pd(vb, 0b0101)));
  }
  alignas(32) double s[4];
  alignas(32) double c[4];
  _mm256_store_pd(s, same);
  _mm256_store_pd(c, cross);
  double total_re = (s[0] + s[1]) + (s[2] + s[3]);
  double total_im = (c[0] - c[1]) + (c[2] - c[3]);
  if (blocked < n) {
    const double ar = a[2 * blocked], ai = a[2 * blocked + 1];
    const double br = b[2 * blocked], bi = b[2 * blocked + 1];
    total_re = total_re + (ar * br + ai * bi);
    total_im = total_im + (ar * bi - ai * br);
  }
  *re = total_re;
  *im = total_im;
}

constexpr KernelTable kTable{mul_r, mul_c, axpy_r, axpy_c, div_r, div_c, dot_r, dot_c};

}  // namespace

const KernelTable& avx2_kernels() { return kTable; }

}  // namespace vwa::simd
