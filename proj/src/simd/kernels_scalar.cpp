// Scalar reference kernels. These define the canonical operation order that
// the SIMD variants must reproduce bit for bit.

#include "vwa/simd/kernels.hpp"

namespace vwa::simd {
namespace {

void mul_r(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

void mul_c(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    out[2 * i] = ar * br - ai * bi;
    out[2 * i + 1] = ar * bi + ai * br;
  }
}

void axpy_r(double* y, double alpha, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void axpy_c(double* y, double alpha_re, double alpha_im, const double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double pr = alpha_re * xr - alpha_im * xi;
    const double pi = alpha_re * xi + alpha_im * xr;
    y[2 * i] = y[2 * i] + pr;
    y[2 * i + 1] = y[2 * i + 1] + pi;
  }
}

void div_r(double* y, const double* x, double d, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = x[i] / d;
}

void div_c(double* y, const double* x, double d, std::size_t n) {
  for (std::size_t i = 0; i < 2 * n; ++i) y[i] = x[i] / d;
}

double dot_r(const double* a, const double* b, std::size_t n) {
  double s[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t blocked = n & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    for (std::size_t l = 0; l < 4; ++l) s[l] = s[l] + a[i + l] * b[i + l];
  }
  double total = (s[0] + s[1]) + (s[2] + s[3]);
  for (std::size_t i = blocked; i < n; ++i) total = total + a[i] * b[i];
  return total;
}

// Lanes hold two consecutive complex entries: (re0, im0, re1, im1).
void dot_c(const double* a, const double* b, std::size_t n, double* re, double* im) {
  double same[4] = {0.0, 0.0, 0.0, 0.0};
  double cross[4] = {0.0, 0.0, 0.0, 0.0};
  const std::size_t blocked = n & ~std::size_t{1};
  for (std::size_t i = 0; i < blocked; i += 2) {
    const double* pa = a + 2 * i;
    const double* pb = b + 2 * i;
    const double swapped[4] = {pb[1], pb[0], pb[3], pb[2]};
    for (std::size_t l = 0; l < 4; ++l) {
      same[l] = same[l] + pa[l] * pb[l];
      cross[l] = cross[l] + pa[l] * swapped[l];
    }
  }
  double total_re = (same[0] + same[1]) + (same[2] + same[3]);
  double total_im = (cross[0] - cross[1]) + (cross[2] - cross[3]);
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

const KernelTable& scalar_kernels() { return kTable; }

}  // namespace vwa::simd
