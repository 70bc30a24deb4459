// NEON variants for AArch64. Two 128-bit registers stand in for the four
// canonical reduction lanes.

#include <arm_neon.h>

#include "vwa/simd/kernels.hpp"

namespace vwa::simd {
namespace {

const float64x2_t kNegateLow = {-1.0, 1.0};

void mul_r(double* out, const double* a, const double* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(out + i, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  for (; i < n; ++i) out[i] = a[i] * b[i];
}

// One complex entry per register: (re, im).
inline float64x2_t cmul(float64x2_t a, float64x2_t b) {
  const float64x2_t a_re = vdupq_laneq_f64(a, 0);
  const float64x2_t a_im = vdupq_laneq_f64(a, 1);
  const float64x2_t b_swap = vextq_f64(b, b, 1);
  const float64x2_t t = vmulq_f64(vmulq_f64(a_im, b_swap), kNegateLow);
  return vaddq_f64(vmulq_f64(a_re, b), t);
}

void mul_c(double* out, const double* a, const double* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    vst1q_f64(out + 2 * i, cmul(vld1q_f64(a + 2 * i), vld1q_f64(b + 2 * i)));
  }
}

void axpy_r(double* y, double alpha, const double* x, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] = y[i] + alpha * x[i];
}

void axpy_c(double* y, double alpha_re, double alpha_im, const double* x, std::size_t n) {
  const float64x2_t alpha = {alpha_re, alpha_im};
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t p = cmul(alpha, vld1q_f64(x + 2 * i));
    vst1q_f64(y + 2 * i, vaddq_f64(vld1q_f64(y + 2 * i), p));
  }
}

void div_r(double* y, const double* x, double d, std::size_t n) {
  const float64x2_t vd = vdupq_n_f64(d);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(y + i, vdivq_f64(vld1q_f64(x + i), vd));
  for (; i < n; ++i) y[i] = x[i] / d;
}

void div_c(double* y, const double* x, double d, std::size_t n) { div_r(y, x, d, 2 * n); }

double dot_r(const double* a, const double* b, std::size_t n) {
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  const std::size_t blocked = n & ~std::size_t{3};
  for (std::size_t i = 0; i < blocked; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  double total = (vgetq_lane_f64(lo, 0) + vgetq_lane_f64(lo, 1)) +
                 (vgetq_lane_f64(hi, 0) + vgetq_lane_f64(hi, 1));
  for (std::size_t i = blocked; i < n; ++i) total = total + a[i] * b[i];
  return total;
}

void dot_c(const double* a, const double* b, std::size_t n, double* re, double* im) {
  float64x2_t same_lo = vdupq_n_f64(0.0), same_hi = vdupq_n_f64(0.0);
  float64x2_t cross_lo = vdupq_n_f64(0.0), cross_hi = vdupq_n_f64(0.0);
  const std::size_t blocked = n & ~std::size_t{1};
  for (std::size_t i = 0; i < blocked; i += 2) {
    const float64x2_t a0 = vld1q_f64(a + 2 * i), a1 = vld1q_f64(a + 2 * i + 2);
    const float64x2_t b0 = vld1q_f64(b + 2 * i), b1 = vld1q_f64(b + 2 * i + 2);
    same_lo = vaddq_f64(same_lo, vmulq_f64(a0, b0));
    same_hi = vaddq_f64(same_hi, vmulq_f64(a1, b1));
    cross_lo = vaddq_f64(cross_lo, vmulq_f64(a0, vextq_f64(b0, b0, 1)));
    cross_hi = vaddq_f64(cross_hi, vmulq_f64(a1, vextq_f64(b1, b1, 1)));
  }
  double total_re = (vgetq_lane_f64(same_lo, 0) + vgetq_lane_f64(same_lo, 1)) +
                    (vgetq_lane_f64(same_hi, 0) + vgetq_lane_f64(same_hi, 1));
  double total_im = (vgetq_lane_f64(cross_lo, 0) - vgetq_lane_f64(cross_lo, 1)) +
                    (vgetq_lane_f64(cross_hi, 0) - vgetq_lane_f64(cross_hi, 1));
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

const KernelTable& neon_kernels() { return kTable; }

}  // namespace vwa::simd
