#pragma once

// Vector kernels behind every inner loop of the library.
//
// Each kernel exists as a scalar reference and as ISA-specific variants
// (AVX2 on x86-64, NEON on AArch64). The variant is chosen at runtime from
// the CPU features. All variants produce bit-identical results: elementwise
// kernels perform the same IEEE operations per entry, and reductions follow
// one canonical order (four interleaved partial sums combined as
// (s0 + s1) + (s2 + s3), then the tail in sequence) that the scalar reference
// reproduces exactly.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace vwa::simd {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2, Neon };

std::string_view to_string(Isa isa);

// Complex data is passed as interleaved (re, im) doubles; `n` counts complex
// entries.
struct KernelTable {
  // out[i] = a[i] * b[i]
  void (*mul_r)(double* out, const double* a, const double* b, std::size_t n);
  void (*mul_c)(double* out, const double* a, const double* b, std::size_t n);
  // y[i] += alpha * x[i]
  void (*axpy_r)(double* y, double alpha, const double* x, std::size_t n);
  void (*axpy_c)(double* y, double alpha_re, double alpha_im, const double* x,
                 std::size_t n);
  // y[i] = x[i] / d, d real
  void (*div_r)(double* y, const double* x, double d, std::size_t n);
  void (*div_c)(double* y, const double* x, double d, std::size_t n);
  // sum a[i] * b[i]
  double (*dot_r)(const double* a, const double* b, std::size_t n);
  // sum conj(a[i]) * b[i]
  void (*dot_c)(const double* a, const double* b, std::size_t n, double* re,
                double* im);
};

const KernelTable& scalar_kernels();
#if defined(__x86_64__) || defined(_M_X64)
const KernelTable& avx2_kernels();
#endif
#if defined(__aarch64__)
const KernelTable& neon_kernels();
#endif

bool isa_supported(Isa isa);
// Best variant supported by the running CPU.
Isa detect_isa();
Isa active_isa();
// Switches the variant used by the typed wrappers below. Returns false and
// leaves the selection unchanged if `isa` is not supported here.
bool set_active_isa(Isa isa);
const KernelTable& kernels_for(Isa isa);
const KernelTable& active_kernels();

// Typed front end over the active table.

inline const double* raw(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* raw(cplx* p) { return reinterpret_cast<double*>(p); }

inline void mul(std::span<double> out, std::span<const double> a, std::span<const double> b) {
  active_kernels().mul_r(out.data(), a.data(), b.data(), out.size());
}
inline void mul(std::span<cplx> out, std::span<const cplx> a, std::span<const cplx> b) {
  active_kernels().mul_c(raw(out.data()), raw(a.data()), raw(b.data()), out.size());
}

inline void axpy(std::span<double> y, double alpha, std::span<const double> x) {
  active_kernels().axpy_r(y.data(), alpha, x.data(), y.size());
}
inline void axpy(std::span<cplx> y, cplx alpha, std::span<const cplx> x) {
  active_kernels().axpy_c(raw(y.data()), alpha.real(), alpha.imag(), raw(x.data()), y.size());
}

inline void divide(std::span<double> y, std::span<const double> x, double d) {
  active_kernels().div_r(y.data(), x.data(), d, y.size());
}
inline void divide(std::span<cplx> y, std::span<const cplx> x, double d) {
  active_kernels().div_c(raw(y.data()), raw(x.data()), d, y.size());
}

inline double dot(std::span<const double> a, std::span<const double> b) {
  return active_kernels().dot_r(a.data(), b.data(), a.size());
}
inline cplx dot(std::span<const cplx> a, std::span<const cplx> b) {
  double re = 0.0;
  double im = 0.0;
  active_kernels().dot_c(raw(a.data()), raw(b.data()), a.size(), &re, &im);
  return {re, im};
}

inline double squared_norm(std::span<const double> a) { return dot(a, a); }
inline double squared_norm(std::span<const cplx> a) { return dot(a, a).real(); }

}  // namespace vwa::simd
