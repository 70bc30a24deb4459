#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "vwa/simd/kernels.hpp"

using namespace vwa;
using vwa::test::cplx;

namespace {

std::vector<simd::Isa> variants() {
  std::vector<simd::Isa> out;
  for (auto isa : {simd::Isa::Avx2, simd::Isa::Neon}) {
    if (simd::isa_supported(isa)) out.push_back(isa);
  }
  return out;
}

std::vector<double> interleave(const std::vector<cplx>& v) {
  std::vector<double> out;
  for (auto c : v) {
    out.push_back(c.real());
    out.push_back(c.imag());
  }
  return out;
}

bool same(const std::vector<double>& a, const std::vector<double>& b) {
  return test::same_bits(std::span<const double>(a), std::span<const double>(b));
}

}  // namespace

TEST_CASE("detected ISA is supported and selectable") {
  CHECK(simd::isa_supported(simd::Isa::Scalar));
  CHECK(simd::isa_supported(simd::detect_isa()));
  const auto before = simd::active_isa();
  CHECK(simd::set_active_isa(simd::Isa::Scalar));
  CHECK(simd::active_isa() == simd::Isa::Scalar);
  CHECK(simd::set_active_isa(before));
#if defined(__x86_64__)
  CHECK_FALSE(simd::set_active_isa(simd::Isa::Neon));
#endif
}

TEST_CASE("SIMD variants match the scalar reference bit for bit") {
  const auto& ref = simd::scalar_kernels();
  auto g = test::rng(11);
  for (auto isa : variants()) {
    const auto& k = simd::kernels_for(isa);
    CAPTURE(simd::to_string(isa));
    for (std::size_t n = 0; n < 70; ++n) {
      CAPTURE(n);
      const auto a = test::uniform(g, n, -3, 3);
      const auto b = test::uniform(g, n, -3, 3);
      const auto ac = interleave(test::uniform_c(g, n));
      const auto bc = interleave(test::uniform_c(g, n));
      const double alpha = test::uniform(g, 1)[0];
      const cplx alpha_c = test::uniform_c(g, 1)[0];

      std::vector<double> r1(n), r2(n);
      ref.mul_r(r1.data(), a.data(), b.data(), n);
      k.mul_r(r2.data(), a.data(), b.data(), n);
      CHECK(same(r1, r2));

      std::vector<double> c1(2 * n), c2(2 * n);
      ref.mul_c(c1.data(), ac.data(), bc.data(), n);
      k.mul_c(c2.data(), ac.data(), bc.data(), n);
      CHECK(same(c1, c2));

      r1 = b;
      r2 = b;
      ref.axpy_r(r1.data(), alpha, a.data(), n);
      k.axpy_r(r2.data(), alpha, a.data(), n);
      CHECK(same(r1, r2));

      c1 = bc;
      c2 = bc;
      ref.axpy_c(c1.data(), alpha_c.real(), alpha_c.imag(), ac.data(), n);
      k.axpy_c(c2.data(), alpha_c.real(), alpha_c.imag(), ac.data(), n);
      CHECK(same(c1, c2));

      ref.div_r(r1.data(), a.data(), 0.7, n);
      k.div_r(r2.data(), a.data(), 0.7, n);
      CHECK(same(r1, r2));
      ref.div_c(c1.data(), ac.data(), 1.3, n);
      k.div_c(c2.data(), ac.data(), 1.3, n);
      CHECK(same(c1, c2));

      CHECK(test::same_bits(ref.dot_r(a.data(), b.data(), n), k.dot_r(a.data(), b.data(), n)));
      double re1 = 0, im1 = 0, re2 = 0, im2 = 0;
      ref.dot_c(ac.data(), bc.data(), n, &re1, &im1);
      k.dot_c(ac.data(), bc.data(), n, &re2, &im2);
      CHECK(test::same_bits(re1, re2));
      CHECK(test::same_bits(im1, im2));
    }
  }
}

TEST_CASE("scalar kernels agree with straightforward std::complex arithmetic") {
  auto g = test::rng(5);
  for (std::size_t n : {1u, 2u, 3u, 7u, 64u, 129u}) {
    const auto a = test::uniform_c(g, n);
    const auto b = test::uniform_c(g, n);
    std::complex<long double> expect = 0;
    for (std::size_t i = 0; i < n; ++i) {
      expect += std::conj(std::complex<long double>(a[i])) * std::complex<long double>(b[i]);
    }
    const cplx got = simd::dot(std::span<const cplx>(a), std::span<const cplx>(b));
    CHECK(std::abs(std::complex<long double>(got) - expect) <= 1e-14L * static_cast<long double>(n));

    std::vector<cplx> prod(n);
    simd::mul(std::span<cplx>(prod), std::span<const cplx>(a), std::span<const cplx>(b));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(prod[i] - a[i] * b[i]) <= 1e-15);

    std::vector<cplx> y = b;
    const cplx alpha(0.3, -1.2);
    simd::axpy(std::span<cplx>(y), alpha, std::span<const cplx>(a));
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(y[i] - (b[i] + alpha * a[i])) <= 1e-15);
  }
}

TEST_CASE("real dot follows the four-lane canonical order") {
  // 1e16 + 1 - 1e16 depends on grouping; lanes (0,4),(1),(2),(3) then tail.
  const std::vector<double> a = {1e16, 1.0, -1e16, 1.0, 1.0, 0.0, 0.0, 0.0, 5.0};
  const std::vector<double> ones(a.size(), 1.0);
  const double lane0 = 1e16 + 1.0, lane1 = 1.0 + 0.0, lane2 = -1e16 + 0.0, lane3 = 1.0 + 0.0;
  const double expect = ((lane0 + lane1) + (lane2 + lane3)) + 5.0;
  for (auto isa : {simd::Isa::Scalar, simd::detect_isa()}) {
    CHECK(test::same_bits(simd::kernels_for(isa).dot_r(a.data(), ones.data(), a.size()), expect));
  }
}
