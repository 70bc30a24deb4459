#include <doctest.h>

#include <numbers>

#include "support.hpp"
#include "vwa/experiments.hpp"
#include "vwa/vandermonde.hpp"

using namespace vwa;

namespace {

std::vector<cplx> circle(std::size_t m) {
  std::vector<cplx> z(m);
  for (std::size_t j = 0; j < m; ++j) z[j] = std::polar(1.0, 2 * std::numbers::pi * double(j) / double(m));
  return z;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

}  // namespace

TEST_CASE("build_vandermonde examples") {
  {
    const std::vector<double> x = {2};
    const auto a = build_vandermonde<double>(x, 2);
    CHECK(a.rows() == 1);
    CHECK(a.cols() == 3);
    CHECK(a(0, 0) == 1);
    CHECK(a(0, 1) == 2);
    CHECK(a(0, 2) == 4);
  }
  {
    const std::vector<double> x = {-1, 0, 1};
    const auto a = build_vandermonde<double>(x, 1);
    const std::vector<double> expect = {1, 1, 1, -1, 0, 1};
    CHECK(std::vector<double>(a.data().begin(), a.data().end()) == expect);
  }
  {
    const std::vector<double> x = {0.5};
    const auto a = build_vandermonde<double>(x, 3);
    CHECK(std::vector<double>(a.data().begin(), a.data().end()) == std::vector<double>{1, 0.5, 0.25, 0.125});
  }
}

TEST_CASE("polyfit examples") {
  {
    const std::vector<double> x = {-1, 0, 1}, f = {1, 0, 1};
    const auto c = polyfit<double>(x, f, 2).coeffs;
    CHECK(test::max_abs_diff<double>(c, std::vector<double>{0, 0, 1}) <= 1e-15);
  }
  {
    const std::vector<double> x = {0, 1}, f = {3, 5};
    const auto c = polyfit<double>(x, f, 1).coeffs;
    CHECK(test::max_abs_diff<double>(c, std::vector<double>{3, 2}) <= 1e-14);
  }
}

TEST_CASE("plain Runge interpolation stagnates") {
  // The interpolation error itself is ~3e-4 at n = 40, so the lower bound of
  // 1e-3 only holds from n = 80 up. The ceiling of 1e-6 holds throughout.
  for (int n = 40; n <= 200; n += 8) {
    const double err = experiments::chebyshev_runge_error(n, experiments::Method::Plain);
    CAPTURE(n);
    CHECK(err > 1e-6);
    CHECK(err <= 1.0);
    if (n >= 80) CHECK(err >= 1e-3);
  }
}

TEST_CASE("polyval examples") {
  const std::vector<double> half = {0.5};
  CHECK(polyval<double>(PlainModel<double>{2, {1, 0, 2}}, half) == std::vector<double>{1.5});
  const std::vector<double> s = {-3, 0.25, 9};
  CHECK(polyval<double>(PlainModel<double>{0, {0}}, s) == std::vector<double>{0, 0, 0});
  const std::vector<double> s01 = {0, 1};
  CHECK(polyval<double>(PlainModel<double>{1, {3, 2}}, s01) == std::vector<double>{3, 5});
}

TEST_CASE("polyfit_realpart examples") {
  const auto z = circle(8);
  SUBCASE("f = Re z") {
    std::vector<double> f(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) f[i] = z[i].real();
    const auto m = polyfit_realpart(z, f, 2);
    REQUIRE(m.coeffs.size() == 3);
    CHECK(m.realpart);
    CHECK(m.coeffs[0].imag() == 0.0);
    CHECK(std::abs(m.coeffs[0]) <= 1e-15);
    CHECK(std::abs(m.coeffs[1] - cplx(1, 0)) <= 1e-15);
    CHECK(std::abs(m.coeffs[2]) <= 1e-15);
    const auto y = polyval_realpart(m, z);
    CHECK(test::max_abs_diff<double>(y, f) <= 1e-15);
  }
  SUBCASE("constant") {
    const std::vector<double> f(z.size(), 1.0);
    const auto m = polyfit_realpart(z, f, 2);
    CHECK(std::abs(m.coeffs[0] - cplx(1, 0)) <= 1e-15);
    CHECK(std::abs(m.coeffs[1]) <= 1e-15);
    CHECK(std::abs(m.coeffs[2]) <= 1e-15);
  }
  SUBCASE("f = -Im z folds to c1 = i") {
    std::vector<double> f(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) f[i] = -z[i].imag();
    const auto m = polyfit_realpart(z, f, 2);
    CHECK(std::abs(m.coeffs[1] - cplx(0, 1)) <= 1e-15);
    CHECK(std::abs(m.coeffs[0]) <= 1e-15);
    CHECK(std::abs(m.coeffs[2]) <= 1e-15);
    // Re(i z) = -Im z
    CHECK(test::max_abs_diff<double>(polyval_realpart(m, z), f) <= 1e-15);
  }
  SUBCASE("residual equals the stacked real system residual") {
    auto g = test::rng(3);
    const auto f = test::uniform(g, z.size());
    const auto m = polyfit_realpart(z, f, 2);
    const auto sys = detail::realpart_system(build_vandermonde<cplx>(z, 2));
    const auto ab = lstsq(sys, std::span<const double>(f)).x;
    const auto stacked = matvec(sys, std::span<const double>(ab));
    CHECK(test::max_abs_diff<double>(polyval_realpart(m, z), stacked) <= 1e-15);
  }
}

TEST_CASE("polyval_realpart examples") {
  const auto s = circle(16);
  const auto ones = polyval_realpart(PlainModel<cplx>{0, {1.0}, true}, s);
  for (double v : ones) CHECK(v == 1.0);
  const auto c = polyval_realpart(PlainModel<cplx>{1, {0.0, 1.0}, true}, s);
  const auto sn = polyval_realpart(PlainModel<cplx>{1, {0.0, cplx(0, -1)}, true}, s);
  for (std::size_t j = 0; j < s.size(); ++j) {
    const double theta = std::arg(s[j]);
    CHECK(c[j] == doctest::Approx(std::cos(theta)).epsilon(1e-15));
    CHECK(std::abs(sn[j] - std::sin(theta)) <= 1e-15);
  }
}

TEST_CASE("interpolation reproduces data on spread nodes") {
  auto g = test::rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t m = 1 + g() % 10;
    const auto x = test::spread_nodes(g, m);
    const auto f = test::uniform(g, m);
    const auto y = polyval(polyfit<double>(x, f, int(m) - 1), std::span<const double>(x));
    CHECK(test::max_abs_diff<double>(y, f) <= 1e-12 * test::inf_norm<double>(f));
  }
}

TEST_CASE("polynomial reproduction") {
  auto g = test::rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = int(g() % 8);
    const std::size_t m = std::size_t(n) + 1 + g() % 5;
    const auto x = test::spread_nodes(g, m);
    const auto q = test::uniform(g, std::size_t(n) + 1);
    const auto f = polyval<double>(PlainModel<double>{n, q}, x);
    const auto c = polyfit<double>(x, f, n).coeffs;
    CHECK(test::max_abs_diff<double>(c, q) <= 1e-10);
  }
}

TEST_CASE("fit argument errors") {
  const std::vector<double> x = {0, 1, 1}, f = {0, 1, 2};
  CHECK(code_of([&] { polyfit<double>(x, f, 1); }) == ErrorCode::DuplicateNodes);
  const std::vector<double> ok = {0, 1, 2};
  CHECK(code_of([&] { polyfit<double>(ok, f, 3); }) == ErrorCode::DegreeTooHigh);
  const std::vector<double> short_f = {0, 1};
  CHECK(code_of([&] { polyfit<double>(ok, short_f, 1); }) == ErrorCode::DimensionMismatch);
  const auto z = circle(4);
  const std::vector<double> fz(4, 0.0);
  CHECK(code_of([&] { polyfit_realpart(z, fz, 2); }) == ErrorCode::DegreeTooHigh);
  const std::vector<double> bad = {0, std::numeric_limits<double>::infinity(), 2};
  CHECK(code_of([&] { polyfit<double>(bad, f, 1); }) == ErrorCode::NonFinite);
}
