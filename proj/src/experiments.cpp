#include "vwa/experiments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace vwa::experiments {
namespace {

constexpr std::size_t kGridPoints = 1000;

double runge(double x) { return 1.0 / (1.0 + 25.0 * x * x); }

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

template <class Fn>
std::vector<double> sample(std::span<const double> x, Fn fn) {
  std::vector<double> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = fn(x[i]);
  return out;
}

double max_deviation(std::span<const double> a, std::span<const double> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = std::abs(a[i] - b[i]);
    if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, d);
  }
  return worst;
}

// Fit real data at real nodes with one method, evaluate on each grid.
std::vector<std::vector<double>> fit_and_eval(std::span<const double> x, std::span<const double> f, int n,
                                              Method method, std::initializer_list<std::span<const double>> grids) {
  std::vector<std::vector<double>> out;
  if (method == Method::Plain) {
    const auto model = polyfit<double>(x, f, n);
    for (auto g : grids) out.push_back(polyval(model, g));
  } else {
    const auto model = arnoldi_fit<double>(x, f, n).model;
    for (auto g : grids) out.push_back(arnoldi_eval(model, g));
  }
  return out;
}

std::vector<cplx> half_circle(std::span<const double> x) {
  std::vector<cplx> z(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) z[i] = std::polar(1.0, std::numbers::pi * x[i] / 2.0);
  return z;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(17);
  os << v;
  return os.str();
}

std::string join_degrees(std::span<const int> degrees) {
  if (degrees.empty()) return "";
  std::ostringstream os;
  os << degrees.front() << ".." << degrees.back() << " (" << degrees.size() << " values)";
  return os.str();
}

void check_degrees(std::span<const int> degrees) {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] < 0) throw Error(ErrorCode::InvalidArgument, "degrees must be non-negative");
    if (i > 0 && degrees[i] <= degrees[i - 1]) {
      throw Error(ErrorCode::InvalidArgument, "degrees must be strictly increasing");
    }
  }
}

double blob_radius(double theta) {
  return 1.0 + 0.1 * std::cos(2.0 * theta) + 0.05 * std::sin(2.0 * theta) + 0.15 * std::cos(3.0 * theta);
}

}  // namespace

std::string_view to_string(Method method) { return method == Method::Plain ? "plain" : "arnoldi"; }

double sanitize_error(double error) {
  return std::isfinite(error) ? error : std::numeric_limits<double>::infinity();
}

std::vector<int> degree_grid(int nmax, int step, int first) {
  if (step < 1) throw Error(ErrorCode::InvalidArgument, "step must be at least 1");
  if (nmax < step) throw Error(ErrorCode::InvalidArgument, "nmax must be at least step");
  if (first < 0) first = step;
  std::vector<int> out;
  for (int n = first; n <= nmax; n += step) out.push_back(n);
  return out;
}

std::vector<double> linspace(double a, double b, std::size_t count) {
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = a;
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  out.back() = b;
  return out;
}

std::vector<double> chebyshev_points(int n) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "negative degree");
  if (n == 0) return {1.0};
  std::vector<double> x(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) x[j] = std::cos(j * std::numbers::pi / n);
  return x;
}

// ---------------------------------------------------------------------------
// Chebyshev / Runge

double chebyshev_runge_error(int n, Method method) {
  const auto x = chebyshev_points(n);
  const auto f = sample(x, runge);
  const auto grid = linspace(-1.0, 1.0, kGridPoints);
  const auto exact = sample(grid, runge);
  const auto values = fit_and_eval(x, f, n, method, {grid});
  return sanitize_error(max_deviation(values[0], exact));
}

ConvergenceTable chebyshev_runge(std::span<const int> degrees) {
  check_degrees(degrees);
  ConvergenceTable table;
  table.id = "chebyshev";
  table.metadata = {{"experiment", "chebyshev"},
                    {"target", "1/(1+25x^2)"},
                    {"fit_nodes", "n+1 Chebyshev points cos(j pi/n)"},
                    {"eval_grid", "1000 equispaced points in [-1,1] inclusive"},
                    {"error", "max abs deviation on eval_grid"},
                    {"degrees", join_degrees(degrees)}};
  for (int n : degrees) {
    table.rows.push_back({n, chebyshev_runge_error(n, Method::Plain), chebyshev_runge_error(n, Method::Arnoldi), {}});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Two intervals

std::vector<double> two_interval_nodes() {
  auto left = linspace(-1.0, -1.0 / 3.0, 500);
  const auto right = linspace(1.0 / 3.0, 1.0, 500);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::vector<double> two_interval_offgrid() {
  std::vector<double> out;
  out.reserve(2000);
  for (auto [a, b] : {std::pair{-1.0, -1.0 / 3.0}, std::pair{1.0 / 3.0, 1.0}}) {
    for (int j = 0; j < 1000; ++j) out.push_back(a + (b - a) * (j + 0.5) / 1000.0);
  }
  return out;
}

TwoIntervalErrors two_interval_sign_error(int n, Method method) {
  const auto x = two_interval_nodes();
  const auto f = sample(x, sign);
  const auto off = two_interval_offgrid();
  const auto off_exact = sample(off, sign);
  const auto values = fit_and_eval(x, f, n, method, {x, off});
  return {sanitize_error(max_deviation(values[0], f)), sanitize_error(max_deviation(values[1], off_exact))};
}

ConvergenceTable two_interval_sign(std::span<const int> degrees) {
  check_degrees(degrees);
  ConvergenceTable table;
  table.id = "twointerval";
  table.extra_columns = {"error_plain_offgrid", "error_arnoldi_offgrid"};
  table.metadata = {{"experiment", "twointerval"},
                    {"target", "sign(x)"},
                    {"fit_nodes", "500 equispaced points in each of [-1,-1/3] and [1/3,1]"},
                    {"eval_grid", "fit nodes"},
                    {"offgrid", "1000 cell midpoints in each interval"},
                    {"error", "max abs deviation"},
                    {"degrees", join_degrees(degrees)}};
  for (int n : degrees) {
    const auto plain = two_interval_sign_error(n, Method::Plain);
    const auto arnoldi = two_interval_sign_error(n, Method::Arnoldi);
    table.rows.push_back({n, plain.on_grid, arnoldi.on_grid, {plain.off_grid, arnoldi.off_grid}});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Fourier extension

double fourier_extension_error(int n, Method method, const FourierOptions& opts) {
  const auto target = [&](double x) { return opts.target == FourierTarget::Constant ? 1.0 : 1.0 / (10.0 - 9.0 * x); };
  const auto x = linspace(-1.0, 1.0, opts.samples);
  const auto z = half_circle(x);
  const auto f = sample(x, target);
  const auto grid = linspace(-1.0, 1.0, kGridPoints);
  const auto zs = half_circle(grid);
  const auto exact = sample(grid, target);

  std::vector<double> values;
  if (method == Method::Plain) {
    values = polyval_realpart(polyfit_realpart(z, f, n), zs);
  } else {
    values = arnoldi_eval_realpart(arnoldi_fit_realpart(z, f, n).model, zs);
  }
  return sanitize_error(max_deviation(values, exact));
}

ConvergenceTable fourier_extension(std::span<const int> degrees, const FourierOptions& opts) {
  check_degrees(degrees);
  ConvergenceTable table;
  table.id = "fourext";
  table.metadata = {
      {"experiment", "fourext"},
      {"target", opts.target == FourierTarget::Constant ? "1" : "1/(10-9x)"},
      {"basis", "Re(sum_{k<=n} c_k z^k), z = exp(i pi x/2)"},
      {"fit_nodes", std::to_string(opts.samples) + " equispaced points in [-1,1]"},
      {"eval_grid", "1000 equispaced points in [-1,1] inclusive"},
      {"error", "max abs deviation on eval_grid"},
      {"degrees", join_degrees(degrees)}};
  for (int n : degrees) {
    table.rows.push_back(
        {n, fourier_extension_error(n, Method::Plain, opts), fourier_extension_error(n, Method::Arnoldi, opts), {}});
  }
  return table;
}

// ---------------------------------------------------------------------------
// Conformal map

namespace {

cplx raw_curve_point(BlobCurve::Shape shape, double theta) {
  const double r = shape == BlobCurve::Shape::Blob ? blob_radius(theta) : 1.0;
  return std::polar(r, theta);
}

BlobCurve make_curve(BlobCurve::Shape shape, std::size_t m_fit, std::size_t m_test) {
  if (m_fit < 3 || m_test < 1) throw Error(ErrorCode::InvalidArgument, "too few curve nodes");
  BlobCurve c;
  c.shape = shape;
  std::vector<cplx> raw(m_fit);
  double largest = 0.0;
  for (std::size_t j = 0; j < m_fit; ++j) {
    raw[j] = raw_curve_point(shape, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m_fit));
    largest = std::max(largest, std::abs(raw[j]));
  }
  c.scale = shape == BlobCurve::Shape::Circle ? 1.0 : largest;
  c.fit_nodes.resize(m_fit);
  for (std::size_t j = 0; j < m_fit; ++j) c.fit_nodes[j] = raw[j] / c.scale;
  c.test_nodes.resize(m_test);
  for (std::size_t j = 0; j < m_test; ++j) {
    c.test_nodes[j] = c.point(2.0 * std::numbers::pi * (static_cast<double>(j) + 0.5) / static_cast<double>(m_test));
  }
  return c;
}

double residual_on(const ConformalModel& model, std::span<const cplx> nodes) {
  const auto g = conformal_map_points(model, nodes);
  double worst = 0.0;
  for (const cplx& v : g) {
    const double d = std::abs(std::abs(v) - 1.0);
    if (!std::isfinite(d)) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, d);
  }
  return worst;
}

}  // namespace

BlobCurve BlobCurve::blob(std::size_t m_fit, std::size_t m_test) { return make_curve(Shape::Blob, m_fit, m_test); }

BlobCurve BlobCurve::circle(std::size_t m_fit, std::size_t m_test) {
  return make_curve(Shape::Circle, m_fit, m_test);
}

cplx BlobCurve::point(double theta) const { return raw_curve_point(shape, theta) / scale; }

std::string BlobCurve::description() const {
  if (shape == Shape::Circle) return "z(t) = exp(i t)";
  return "z(t) = exp(i t) (1 + 0.1 cos 2t + 0.05 sin 2t + 0.15 cos 3t) / " + format_double(scale);
}

std::vector<cplx> ConformalModel::eval_h(std::span<const cplx> pts) const {
  std::vector<cplx> values = std::visit(
      [&](const auto& m) {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, PlainModel<cplx>>) {
          return polyval(m, pts);
        } else {
          return arnoldi_eval(m, pts);
        }
      },
      h);
  for (cplx& v : values) v -= cplx(0.0, rotation);
  return values;
}

std::vector<cplx> conformal_map_points(const ConformalModel& model, std::span<const cplx> pts) {
  const auto h = model.eval_h(pts);
  std::vector<cplx> g(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) g[i] = pts[i] * std::exp(h[i]);
  return g;
}

ConformalResult conformal_blob(const BlobCurve& curve, int n, Method method) {
  std::vector<double> f(curve.fit_nodes.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = -std::log(std::abs(curve.fit_nodes[i]));

  ConformalResult result;
  if (method == Method::Plain) {
    result.model.h = polyfit_realpart(curve.fit_nodes, f, n);
  } else {
    result.model.h = arnoldi_fit_realpart(curve.fit_nodes, f, n).model;
  }
  const cplx origin[1] = {cplx(0.0, 0.0)};
  result.model.rotation = result.model.eval_h(origin)[0].imag();
  result.residual = residual_on(result.model, curve.test_nodes);
  return result;
}

ConvergenceTable conformal_table(const BlobCurve& curve, std::span<const int> degrees) {
  check_degrees(degrees);
  ConvergenceTable table;
  table.id = "conformal";
  table.metadata = {{"experiment", "conformal"},
                    {"curve", curve.description()},
                    {"fit_nodes", std::to_string(curve.fit_nodes.size()) + " points at t = 2 pi j/m"},
                    {"test_nodes", std::to_string(curve.test_nodes.size()) + " points at t = 2 pi (j+1/2)/m_test"},
                    {"boundary_condition", "Re h = -log|z|"},
                    {"error", "max over test nodes of ||g(z)| - 1|"},
                    {"degrees", join_degrees(degrees)}};
  for (int n : degrees) {
    table.rows.push_back(
        {n, conformal_blob(curve, n, Method::Plain).residual, conformal_blob(curve, n, Method::Arnoldi).residual, {}});
  }
  return table;
}

std::vector<MappedPoint> conformal_figure_points(const BlobCurve& curve, const ConformalModel& model) {
  std::vector<MappedPoint> out;
  auto emit = [&](const std::string& kind, int id, const std::vector<cplx>& z) {
    const auto g = conformal_map_points(model, z);
    for (std::size_t i = 0; i < z.size(); ++i) out.push_back({kind, id, z[i], g[i]});
  };

  emit("boundary", 0, curve.test_nodes);

  constexpr int kLevels = 9;
  constexpr int kLevelPoints = 400;
  for (int l = 1; l <= kLevels; ++l) {
    const double rho = static_cast<double>(l) / (kLevels + 1);
    std::vector<cplx> z(kLevelPoints + 1);
    for (int j = 0; j <= kLevelPoints; ++j) z[j] = rho * curve.point(2.0 * std::numbers::pi * j / kLevelPoints);
    emit("level", l, z);
  }

  constexpr int kSpokes = 16;
  constexpr int kSpokePoints = 50;
  for (int s = 0; s < kSpokes; ++s) {
    const cplx end = curve.point(2.0 * std::numbers::pi * s / kSpokes);
    std::vector<cplx> z(kSpokePoints + 1);
    for (int j = 0; j <= kSpokePoints; ++j) z[j] = end * (static_cast<double>(j) / kSpokePoints);
    emit("spoke", s, z);
  }
  return out;
}

}  // namespace vwa::experiments
