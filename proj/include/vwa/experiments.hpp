#pragma once

// Deterministic drivers for the four convergence studies: Chebyshev
// interpolation of the Runge function, least squares on two intervals,
// Fourier extension, and conformal mapping of a blob via a Laplace problem.

#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "vwa/arnoldi.hpp"
#include "vwa/vandermonde.hpp"

namespace vwa::experiments {

enum class Method { Plain, Arnoldi };

std::string_view to_string(Method method);

struct TableRow {
  int degree = 0;
  double error_plain = 0.0;
  double error_arnoldi = 0.0;
  std::vector<double> extra;
};

// One row per degree, strictly increasing. A non-finite error is stored as
// +infinity (the overflow sentinel) and the run continues.
struct ConvergenceTable {
  std::string id;
  std::vector<std::string> extra_columns;
  std::vector<TableRow> rows;
  std::vector<std::pair<std::string, std::string>> metadata;
};

// Infinity for non-finite errors, the error itself otherwise.
double sanitize_error(double error);

// step, 2 step, ... up to nmax.
std::vector<int> degree_grid(int nmax, int step, int first = -1);

std::vector<double> linspace(double a, double b, std::size_t count);
std::vector<double> chebyshev_points(int n);

// Runge function 1/(1 + 25 x^2) interpolated in n+1 Chebyshev points, error
// on 1000 equispaced points of [-1, 1].
double chebyshev_runge_error(int n, Method method);
ConvergenceTable chebyshev_runge(std::span<const int> degrees);

// sign(x) fitted on 500 equispaced points in each of [-1, -1/3] and [1/3, 1].
struct TwoIntervalErrors {
  double on_grid = 0.0;
  double off_grid = 0.0;
};
std::vector<double> two_interval_nodes();
std::vector<double> two_interval_offgrid();
TwoIntervalErrors two_interval_sign_error(int n, Method method);
ConvergenceTable two_interval_sign(std::span<const int> degrees);

// 1/(10 - 9x) on [-1, 1] by Re(sum c_k z^k), z = exp(i pi x / 2).
enum class FourierTarget { Reciprocal, Constant };
struct FourierOptions {
  std::size_t samples = 1000;
  FourierTarget target = FourierTarget::Reciprocal;
};
double fourier_extension_error(int n, Method method, const FourierOptions& opts = {});
ConvergenceTable fourier_extension(std::span<const int> degrees, const FourierOptions& opts = {});

// Closed curve used for the conformal map, scaled so the fit nodes have
// maximum modulus exactly 1.
struct BlobCurve {
  enum class Shape { Blob, Circle };

  Shape shape = Shape::Blob;
  double scale = 1.0;
  std::vector<cplx> fit_nodes;
  std::vector<cplx> test_nodes;

  // Fit nodes at theta = 2 pi j / m_fit; test nodes at theta = 2 pi (j + 1/2) / m_test.
  static BlobCurve blob(std::size_t m_fit = 1000, std::size_t m_test = 2000);
  static BlobCurve circle(std::size_t m_fit = 1000, std::size_t m_test = 2000);

  // Scaled boundary point at angle theta.
  cplx point(double theta) const;
  std::string description() const;
};

// g(z) = z exp(h(z) - i Im h(0)) maps the interior onto the unit disk with
// g(0) = 0 and g'(0) > 0. `h` is fitted so that Re h = -log|z| on the curve.
struct ConformalModel {
  std::variant<PlainModel<cplx>, ArnoldiModel<cplx>> h;
  // Im h(0), removed so that g'(0) is real and positive.
  double rotation = 0.0;

  std::vector<cplx> eval_h(std::span<const cplx> pts) const;
};

struct ConformalResult {
  ConformalModel model;
  // max over test nodes of ||g(z)| - 1|.
  double residual = 0.0;
};

ConformalResult conformal_blob(const BlobCurve& curve, int n, Method method);
std::vector<cplx> conformal_map_points(const ConformalModel& model, std::span<const cplx> pts);
ConvergenceTable conformal_table(const BlobCurve& curve, std::span<const int> degrees);

// Boundary and interior grid curves (images included) for drawing the map.
struct MappedPoint {
  std::string kind;  // "boundary", "level" or "spoke"
  int curve = 0;
  cplx z;
  cplx g;
};
std::vector<MappedPoint> conformal_figure_points(const BlobCurve& curve, const ConformalModel& model);

}  // namespace vwa::experiments
