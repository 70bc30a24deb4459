#include "vwa/cli/commands.hpp"

#include <ostream>

#include <CLI11.hpp>

#include "vwa/experiments.hpp"
#include "vwa/io/csv.hpp"

namespace vwa::cli {

namespace ex = vwa::experiments;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return kDimensionMismatch;
    case ErrorCode::RankDeficient: return kRankDeficient;
    case ErrorCode::DuplicateNodes: return kDuplicateNodes;
    case ErrorCode::DegreeTooHigh: return kDegreeTooHigh;
    case ErrorCode::Breakdown: return kBreakdown;
    case ErrorCode::NonFinite: return kNonFinite;
    case ErrorCode::InvalidArgument: return kInvalidArgument;
    case ErrorCode::Io: return kIo;
    case ErrorCode::Parse: return kParse;
    case ErrorCode::SchemaVersion: return kSchemaVersion;
  }
  return kInternal;
}

FitOutcome fit_points(const io::PointsData& data, const FitArgs& args, const std::string& digest) {
  if (args.method != "plain" && args.method != "arnoldi") {
    throw Error(ErrorCode::InvalidArgument, "method must be plain or arnoldi");
  }
  if (args.reorth < 0 || args.reorth > 1) throw Error(ErrorCode::InvalidArgument, "reorth must be 0 or 1");
  if (args.method == "plain" && args.reorth != 0) {
    throw Error(ErrorCode::InvalidArgument, "--reorth applies to the arnoldi method only");
  }
  const bool arnoldi = args.method == "arnoldi";
  const ArnoldiOptions opts{args.reorth, false};

  io::ModelFile file;
  if (args.realpart) {
    if (data.complex_values) throw Error(ErrorCode::InvalidArgument, "--realpart needs real values (no fi column)");
    std::vector<double> f(data.f.size());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = data.f[i].real();
    if (arnoldi) file.model = arnoldi_fit_realpart(data.x, f, args.degree, opts).model;
    else file.model = polyfit_realpart(data.x, f, args.degree);
  } else if (data.complex_nodes || data.complex_values) {
    if (arnoldi) file.model = arnoldi_fit<cplx>(data.x, data.f, args.degree, opts).model;
    else file.model = polyfit<cplx>(data.x, data.f, args.degree);
  } else {
    std::vector<double> x(data.x.size()), f(data.f.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      x[i] = data.x[i].real();
      f[i] = data.f[i].real();
    }
    if (arnoldi) file.model = arnoldi_fit<double>(x, f, args.degree, opts).model;
    else file.model = polyfit<double>(x, f, args.degree);
  }

  FitOutcome outcome;
  outcome.rank_warning = std::visit([](const auto& m) { return m.rank_warning; }, file.model);
  file.provenance = {{"input_digest", digest},
                     {"points", args.points.filename().string()},
                     {"options",
                      {{"method", args.method},
                       {"degree", args.degree},
                       {"realpart", args.realpart},
                       {"reorth", args.reorth}}}};
  outcome.model = std::move(file);
  return outcome;
}

FitOutcome cmd_fit(const FitArgs& args) {
  const std::string text = io::read_file(args.points);
  FitOutcome outcome = fit_points(io::parse_points(text), args, io::content_digest(text));
  io::write_model(args.out, outcome.model);
  return outcome;
}

void cmd_eval(const EvalArgs& args) {
  const io::ModelFile file = io::read_model(args.model);
  const io::GridData grid = io::parse_grid(io::read_file(args.grid));

  const bool realpart = io::is_realpart(file.model);
  const bool complex_model = io::is_complex(file.model);
  std::vector<cplx> values;
  bool complex_values = false;
  if (!complex_model && !grid.complex_points) {
    std::vector<double> s(grid.s.size());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = grid.s[i].real();
    values = to_complex<double>(io::evaluate_real(file.model, s));
  } else {
    values = io::evaluate(file.model, grid.s);
    complex_values = !realpart;
  }
  io::write_file(args.out, io::format_eval(grid, values, complex_values));
}

int default_step(const std::string& name) {
  if (name == "chebyshev" || name == "twointerval") return 2;
  if (name == "fourext") return 4;
  if (name == "conformal") return 10;
  throw Error(ErrorCode::InvalidArgument, "unknown example '" + name + "' (chebyshev|twointerval|fourext|conformal)");
}

void cmd_example(const ExampleArgs& args) {
  const int step = args.step.value_or(default_step(args.name));
  if (step < 1 || args.nmax < step) throw Error(ErrorCode::InvalidArgument, "need nmax >= step >= 1");
  const std::vector<int> degrees = ex::degree_grid(args.nmax, step);

  ex::ConvergenceTable table;
  if (args.name == "chebyshev") {
    table = ex::chebyshev_runge(degrees);
  } else if (args.name == "twointerval") {
    table = ex::two_interval_sign(degrees);
  } else if (args.name == "fourext") {
    table = ex::fourier_extension(degrees);
  } else if (args.name == "conformal") {
    const auto curve = ex::BlobCurve::blob();
    table = ex::conformal_table(curve, degrees);
    if (args.points_out) {
      std::vector<std::pair<std::string, std::string>> meta = {
          {"experiment", "conformal"}, {"curve", curve.description()}, {"degree", std::to_string(args.nmax)}};
      std::vector<io::PointsSet> sets;
      for (auto method : {ex::Method::Plain, ex::Method::Arnoldi}) {
        const auto result = ex::conformal_blob(curve, args.nmax, method);
        meta.emplace_back("residual_" + std::string(ex::to_string(method)), io::format_double(result.residual));
        sets.push_back({std::string(ex::to_string(method)), ex::conformal_figure_points(curve, result.model)});
      }
      io::write_file(*args.points_out, io::format_mapped_points(meta, sets));
    }
  } else {
    default_step(args.name);
  }
  if (args.points_out && args.name != "conformal") {
    throw Error(ErrorCode::InvalidArgument, "--points-out is only produced by the conformal example");
  }
  io::write_file(args.out, io::format_table(table));
}

int run(int argc, const char* const* argv, std::ostream& err) {
  CLI::App app{"Polynomial fitting by Vandermonde and Vandermonde-with-Arnoldi"};
  app.require_subcommand(1);

  FitArgs fit;
  auto* fit_cmd = app.add_subcommand("fit", "Least-squares fit of point data, written as a JSON model");
  fit_cmd->add_option("--points", fit.points, "CSV with columns x[,xi],f[,fi]")->required();
  fit_cmd->add_option("--degree", fit.degree, "Polynomial degree n")->required();
  fit_cmd->add_option("--method", fit.method, "plain | arnoldi")
      ->check(CLI::IsMember({"plain", "arnoldi"}))
      ->capture_default_str();
  fit_cmd->add_flag("--realpart", fit.realpart, "Fit real data by Re p(z)");
  fit_cmd->add_option("--reorth", fit.reorth, "Extra Gram-Schmidt sweeps (0|1)")
      ->check(CLI::Range(0, 1))
      ->capture_default_str();
  fit_cmd->add_option("--out", fit.out, "Output model JSON")->required();

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a model on a grid");
  eval_cmd->add_option("--model", eval.model, "Model JSON")->required();
  eval_cmd->add_option("--grid", eval.grid, "CSV with columns s[,si]")->required();
  eval_cmd->add_option("--out", eval.out, "Output CSV s[,si],y[,yi]")->required();

  ExampleArgs example;
  int step = 0;
  std::string points_out;
  auto* example_cmd = app.add_subcommand("example", "Run a convergence study and write its table");
  example_cmd->add_option("name", example.name, "chebyshev | twointerval | fourext | conformal")
      ->required()
      ->check(CLI::IsMember({"chebyshev", "twointerval", "fourext", "conformal"}));
  example_cmd->add_option("--nmax", example.nmax, "Largest degree")->required();
  auto* step_opt = example_cmd->add_option("--step", step, "Degree increment");
  example_cmd->add_option("--out", example.out, "Output table CSV")->required();
  auto* points_opt = example_cmd->add_option("--points-out", points_out, "Mapped points CSV (conformal)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    err << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "Usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (fit_cmd->parsed()) {
      const auto outcome = cmd_fit(fit);
      if (outcome.rank_warning) {
        err << "warning: RankDeficient: basis is numerically rank deficient; model written anyway\n";
      }
    } else if (eval_cmd->parsed()) {
      cmd_eval(eval);
    } else if (example_cmd->parsed()) {
      if (step_opt->count() > 0) example.step = step;
      if (points_opt->count() > 0) example.points_out = points_out;
      cmd_example(example);
    }
  } catch (const Error& e) {
    err << to_string(e.code()) << ": " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "Internal: " << e.what() << "\n";
    return kInternal;
  }
  return kOk;
}

}  // namespace vwa::cli
