#pragma once

// Command-line front end. `run` parses arguments and maps failures to the
// documented exit codes; the cmd_* functions do the work and throw vwa::Error.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "vwa/io/csv.hpp"
#include "vwa/io/model_file.hpp"

namespace vwa::cli {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kIo = 3,
  kParse = 4,
  kSchemaVersion = 5,
  kInvalidArgument = 6,
  kDuplicateNodes = 10,
  kDegreeTooHigh = 11,
  kBreakdown = 12,
  kRankDeficient = 13,
  kDimensionMismatch = 14,
  kNonFinite = 15,
};

int exit_code_for(ErrorCode code);

struct FitArgs {
  std::filesystem::path points;
  int degree = 0;
  std::string method = "arnoldi";
  bool realpart = false;
  int reorth = 0;
  std::filesystem::path out;
};

struct FitOutcome {
  io::ModelFile model;
  bool rank_warning = false;
};

FitOutcome fit_points(const io::PointsData& data, const FitArgs& args, const std::string& digest);
FitOutcome cmd_fit(const FitArgs& args);

struct EvalArgs {
  std::filesystem::path model;
  std::filesystem::path grid;
  std::filesystem::path out;
};

void cmd_eval(const EvalArgs& args);

struct ExampleArgs {
  std::string name;
  int nmax = 0;
  std::optional<int> step;
  std::filesystem::path out;
  std::optional<std::filesystem::path> points_out;
};

int default_step(const std::string& name);
void cmd_example(const ExampleArgs& args);

// Entry point used by the `vwa` binary. Data goes to files, human text to err.
int run(int argc, const char* const* argv, std::ostream& err);

}  // namespace vwa::cli
