#pragma once

// Plain-text data formats: point and grid CSVs, evaluation output, and the
// convergence TableFile. Numbers are written with 17 significant digits via
// std::to_chars, so they read back with zero ULP change and no locale effects.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "vwa/experiments.hpp"
#include "vwa/linalg/dense.hpp"

namespace vwa::io {

std::string format_double(double v);
// Throws ErrorCode::Parse naming `line` (1-based) on malformed input.
double parse_double(std::string_view text, std::size_t line);

// A numeric CSV: optional '#' comment lines, an optional header row, then
// rows of equal width.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::string> comments;
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> line_numbers;

  // Index of a named column, or -1.
  int column(std::string_view name) const;
};

CsvTable parse_csv(std::string_view text);
CsvTable read_csv(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view contents);

// Fitting data with columns x[,xi],f[,fi]. Without a header the layout is
// taken from the column count: 2 = x,f; 3 = x,xi,f; 4 = x,xi,f,fi.
struct PointsData {
  bool complex_nodes = false;
  bool complex_values = false;
  std::vector<cplx> x;
  std::vector<cplx> f;
};
PointsData parse_points(std::string_view text);

// Evaluation grid with columns s[,si].
struct GridData {
  bool complex_points = false;
  std::vector<cplx> s;
};
GridData parse_grid(std::string_view text);

// Columns s[,si],y[,yi].
std::string format_eval(const GridData& grid, const std::vector<cplx>& y, bool complex_values);

// Header n,error_plain,error_arnoldi[,extra...] preceded by '# key: value'
// metadata lines.
std::string format_table(const experiments::ConvergenceTable& table);
experiments::ConvergenceTable parse_table(std::string_view text);

struct PointsSet {
  std::string method;
  std::vector<experiments::MappedPoint> points;
};
// Columns method,kind,curve,z_re,z_im,g_re,g_im.
std::string format_mapped_points(const std::vector<std::pair<std::string, std::string>>& metadata,
                                 const std::vector<PointsSet>& sets);

struct MappedPointsFile {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<PointsSet> sets;
};
MappedPointsFile parse_mapped_points(std::string_view text);

}  // namespace vwa::io
