#include "vwa/io/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace vwa::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool try_parse(std::string_view text, double& out) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::Parse, "line " + std::to_string(line) + ": " + what);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::size_t line) {
  double v = 0.0;
  if (!try_parse(text, v)) parse_error(line, "cannot parse '" + std::string(trim(text)) + "' as a number");
  return v;
}

int CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t line_no = 0;
  std::size_t width = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view raw = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      table.comments.emplace_back(trim(line.substr(1)));
      continue;
    }
    const auto fields = split(line, ',');
    std::vector<double> values(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size(); ++i) numeric = numeric && try_parse(fields[i], values[i]);

    if (!numeric && table.header.empty() && table.rows.empty()) {
      for (auto f : fields) table.header.emplace_back(f);
      width = fields.size();
      continue;
    }
    if (!numeric) {
      for (auto f : fields) {
        double ignored = 0.0;
        if (!try_parse(f, ignored)) parse_error(line_no, "cannot parse '" + std::string(f) + "' as a number");
      }
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) {
      parse_error(line_no, "expected " + std::to_string(width) + " columns, found " + std::to_string(fields.size()));
    }
    table.rows.push_back(std::move(values));
    table.line_numbers.push_back(line_no);
  }
  return table;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

CsvTable read_csv(const std::filesystem::path& path) { return parse_csv(read_file(path)); }

PointsData parse_points(std::string_view text) {
  const CsvTable t = parse_csv(text);
  if (t.rows.empty()) throw Error(ErrorCode::Parse, "points file has no data rows");
  int cx = -1, cxi = -1, cf = -1, cfi = -1;
  if (!t.header.empty()) {
    cx = t.column("x");
    cxi = t.column("xi");
    cf = t.column("f");
    cfi = t.column("fi");
    if (cx < 0 || cf < 0) throw Error(ErrorCode::Parse, "points header must name columns x and f");
  } else {
    switch (t.rows.front().size()) {
      case 2: cx = 0; cf = 1; break;
      case 3: cx = 0; cxi = 1; cf = 2; break;
      case 4: cx = 0; cxi = 1; cf = 2; cfi = 3; break;
      default:
        throw Error(ErrorCode::Parse, "line " + std::to_string(t.line_numbers.front()) +
                                          ": points file needs 2 to 4 columns (x[,xi],f[,fi])");
    }
  }
  PointsData p;
  p.complex_nodes = cxi >= 0;
  p.complex_values = cfi >= 0;
  for (const auto& row : t.rows) {
    p.x.emplace_back(row[cx], cxi >= 0 ? row[cxi] : 0.0);
    p.f.emplace_back(row[cf], cfi >= 0 ? row[cfi] : 0.0);
  }
  return p;
}

GridData parse_grid(std::string_view text) {
  const CsvTable t = parse_csv(text);
  int cs = 0, csi = -1;
  if (!t.header.empty()) {
    cs = t.column("s");
    csi = t.column("si");
    if (cs < 0) throw Error(ErrorCode::Parse, "grid header must name column s");
  } else if (!t.rows.empty()) {
    if (t.rows.front().size() > 2) {
      throw Error(ErrorCode::Parse,
                  "line " + std::to_string(t.line_numbers.front()) + ": grid file needs 1 or 2 columns (s[,si])");
    }
    if (t.rows.front().size() == 2) csi = 1;
  }
  GridData g;
  g.complex_points = csi >= 0;
  for (const auto& row : t.rows) g.s.emplace_back(row[cs], csi >= 0 ? row[csi] : 0.0);
  return g;
}

std::string format_eval(const GridData& grid, const std::vector<cplx>& y, bool complex_values) {
  std::string out = grid.complex_points ? "s,si" : "s";
  out += complex_values ? ",y,yi\n" : ",y\n";
  for (std::size_t i = 0; i < grid.s.size(); ++i) {
    out += format_double(grid.s[i].real());
    if (grid.complex_points) out += ',' + format_double(grid.s[i].imag());
    out += ',' + format_double(y[i].real());
    if (complex_values) out += ',' + format_double(y[i].imag());
    out += '\n';
  }
  return out;
}

std::string format_table(const experiments::ConvergenceTable& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata) out += "# " + key + ": " + value + "\n";
  out += "n,error_plain,error_arnoldi";
  for (const auto& c : table.extra_columns) out += ',' + c;
  out += '\n';
  for (const auto& row : table.rows) {
    out += std::to_string(row.degree);
    out += ',' + format_double(row.error_plain);
    out += ',' + format_double(row.error_arnoldi);
    for (double e : row.extra) out += ',' + format_double(e);
    out += '\n';
  }
  return out;
}

experiments::ConvergenceTable parse_table(std::string_view text) {
  const CsvTable t = parse_csv(text);
  if (t.header.size() < 3 || t.header[0] != "n" || t.header[1] != "error_plain" || t.header[2] != "error_arnoldi") {
    throw Error(ErrorCode::Parse, "table header must start with n,error_plain,error_arnoldi");
  }
  experiments::ConvergenceTable table;
  for (const auto& c : t.comments) {
    const auto colon = c.find(':');
    if (colon == std::string::npos) continue;
    table.metadata.emplace_back(std::string(trim(std::string_view(c).substr(0, colon))),
                                std::string(trim(std::string_view(c).substr(colon + 1))));
    if (table.metadata.back().first == "experiment") table.id = table.metadata.back().second;
  }
  table.extra_columns.assign(t.header.begin() + 3, t.header.end());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    experiments::TableRow out;
    out.degree = static_cast<int>(row[0]);
    if (static_cast<double>(out.degree) != row[0]) parse_error(t.line_numbers[r], "degree is not an integer");
    out.error_plain = row[1];
    out.error_arnoldi = row[2];
    out.extra.assign(row.begin() + 3, row.end());
    table.rows.push_back(std::move(out));
  }
  return table;
}

std::string format_mapped_points(const std::vector<std::pair<std::string, std::string>>& metadata,
                                 const std::vector<PointsSet>& sets) {
  std::string out;
  for (const auto& [key, value] : metadata) out += "# " + key + ": " + value + "\n";
  out += "method,kind,curve,z_re,z_im,g_re,g_im\n";
  for (const auto& set : sets) {
    for (const auto& p : set.points) {
      out += set.method + ',' + p.kind + ',' + std::to_string(p.curve) + ',';
      out += format_double(p.z.real()) + ',' + format_double(p.z.imag()) + ',';
      out += format_double(p.g.real()) + ',' + format_double(p.g.imag()) + '\n';
    }
  }
  return out;
}

}  // namespace vwa::io

namespace vwa::io {

MappedPointsFile parse_mapped_points(std::string_view text) {
  MappedPointsFile file;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool seen_header = false;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const std::string_view line =
        trim(text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start));
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string_view body = trim(line.substr(1));
      const auto colon = body.find(':');
      if (colon != std::string_view::npos) {
        file.metadata.emplace_back(std::string(trim(body.substr(0, colon))), std::string(trim(body.substr(colon + 1))));
      }
      continue;
    }
    const auto fields = split(line, ',');
    if (!seen_header) {
      if (fields.size() != 7 || fields[0] != "method" || fields[3] != "z_re") {
        parse_error(line_no, "expected header method,kind,curve,z_re,z_im,g_re,g_im");
      }
      seen_header = true;
      continue;
    }
    if (fields.size() != 7) parse_error(line_no, "expected 7 columns");
    if (file.sets.empty() || file.sets.back().method != fields[0]) file.sets.push_back({std::string(fields[0]), {}});
    experiments::MappedPoint p;
    p.kind = std::string(fields[1]);
    p.curve = static_cast<int>(parse_double(fields[2], line_no));
    p.z = {parse_double(fields[3], line_no), parse_double(fields[4], line_no)};
    p.g = {parse_double(fields[5], line_no), parse_double(fields[6], line_no)};
    file.sets.back().points.push_back(std::move(p));
  }
  if (!seen_header) throw Error(ErrorCode::Parse, "points file has no header");
  return file;
}

}  // namespace vwa::io
