#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "support.hpp"
#include "vwa/cli/commands.hpp"

using namespace vwa;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() : path(fs::temp_directory_path() / ("vwa_cli_" + std::to_string(std::random_device{}()))) {
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, std::string_view contents = {}) const {
    if (!contents.empty()) io::write_file(path / name, contents);
    return (path / name).string();
  }
};

struct Run {
  int code;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "vwa");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream err;
  const int code = cli::run(int(argv.size()), argv.data(), err);
  return {code, err.str()};
}

std::vector<double> column(const io::CsvTable& t, std::string_view name) {
  const int c = t.column(name);
  REQUIRE(c >= 0);
  std::vector<double> out;
  for (const auto& r : t.rows) out.push_back(r[std::size_t(c)]);
  return out;
}

}  // namespace

TEST_CASE("fit and eval examples") {
  TempDir dir;
  const auto pts = dir.file("pts.csv", "x,f\n-1,1\n0,0\n1,1\n");
  const auto model = dir.file("model.json");

  auto r = run({"fit", "--points", pts, "--degree", "2", "--method", "plain", "--out", model});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  const auto mf = io::read_model(model);
  const auto& c = std::get<PlainModel<double>>(mf.model).coeffs;
  CHECK(test::max_abs_diff<double>(c, std::vector<double>{0, 0, 1}) <= 1e-15);
  CHECK(mf.provenance.at("input_digest").get<std::string>().starts_with("fnv1a64:"));

  const auto grid = dir.file("grid.csv", "s\n0.5\n");
  const auto out = dir.file("out.csv");
  r = run({"eval", "--model", model, "--grid", grid, "--out", out});
  REQUIRE(r.code == 0);
  const auto y = io::read_csv(out);
  CHECK(y.header == std::vector<std::string>{"s", "y"});
  CHECK(column(y, "y")[0] == doctest::Approx(0.25).epsilon(1e-15));

  SUBCASE("interpolatory model reproduces data at its nodes") {
    const auto m2 = dir.file("a.json");
    REQUIRE(run({"fit", "--points", pts, "--degree", "2", "--out", m2}).code == 0);
    CHECK(io::read_model(m2).model.index() == 2);  // arnoldi is the default
    const auto nodes = dir.file("nodes.csv", "s\n-1\n0\n1\n");
    REQUIRE(run({"eval", "--model", m2, "--grid", nodes, "--out", out}).code == 0);
    const auto ys = column(io::read_csv(out), "y");
    CHECK(test::max_abs_diff<double>(ys, std::vector<double>{1, 0, 1}) <= 1e-12);
  }
  SUBCASE("constant model") {
    const auto flat = dir.file("flat.csv", "x,f\n-1,2.5\n0,2.5\n1,2.5\n3,2.5\n");
    const auto m3 = dir.file("k.json");
    REQUIRE(run({"fit", "--points", flat, "--degree", "0", "--out", m3}).code == 0);
    const auto many = dir.file("many.csv", "s\n-7\n0.1\n4\n");
    REQUIRE(run({"eval", "--model", m3, "--grid", many, "--out", out}).code == 0);
    for (double v : column(io::read_csv(out), "y")) CHECK(v == doctest::Approx(2.5).epsilon(1e-15));
  }
}

TEST_CASE("fit failures map to exit codes") {
  TempDir dir;
  const auto pts = dir.file("pts.csv", "x,f\n-1,1\n0,0\n1,1\n");
  const auto model = dir.file("model.json");
  auto r = run({"fit", "--points", pts, "--degree", "3", "--method", "plain", "--out", model});
  CHECK(r.code == cli::kDegreeTooHigh);
  CHECK(r.err.starts_with("DegreeTooHigh:"));
  CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  CHECK_FALSE(fs::exists(model));

  const auto dup = dir.file("dup.csv", "x,f\n0,1\n0,2\n1,1\n");
  r = run({"fit", "--points", dup, "--degree", "1", "--out", model});
  CHECK(r.code == cli::kDuplicateNodes);
  CHECK(r.err.starts_with("DuplicateNodes:"));

  const auto bad = dir.file("bad.csv", "x,f\n0,1\n1,x\n");
  r = run({"fit", "--points", bad, "--degree", "1", "--out", model});
  CHECK(r.code == cli::kParse);
  CHECK(r.err.find("line 3") != std::string::npos);

  CHECK(run({"fit", "--points", dir.file("missing.csv"), "--degree", "1", "--out", model}).code == cli::kIo);
  CHECK(run({"fit", "--points", pts, "--degree", "1", "--method", "spline", "--out", model}).code == cli::kUsage);
  CHECK(run({"fit", "--points", pts, "--degree", "1", "--reorth", "2", "--out", model}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("rank deficiency is a warning") {
  TempDir dir;
  // degree 30 on 40 equispaced points in [0, 1] is numerically rank deficient in the monomial basis
  std::string csv = "x,f\n";
  for (int i = 0; i < 40; ++i) csv += std::to_string(i / 39.0) + ",1\n";
  const auto pts = dir.file("pts.csv", csv);
  const auto model = dir.file("m.json");
  const auto r = run({"fit", "--points", pts, "--degree", "30", "--method", "plain", "--out", model});
  CHECK(r.code == cli::kOk);
  CHECK(r.err.starts_with("warning: RankDeficient:"));
  CHECK(io::read_model(model).provenance.is_object());
}

TEST_CASE("complex and realpart fits through the CLI") {
  TempDir dir;
  std::string csv = "x,xi,f\n";
  for (int j = 0; j < 16; ++j) {
    const double t = 2 * 3.141592653589793 * j / 16;
    csv += io::format_double(std::cos(t)) + "," + io::format_double(std::sin(t)) + "," + io::format_double(std::cos(t)) + "\n";
  }
  const auto pts = dir.file("pts.csv", csv);
  const auto model = dir.file("m.json");
  REQUIRE(run({"fit", "--points", pts, "--degree", "3", "--realpart", "--reorth", "1", "--out", model}).code == 0);
  const auto mf = io::read_model(model);
  CHECK(io::is_realpart(mf.model));
  const auto grid = dir.file("g.csv", "s,si\n0,1\n-1,0\n");
  const auto out = dir.file("y.csv");
  REQUIRE(run({"eval", "--model", model, "--grid", grid, "--out", out}).code == 0);
  const auto y = io::read_csv(out);
  CHECK(y.header == std::vector<std::string>{"s", "si", "y"});
  const auto ys = column(y, "y");
  CHECK(std::abs(ys[0]) <= 1e-13);
  CHECK(std::abs(ys[1] + 1) <= 1e-13);
  CHECK(run({"fit", "--points", pts, "--degree", "8", "--realpart", "--out", model}).code == cli::kDegreeTooHigh);
}

TEST_CASE("eval rejects mismatched schema") {
  TempDir dir;
  const auto model = dir.file("m.json", R"({"schema_version": 9, "method": "plain"})");
  const auto grid = dir.file("g.csv", "s\n0\n");
  const auto r = run({"eval", "--model", model, "--grid", grid, "--out", dir.file("o.csv")});
  CHECK(r.code == cli::kSchemaVersion);
  CHECK(r.err.starts_with("SchemaVersion:"));
}

TEST_CASE("example tables") {
  TempDir dir;
  const auto out = dir.file("t.csv");
  REQUIRE(run({"example", "chebyshev", "--nmax", "40", "--out", out}).code == 0);
  auto t = io::parse_table(io::read_file(out));
  CHECK(t.id == "chebyshev");
  CHECK(t.rows.size() == 20);
  CHECK(t.rows.front().degree == 2);

  REQUIRE(run({"example", "fourext", "--nmax", "20", "--step", "5", "--out", out}).code == 0);
  t = io::parse_table(io::read_file(out));
  CHECK(t.rows.size() == 4);

  CHECK(run({"example", "nope", "--nmax", "10", "--out", out}).code == cli::kUsage);
  CHECK(run({"example", "chebyshev", "--nmax", "4", "--step", "6", "--out", out}).code != 0);
}

TEST_CASE("conformal example writes mapped points within the residual") {
  TempDir dir;
  const auto out = dir.file("t.csv");
  const auto pts = dir.file("p.csv");
  REQUIRE(run({"example", "conformal", "--nmax", "40", "--out", out, "--points-out", pts}).code == 0);
  const auto file = io::parse_mapped_points(io::read_file(pts));
  REQUIRE(file.sets.size() == 2);
  for (const auto& set : file.sets) {
    double r = -1;
    for (const auto& [k, v] : file.metadata)
      if (k == "residual_" + set.method) r = io::parse_double(v, 0);
    REQUIRE(r > 0);
    std::size_t boundary = 0;
    for (const auto& p : set.points) {
      if (p.kind != "boundary") continue;
      ++boundary;
      CHECK(std::abs(p.g) >= 1 - r);
      CHECK(std::abs(p.g) <= 1 + r);
    }
    CHECK(boundary == 2000);
  }
}
