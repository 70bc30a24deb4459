#include "vwa/io/model_file.hpp"

#include <cstdio>

#include "vwa/io/csv.hpp"

namespace vwa::io {
namespace {

using nlohmann::json;

template <Scalar T>
json pairs(std::span<const T> values) {
  json out = json::array();
  for (const T& v : values) out.push_back({std::real(v), std::imag(v)});
  return out;
}

template <Scalar T>
std::vector<T> unpairs(const json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::Parse, std::string(what) + " must be an array");
  std::vector<T> out;
  out.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw Error(ErrorCode::Parse, std::string(what) + " entries must be [re, im] number pairs");
    }
    const double re = e[0].get<double>();
    const double im = e[1].get<double>();
    if constexpr (std::is_same_v<T, double>) {
      if (im != 0.0) throw Error(ErrorCode::Parse, std::string(what) + " has an imaginary part in a real model");
      out.push_back(re);
    } else {
      out.emplace_back(re, im);
    }
  }
  return out;
}

template <class M>
json common_fields(const M& m, const char* method, bool complex) {
  return json{{"schema_version", kModelSchemaVersion},
              {"method", method},
              {"field", complex ? "complex" : "real"},
              {"realpart", m.realpart},
              {"degree", m.degree},
              {"rank_warning", m.rank_warning},
              {"coefficients", pairs<typename decltype(m.coeffs)::value_type>(m.coeffs)}};
}

template <Scalar T>
PlainModel<T> plain_from(const json& j, int degree) {
  PlainModel<T> m;
  m.degree = degree;
  m.coeffs = unpairs<T>(j.at("coefficients"), "coefficients");
  m.realpart = j.at("realpart").get<bool>();
  m.rank_warning = j.value("rank_warning", false);
  return m;
}

template <Scalar T>
ArnoldiModel<T> arnoldi_from(const json& j, int degree) {
  ArnoldiModel<T> m;
  m.degree = degree;
  m.coeffs = unpairs<T>(j.at("coefficients"), "coefficients");
  m.realpart = j.at("realpart").get<bool>();
  m.rank_warning = j.value("rank_warning", false);
  const json& h = j.at("hessenberg");
  if (h.at("rows").get<int>() != degree + 1 || h.at("cols").get<int>() != degree) {
    throw Error(ErrorCode::Parse, "hessenberg dimensions do not match degree");
  }
  if (h.value("order", "column-major") != "column-major") {
    throw Error(ErrorCode::Parse, "hessenberg order must be column-major");
  }
  try {
    m.hessenberg = HessenbergRecurrence<T>::from_column_major(degree, unpairs<T>(h.at("entries"), "hessenberg entries"));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::InvalidArgument) throw;
    throw Error(ErrorCode::Parse, std::string("hessenberg: ") + e.what());
  }
  return m;
}

}  // namespace

json to_json(const ModelFile& file) {
  json j = std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        using T = typename decltype(m.coeffs)::value_type;
        constexpr bool complex = std::is_same_v<T, cplx>;
        if constexpr (std::is_same_v<M, PlainModel<T>>) {
          return common_fields(m, "plain", complex);
        } else {
          json out = common_fields(m, "arnoldi", complex);
          out["hessenberg"] = json{{"rows", m.hessenberg.rows()},
                                   {"cols", m.hessenberg.cols()},
                                   {"order", "column-major"},
                                   {"entries", pairs<T>(m.hessenberg.column_major())}};
          return out;
        }
      },
      file.model);
  j["provenance"] = file.provenance;
  return j;
}

ModelFile model_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::Parse, "model file must hold a JSON object");
    const int version = j.at("schema_version").get<int>();
    if (version != kModelSchemaVersion) {
      throw Error(ErrorCode::SchemaVersion, "model schema_version " + std::to_string(version) + " is not supported (expected " +
                                                std::to_string(kModelSchemaVersion) + ")");
    }
    const auto method = j.at("method").get<std::string>();
    const auto field = j.at("field").get<std::string>();
    const int degree = j.at("degree").get<int>();
    if (degree < 0) throw Error(ErrorCode::Parse, "degree must be non-negative");
    if (field != "real" && field != "complex") throw Error(ErrorCode::Parse, "field must be real or complex");
    const bool complex = field == "complex";

    ModelFile file;
    if (method == "plain") {
      if (complex) file.model = plain_from<cplx>(j, degree);
      else file.model = plain_from<double>(j, degree);
    } else if (method == "arnoldi") {
      if (complex) file.model = arnoldi_from<cplx>(j, degree);
      else file.model = arnoldi_from<double>(j, degree);
    } else {
      throw Error(ErrorCode::Parse, "method must be plain or arnoldi");
    }
    std::visit(
        [&](const auto& m) {
          if (m.coeffs.size() != static_cast<std::size_t>(degree) + 1) {
            throw Error(ErrorCode::Parse, "expected " + std::to_string(degree + 1) + " coefficients");
          }
          if (m.realpart && !complex) throw Error(ErrorCode::Parse, "realpart models must be complex");
          if (m.realpart && std::imag(m.coeffs[0]) != 0.0) {
            throw Error(ErrorCode::Parse, "realpart model has a non-real leading coefficient");
          }
        },
        file.model);
    file.provenance = j.value("provenance", json::object());
    return file;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("model file: ") + e.what());
  }
}

std::string serialize_model(const ModelFile& file) { return to_json(file).dump(2) + "\n"; }

ModelFile parse_model(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Parse, std::string("model file: ") + e.what());
  }
  return model_from_json(j);
}

void write_model(const std::filesystem::path& path, const ModelFile& file) { write_file(path, serialize_model(file)); }

ModelFile read_model(const std::filesystem::path& path) { return parse_model(read_file(path)); }

bool is_realpart(const AnyModel& model) {
  return std::visit([](const auto& m) { return m.realpart; }, model);
}

bool is_complex(const AnyModel& model) {
  return std::holds_alternative<PlainModel<cplx>>(model) || std::holds_alternative<ArnoldiModel<cplx>>(model);
}

int degree_of(const AnyModel& model) {
  return std::visit([](const auto& m) { return m.degree; }, model);
}

namespace {

PlainModel<cplx> promote(const PlainModel<double>& m) {
  return {m.degree, to_complex<double>(m.coeffs), false, m.rank_warning};
}

ArnoldiModel<cplx> promote(const ArnoldiModel<double>& m) {
  ArnoldiModel<cplx> out;
  out.degree = m.degree;
  out.coeffs = to_complex<double>(m.coeffs);
  out.hessenberg = HessenbergRecurrence<cplx>::from_column_major(m.degree, to_complex(m.hessenberg.column_major()));
  out.rank_warning = m.rank_warning;
  return out;
}

}  // namespace

std::vector<cplx> evaluate(const AnyModel& model, std::span<const cplx> s) {
  return std::visit(
      [&](const auto& m) -> std::vector<cplx> {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, PlainModel<double>> || std::is_same_v<M, ArnoldiModel<double>>) {
          const auto promoted = promote(m);
          if constexpr (std::is_same_v<M, PlainModel<double>>) return polyval(promoted, s);
          else return arnoldi_eval(promoted, s);
        } else if constexpr (std::is_same_v<M, PlainModel<cplx>>) {
          if (m.realpart) return to_complex<double>(polyval_realpart(m, s));
          return polyval(m, s);
        } else {
          if (m.realpart) return to_complex<double>(arnoldi_eval_realpart(m, s));
          return arnoldi_eval(m, s);
        }
      },
      model);
}

std::vector<double> evaluate_real(const AnyModel& model, std::span<const double> s) {
  if (const auto* p = std::get_if<PlainModel<double>>(&model)) return polyval(*p, s);
  if (const auto* a = std::get_if<ArnoldiModel<double>>(&model)) return arnoldi_eval(*a, s);
  throw Error(ErrorCode::InvalidArgument, "evaluate_real needs a real model");
}

std::string content_digest(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace vwa::io
