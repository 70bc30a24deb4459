#pragma once

// JSON model files. Layout (schema_version 1):
//
//   {
//     "schema_version": 1,
//     "method": "plain" | "arnoldi",
//     "field": "real" | "complex",
//     "realpart": bool,
//     "degree": n,
//     "coefficients": [[re, im], ...],            // n + 1 pairs
//     "hessenberg": {                              // arnoldi only
//       "rows": n + 1, "cols": n, "order": "column-major",
//       "entries": [[re, im], ...]
//     },
//     "provenance": {...}
//   }

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vwa/arnoldi.hpp"
#include "vwa/vandermonde.hpp"

namespace vwa::io {

inline constexpr int kModelSchemaVersion = 1;

using AnyModel = std::variant<PlainModel<double>, PlainModel<cplx>, ArnoldiModel<double>, ArnoldiModel<cplx>>;

struct ModelFile {
  AnyModel model;
  nlohmann::json provenance = nlohmann::json::object();
};

nlohmann::json to_json(const ModelFile& file);
ModelFile model_from_json(const nlohmann::json& j);

std::string serialize_model(const ModelFile& file);
ModelFile parse_model(std::string_view text);

void write_model(const std::filesystem::path& path, const ModelFile& file);
ModelFile read_model(const std::filesystem::path& path);

bool is_realpart(const AnyModel& model);
bool is_complex(const AnyModel& model);
int degree_of(const AnyModel& model);

// Evaluates at complex points. Real models are promoted; realpart models
// return Re p(s) in the real components.
std::vector<cplx> evaluate(const AnyModel& model, std::span<const cplx> s);

// Evaluates a real model at real points without promotion.
std::vector<double> evaluate_real(const AnyModel& model, std::span<const double> s);

// 64-bit FNV-1a, formatted as "fnv1a64:<16 hex digits>".
std::string content_digest(std::string_view bytes);

}  // namespace vwa::io
