#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "qhs/classify.hpp"
#include "qhs/invariants.hpp"
#include "qhs/model.hpp"
#include "qhs/realize.hpp"

namespace qhs {

enum class Format { Text, Json, Markdown };
/// "text", "json" or "markdown"; throws ParseError otherwise.
Format parse_format(std::string_view name);
std::string_view format_extension(Format f);

nlohmann::json to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const nlohmann::json& j);

/// ∞ is null with an "<name>_infinite": true flag.
nlohmann::json to_json(const InvariantReport& r);
InvariantReport invariant_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParamCurve& c);
ParamCurve param_curve_from_json(const nlohmann::json& j);

/// One row of the classification table. The curve realizes `sample` (sign +,
/// every modulus 1) in R^{2n}, or in the least dimension that admits it.
struct ClassificationRow {
  NormalForm family;
  Vector sample;
  std::string representative;
  InvariantReport report;
  ParamCurve curve;
  int n = 1;
  bool realizable = false;
  friend bool operator==(const ClassificationRow&, const ClassificationRow&) = default;
};

std::vector<ClassificationRow> classification_rows(const Model& m, int n);
nlohmann::json to_json(const ClassificationRow& row);
ClassificationRow classification_row_from_json(const nlohmann::json& j);

/// "7a7", "-34a17 + 2a18"
std::string render_combination(const Vector& coords, const std::vector<std::string>& labels);

std::string basis_table(const Model& m, Format f);
std::string vanishing_table(const Model& m, Format f);
std::string action_table(const Model& m, Format f);
std::string classification_table(const Model& m, const std::vector<ClassificationRow>& rows, Format f);

}  // namespace qhs
