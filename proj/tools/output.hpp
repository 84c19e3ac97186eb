#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "becurv/umbrella.hpp"
#include "json.hpp"

namespace becurv::cli {

// One evaluation as it appears on the wire. Either `vertex` (graph command)
// or `n`/`rho` (umbrella command) is set. Doubles survive a round trip
// through canonical_json exactly, so emit-parse-emit is byte-stable.
struct OutputRecord {
  std::optional<int> vertex;
  std::optional<int> n;
  std::optional<double> rho;
  double curvature = 0.0;
  std::vector<double> spectrum;
  std::optional<std::string> embedding_kind;
  std::optional<double> embedding_scale;
  std::string embedding_diagnostic;
  std::optional<std::vector<double>> witness;
  std::vector<double> closed_form;

  bool operator==(const OutputRecord&) const = default;

  nlohmann::json to_json() const;
  static OutputRecord from_json(const nlohmann::json& j);
};

std::string fmt17(double v);  // shortest-exact wire format
std::string fmt10(double v);  // fixed 10 decimals, human output
std::string fmt4(double v);   // 4 decimals, comparison-table output

// Deterministic serialization: alphabetical keys, no whitespace, %.17g
// doubles. parse + canonical_json is idempotent on its own output.
std::string canonical_json(const nlohmann::json& j);

void write_curvature_text(std::ostream& out, const std::vector<OutputRecord>& records);
void write_curvature_csv(std::ostream& out, const std::vector<OutputRecord>& records);
void write_curvature_json(std::ostream& out, const std::vector<OutputRecord>& records);

void write_umbrella_text(std::ostream& out, const OutputRecord& record);
void write_umbrella_csv(std::ostream& out, const OutputRecord& record);
void write_umbrella_json(std::ostream& out, const OutputRecord& record);

void write_table_text(std::ostream& out, const std::vector<UmbrellaTableRow>& rows);
void write_table_csv(std::ostream& out, const std::vector<UmbrellaTableRow>& rows);
void write_table_json(std::ostream& out, const std::vector<UmbrellaTableRow>& rows);

void write_sweep_text(std::ostream& out, int n, const std::vector<SweepRow>& rows);
void write_sweep_csv(std::ostream& out, int n, const std::vector<SweepRow>& rows);
void write_sweep_json(std::ostream& out, int n, const std::vector<SweepRow>& rows);

}  // namespace becurv::cli
