#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace becurv::cli {

namespace {

std::string printf_double(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (unsigned char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (c < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += static_cast<char>(c);
        }
    }
  }
  out += '"';
}

void append_canonical(std::string& out, const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: out += "null"; break;
    case nlohmann::json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case nlohmann::json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case nlohmann::json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? fmt17(v) : "null";
      break;
    }
    case nlohmann::json::value_t::string: append_escaped(out, j.get<std::string>()); break;
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : j) {
        if (!first) out += ',';
        first = false;
        append_canonical(out, item);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::object: {
      // nlohmann objects iterate in key order, which is the canonical order.
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ',';
        first = false;
        append_escaped(out, it.key());
        out += ':';
        append_canonical(out, it.value());
      }
      out += '}';
      break;
    }
    default: out += "null";
  }
}

std::string join17(const std::vector<double>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += fmt17(values[i]);
  }
  return out;
}

std::string join10(const std::vector<double>& values) {
  std::string out;
  for (size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += fmt10(values[i]);
  }
  return out;
}

std::string embedding_text(const OutputRecord& r) {
  if (!r.embedding_kind) return "";
  std::string line = *r.embedding_kind;
  if (*r.embedding_kind == "spherical" && r.embedding_scale)
    line += " (R = " + fmt10(*r.embedding_scale) + ")";
  else if (*r.embedding_kind == "hyperbolic" && r.embedding_scale)
    line += " (s_h = " + fmt10(*r.embedding_scale) + ")";
  else if (!r.embedding_diagnostic.empty())
    line += " (" + r.embedding_diagnostic + ")";
  return line;
}

nlohmann::json table_row_json(const UmbrellaTableRow& row) {
  nlohmann::json j;
  j["n"] = row.n;
  j["rho_spherical"] = row.rho_spherical;
  j["k_spherical"] = row.k_spherical;
  j["rho_euclidean"] = row.rho_euclidean;
  j["k_euclidean"] = row.k_euclidean;
  j["rho_hyperbolic"] = row.rho_hyperbolic;
  j["k_hyperbolic"] = row.k_hyperbolic;
  return j;
}

}  // namespace

std::string fmt17(double v) { return printf_double("%.17g", v); }
std::string fmt10(double v) { return printf_double("%.10f", v); }
std::string fmt4(double v) { return printf_double("%.4f", v); }

std::string canonical_json(const nlohmann::json& j) {
  std::string out;
  append_canonical(out, j);
  return out;
}

nlohmann::json OutputRecord::to_json() const {
  nlohmann::json j;
  if (vertex) j["vertex"] = *vertex;
  if (n) j["n"] = *n;
  if (rho) j["rho"] = *rho;
  j["curvature"] = curvature;
  j["spectrum"] = spectrum;
  if (embedding_kind) {
    nlohmann::json emb;
    emb["kind"] = *embedding_kind;
    if (embedding_scale) emb["scale"] = *embedding_scale;
    if (!embedding_diagnostic.empty()) emb["diagnostic"] = embedding_diagnostic;
    j["embedding"] = emb;
  }
  if (witness) j["witness"] = *witness;
  if (!closed_form.empty()) j["closed_form"] = closed_form;
  return j;
}

OutputRecord OutputRecord::from_json(const nlohmann::json& j) {
  OutputRecord r;
  if (j.contains("vertex")) r.vertex = j.at("vertex").get<int>();
  if (j.contains("n")) r.n = j.at("n").get<int>();
  if (j.contains("rho")) r.rho = j.at("rho").get<double>();
  r.curvature = j.at("curvature").get<double>();
  r.spectrum = j.at("spectrum").get<std::vector<double>>();
  if (j.contains("embedding")) {
    const auto& emb = j.at("embedding");
    r.embedding_kind = emb.at("kind").get<std::string>();
    if (emb.contains("scale")) r.embedding_scale = emb.at("scale").get<double>();
    if (emb.contains("diagnostic")) r.embedding_diagnostic = emb.at("diagnostic").get<std::string>();
  }
  if (j.contains("witness")) r.witness = j.at("witness").get<std::vector<double>>();
  if (j.contains("closed_form")) r.closed_form = j.at("closed_form").get<std::vector<double>>();
  return r;
}

void write_curvature_text(std::ostream& out, const std::vector<OutputRecord>& records) {
  for (const OutputRecord& r : records) {
    out << *r.vertex << ": " << fmt10(r.curvature) << "\n";
    if (r.witness) out << "  witness: " << join10(*r.witness) << "\n";
  }
}

void write_curvature_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  const bool with_witness = !records.empty() && records.front().witness.has_value();
  out << "vertex,curvature,spectrum" << (with_witness ? ",witness" : "") << "\n";
  for (const OutputRecord& r : records) {
    out << *r.vertex << ',' << fmt17(r.curvature) << ',' << join17(r.spectrum);
    if (with_witness) out << ',' << join17(*r.witness);
    out << "\n";
  }
}

void write_curvature_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  nlohmann::json j;
  j["type"] = "curvature";
  j["results"] = nlohmann::json::array();
  for (const OutputRecord& r : records) j["results"].push_back(r.to_json());
  out << canonical_json(j) << "\n";
}

void write_umbrella_text(std::ostream& out, const OutputRecord& record) {
  out << "G(" << *record.n << ", " << fmt10(*record.rho) << ")\n";
  out << "curvature: " << fmt10(record.curvature) << "\n";
  out << "spectrum: " << join10(record.spectrum) << "\n";
  if (!record.closed_form.empty()) out << "closed form: " << join10(record.closed_form) << "\n";
  out << "embedding: " << embedding_text(record) << "\n";
}

void write_umbrella_csv(std::ostream& out, const OutputRecord& record) {
  out << "n,rho,curvature,kind,scale,spectrum\n";
  out << *record.n << ',' << fmt17(*record.rho) << ',' << fmt17(record.curvature) << ','
      << record.embedding_kind.value_or("") << ','
      << (record.embedding_scale ? fmt17(*record.embedding_scale) : std::string()) << ','
      << join17(record.spectrum) << "\n";
}

void write_umbrella_json(std::ostream& out, const OutputRecord& record) {
  nlohmann::json j = record.to_json();
  j["type"] = "umbrella";
  out << canonical_json(j) << "\n";
}

void write_table_text(std::ostream& out, const std::vector<UmbrellaTableRow>& rows) {
  static constexpr const char* headers[] = {"rho_spherical",  "K_spherical", "rho_euclidean",
                                            "K_euclidean",    "rho_hyperbolic", "K_hyperbolic"};
  out << "   n";
  for (const char* h : headers) out << "  " << h;
  out << "\n";
  for (const UmbrellaTableRow& row : rows) {
    char cell[32];
    std::snprintf(cell, sizeof cell, "%4d", row.n);
    out << cell;
    const double values[] = {row.rho_spherical, row.k_spherical,     row.rho_euclidean,
                             row.k_euclidean,   row.rho_hyperbolic,  row.k_hyperbolic};
    for (int c = 0; c < 6; ++c) {
      std::snprintf(cell, sizeof cell, "  %*s", static_cast<int>(std::string(headers[c]).size()),
                    fmt4(values[c]).c_str());
      out << cell;
    }
    out << "\n";
  }
}

void write_table_csv(std::ostream& out, const std::vector<UmbrellaTableRow>& rows) {
  out << "n,rho_spherical,k_spherical,rho_euclidean,k_euclidean,rho_hyperbolic,k_hyperbolic\n";
  for (const UmbrellaTableRow& row : rows)
    out << row.n << ',' << fmt17(row.rho_spherical) << ',' << fmt17(row.k_spherical) << ','
        << fmt17(row.rho_euclidean) << ',' << fmt17(row.k_euclidean) << ','
        << fmt17(row.rho_hyperbolic) << ',' << fmt17(row.k_hyperbolic) << "\n";
}

void write_table_json(std::ostream& out, const std::vector<UmbrellaTableRow>& rows) {
  nlohmann::json j;
  j["type"] = "table";
  j["rows"] = nlohmann::json::array();
  for (const UmbrellaTableRow& row : rows) j["rows"].push_back(table_row_json(row));
  out << canonical_json(j) << "\n";
}

void write_sweep_text(std::ostream& out, int n, const std::vector<SweepRow>& rows) {
  out << "G(" << n << ", rho) hub spectrum\n";
  for (const SweepRow& row : rows) {
    out << fmt10(row.rho) << "  " << fmt10(row.hub.curvature) << "  "
        << to_string(row.embedding.kind) << "  eigs: " << join10(row.hub.spectrum);
    if (!row.closed_form.empty()) out << "  closed: " << join10(row.closed_form);
    out << "\n";
  }
}

void write_sweep_csv(std::ostream& out, int n, const std::vector<SweepRow>& rows) {
  // Exactly 3 + n columns per row; closed forms stay in text/json output.
  out << "rho,curvature,kind";
  for (int k = 1; k <= n; ++k) out << ",eig" << k;
  out << "\n";
  for (const SweepRow& row : rows) {
    out << fmt17(row.rho) << ',' << fmt17(row.hub.curvature) << ','
        << to_string(row.embedding.kind);
    for (double v : row.hub.spectrum) out << ',' << fmt17(v);
    out << "\n";
  }
}

void write_sweep_json(std::ostream& out, int n, const std::vector<SweepRow>& rows) {
  nlohmann::json j;
  j["type"] = "sweep";
  j["n"] = n;
  j["rows"] = nlohmann::json::array();
  for (const SweepRow& row : rows) {
    nlohmann::json r;
    r["rho"] = row.rho;
    r["curvature"] = row.hub.curvature;
    r["spectrum"] = row.hub.spectrum;
    r["kind"] = to_string(row.embedding.kind);
    if (row.embedding.scale) r["scale"] = *row.embedding.scale;
    if (!row.closed_form.empty()) r["closed_form"] = row.closed_form;
    j["rows"].push_back(r);
  }
  out << canonical_json(j) << "\n";
}

}  // namespace becurv::cli
