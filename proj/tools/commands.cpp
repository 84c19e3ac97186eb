#include "commands.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "becurv/engine.hpp"
#include "becurv/errors.hpp"
#include "becurv/umbrella.hpp"
#include "output.hpp"

namespace becurv::cli {

namespace {

constexpr const char* kToleranceEnvVar = "BECURV_TOLERANCES";

struct CurvatureArgs {
  std::string path;
  int vertex = -1;
  bool all = false;
  bool witness = false;
  std::string format = "text";
};

struct UmbrellaArgs {
  int n = 0;
  double rho = 0.0;
  std::vector<int> table;
  bool sweep = false;
  double rho_min = 0.0;
  double rho_max = 0.0;
  int steps = 0;
  std::string format = "text";
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run_curvature(const CurvatureArgs& args, const CLI::Option* vertex_opt,
                  const Tolerances& tol, std::ostream& out) {
  const std::string content = read_file(args.path);
  const WeightedGraph g = parse_graph(content, sniff_format(args.path, content));

  std::vector<int> vertices;
  if (vertex_opt->count() > 0) {
    g.check_vertex(args.vertex);
    vertices.push_back(args.vertex);
  } else {
    // --all is also the default when no vertex is named.
    vertices.resize(g.num_vertices());
    std::iota(vertices.begin(), vertices.end(), 0);
  }

  std::vector<OutputRecord> records;
  for (int x : vertices) {
    const CurvatureResult result = bakry_emery_curvature(g, x, tol);
    OutputRecord record;
    record.vertex = x;
    record.curvature = result.curvature;
    record.spectrum = result.spectrum;
    if (args.witness) record.witness = result.witness;
    records.push_back(std::move(record));
  }

  if (args.format == "csv")
    write_curvature_csv(out, records);
  else if (args.format == "json")
    write_curvature_json(out, records);
  else
    write_curvature_text(out, records);
  return 0;
}

OutputRecord evaluate_umbrella(int n, double rho, const Tolerances& tol) {
  const UmbrellaSpec spec{n, rho};
  const CurvatureResult hub = bakry_emery_curvature(make_umbrella(spec), 0, tol);
  const EmbeddingInfo info = classify_embedding(spec, tol);
  OutputRecord record;
  record.n = n;
  record.rho = rho;
  record.curvature = hub.curvature;
  record.spectrum = hub.spectrum;
  record.embedding_kind = to_string(info.kind);
  record.embedding_scale = info.scale;
  record.embedding_diagnostic = info.diagnostic;
  if (n <= 6) record.closed_form = closed_form_spectrum(n, rho);
  return record;
}

int run_umbrella(const UmbrellaArgs& args, const CLI::Option* rho_opt, const Tolerances& tol,
                 std::ostream& out, std::ostream& err) {
  if (!args.table.empty()) {
    const std::vector<UmbrellaTableRow> rows = curvature_table(args.table, tol);
    if (args.format == "csv")
      write_table_csv(out, rows);
    else if (args.format == "json")
      write_table_json(out, rows);
    else
      write_table_text(out, rows);
    return 0;
  }

  if (args.sweep) {
    const std::vector<SweepRow> rows = sweep(args.n, args.rho_min, args.rho_max, args.steps, tol);
    if (args.format == "csv")
      write_sweep_csv(out, args.n, rows);
    else if (args.format == "json")
      write_sweep_json(out, args.n, rows);
    else
      write_sweep_text(out, args.n, rows);
    return 0;
  }

  if (rho_opt->count() == 0) {
    err << "error: choose one of --rho (with --n), --table, or --sweep\n";
    return 2;
  }

  const OutputRecord record = evaluate_umbrella(args.n, args.rho, tol);
  if (args.format == "csv")
    write_umbrella_csv(out, record);
  else if (args.format == "json")
    write_umbrella_json(out, record);
  else
    write_umbrella_text(out, record);
  return 0;
}

}  // namespace

Tolerances tolerances_from_spec(const std::string& text) {
  Tolerances tol;
  std::string token;
  std::istringstream stream(text);
  // Commas and whitespace both separate pairs.
  std::string normalized = text;
  std::replace(normalized.begin(), normalized.end(), ',', ' ');
  stream.str(normalized);
  while (stream >> token) {
    const size_t eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size())
      throw DomainError("tolerance override must look like key=value, got: " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    char* end = nullptr;
    const double parsed = std::strtod(value.c_str(), &end);
    if (end != value.c_str() + value.size() || !(parsed > 0.0) || !std::isfinite(parsed))
      throw DomainError("tolerance value must be a positive number, got: " + token);
    if (key == "eigen_tol")
      tol.eigen_tol = parsed;
    else if (key == "bisect_tol")
      tol.bisect_tol = parsed;
    else
      throw DomainError("unknown tolerance key: " + key);
  }
  return tol;
}

GraphFormat sniff_format(const std::string& path, const std::string& content) {
  if (path.size() >= 5 && path.ends_with(".json")) return GraphFormat::json;
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' || c == '[' ? GraphFormat::json : GraphFormat::edge_list;
  }
  return GraphFormat::edge_list;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bakry-Emery curvature of finite weighted graphs"};
  app.require_subcommand(1);

  CurvatureArgs cargs;
  CLI::App* curvature = app.add_subcommand("curvature", "curvature of every ball in a graph file");
  curvature->add_option("graph", cargs.path, "edge-list or json graph file")->required();
  CLI::Option* vertex_opt =
      curvature->add_option("--vertex", cargs.vertex, "evaluate a single vertex");
  CLI::Option* all_flag =
      curvature->add_flag("--all", cargs.all, "evaluate every vertex (default)");
  vertex_opt->excludes(all_flag);
  curvature->add_flag("--witness", cargs.witness, "include the minimizing function");
  curvature->add_option("--format", cargs.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  UmbrellaArgs uargs;
  CLI::App* umbrella = app.add_subcommand("umbrella", "wheel-like hub/rim graphs G(n, rho)");
  CLI::Option* n_opt = umbrella->add_option("--n", uargs.n, "rim size (at least 3)");
  CLI::Option* rho_opt = umbrella->add_option("--rho", uargs.rho, "rim edge weight");
  CLI::Option* table_opt =
      umbrella->add_option("--table", uargs.table, "comma-separated rim sizes to tabulate")
          ->delimiter(',');
  CLI::Option* sweep_flag = umbrella->add_flag("--sweep", uargs.sweep, "evaluate a rho grid");
  CLI::Option* min_opt = umbrella->add_option("--rho-min", uargs.rho_min, "grid start");
  CLI::Option* max_opt = umbrella->add_option("--rho-max", uargs.rho_max, "grid end");
  CLI::Option* steps_opt = umbrella->add_option("--steps", uargs.steps, "grid size (at least 2)");
  umbrella->add_option("--format", uargs.format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  rho_opt->needs(n_opt);
  sweep_flag->needs(n_opt, min_opt, max_opt, steps_opt);
  sweep_flag->excludes(rho_opt, table_opt);
  table_opt->excludes(rho_opt, n_opt, min_opt, max_opt, steps_opt);
  min_opt->needs(sweep_flag);
  max_opt->needs(sweep_flag);
  steps_opt->needs(sweep_flag);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  Tolerances tol;
  if (const char* env = std::getenv(kToleranceEnvVar)) {
    try {
      tol = tolerances_from_spec(env);
    } catch (const Error& e) {
      err << "error: " << kToleranceEnvVar << ": " << e.what() << "\n";
      return 2;
    }
  }

  try {
    if (curvature->parsed()) return run_curvature(cargs, vertex_opt, tol, out);
    return run_umbrella(uargs, rho_opt, tol, out, err);
  } catch (const NoConvergence& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace becurv::cli
