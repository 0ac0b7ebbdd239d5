// qhs: symplectic classification of quasi-homogeneous curves.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhs/error.hpp"
#include "qhs/report.hpp"

namespace fs = std::filesystem;
using namespace qhs;

namespace {

enum Exit { kOk = 0, kUsage = 1, kBadWeights = 2, kConsistency = 3, kParse = 4, kPrecondition = 5, kUnwritable = 6 };

struct RunConfig {
  std::string weights = "3,4,5";
  std::optional<int> n;
  std::string format = "text";
  std::string out;
  std::string cache;
  int jobs = 1;
  bool verbose = false;
};

struct UnwritablePath : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct WeightsRejected : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Log {
 public:
  explicit Log(bool on) : on_(on), start_(std::chrono::steady_clock::now()) {}
  void operator()(const std::string& msg) const {
    if (!on_) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    std::cerr << "[qhs " << ms << "ms] " << msg << "\n";
  }

 private:
  bool on_;
  std::chrono::steady_clock::time_point start_;
};

Weights resolve_weights(const std::string& text) {
  auto raw = Weights::parse_list(text);
  auto norm = Weights::normalize(raw);
  if (norm.gcd != 1)
    throw WeightsRejected("weights " + text + " share the factor " + std::to_string(norm.gcd) +
                          "; the semigroup normalizes to " + norm.weights.to_string() + " (rerun with --weights " +
                          norm.weights.to_string() + ")");
  return norm.weights;
}

void write_file(const fs::path& path, const std::string& content) {
  std::error_code ec;
  if (path.has_parent_path()) fs::create_directories(path.parent_path(), ec);
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UnwritablePath("cannot write " + path.string());
  os << content;
  if (!os) throw UnwritablePath("cannot write " + path.string());
}

std::optional<GradedBasis> load_cached(const fs::path& path, const Weights& w, int p, const Log& log) {
  std::ifstream is(path);
  if (!is) return std::nullopt;
  try {
    auto basis = GradedBasis::from_json(nlohmann::json::parse(is));
    if (basis.weights() == w && basis.form_degree() == p) {
      log("cache hit " + path.string());
      return basis;
    }
  } catch (const std::exception& e) {
    log("cache entry " + path.string() + " discarded: " + e.what());
  }
  return std::nullopt;
}

Model build_model(const Weights& w, const RunConfig& cfg, const Log& log) {
  if (cfg.cache.empty()) {
    log("computing bases for " + w.to_string());
    return Model::build(w);
  }
  auto stem = "basis-" + w.to_string() + "-p";
  std::replace(stem.begin(), stem.end(), ',', '_');
  fs::path dir(cfg.cache);
  auto two_path = dir / (stem + "2.json"), three_path = dir / (stem + "3.json");
  auto two = load_cached(two_path, w, 2, log);
  auto three = load_cached(three_path, w, 3, log);
  if (two && three) return Model::from_bases(std::move(*two), std::move(*three));
  log("computing bases for " + w.to_string());
  Model m = Model::build(w);
  write_file(two_path, m.two_forms().to_json().dump(1) + "\n");
  write_file(three_path, m.three_forms().to_json().dump(1) + "\n");
  log("cache written to " + dir.string());
  return m;
}

int ambient_n(const RunConfig& cfg, const Weights& w) {
  int n = cfg.n.value_or(static_cast<int>(w.size()));
  if (n < 1) throw PreconditionError("--n must be at least 1");
  return n;
}

int cmd_classify(const RunConfig& cfg) {
  Log log(cfg.verbose);
  Weights w = resolve_weights(cfg.weights);
  Format f = parse_format(cfg.format);
  Model m = build_model(w, cfg, log);
  int n = ambient_n(cfg, w);
  auto rows = classification_rows(m, n);
  log("classified " + std::to_string(rows.size()) + " families");
  if (f == Format::Json) {
    nlohmann::json j = {{"weights", w.to_string()},
                        {"engine", kEngineVersion},
                        {"n", n},
                        {"basis", nlohmann::json::parse(basis_table(m, f))},
                        {"vanishing", nlohmann::json::parse(vanishing_table(m, f))["generators"]},
                        {"actions", nlohmann::json::parse(action_table(m, f))},
                        {"normal_forms", nlohmann::json::parse(classification_table(m, rows, f))["normal_forms"]}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  std::cout << basis_table(m, f) << "\n"
            << vanishing_table(m, f) << "\n"
            << action_table(m, f) << "\n"
            << classification_table(m, rows, f);
  return kOk;
}

int cmd_verify(const std::string& curve_text, const RunConfig& cfg) {
  Log log(cfg.verbose);
  ParamCurve curve = parse_param_curve(curve_text);
  Weights w = resolve_weights(cfg.weights);
  Format f = parse_format(cfg.format);
  Model m = build_model(w, cfg, log);
  Vector cls = classify_curve(m, curve);
  NormalForm nf = reduce(m, cls);
  auto families = enumerate_normal_forms(m);
  auto idx = identify(nf, families);
  auto report = invariant_report(m, cls);
  bool ok = realizable(m, cls, curve.n);
  if (f == Format::Json) {
    nlohmann::json j = {{"weights", w.to_string()},
                        {"curve", to_json(curve)},
                        {"normal_form", to_json(nf)},
                        {"instance", nf.instance()},
                        {"family_index", idx ? nlohmann::json(*idx + 1) : nlohmann::json(nullptr)},
                        {"family", idx ? families[*idx].family() : nf.family()},
                        {"invariants", to_json(report)},
                        {"realizable", ok}};
    std::cout << j.dump(2) << "\n";
    return kOk;
  }
  const char* b = f == Format::Markdown ? "- " : "";
  std::cout << b << "weights: " << w.to_string() << "\n"
            << b << "curve: " << curve.render() << "\n"
            << b << "class: " << render_combination(cls, [&] {
                 std::vector<std::string> l;
                 for (std::size_t i = 0; i < m.closed().dimension(); ++i) l.push_back(m.closed().label(i));
                 return l;
               }()) << "\n"
            << b << "normal form: " << nf.instance() << "\n"
            << b << "family: " << (idx ? families[*idx].family() + " (row " + std::to_string(*idx + 1) + ")" : nf.family())
            << "\n"
            << b << "mu_sympl: " << report.mu << "\n"
            << b << "iota: " << render_order(report.iota) << "\n"
            << b << "Lt: " << render_order(report.lt) << (report.lt_outside_hypothesis ? " (no representative vanishes at 0)" : "")
            << "\n"
            << b << "minimal n: " << report.minimal_n << "\n";
  return kOk;
}

int cmd_tables(RunConfig cfg) {
  Log log(cfg.verbose);
  Weights w = resolve_weights(cfg.weights);
  if (cfg.format == "text" && !cfg.out.empty()) cfg.format = "markdown";
  Format f = parse_format(cfg.format);
  Model m = build_model(w, cfg, log);
  int n = ambient_n(cfg, w);
  fs::path dir(cfg.out.empty() ? (cfg.cache.empty() ? std::string(".") : cfg.cache) : cfg.out);
  std::string stem = w.to_string();
  std::replace(stem.begin(), stem.end(), ',', '_');
  std::string ext(format_extension(f));
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (!fs::is_directory(dir)) throw UnwritablePath("cannot create directory " + dir.string());
  const std::pair<std::string, std::string> files[] = {
      {"basis", basis_table(m, f)},
      {"vanishing", vanishing_table(m, f)},
      {"actions", action_table(m, f)},
      {"classification", classification_table(m, classification_rows(m, n), f)},
  };
  for (const auto& [name, body] : files) {
    fs::path p = dir / (name + "-" + stem + "." + ext);
    write_file(p, body);
    std::cout << p.string() << "\n";
  }
  return kOk;
}

void add_common(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--weights", cfg.weights, "Semigroup generators, e.g. 3,4,5")->capture_default_str();
  cmd->add_option("--n", cfg.n, "Half the ambient dimension (default k)");
  cmd->add_option("--format", cfg.format, "text | json | markdown")
      ->capture_default_str()
      ->check(CLI::IsMember({"text", "json", "markdown", "md"}));
  cmd->add_option("--out", cfg.out, "Output directory for table files");
  cmd->add_option("--cache", cfg.cache, "Directory for cached graded bases");
  cmd->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_flag("--verbose,-v", cfg.verbose, "Progress on stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symplectic singularities of quasi-homogeneous curves"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string curve_text;
  auto* classify = app.add_subcommand("classify", "Bases, vanishing ideal, action table and normal forms");
  auto* verify = app.add_subcommand("verify", "Normal form and invariants of a curve");
  auto* tables = app.add_subcommand("tables", "Write the four tables to files");
  add_common(classify, cfg);
  add_common(verify, cfg);
  add_common(tables, cfg);
  verify->add_option("curve", curve_text, "Components, e.g. \"t^3, t^7, t^4, 0, t^5, 0\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    if (*classify) return cmd_classify(cfg);
    if (*verify) return cmd_verify(curve_text, cfg);
    return cmd_tables(cfg);
  } catch (const WeightsRejected& e) {
    std::cerr << "qhs: " << e.what() << "\n";
    return kBadWeights;
  } catch (const InvalidWeights& e) {
    std::cerr << "qhs: invalid weights: " << e.what() << "\n";
    return kBadWeights;
  } catch (const ParseError& e) {
    std::cerr << "qhs: parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "qhs: precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const UnwritablePath& e) {
    std::cerr << "qhs: " << e.what() << "\n";
    return kUnwritable;
  } catch (const ConsistencyError& e) {
    std::cerr << "qhs: internal consistency failure: " << e.what() << "\n";
    return kConsistency;
  }
}
