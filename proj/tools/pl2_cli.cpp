// Command-line surface: special function evaluation, operator matrices, and
// the verification suites, with reproducible parameterization.
//
//   pl2 polylog --s 2 --z 0.5
//   pl2 matrix --kind zeta --k 6 --N 6 --format csv
//   pl2 verify --suite ranks --max-k 200
//
// Exit status: 0 success, 1 verification failure, 2 usage/config error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pl2/errors.hpp"
#include "pl2/serialize.hpp"
#include "pl2/specfun.hpp"
#include "pl2/toeplitz.hpp"
#include "pl2/verify.hpp"

namespace {

struct VerifyCliOptions {
  std::string suite;
  std::string config_path;
  std::optional<int> truncation;
  std::optional<double> tol;
  std::optional<std::uint64_t> seed;
  std::optional<int> max_k;
  std::optional<int> max_nm;
  std::optional<int> samples;
};

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

// Flat key-value config: one `key = value` per line, '#' starts a comment.
// Recognized keys: truncation, tol, seed, max_k, max_nm, samples.
void apply_config_file(const std::string& path, pl2::VerifyConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw pl2::PreconditionError("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw pl2::PreconditionError("config line " + std::to_string(lineno) +
                                   ": expected key = value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "truncation") {
        cfg.truncation = std::stoi(value);
      } else if (key == "tol") {
        cfg.tol = std::stod(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "max_k") {
        cfg.max_k = std::stoi(value);
      } else if (key == "max_nm") {
        cfg.max_nm = std::stoi(value);
      } else if (key == "samples") {
        cfg.samples = std::stoi(value);
      } else {
        throw pl2::PreconditionError("config line " + std::to_string(lineno) +
                                     ": unknown key '" + key + "'");
      }
    } catch (const std::invalid_argument&) {
      throw pl2::PreconditionError("config line " + std::to_string(lineno) +
                                   ": bad value for '" + key + "'");
    } catch (const std::out_of_range&) {
      throw pl2::PreconditionError("config line " + std::to_string(lineno) +
                                   ": value out of range for '" + key + "'");
    }
  }
}

void apply_environment(pl2::VerifyConfig& cfg) {
  auto env = [](const char* name) -> std::optional<std::string> {
    const char* v = std::getenv(name);
    if (v == nullptr) return std::nullopt;
    return std::string(v);
  };
  try {
    if (auto v = env("PL2_TRUNCATION")) cfg.truncation = std::stoi(*v);
    if (auto v = env("PL2_TOL")) cfg.tol = std::stod(*v);
    if (auto v = env("PL2_SEED")) cfg.seed = std::stoull(*v);
    if (auto v = env("PL2_MAX_K")) cfg.max_k = std::stoi(*v);
    if (auto v = env("PL2_MAX_NM")) cfg.max_nm = std::stoi(*v);
    if (auto v = env("PL2_SAMPLES")) cfg.samples = std::stoi(*v);
  } catch (const std::exception&) {
    throw pl2::PreconditionError("malformed PL2_* environment override");
  }
}

int run_polylog(const std::string& s_text, const std::string& z_text, double tol) {
  pl2::EvalParams params;
  params.tol = tol;
  const pl2::Cplx s = pl2::parse_complex(s_text);
  const pl2::Cplx z = pl2::parse_complex(z_text);
  const pl2::SeriesResult r = pl2::polylog_series(s, z, params);
  std::cout << "Li_{" << pl2::format_complex(s) << "}(" << pl2::format_complex(z)
            << ") = " << pl2::format_complex(r.value) << '\n'
            << "certified tail bound: " << pl2::format_real(r.error_bound)
            << " (" << r.terms << " terms)\n";
  return 0;
}

int run_matrix(const std::string& kind, int k, std::optional<int> m, int order,
               const std::string& format, const std::string& out_path) {
  pl2::SparseOperator op;
  if (kind == "zeta") {
    op = pl2::toeplitz_zeta(k, order);
  } else if (kind == "elementary") {
    if (!m) throw pl2::PreconditionError("matrix --kind elementary requires --m");
    op = pl2::toeplitz_elementary(k, *m, order);
  } else {
    throw pl2::PreconditionError("matrix: kind must be 'zeta' or 'elementary'");
  }

  std::ostringstream body;
  if (format == "csv") {
    if (order > 64) {
      throw pl2::PreconditionError("matrix: dense CSV is limited to N <= 64");
    }
    pl2::write_csv(op, body);
  } else if (format == "json") {
    body << pl2::to_json(op).dump() << '\n';
  } else {
    throw pl2::PreconditionError("matrix: format must be 'csv' or 'json'");
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(out_path);
    if (!out) throw pl2::PreconditionError("cannot open output file: " + out_path);
    out << body.str();
  }
  return 0;
}

int run_verify(const VerifyCliOptions& opt) {
  pl2::VerifyConfig cfg;
  if (!opt.config_path.empty()) apply_config_file(opt.config_path, cfg);
  apply_environment(cfg);
  if (opt.truncation) cfg.truncation = *opt.truncation;
  if (opt.tol) cfg.tol = *opt.tol;
  if (opt.seed) cfg.seed = *opt.seed;
  if (opt.max_k) cfg.max_k = *opt.max_k;
  if (opt.max_nm) cfg.max_nm = *opt.max_nm;
  if (opt.samples) cfg.samples = *opt.samples;

  if (cfg.truncation < 1 || cfg.max_k < 1 || cfg.max_nm < 1 || cfg.samples < 1 ||
      !(cfg.tol > 0.0)) {
    throw pl2::PreconditionError("verify: all config values must be positive");
  }

  const pl2::VerifyReport report = pl2::run_suite(opt.suite, cfg);
  pl2::print_report(report, std::cout);
  return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polylogarithmic Hardy space toolkit"};
  app.require_subcommand(1);

  auto* polylog_cmd = app.add_subcommand("polylog", "Evaluate Li_s(z) with a certified bound");
  std::string s_text, z_text;
  double polylog_tol = 1e-10;
  polylog_cmd->add_option("--s", s_text, "order s, complex as a+bi")->required();
  polylog_cmd->add_option("--z", z_text, "argument z, complex as a+bi, |z| < 1")->required();
  polylog_cmd->add_option("--tol", polylog_tol, "absolute error target");

  auto* matrix_cmd = app.add_subcommand("matrix", "Emit a Toeplitz compression matrix");
  std::string kind = "zeta", format = "csv", out_path;
  int k = 0, order = 0;
  std::optional<int> m;
  matrix_cmd->add_option("--kind", kind, "zeta | elementary")->required();
  matrix_cmd->add_option("--k", k, "symbol power z^k")->required();
  matrix_cmd->add_option("--m", m, "Dirichlet index m (elementary kind)");
  matrix_cmd->add_option("--N", order, "truncation order (domain columns)")->required();
  matrix_cmd->add_option("--format", format, "csv | json");
  matrix_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  VerifyCliOptions vopt;
  verify_cmd
      ->add_option("--suite", vopt.suite,
                   "isometry | decomposition | ranks | dirichlet | bounds")
      ->required();
  verify_cmd->add_option("--config", vopt.config_path, "flat key=value config file");
  verify_cmd->add_option("--truncation", vopt.truncation, "coefficient truncation N");
  verify_cmd->add_option("--tol", vopt.tol, "numeric acceptance threshold");
  verify_cmd->add_option("--seed", vopt.seed, "RNG seed");
  verify_cmd->add_option("--max-k", vopt.max_k, "rank sweep bound");
  verify_cmd->add_option("--max-nm", vopt.max_nm, "decomposition sweep bound");
  verify_cmd->add_option("--samples", vopt.samples, "base sample count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (polylog_cmd->parsed()) return run_polylog(s_text, z_text, polylog_tol);
    if (matrix_cmd->parsed()) return run_matrix(kind, k, m, order, format, out_path);
    if (verify_cmd->parsed()) return run_verify(vopt);
  } catch (const pl2::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
