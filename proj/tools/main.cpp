#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "loghankel/bounds.hpp"
#include "loghankel/functionals.hpp"
#include "loghankel/optimizer.hpp"
#include "loghankel/report.hpp"
#include "loghankel/series.hpp"
#include "loghankel/ybc.hpp"

namespace {

using namespace loghankel;

double to_double(const std::string& s) {
  std::size_t used = 0;
  double v = std::stod(s, &used);
  if (used != s.size()) {
    throw std::invalid_argument("bad numeric value '" + s + "'");
  }
  return v;
}

// Accepts a single value or start:stop:step (stop inclusive within 1e-12).
// Values outside (0, 1] are dropped; an empty result is a usage error.
std::vector<double> parse_alpha_spec(const std::string& text) {
  std::vector<double> raw;
  const auto colon1 = text.find(':');
  if (colon1 == std::string::npos) {
    raw.push_back(to_double(text));
  } else {
    const auto colon2 = text.find(':', colon1 + 1);
    if (colon2 == std::string::npos || text.find(':', colon2 + 1) != std::string::npos) {
      throw std::invalid_argument("alpha range must be start:stop:step");
    }
    const double start = to_double(text.substr(0, colon1));
    const double stop = to_double(text.substr(colon1 + 1, colon2 - colon1 - 1));
    const double step = to_double(text.substr(colon2 + 1));
    if (!(step > 0.0)) {
      throw std::invalid_argument("alpha range step must be positive");
    }
    for (int i = 0;; ++i) {
      const double v = start + i * step;
      if (v > stop + 1e-12) break;
      raw.push_back(std::min(v, stop));
      if (i > 10'000'000) {
        throw std::invalid_argument("alpha range produces too many values");
      }
    }
  }
  std::vector<double> clipped;
  for (double v : raw) {
    if (v > 0.0 && v <= 1.0) clipped.push_back(v);
  }
  if (clipped.empty()) {
    throw std::invalid_argument("alpha specification '" + text +
                                "' yields no values in (0, 1]");
  }
  return clipped;
}

ClassKind parse_class(const std::string& name) {
  if (name == "convex") return ClassKind::StronglyConvex;
  if (name == "starlike") return ClassKind::StronglyStarlike;
  throw std::invalid_argument("unknown class '" + name +
                              "' (expected convex or starlike)");
}

SearchConfig config_from_grid(int n, std::uint64_t seed) {
  SearchConfig cfg;
  cfg.seed = seed;
  if (n > 0) {
    cfg.grid_c = n;
    cfg.grid_ring = std::max(4, (n + 1) / 2);
    cfg.grid_angle = std::max(8, 4 * n / 5);
  }
  return cfg;
}

void emit(const Report& report, const std::string& format,
          const std::string& out_path) {
  if (out_path.empty()) {
    write_report(std::cout, report, format);
    return;
  }
  std::ofstream os(out_path);
  if (!os) {
    throw std::invalid_argument("cannot open output file '" + out_path + "'");
  }
  write_report(os, report, format);
}

void emit_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(out_path);
  if (!os) {
    throw std::invalid_argument("cannot open output file '" + out_path + "'");
  }
  os << text;
}

struct CommonOpts {
  std::string cls;
  std::string alpha;
  int grid = 0;
  std::uint64_t seed = 0;
  double tol = -1.0;
  std::string out;
  std::string format = "csv";
};

void add_output_flags(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("--seed", opts->seed, "RNG seed recorded in the report header");
  cmd->add_option("--out", opts->out, "Output file (default: stdout)");
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"csv", "json", "text"}));
}

int run_bounds(const CommonOpts& opts) {
  const ClassKind kind = parse_class(opts.cls);
  Report report;
  report.seed = opts.seed;
  for (double a : parse_alpha_spec(opts.alpha)) {
    const BoundValue b = bound_for({kind, a});
    ReportRow row;
    row.alpha = a;
    row.cls = kind_name(kind);
    row.branch = b.label();
    row.bound = b.value;
    report.rows.push_back(std::move(row));
  }
  emit(report, opts.format, opts.out);
  return 0;
}

int run_verify(const CommonOpts& opts) {
  const ClassKind kind = parse_class(opts.cls);
  const double tol = opts.tol > 0.0 ? opts.tol : 1e-9;
  Report report;
  report.seed = opts.seed;
  bool ok = true;
  for (double a : parse_alpha_spec(opts.alpha)) {
    const BoundReport r = verify_sharpness({kind, a}, tol);
    ReportRow row;
    row.alpha = a;
    row.cls = kind_name(kind);
    row.branch = r.branch;
    row.bound = r.bound;
    row.attained = r.attained;
    row.gap = r.gap;
    report.rows.push_back(std::move(row));
    if (!r.passed) {
      ok = false;
      std::cerr << "verify: sharpness gap " << format_double(r.gap)
                << " exceeds tol " << format_double(tol) << " at alpha "
                << format_double(a) << "\n";
    }
  }
  emit(report, opts.format, opts.out);
  return ok ? 0 : 1;
}

int run_maximize(const CommonOpts& opts) {
  const ClassKind kind = parse_class(opts.cls);
  const double tol = opts.tol > 0.0 ? opts.tol : 1e-3;
  const SearchConfig cfg = config_from_grid(opts.grid, opts.seed);
  Report report;
  report.seed = opts.seed;
  bool ok = true;
  const std::vector<double> alphas = parse_alpha_spec(opts.alpha);
  const std::vector<BoundReport> results = scan_alpha(kind, alphas, cfg);
  for (std::size_t i = 0; i < results.size(); ++i) {
    const BoundReport& r = results[i];
    ReportRow row;
    row.alpha = alphas[i];
    row.cls = kind_name(kind);
    row.branch = r.branch;
    row.bound = r.bound;
    row.attained = r.attained;
    row.numeric_max = r.numeric_max;
    row.gap = r.gap;
    row.margin = r.margin;
    report.rows.push_back(std::move(row));
    const double margin = r.margin ? *r.margin : 0.0;
    if (!(margin >= -1e-6 && margin <= tol)) {
      ok = false;
      std::cerr << "maximize: margin " << format_double(margin)
                << " outside [-1e-6, " << format_double(tol) << "] at alpha "
                << format_double(alphas[i]) << "\n";
    }
  }
  emit(report, opts.format, opts.out);
  return ok ? 0 : 1;
}

int run_ybc_test(const CommonOpts& opts, int samples) {
  const double tol = opts.tol >= 0.0 ? opts.tol : 2e-5;
  if (samples < 1) {
    throw std::invalid_argument("--samples must be at least 1");
  }
  const int radial = opts.grid > 0 ? opts.grid : 64;
  const int angular = 4 * radial;
  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  double worst = -1.0;
  YInputs worst_in{0.0, 0.0, 0.0};
  YResult worst_closed{0.0, YBranch::I1};
  double worst_brute = 0.0;
  for (int i = 0; i < samples; ++i) {
    const YInputs in{dist(rng), dist(rng), dist(rng)};
    const YResult closed = y_closed_form(in);
    const double brute = y_brute_force(in, radial, angular);
    const double disc = std::abs(closed.value - brute);
    if (disc > worst) {
      worst = disc;
      worst_in = in;
      worst_closed = closed;
      worst_brute = brute;
    }
  }
  Report report;
  report.seed = opts.seed;
  ReportRow row;
  row.branch = branch_name(worst_closed.branch);
  row.bound = worst_closed.value;
  row.numeric_max = worst_brute;
  row.gap = worst;
  report.rows.push_back(std::move(row));
  emit(report, opts.format, opts.out);
  if (worst > tol) {
    std::cerr << "ybc-test: max discrepancy " << format_double(worst)
              << " exceeds tol " << format_double(tol) << " at (A,B,C)=("
              << format_double(worst_in.A) << "," << format_double(worst_in.B)
              << "," << format_double(worst_in.C) << ")\n";
    return 1;
  }
  return 0;
}

int run_series_demo(const CommonOpts& opts) {
  const int order = TruncatedSeries::kDefaultOrder;
  std::vector<Complex> coeffs(order + 1, Complex(0.0));
  for (int n = 1; n <= order; ++n) coeffs[n] = Complex(static_cast<double>(n));
  const TruncatedSeries koebe(coeffs);

  const auto gammas = log_coeffs(koebe, 3);
  const InverseTriple inv = inverse_coeffs(koebe);
  const LogInvTriple big = log_inverse_coeffs(koebe);
  const Complex h = h21_log_inverse(koebe);

  std::ostringstream os;
  os << "# seed=" << opts.seed << "\n";
  os << "Koebe function k(z) = z/(1-z)^2, truncated at order " << order << "\n";
  os << "a2 = " << format_double(koebe[2].real())
     << ", a3 = " << format_double(koebe[3].real())
     << ", a4 = " << format_double(koebe[4].real()) << "\n";
  os << "A2 = " << format_double(inv.A2.real())
     << ", A3 = " << format_double(inv.A3.real())
     << ", A4 = " << format_double(inv.A4.real()) << "\n";
  os << "gamma1 = " << format_double(gammas[0].real())
     << ", gamma2 = " << format_double(gammas[1].real())
     << ", gamma3 = " << format_double(gammas[2].real()) << "\n";
  os << "Gamma1 = " << format_double(big.gamma1.real())
     << ", Gamma2 = " << format_double(big.gamma2.real())
     << ", Gamma3 = " << format_double(big.gamma3.real()) << "\n";
  os << "H21(Koebe) = " << format_double(std::abs(h)) << "\n";
  emit_text(os.str(), opts.out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Sharp bounds and numerical verification for the second Hankel "
      "determinant of logarithmic inverse coefficients"};
  app.require_subcommand(1);

  CommonOpts bounds_opts, verify_opts, maximize_opts, ybc_opts, demo_opts;
  bounds_opts.alpha = "0.05:1:0.05";
  verify_opts.alpha = "0.05:1:0.05";
  maximize_opts.alpha = "0.25:1:0.25";
  int ybc_samples = 5000;

  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Tabulate the closed-form bound over alpha");
  bounds_cmd->add_option("--class", bounds_opts.cls, "convex or starlike")
      ->required();
  bounds_cmd->add_option("--alpha", bounds_opts.alpha,
                         "alpha value or start:stop:step");
  add_output_flags(bounds_cmd, &bounds_opts);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check bound sharpness against the extremal construction");
  verify_cmd->add_option("--class", verify_opts.cls, "convex or starlike")
      ->required();
  verify_cmd->add_option("--alpha", verify_opts.alpha,
                         "alpha value or start:stop:step");
  verify_cmd->add_option("--tol", verify_opts.tol, "sharpness gap tolerance");
  add_output_flags(verify_cmd, &verify_opts);

  CLI::App* maximize_cmd = app.add_subcommand(
      "maximize", "Search the coefficient body for the numerical maximum");
  maximize_cmd->add_option("--class", maximize_opts.cls, "convex or starlike")
      ->required();
  maximize_cmd->add_option("--alpha", maximize_opts.alpha,
                           "alpha value or start:stop:step");
  maximize_cmd->add_option("--grid", maximize_opts.grid,
                           "grid density (default 41)");
  maximize_cmd->add_option("--tol", maximize_opts.tol,
                           "allowed shortfall of the numeric max");
  add_output_flags(maximize_cmd, &maximize_opts);

  CLI::App* ybc_cmd = app.add_subcommand(
      "ybc-test", "Compare the closed-form maximum against brute force");
  ybc_cmd->add_option("--samples", ybc_samples, "number of random triples");
  ybc_cmd->add_option("--grid", ybc_opts.grid,
                      "radial resolution of the brute-force grid (default 64)");
  ybc_cmd->add_option("--tol", ybc_opts.tol, "allowed discrepancy");
  add_output_flags(ybc_cmd, &ybc_opts);

  CLI::App* demo_cmd = app.add_subcommand(
      "series-demo", "Print the Koebe coefficient pipeline end to end");
  demo_cmd->add_option("--seed", demo_opts.seed, "seed recorded in the header");
  demo_cmd->add_option("--out", demo_opts.out, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (bounds_cmd->parsed()) return run_bounds(bounds_opts);
    if (verify_cmd->parsed()) return run_verify(verify_opts);
    if (maximize_cmd->parsed()) return run_maximize(maximize_opts);
    if (ybc_cmd->parsed()) return run_ybc_test(ybc_opts, ybc_samples);
    if (demo_cmd->parsed()) return run_series_demo(demo_opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
