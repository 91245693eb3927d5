#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "fortcalc/analysis.hpp"
#include "fortcalc/beam_modes.hpp"
#include "fortcalc/config.hpp"
#include "fortcalc/dynamics.hpp"
#include "fortcalc/errors.hpp"
#include "fortcalc/io.hpp"
#include "fortcalc/potentials.hpp"
#include "fortcalc/verify_suite.hpp"

namespace fortcalc::cli {
namespace {

struct ConfigOptions {
  std::string preset;
  std::string config_path;
  std::string gamma_convention = "ordinary";
  std::string detuning_sign;
  std::string terms;
  std::optional<double> phi;
  std::optional<double> theta0;
  std::optional<double> r_max;
  std::optional<int> n_points;
};

void add_config_options(CLI::App* app, ConfigOptions& o) {
  auto* preset = app->add_option("--preset", o.preset, "Compiled-in preset name");
  auto* config = app->add_option("--config", o.config_path, "JSON config file");
  preset->excludes(config);
  app->add_option("--gamma-convention", o.gamma_convention,
                  "Preset linewidth reading: ordinary (2*pi*f) or literal")
      ->check(CLI::IsMember({"ordinary", "literal"}));
  app->add_option("--detuning-sign", o.detuning_sign,
                  "Force the sign of the detuning; '-' swaps omega0 and omegaL")
      ->check(CLI::IsMember({"+", "-"}));
  app->add_option("--terms", o.terms, "Enabled potential terms, e.g. 123, 1, 13");
  app->add_option("--phi", o.phi, "Field phase phi (rad)");
  app->add_option("--theta0", o.theta0, "Initial position phase Theta0 (rad)");
  app->add_option("--r-max", o.r_max, "Scan extent in units of w0");
  app->add_option("--n", o.n_points, "Number of scan points");
}

TermToggles parse_terms(const std::string& spec) {
  TermToggles t{false, false, false};
  for (char c : spec) {
    switch (c) {
      case '1': t.term1 = true; break;
      case '2': t.term2 = true; break;
      case '3': t.term3 = true; break;
      case ',': case ' ': break;
      default:
        throw ValidationError("--terms: expected digits from {1,2,3} (got '" + spec + "')");
    }
  }
  if (!(t.term1 || t.term2 || t.term3)) {
    throw ValidationError("--terms: at least one term must be enabled");
  }
  return t;
}

template <typename T>
void log_override(std::ostream& err, bool from_file, const char* key, T value) {
  if (from_file) err << "override: " << key << " = " << value << '\n';
}

RunConfig resolve(const ConfigOptions& o, std::ostream& err) {
  const bool from_file = !o.config_path.empty();
  RunConfig config;
  if (from_file) {
    config = load_config_json(o.config_path);
  } else {
    if (o.preset.empty()) throw ValidationError("one of --preset or --config is required");
    config = config_from_preset(o.preset, o.gamma_convention == "literal"
                                              ? GammaConvention::kLiteral
                                              : GammaConvention::kOrdinary);
  }
  if (!o.detuning_sign.empty()) {
    const int sign = o.detuning_sign == "+" ? 1 : -1;
    log_override(err, from_file, "detuning_sign", o.detuning_sign);
    config.params = with_detuning_sign(config.params, sign);
  }
  if (!o.terms.empty()) {
    config.toggles = parse_terms(o.terms);
    log_override(err, from_file, "terms", o.terms);
  }
  if (o.phi) {
    config.phase.phi = *o.phi;
    log_override(err, from_file, "phi_rad", *o.phi);
  }
  if (o.theta0) {
    config.phase.theta0 = *o.theta0;
    log_override(err, from_file, "theta0_rad", *o.theta0);
  }
  if (o.r_max) {
    config.grid.r_max = *o.r_max;
    log_override(err, from_file, "grid.r_max_over_w0", *o.r_max);
  }
  if (o.n_points) {
    config.grid.n_points = *o.n_points;
    log_override(err, from_file, "grid.n_points", *o.n_points);
  }
  validate(config.grid);
  return config;
}

ScanCurve scan_of(const RunConfig& config) {
  return radial_scan(to_internal(config.params, config.beam), config.phase,
                     config.toggles, config.grid, config.label);
}

std::string sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void print_presets(std::ostream& out) {
  for (const auto& name : preset_names()) {
    const Preset p = load_preset(name);
    out << name << "\n  " << p.description << '\n'
        << "  gamma_rad_s        " << sci(p.params.gamma) << '\n'
        << "  omega0_rad_s       " << sci(p.params.omega0) << '\n'
        << "  omegaL_rad_s       " << sci(p.params.omegaL) << '\n'
        << "  detuning_rad_s     " << sci(p.params.detuning) << '\n'
        << "  zsum_rad_s         " << sci(p.params.zsum) << '\n'
        << "  rabi_peak_over_gamma " << sci(p.beam.rabi_peak / p.params.gamma) << '\n'
        << "  waist_m            " << sci(p.beam.waist) << '\n'
        << "  l, p               " << p.beam.l << ", " << p.beam.p << '\n'
        << "  phi, theta0        " << p.phase.phi << ", " << p.phase.theta0 << '\n';
  }
}

void print_extrema(std::ostream& out, const char* title, const TrapExtrema& t) {
  out << title << " depth = " << sci(t.depth) << " hbar*Gamma\n";
  for (const auto& e : t.extrema) {
    out << "  " << (e.kind == ExtremumKind::kMaximum ? "max" : "min")
        << "  r/w0 = " << sci(e.r_star) << "  U = " << sci(e.u_star) << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Optical dipole trap potentials with counter-rotating corrections",
               "fortcalc"};
  app.require_subcommand(1, 1);

  auto* presets = app.add_subcommand("presets", "List compiled-in presets");

  ConfigOptions scan_opts;
  std::string scan_out, scan_svg, overlay = "both";
  auto* scan = app.add_subcommand("scan", "Radial scan of potentials and forces (CSV)");
  add_config_options(scan, scan_opts);
  scan->add_option("--out", scan_out, "CSV output path (stdout if omitted)");
  scan->add_option("--svg", scan_svg, "Also write an SVG plot");
  scan->add_option("--overlay", overlay, "SVG curves: rwa, nonrwa or both")
      ->check(CLI::IsMember({"rwa", "nonrwa", "both"}));

  ConfigOptions depth_opts;
  auto* depth = app.add_subcommand("depth", "Trap extrema and depths, RWA vs non-RWA");
  add_config_options(depth, depth_opts);

  ConfigOptions cmp_opts;
  double cmp_r = 0.0;
  auto* compare = app.add_subcommand("compare", "Correction ratio and term magnitudes at r");
  add_config_options(compare, cmp_opts);
  compare->add_option("--r", cmp_r, "Radius in units of w0")->check(CLI::NonNegativeNumber);

  ConfigOptions force_opts;
  double force_r = 0.5, t_max = 10.0;
  int n_t = 0;
  std::string force_out;
  auto* force = app.add_subcommand("force", "Averaged force at r and C_F(t) time series");
  add_config_options(force, force_opts);
  force->add_option("--r", force_r, "Radius in units of w0")->check(CLI::NonNegativeNumber);
  force->add_option("--t-max", t_max, "Time-series extent in units of 1/Gamma")
      ->check(CLI::PositiveNumber);
  force->add_option("--nt", n_t, "Time-series samples (0: none)")->check(CLI::NonNegativeNumber);
  force->add_option("--out", force_out, "Time-series CSV path");

  std::string profile = "quick", verify_out;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Check closed forms against numerical oracles");
  verify->add_option("--profile", profile, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--seed", seed, "Seed for randomized draws");
  verify->add_option("--out", verify_out, "JSON report path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (presets->parsed()) {
      print_presets(out);
      return 0;
    }
    if (scan->parsed()) {
      const RunConfig config = resolve(scan_opts, err);
      const ScanCurve curve = scan_of(config);
      if (scan_out.empty()) {
        out << format_csv(curve);
      } else {
        emit_csv(curve, scan_out);
      }
      if (!scan_svg.empty()) emit_svg(curve, scan_svg, parse_overlay(overlay));
      return 0;
    }
    if (depth->parsed()) {
      const RunConfig config = resolve(depth_opts, err);
      const DepthComparison cmp = compare_depths(scan_of(config));
      print_extrema(out, "rwa", cmp.rwa);
      print_extrema(out, "nonrwa", cmp.nonrwa);
      out << "depth ratio nonrwa/rwa = " << sci(cmp.ratio) << '\n';
      return 0;
    }
    if (compare->parsed()) {
      const RunConfig config = resolve(cmp_opts, err);
      const InternalParams p = to_internal(config.params, config.beam);
      const auto u = potential_nonrwa(cmp_r, p, config.phase);
      const auto m = term_magnitude_report(p, cmp_r, config.phase);
      out << "r/w0 = " << sci(cmp_r) << '\n'
          << "term1 = " << sci(u.term1) << "  term2 = " << sci(u.term2)
          << "  term3 = " << sci(u.term3) << " hbar*Gamma\n"
          << "correction_ratio = " << sci(correction_ratio(p, config.phase, cmp_r)) << '\n'
          << "detuning/zsum = " << sci(p.detuning / p.zsum) << '\n'
          << "|t1/t2| = " << sci(m.t1_over_t2) << "  |t1/t3| = " << sci(m.t1_over_t3)
          << "  |t2/t3| = " << sci(m.t2_over_t3) << '\n';
      return 0;
    }
    if (force->parsed()) {
      const RunConfig config = resolve(force_opts, err);
      const InternalParams p = to_internal(config.params, config.beam);
      const auto f = force_closed(force_r, p, config.phase, config.toggles);
      const double rabi = rabi_profile(force_r, p.beam);
      out << "r/w0 = " << sci(force_r) << "  Omega/Gamma = " << sci(rabi)
          << "  Gamma'/Gamma = " << sci(modified_linewidth(1.0, rabi)) << '\n'
          << "force term1 = " << sci(f.term1) << "  term2 = " << sci(f.term2)
          << "  term3 = " << sci(f.term3) << '\n'
          << "f_rwa = " << sci(f.f_rwa) << "  f_nonrwa = " << sci(f.f_nonrwa)
          << " hbar*Gamma/w0\n"
          << "averaged coefficient (closed) = "
          << sci(averaged_coefficient_closed(rabi, p, config.phase, config.toggles)) << '\n';
      try {
        const auto num = averaged_coefficient_numeric(p, rabi, config.phase, config.toggles);
        out << "averaged coefficient (quadrature) = " << sci(num.value) << " +- "
            << sci(num.error_estimate) << '\n';
      } catch (const FeasibilityError& e) {
        out << "averaged coefficient (quadrature) skipped: " << e.what() << '\n';
      }
      if (n_t > 0) {
        std::string csv = "t_over_gamma_inv,c_p,c_f\n";
        char line[128];
        for (int i = 0; i < n_t; ++i) {
          const double t = n_t == 1 ? 0.0 : t_max * i / (n_t - 1);
          std::snprintf(line, sizeof line, "%.12e,%.12e,%.12e\n", t,
                        momentum_coefficient(t, p, config.phase, config.toggles).value,
                        force_coefficient(t, p, config.phase, config.toggles).value);
          csv += line;
        }
        if (force_out.empty()) {
          out << csv;
        } else {
          write_text_file(force_out, csv);
        }
      }
      return 0;
    }
    if (verify->parsed()) {
      const auto report = run_verification(parse_profile(profile), seed);
      out << report_to_text(report);
      if (!verify_out.empty()) write_text_file(verify_out, report_to_json(report));
      return report.passed() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    err << "fortcalc: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace fortcalc::cli
