#include "lfwave/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <random>

#include <CLI11.hpp>

#include "lfwave/errors.hpp"
#include "lfwave/io.hpp"
#include "lfwave/mra_masks.hpp"
#include "lfwave/wavelet_builder.hpp"

namespace lfw::cli {
namespace {

namespace fs = std::filesystem;

constexpr int kDemoDraws = 1000;

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6e", x);
  return buf;
}

void require_params(const RunConfig& c) {
  if (!c.p || !c.s || !c.N) throw ParameterError(c.command + " needs --p, --s and --N");
}

void validate(const RunConfig& c) {
  if (!(c.tolerance > 0.0)) throw ParameterError("tolerance must be positive");
  if (c.N && *c.N < 0) throw ParameterError("N must be >= 0");
  if (c.M && *c.M < 0) throw ParameterError("M must be >= 0");
  if (c.s && *c.s < 1) throw ParameterError("s must be >= 1");
  if (c.p && !GaloisField::is_prime(*c.p)) throw ParameterError("p must be prime");
}

void check_header(const RunConfig& c, const Mask& m, const std::string& path) {
  auto mismatch = [&](const char* name, int given, int found) {
    if (given != found)
      throw ParameterError(path + ": header has " + name + "=" + std::to_string(found) + " but --" + name + " " +
                           std::to_string(given));
  };
  if (c.p) mismatch("p", *c.p, m.field().p());
  if (c.s) mismatch("s", *c.s, m.field().s());
  if (c.N) mismatch("N", *c.N, m.N());
}

/// All masks named on the command line, or the builtin one.
std::vector<Mask> load_masks(const RunConfig& c) {
  const bool has_builtin = c.builtin.has_value();
  if (has_builtin == !c.mask_paths.empty())
    throw ParameterError("give exactly one of --mask or --builtin");
  std::vector<Mask> masks;
  if (has_builtin) {
    if (*c.builtin != "haar") throw ParameterError("unknown builtin mask '" + *c.builtin + "'");
    require_params(c);
    masks.push_back(haar_mask(GaloisField(*c.p, *c.s), *c.N));
    return masks;
  }
  for (const auto& path : c.mask_paths) {
    Mask m = io::load_mask(path);
    check_header(c, m, path);
    if (!masks.empty() && (m.field() != masks[0].field() || m.N() != masks[0].N()))
      throw ParameterError(path + ": parameters differ from " + c.mask_paths[0]);
    masks.push_back(std::move(m));
  }
  return masks;
}

int window_M(const RunConfig& c, const Mask& m) { return c.M ? *c.M : m.N() + 1; }
int depth_of(const RunConfig& c, const Mask& m) { return c.shift_depth ? *c.shift_depth : m.N() + 2; }

fs::path prepare_out(const RunConfig& c) {
  fs::path dir(c.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  return dir;
}

struct Checks {
  ScalingReport scaling;
  FamilyReport family;
  VerificationReport verification;

  bool passed(double tol) const { return scaling.passed(tol) && family.passed(tol) && verification.passed(tol); }
};

Checks run_checks(const WaveletSystem& ws, int depth) {
  const auto fam = ws.family();
  return {check_scaling_orthonormality(ws.phi_hat), check_mask_family_orthogonality(fam),
          verify_wavelet_system(ws, depth)};
}

io::Report make_report(const std::string& command, const WaveletSystem& ws, const Checks& checks, double tol) {
  const Mask& m0 = ws.scaling_mask;
  return {
      {"command", command},
      {"p", std::to_string(m0.field().p())},
      {"s", std::to_string(m0.field().s())},
      {"N", std::to_string(m0.N())},
      {"M", std::to_string(ws.phi_hat.window().M)},
      {"prefix_count", std::to_string(m0.prefix_count())},
      {"shift_depth", std::to_string(checks.verification.shift_depth)},
      {"max_deviation", io::format_double(checks.verification.max_deviation)},
      {"scaling_max_deviation", io::format_double(checks.scaling.max_deviation)},
      {"family_max_deviation", io::format_double(checks.family.max_deviation)},
      {"disjoint_spot_check", io::format_double(checks.verification.disjoint_spot_check)},
      {"tolerance", io::format_double(tol)},
      {"passed", checks.passed(tol) ? "true" : "false"},
  };
}

void print_summary(std::ostream& out, const Checks& checks, double tol) {
  out << "scaling   max deviation " << fmt(checks.scaling.max_deviation) << "\n"
      << "family    max deviation " << fmt(checks.family.max_deviation) << "\n"
      << "system    max deviation " << fmt(checks.verification.max_deviation) << " over "
      << checks.verification.shift_count << " shifts, " << checks.verification.function_count << " functions\n"
      << "disjoint  spot check    " << fmt(checks.verification.disjoint_spot_check) << "\n"
      << (checks.passed(tol) ? "PASS" : "FAIL") << " at tolerance " << fmt(tol) << "\n";
}

void write_system(const fs::path& dir, const WaveletSystem& ws) {
  const auto fam = ws.family();
  for (std::size_t j = 0; j < fam.size(); ++j)
    io::save(dir / ("m" + std::to_string(j) + ".mask"), [&](std::ostream& o) { io::write_mask(o, fam[j]); });
  io::save(dir / "phi.csv", [&](std::ostream& o) { io::write_step_csv(o, ws.phi); });
  for (std::size_t j = 0; j < ws.wavelets.size(); ++j)
    io::save(dir / ("psi" + std::to_string(j + 1) + ".csv"),
             [&](std::ostream& o) { io::write_step_csv(o, ws.wavelets[j]); });
}

void write_report_file(const fs::path& dir, const io::Report& report) {
  io::save(dir / "report.txt", [&](std::ostream& o) { io::write_report(o, report); });
}

int guarded(const std::function<int()>& body, std::ostream& err) {
  try {
    return body();
  } catch (const InvalidMaskError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidMask;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidMask;
  } catch (const DependentRowsError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidMask;
  } catch (const NormalizationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidMask;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        validate(config);
        const auto masks = load_masks(config);
        if (masks.size() != 1) throw ParameterError("gen takes a single scaling mask");
        const Mask& m0 = masks[0];
        const fs::path dir = prepare_out(config);
        const WaveletSystem ws = build_wavelet_system(m0, window_M(config, m0), config.tolerance);
        const Checks checks = run_checks(ws, depth_of(config, m0));
        write_system(dir, ws);
        write_report_file(dir, make_report("gen", ws, checks, config.tolerance));
        print_summary(out, checks, config.tolerance);
        out << "wrote " << ws.family().size() << " masks, " << ws.wavelets.size() + 1 << " tables to "
            << dir.string() << "\n";
        return int{kOk};
      },
      err);
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        validate(config);
        const auto masks = load_masks(config);
        const Mask& m0 = masks[0];
        const std::size_t q = m0.field().order();
        if (masks.size() != 1 && masks.size() != q)
          throw ParameterError("verify takes one scaling mask or all " + std::to_string(q) + " masks of a family");
        const DualStepFunction phi_hat = synthesize_refinable(m0, window_M(config, m0), config.tolerance);
        const std::vector<Mask> family = masks.size() == q ? masks : derive_wavelet_masks(m0, config.tolerance);
        const WaveletSystem ws = synthesize_wavelets(family, phi_hat);
        const Checks checks = run_checks(ws, depth_of(config, m0));
        write_report_file(prepare_out(config), make_report("verify", ws, checks, config.tolerance));
        print_summary(out, checks, config.tolerance);
        return checks.passed(config.tolerance) ? int{kOk} : int{kCheckFailed};
      },
      err);
}

int cmd_coeffs(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        validate(config);
        const auto masks = load_masks(config);
        if (masks.size() != 1) throw ParameterError("coeffs takes a single mask");
        const RefinementCoefficients beta = coefficients_from_mask(masks[0]);
        const fs::path path = prepare_out(config) / "coeffs.csv";
        io::save(path, [&](std::ostream& o) { io::write_coefficients_csv(o, beta); });
        out << "wrote " << beta.size() << " coefficients to " << path.string() << "\n";
        return int{kOk};
      },
      err);
}

int cmd_demo(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        validate(config);
        require_params(config);
        const GaloisField field(*config.p, *config.s);
        const int N = *config.N;
        const int M = config.M ? *config.M : N + 1;
        std::mt19937_64 rng(config.seed);
        for (int draw = 1; draw <= kDemoDraws; ++draw) {
          const Mask m0 = random_admissible_mask(field, N, rng);
          const DualStepFunction phi_hat = synthesize_refinable(m0, M, config.tolerance);
          if (!check_scaling_orthonormality(phi_hat).passed(config.tolerance)) continue;
          const WaveletSystem ws = synthesize_wavelets(derive_wavelet_masks(m0, config.tolerance), phi_hat);
          const Checks checks = run_checks(ws, depth_of(config, m0));
          const fs::path dir = prepare_out(config);
          write_system(dir, ws);
          auto report = make_report("demo", ws, checks, config.tolerance);
          report.emplace_back("seed", std::to_string(config.seed));
          report.emplace_back("draws", std::to_string(draw));
          write_report_file(dir, report);
          out << "draw " << draw << " passed the scaling check\n";
          print_summary(out, checks, config.tolerance);
          return checks.passed(config.tolerance) ? int{kOk} : int{kCheckFailed};
        }
        err << "no mask out of " << kDemoDraws << " draws passed the scaling check\n";
        return int{kCheckFailed};
      },
      err);
}

int cmd_vandermonde(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(
      [&] {
        validate(config);
        require_params(config);
        const VandermondeReport r = vandermonde_kron_check(*config.p, *config.s, *config.N);
        const double tol = config.tolerance;
        const bool ok = r.nonsingular && r.dft_unitarity_error <= tol && r.relative_error <= tol &&
                        r.system_matrix_error <= tol;
        const io::Report report = {
            {"command", "vandermonde"},
            {"p", std::to_string(r.p)},
            {"s", std::to_string(r.s)},
            {"N", std::to_string(r.N)},
            {"size", std::to_string(r.size)},
            {"abs_det_v", io::format_double(std::abs(r.det_v))},
            {"dft_unitarity_error", io::format_double(r.dft_unitarity_error)},
            {"log_abs_det", io::format_double(r.log_abs_det)},
            {"expected_log_abs_det", io::format_double(r.expected_log_abs_det)},
            {"relative_error", io::format_double(r.relative_error)},
            {"nonsingular", r.nonsingular ? "true" : "false"},
            {"system_matrix_error", io::format_double(r.system_matrix_error)},
            {"tolerance", io::format_double(tol)},
            {"passed", ok ? "true" : "false"},
        };
        write_report_file(prepare_out(config), report);
        io::write_report(out, report);
        return ok ? int{kOk} : int{kCheckFailed};
      },
      err);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.command == "gen") return cmd_gen(config, out, err);
  if (config.command == "verify") return cmd_verify(config, out, err);
  if (config.command == "coeffs") return cmd_coeffs(config, out, err);
  if (config.command == "demo") return cmd_demo(config, out, err);
  if (config.command == "vandermonde") return cmd_vandermonde(config, out, err);
  err << "error: unknown command '" << config.command << "'\n";
  return kInputError;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal step wavelets on local fields of positive characteristic"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<int> p, s, N, M, depth;
  std::optional<std::string> builtin;

  auto add_field = [&](CLI::App* sub) {
    sub->add_option("--p", p, "characteristic (prime)");
    sub->add_option("--s", s, "extension degree");
    sub->add_option("--N", N, "mask depth");
  };
  auto add_mask = [&](CLI::App* sub) {
    sub->add_option("--mask", config.mask_paths, "mask file");
    sub->add_option("--builtin", builtin, "builtin mask (haar)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tolerance", config.tolerance, "pass/fail threshold");
    sub->add_option("--out", config.out_dir, "output directory");
  };
  auto add_system = [&](CLI::App* sub) {
    sub->add_option("--M", M, "frequency window of the refinable function (default N+1)");
    sub->add_option("--shift-depth", depth, "shift set depth for verification (default N+2)");
  };

  auto* gen = app.add_subcommand("gen", "build and export the wavelet system of a scaling mask");
  add_field(gen), add_mask(gen), add_system(gen), add_common(gen);
  auto* verify = app.add_subcommand("verify", "check orthonormality of a mask family and its wavelets");
  add_field(verify), add_mask(verify), add_system(verify), add_common(verify);
  auto* coeffs = app.add_subcommand("coeffs", "export the refinement coefficients of a mask");
  add_field(coeffs), add_mask(coeffs), add_common(coeffs);
  auto* demo = app.add_subcommand("demo", "build the wavelet system of a random admissible mask");
  add_field(demo), add_system(demo), add_common(demo);
  demo->add_option("--seed", config.seed, "random seed");
  auto* vand = app.add_subcommand("vandermonde", "check the Kronecker-power Vandermonde system");
  add_field(vand), add_common(vand);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? int{kOk} : int{kInputError};
  }
  config.command = app.get_subcommands().front()->get_name();
  config.p = p, config.s = s, config.N = N, config.M = M, config.shift_depth = depth, config.builtin = builtin;
  return run(config, out, err);
}

}  // namespace lfw::cli
