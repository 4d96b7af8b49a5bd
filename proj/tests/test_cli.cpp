#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lfwave/cli.hpp"
#include "lfwave/io.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
namespace io = lfw::io;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "lfwave");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = lfw::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("lfwave_cli_test_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

io::Report load_report(const fs::path& path) {
  std::ifstream in(path);
  return io::read_report(in);
}

void write_text(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_CASE("gen on the Haar mask") {
  const auto dir = scratch("gen");
  const auto r = run({"gen", "--builtin", "haar", "--p", "2", "--s", "1", "--N", "1", "--M", "1", "--out", dir.string()});
  REQUIRE(r.code == 0);
  for (const char* name : {"m0.mask", "m1.mask", "phi.csv", "psi1.csv", "report.txt"}) CHECK(fs::exists(dir / name));
  const auto report = load_report(dir / "report.txt");
  CHECK(std::stod(io::report_value(report, "max_deviation")) <= 1e-10);
  CHECK(io::report_value(report, "prefix_count") == "2");
  CHECK(io::report_value(report, "shift_depth") == "3");
  CHECK(io::report_value(report, "passed") == "true");

  // Everything written reads back through the library parsers.
  const auto m1 = io::load_mask(dir / "m1.mask");
  CHECK(m1(1, 1) == lfw::cplx(1.0));
  std::ifstream psi_in(dir / "psi1.csv");
  const auto psi = io::read_step_csv(psi_in);
  CHECK(psi.window() == lfw::Window{1, 2});
  std::ifstream phi_in(dir / "phi.csv");
  CHECK(io::read_step_csv(phi_in).window() == lfw::Window{1, 1});
}

TEST_CASE("verify exit codes and tolerance") {
  const auto dir = scratch("verify");
  REQUIRE(run({"gen", "--builtin", "haar", "--p", "3", "--s", "1", "--N", "1", "--out", dir.string()}).code == 0);
  const std::string m0 = (dir / "m0.mask").string(), m1 = (dir / "m1.mask").string(), m2 = (dir / "m2.mask").string();
  CHECK(run({"verify", "--mask", m0, "--out", dir.string()}).code == 0);
  CHECK(run({"verify", "--mask", m0, "--mask", m1, "--mask", m2, "--out", dir.string()}).code == 0);

  auto family = io::load_mask(m1);
  family(0, 1) = 1.1;
  const auto broken = (dir / "broken.mask").string();
  io::save(broken, [&](std::ostream& o) { io::write_mask(o, family); });
  const auto fail = run({"verify", "--mask", m0, "--mask", broken, "--mask", m2, "--out", dir.string()});
  CHECK(fail.code == 1);
  const auto report = load_report(dir / "report.txt");
  CHECK(std::stod(io::report_value(report, "family_max_deviation")) == doctest::Approx(0.21));
  CHECK(io::report_value(report, "passed") == "false");
  CHECK(run({"verify", "--mask", m0, "--mask", broken, "--mask", m2, "--tolerance", "10", "--out", dir.string()}).code ==
        0);
  CHECK(run({"verify", "--mask", m0, "--mask", m1, "--out", dir.string()}).code == 3);
}

TEST_CASE("input errors") {
  const auto dir = scratch("errors");
  write_text(dir / "short.mask", "2 1 1\n0;0 1 0\n0;1 0 0\n");
  const auto r = run({"gen", "--mask", (dir / "short.mask").string(), "--out", dir.string()});
  CHECK(r.code == 3);
  CHECK(r.err.find("2 data lines, expected 4") != std::string::npos);

  write_text(dir / "zero_row.mask", "2 1 1\n0;0 1 0\n0;1 0 0\n1;0 0 0\n1;1 0 0\n");
  const auto z = run({"gen", "--mask", (dir / "zero_row.mask").string(), "--out", dir.string()});
  CHECK(z.code == 2);
  CHECK(z.err.find("prefix 1") != std::string::npos);

  CHECK(run({"gen", "--mask", (dir / "zero_row.mask").string(), "--N", "2"}).code == 3);
  CHECK(run({"gen", "--mask", (dir / "missing.mask").string()}).code == 3);
  CHECK(run({"gen", "--builtin", "haar", "--p", "4", "--s", "1", "--N", "1"}).code == 3);
  CHECK(run({"gen", "--builtin", "haar", "--p", "2", "--s", "1"}).code == 3);
  CHECK(run({"gen", "--builtin", "daub", "--p", "2", "--s", "1", "--N", "1"}).code == 3);
  CHECK(run({"gen", "--builtin", "haar", "--p", "2", "--s", "1", "--N", "1", "--tolerance", "0"}).code == 3);
  CHECK(run({"gen"}).code == 3);
  CHECK(run({"gen", "--unknown"}).code == 3);
  CHECK(run({}).code == 3);

  write_text(dir / "unnormalized.mask", "2 1 0\n0 0.5 0\n1 0.5 0\n");
  CHECK(run({"gen", "--mask", (dir / "unnormalized.mask").string(), "--out", dir.string()}).code == 2);
}

TEST_CASE("coeffs") {
  const auto dir = scratch("coeffs");
  REQUIRE(run({"coeffs", "--builtin", "haar", "--p", "2", "--s", "1", "--N", "0", "--out", dir.string()}).code == 0);
  std::ifstream in(dir / "coeffs.csv");
  const auto beta = io::read_coefficients_csv(in);
  REQUIRE(beta.size() == 2);
  CHECK(std::abs(beta[0] - 1.0) < 1e-15);
  CHECK(std::abs(beta[1] - 1.0) < 1e-15);

  write_text(dir / "zero.mask", "2 1 0\n0 0 0\n1 0 0\n");
  REQUIRE(run({"coeffs", "--mask", (dir / "zero.mask").string(), "--out", dir.string()}).code == 0);
  std::ifstream zin(dir / "coeffs.csv");
  const auto zero = io::read_coefficients_csv(zin);
  for (auto b : zero.values()) CHECK(b == lfw::cplx(0.0));
}

TEST_CASE("gen, coeffs and mask synthesis round trip") {
  const auto dir = scratch("roundtrip");
  REQUIRE(run({"demo", "--p", "2", "--s", "1", "--N", "2", "--seed", "5", "--out", dir.string()}).code == 0);
  const auto m1 = io::load_mask(dir / "m1.mask");
  REQUIRE(run({"coeffs", "--mask", (dir / "m1.mask").string(), "--out", dir.string()}).code == 0);
  std::ifstream in(dir / "coeffs.csv");
  const auto back = lfw::mask_from_coefficients(io::read_coefficients_csv(in));
  CHECK(testing::max_abs_diff(back.values(), m1.values()) < 1e-12);
}

TEST_CASE("demo is reproducible") {
  const auto a = scratch("demo_a"), b = scratch("demo_b");
  const auto ra = run({"demo", "--p", "3", "--s", "1", "--N", "1", "--seed", "42", "--out", a.string()});
  const auto rb = run({"demo", "--p", "3", "--s", "1", "--N", "1", "--seed", "42", "--out", b.string()});
  CHECK(ra.code == 0);
  CHECK(ra.out == rb.out);
  std::ifstream fa(a / "m0.mask"), fb(b / "m0.mask");
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  CHECK(sa.str() == sb.str());
  CHECK(io::report_value(load_report(a / "report.txt"), "seed") == "42");
}

TEST_CASE("vandermonde") {
  const auto dir = scratch("vandermonde");
  const auto r = run({"vandermonde", "--p", "2", "--s", "1", "--N", "2", "--out", dir.string()});
  CHECK(r.code == 0);
  const auto report = load_report(dir / "report.txt");
  CHECK(io::report_value(report, "size") == "4");
  CHECK(io::report_value(report, "nonsingular") == "true");
  CHECK(run({"vandermonde", "--p", "3", "--s", "1", "--N", "7"}).code == 3);
}
