#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lfw::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInvalidMask = 2,
  kInputError = 3,
};

struct RunConfig {
  std::string command;  ///< gen | verify | coeffs | demo | vandermonde
  /// Taken from the mask file header when --mask is used; an explicit value
  /// that disagrees with the file is an input error.
  std::optional<int> p;
  std::optional<int> s;
  std::optional<int> N;
  std::optional<int> M;  ///< defaults to N + 1
  /// One scaling mask, or for verify optionally the full family m^(0) ..
  /// m^(q-1) in order.
  std::vector<std::string> mask_paths;
  std::optional<std::string> builtin;  ///< "haar"
  std::optional<int> shift_depth;      ///< defaults to N + 2
  double tolerance = 1e-10;
  std::string out_dir = ".";
  std::uint64_t seed = 0;
};

int cmd_gen(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_coeffs(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_demo(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_vandermonde(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatches on config.command.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs the subcommand.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lfw::cli
