#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "lfwave/mra_masks.hpp"
#include "lfwave/step_functions.hpp"

namespace lfw::io {

/// 17 significant digits, enough for a lossless double round trip.
std::string format_double(double x);

/// Mask file: header "p s N", then one line per table entry in index order:
///   a_-N;...;a_0 re im
/// where each a_k is its space-separated digit tuple.
void write_mask(std::ostream& out, const Mask& m);
/// Rejects wrong line counts, duplicate or malformed tuples (ParseError with
/// the line number).
Mask read_mask(std::istream& in);

/// Step-function CSV: "# p=.. s=.. N=.. M=.. domain=time|frequency", a
/// "digits,re,im" header, then one row per table cell.
void write_step_csv(std::ostream& out, const StepFunction& f);
void write_step_csv(std::ostream& out, const DualStepFunction& g);
StepFunction read_step_csv(std::istream& in);
DualStepFunction read_dual_step_csv(std::istream& in);

/// Refinement coefficients CSV: "# p=.. s=.. N=..", "h,re,im", then one row
/// per h in H_0^(N+1) with digits listed from index -(N+1) up to -1.
void write_coefficients_csv(std::ostream& out, const RefinementCoefficients& beta);
RefinementCoefficients read_coefficients_csv(std::istream& in);

/// Line-oriented "key = value" report.
using Report = std::vector<std::pair<std::string, std::string>>;
void write_report(std::ostream& out, const Report& report);
Report read_report(std::istream& in);
/// Value for `key`; ParseError if absent.
const std::string& report_value(const Report& report, const std::string& key);

Mask load_mask(const std::filesystem::path& path);
/// Opens `path` for writing, calls `writer`, and raises IoError on failure.
void save(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace lfw::io
