#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lfwave/local_field.hpp"
#include "lfwave/mra_masks.hpp"
#include "lfwave/step_functions.hpp"

namespace lfw {

/// Per-prefix matrix M(a_-N ... a_-1): row l is mask m^(l), column a_0, both
/// numbered by GaloisField::index.
struct CompletionMatrix {
  std::size_t prefix = 0;
  Eigen::MatrixXcd entries;
};

/// Row 0 holds the scaling-mask row. Remaining rows are unit vectors: the
/// identity below row 0 when m0(prefix, 0) is nonzero, otherwise row j gets
/// e_0 for the smallest j with m0(prefix, j) nonzero. Entries with modulus
/// <= 1e-12 count as zero. Throws InvalidMaskError for an all-zero row.
CompletionMatrix seed_matrix(const Mask& m0, std::size_t prefix);

/// Classical Gram-Schmidt over rows 1, 2, ... against the rows above them,
/// with a second projection pass whenever a coefficient exceeds 0.7 in
/// modulus. Row 0 is left untouched and must already have unit norm
/// (PreconditionError otherwise); DependentRowsError if a row collapses.
CompletionMatrix unitarize(CompletionMatrix m, double tolerance = kDefaultTolerance);

/// max |(M M^*)_(ij) - delta_ij|
double unitarity_defect(const Eigen::MatrixXcd& m);

/// Completion matrix of an existing family at one prefix.
CompletionMatrix assemble_completion_matrix(std::span<const Mask> family, std::size_t prefix);

/// All p^s masks: element 0 is m0 itself, element l is read from row l of
/// the unitarized matrix at every prefix. Errors name the offending prefix.
std::vector<Mask> derive_wavelet_masks(const Mask& m0, double tolerance = kDefaultTolerance);

/// m(chi) phi_hat(chi A^-1) on the window (-N, M+1).
DualStepFunction wavelet_spectrum(const Mask& m, const DualStepFunction& phi_hat);

struct WaveletSystem {
  Mask scaling_mask;
  std::vector<Mask> wavelet_masks;  ///< m^(l) for l = 1 .. q-1, stored at l-1
  DualStepFunction phi_hat;
  StepFunction phi;
  std::vector<DualStepFunction> wavelet_hats;
  std::vector<StepFunction> wavelets;  ///< psi^(l) for l = 1 .. q-1, stored at l-1

  /// m^(0), m^(1), ..., m^(q-1)
  std::vector<Mask> family() const;
};

/// `masks` is the full family (m^(0) first). Throws ParameterError if the
/// masks and phi_hat disagree on (p, s, N).
WaveletSystem synthesize_wavelets(std::span<const Mask> masks, const DualStepFunction& phi_hat);

/// Full pipeline: refinable function, completed masks, wavelets.
WaveletSystem build_wavelet_system(const Mask& m0, int M, double tolerance = kDefaultTolerance);

struct VerificationReport {
  double max_deviation = 0.0;
  std::size_t worst_k = 0;
  std::size_t worst_l = 0;
  LaurentElement worst_g;
  LaurentElement worst_h;
  int shift_depth = 0;
  std::size_t shift_count = 0;
  std::size_t function_count = 0;
  /// max |<psi^(k), psi^(l)(. - g_-(depth+1))>|; zero when supports are disjoint.
  double disjoint_spot_check = 0.0;

  bool passed(double tolerance = kDefaultTolerance) const {
    return max_deviation <= tolerance && disjoint_spot_check <= tolerance;
  }
};

/// Time-domain check of <psi^(k)(. - g), psi^(l)(. - h)> = delta_kl delta_gh
/// for all g, h in H_0^(shift_depth) and k, l in GF(p^s), with psi^(0) = phi.
/// Needs shift_depth >= N + 1.
VerificationReport verify_wavelet_system(const WaveletSystem& ws, int shift_depth);

/// V_(jk) = e^(2 pi i j k / p)
Eigen::MatrixXcd vandermonde_matrix(int p);
/// V (x) V (x) ... (x) V, n factors (n = 0 gives [1]).
Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& v, int n);
/// Matrix of the shift/prefix system: rows h in H_0^(N), columns prefixes
/// (a_-N ... a_-1), entries p^(-sN) (chi_prefix, h), built from characters.
Eigen::MatrixXcd orthonormality_system_matrix(const GaloisField& field, int N);

struct VandermondeReport {
  int p = 0;
  int s = 0;
  int N = 0;
  std::size_t size = 0;        ///< p^(sN)
  cplx det_v;                  ///< det V
  double dft_unitarity_error = 0.0;  ///< defect of V / sqrt(p)
  double log_abs_det = 0.0;    ///< ln |det V^((x) sN)| from LU
  double expected_log_abs_det = 0.0;  ///< (sN p^(sN) / 2) ln p
  double relative_error = 0.0;
  bool nonsingular = false;
  double system_matrix_error = 0.0;  ///< max |system - p^(-sN) V^((x) sN)|
};

/// Throws SizeError when p^(sN) exceeds `cap`.
VandermondeReport vandermonde_kron_check(int p, int s, int N, std::size_t cap = 729);

}  // namespace lfw
