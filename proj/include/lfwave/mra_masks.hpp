#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "lfwave/characters.hpp"
#include "lfwave/galois_field.hpp"
#include "lfwave/step_functions.hpp"

namespace lfw {

/// Pass/fail threshold used by every orthonormality check unless overridden.
inline constexpr double kDefaultTolerance = 1e-10;

/// Mask values m_(a_-N ... a_0), one per coset F_(-N)^perp r_-N^(a_-N) ... r_0^(a_0).
/// Exponents above index 0 are never stored, so periodicity with respect to
/// r_1, r_2, ... holds by construction. Flat index: a_0 varies fastest, so row
/// `prefix` (the tuple a_-N ... a_-1) is the contiguous block
/// [prefix * q, prefix * q + q).
class Mask {
 public:
  Mask(GaloisField field, int N);
  Mask(GaloisField field, int N, std::vector<cplx> values);

  const GaloisField& field() const noexcept { return field_; }
  int N() const noexcept { return N_; }
  std::size_t size() const noexcept { return values_.size(); }
  /// q^N
  std::size_t prefix_count() const noexcept { return values_.size() / field_.order(); }

  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }
  std::span<const cplx> row(std::size_t prefix) const;
  std::span<cplx> row(std::size_t prefix);

  cplx operator()(std::size_t prefix, std::size_t a0) const { return values_[prefix * field_.order() + a0]; }
  cplx& operator()(std::size_t prefix, std::size_t a0) { return values_[prefix * field_.order() + a0]; }

  /// Digit tuple a_-N ... a_-1 of a prefix index.
  std::vector<GFElement> prefix_tuple(std::size_t prefix) const;

 private:
  GaloisField field_;
  int N_;
  std::vector<cplx> values_;
};

/// beta_h for h in H_0^(N+1), in LocalField::enumerate_shifts order.
class RefinementCoefficients {
 public:
  RefinementCoefficients(GaloisField field, int N);
  RefinementCoefficients(GaloisField field, int N, std::vector<cplx> values);

  const GaloisField& field() const noexcept { return field_; }
  int N() const noexcept { return N_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

 private:
  GaloisField field_;
  int N_;
  std::vector<cplx> values_;
};

/// Mask value on a coset; the coset must resolve levels -N .. 0
/// (coset.N >= m.N()). Exponents above 0 are ignored, absent ones read as zero.
cplx mask_eval(const Mask& m, const CharacterCoset& chi);
cplx mask_eval(const Mask& m, const Character& chi);

/// m(chi) = p^(-s) sum_h beta_h conj((chi A^-1, h)).
Mask mask_from_coefficients(const RefinementCoefficients& beta);
/// Inverse of mask_from_coefficients (character orthogonality on H_0^(N+1)).
RefinementCoefficients coefficients_from_mask(const Mask& m);

/// phi_hat on the window (-N, M) from phi_hat(chi) = m(chi) phi_hat(chi A^-1),
/// i.e. phi_hat(chi) = prod_(k=0)^(N+M-1) m(chi A^-k). Throws
/// NormalizationError if |m_(0...0) - 1| > tolerance.
DualStepFunction synthesize_refinable(const Mask& m, int M, double tolerance = kDefaultTolerance);

/// Shift-orthonormality of phi: for every prefix (levels -N .. -1) the sum of
/// |phi_hat|^2 over levels 0 .. M-1 must equal 1.
struct ScalingReport {
  double max_deviation = 0.0;
  std::size_t worst_prefix = 0;
  std::vector<double> sums;  ///< one per prefix

  bool passed(double tolerance = kDefaultTolerance) const { return max_deviation <= tolerance; }
};
ScalingReport check_scaling_orthonormality(const DualStepFunction& phi_hat);

/// sum_(a_0) m^(k) conj(m^(l)) = delta_(k,l) for every prefix and pair.
struct FamilyReport {
  double max_deviation = 0.0;
  std::size_t worst_prefix = 0;
  std::size_t worst_k = 0;
  std::size_t worst_l = 0;
  std::size_t prefix_count = 0;

  bool passed(double tolerance = kDefaultTolerance) const { return max_deviation <= tolerance; }
};
/// `family[l]` is m^(l) with l a GaloisField index; needs exactly p^s masks.
FamilyReport check_mask_family_orthogonality(std::span<const Mask> family);

/// m_(a_-N ... a_0) = delta(a_0, 0).
Mask haar_mask(const GaloisField& field, int N);

/// Random scaling mask: row (1, 0, ..., 0) at the zero prefix; every other
/// prefix gets a unit row supported on a uniformly random nonempty set of
/// columns with complex Gaussian entries.
Mask random_admissible_mask(const GaloisField& field, int N, std::mt19937_64& rng);

}  // namespace lfw
