#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lfwave/characters.hpp"
#include "lfwave/galois_field.hpp"
#include "lfwave/local_field.hpp"

namespace lfw {

/// In-place DFT over (Z_p)^axes laid out as a base-p number with `axes`
/// digits: one size-p pass per digit. sign = -1 uses the kernel
/// e^(-2 pi i a x / p), sign = +1 its conjugate. No normalization.
void quotient_dft(std::span<cplx> values, int p, int axes, int sign);

/// Digit levels -N .. M-1 of a table. Tables are flattened with the highest
/// level varying fastest; inside a level the GF digit l has weight p^l.
struct Window {
  int N = 0;
  int M = 0;

  int levels() const noexcept { return N + M; }
  friend bool operator==(const Window&, const Window&) = default;
};

enum class Domain { time, frequency };

/// Complex table over the digit levels of a Window.
///
/// Domain::time: a function on F^(s) supported in F_(-N) and constant on
/// cosets of F_M; entry (x_-N, ..., x_(M-1)) is its value on that coset.
///
/// Domain::frequency: a function on the characters supported in F_M^perp and
/// constant on cosets of F_(-N)^perp; entry (a_-N, ..., a_(M-1)) is its value
/// on the coset with those Rademacher exponents.
template <Domain D>
class BasicStepFunction {
 public:
  BasicStepFunction(GaloisField field, Window window);
  BasicStepFunction(GaloisField field, Window window, std::vector<cplx> values);

  const GaloisField& field() const noexcept { return field_; }
  const Window& window() const noexcept { return window_; }
  std::size_t size() const noexcept { return values_.size(); }

  std::span<const cplx> values() const noexcept { return values_; }
  std::span<cplx> values() noexcept { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  cplx& operator[](std::size_t i) { return values_[i]; }

  /// Flat index of a digit tuple for levels -N .. M-1.
  std::size_t index_of(std::span<const GFElement> tuple) const;
  std::vector<GFElement> tuple_of(std::size_t index) const;

 private:
  GaloisField field_;
  Window window_;
  std::vector<cplx> values_;
};

using StepFunction = BasicStepFunction<Domain::time>;
using DualStepFunction = BasicStepFunction<Domain::frequency>;

extern template class BasicStepFunction<Domain::time>;
extern template class BasicStepFunction<Domain::frequency>;

/// Haar measure of one table cell: mu(F_M coset) = p^(-sM) in time,
/// nu(F_(-N)^perp coset) = p^(-sN) in frequency.
double cell_measure(const StepFunction& f);
double cell_measure(const DualStepFunction& f);

/// f(x); zero outside F_(-N).
cplx evaluate(const StepFunction& f, const LaurentElement& x);
/// g(chi); zero outside F_M^perp.
cplx evaluate(const DualStepFunction& g, const Character& chi);

/// f_hat(chi) = sum over cells of f(x) conj((chi, x)) mu(F_M).
DualStepFunction fourier(const StepFunction& f);
/// f(x) = sum over cells of g(chi) (chi, x) nu(F_(-N)^perp).
StepFunction inv_fourier(const DualStepFunction& g);

/// Quadratic reference transforms evaluating every (chi, x) pairing through
/// the characters module.
DualStepFunction fourier_direct(const StepFunction& f);
StepFunction inv_fourier_direct(const DualStepFunction& g);

/// Re-expresses a table on a larger window (N' >= N, M' >= M). New low time
/// levels are zero-filled, new high time levels replicate; the frequency
/// picture is mirrored. Throws WindowError when shrinking.
StepFunction widen(const StepFunction& f, Window target);
DualStepFunction widen(const DualStepFunction& g, Window target);

/// <f, g> over the union of both windows.
cplx inner_product(const StepFunction& f, const StepFunction& g);
cplx inner_product(const DualStepFunction& f, const DualStepFunction& g);

/// x -> f(x - h). Digits of h at indices >= M do not move cosets of F_M;
/// a nonzero digit below -N throws WindowError (widen first).
StepFunction shift(const StepFunction& f, const LaurentElement& h);

}  // namespace lfw
