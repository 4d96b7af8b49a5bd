#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lfwave/galois_field.hpp"

namespace lfw {

/// Element of F^(s): coeffs[i] is the GF(p^s) digit at index start + i; all
/// digits outside the window are zero. Normalized form has either no coeffs
/// (the zero element) or nonzero first and last coefficients.
struct LaurentElement {
  int start = 0;
  std::vector<GFElement> coeffs;

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// One past the highest stored index.
  int end() const noexcept { return start + static_cast<int>(coeffs.size()); }

  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;
};

/// Elements of H_0^(depth) in enumeration order (digit at index -1 varies
/// fastest).
struct ShiftSet {
  int depth = 0;
  std::vector<LaurentElement> elements;
};

/// Arithmetic in F^(s) over a fixed GF(p^s).
class LocalField {
 public:
  explicit LocalField(GaloisField field) : field_(std::move(field)) {}

  const GaloisField& field() const noexcept { return field_; }

  LaurentElement zero() const { return {}; }
  /// g_k: unit digit (1, 0, ..., 0) at index k.
  LaurentElement basis(int k) const;
  /// Builds and normalizes an element from a raw window.
  LaurentElement make(int start, std::vector<GFElement> coeffs) const;
  LaurentElement normalize(LaurentElement a) const;

  /// Digit a_k (zero outside the window).
  GFElement digit(const LaurentElement& a, int k) const;

  LaurentElement add(const LaurentElement& a, const LaurentElement& b) const;
  LaurentElement neg(const LaurentElement& a) const;
  LaurentElement sub(const LaurentElement& a, const LaurentElement& b) const;
  /// Cauchy product of the digit sequences.
  LaurentElement mul(const LaurentElement& a, const LaurentElement& b) const;
  LaurentElement scalar_mul(const GFElement& lambda, const LaurentElement& a) const;

  /// Index of the leading nonzero digit; empty for zero.
  std::optional<int> valuation(const LaurentElement& a) const;
  /// p^(-s n) for leading index n; 0 for the zero element.
  double norm(const LaurentElement& a) const;
  /// a in F_n, i.e. every digit below index n vanishes.
  bool in_subgroup(const LaurentElement& a, int n) const;

  /// Ax = sum a_n g_(n-1).
  LaurentElement dilate(const LaurentElement& x) const;
  LaurentElement dilate_inv(const LaurentElement& x) const;

  /// H_0^(depth) = { a_-1 g_-1 + ... + a_-depth g_-depth }.
  ShiftSet enumerate_shifts(int depth) const;
  /// The element of H_0^(depth) with the given enumeration index.
  LaurentElement shift_from_index(int depth, std::size_t index) const;

 private:
  GaloisField field_;
};

/// "start=n; digits=[d0 d1;d0 d1;...]"
std::string to_string(const LaurentElement& a);
LaurentElement parse_laurent(const LocalField& lf, std::string_view text);

}  // namespace lfw
