#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lfw {

/// Element of GF(p^s) in additive coordinates. digits[l] is the coefficient
/// of t^l, so digit l carries weight p^l in GaloisField::index.
struct GFElement {
  int p = 2;
  std::vector<int> digits;

  bool is_zero() const noexcept;
  friend bool operator==(const GFElement&, const GFElement&) = default;
};

/// 1 for a nonzero element, 0 for zero.
int modulus(const GFElement& a) noexcept;

/// GF(p^s) viewed as (Z_p)^s, with multiplication modulo a monic irreducible
/// polynomial of degree s. Polynomials are stored little-endian
/// (poly[i] is the coefficient of t^i, poly[s] == 1).
class GaloisField {
 public:
  /// Uses default_reduction_poly(p, s).
  GaloisField(int p, int s);
  /// Throws ConfigurationError unless `reduction_poly` is monic, of degree s
  /// and irreducible over Z_p.
  GaloisField(int p, int s, std::vector<int> reduction_poly);

  /// Field without multiplicative structure; mul() throws ConfigurationError.
  static GaloisField additive_only(int p, int s);

  int p() const noexcept { return p_; }
  int s() const noexcept { return s_; }
  /// p^s
  std::size_t order() const noexcept { return order_; }
  const std::optional<std::vector<int>>& reduction_poly() const noexcept { return poly_; }

  GFElement zero() const;
  GFElement one() const;
  /// Validates digit count and range.
  GFElement element(std::vector<int> digits) const;

  GFElement add(const GFElement& a, const GFElement& b) const;
  GFElement neg(const GFElement& a) const;
  GFElement sub(const GFElement& a, const GFElement& b) const;
  GFElement mul(const GFElement& a, const GFElement& b) const;
  /// Multiplicative inverse; RangeError for zero.
  GFElement inverse(const GFElement& a) const;

  /// Coordinate scalar product sum_l a^(l) b^(l) mod p.
  int dot(const GFElement& a, const GFElement& b) const;

  std::size_t index(const GFElement& a) const;
  GFElement from_index(std::size_t j) const;

  /// Throws ParameterError if `a` does not belong to this field.
  void check(const GFElement& a) const;

  static bool is_prime(int n) noexcept;
  /// Exhaustive trial division by every monic polynomial of degree <= s/2.
  static bool is_irreducible(int p, std::span<const int> poly);
  /// Lexicographically first monic irreducible polynomial of degree s
  /// (t for s = 1, t^2+t+1 for p = 2, s = 2, t^2+1 for p = 3, s = 2).
  static std::vector<int> default_reduction_poly(int p, int s);

  friend bool operator==(const GaloisField&, const GaloisField&) = default;

 private:
  struct AdditiveTag {};
  GaloisField(int p, int s, AdditiveTag);

  int p_;
  int s_;
  std::size_t order_;
  std::optional<std::vector<int>> poly_;
};

/// "d0 d1 ... d(s-1)"
std::string to_string(const GFElement& a);
GFElement parse_gf_element(const GaloisField& field, std::string_view text);

}  // namespace lfw
