#pragma once

#include <complex>
#include <map>
#include <vector>

#include "lfwave/galois_field.hpp"
#include "lfwave/local_field.hpp"

namespace lfw {

using cplx = std::complex<double>;

/// e^(2 pi i t / p). Exact for quarter turns (t/p in {0, 1/4, 1/2, 3/4}).
cplx root_of_unity(int p, int t);

/// Character of F^(s)+ written as prod_k r_k^(a_k). Only nonzero exponents
/// are stored, so the neutral character has an empty map and equality is
/// exponent-map equality.
class Character {
 public:
  Character() = default;
  /// r_k^u
  static Character rademacher(int k, GFElement u);

  const std::map<int, GFElement>& exponents() const noexcept { return exponents_; }
  bool is_neutral() const noexcept { return exponents_.empty(); }
  /// Exponent at index k, zero if absent.
  GFElement exponent(const GaloisField& field, int k) const;
  /// Sets a_k; a zero exponent erases the entry.
  void set(int k, GFElement a);

  friend bool operator==(const Character&, const Character&) = default;

 private:
  std::map<int, GFElement> exponents_;
};

/// The integer t in [0, p) with (chi, x) = e^(2 pi i t / p).
int pairing_phase(const GaloisField& field, const Character& chi, const LaurentElement& x);

/// (r_k^u, x) = prod_l e^(2 pi i u^(l) x_k^(l) / p)
cplx rademacher_eval(const GaloisField& field, int k, const GFElement& u, const LaurentElement& x);
cplx char_eval(const GaloisField& field, const Character& chi, const LaurentElement& x);

Character char_mul(const GaloisField& field, const Character& chi, const Character& phi);
Character char_pow(const GaloisField& field, const Character& chi, const GFElement& b);
Character char_inverse(const GaloisField& field, const Character& chi);

/// chi A, defined by (chi A, x) = (chi, A x); r_k A = r_(k+1).
Character char_dilate(const Character& chi);
Character char_dilate_inv(const Character& chi);

/// Coset chi F_(-N)^perp, stored as the exponents at levels -N .. top.
/// Exponents below -N are quotiented away; levels above top are zero.
struct CharacterCoset {
  int N = 0;
  std::vector<GFElement> exponents;

  int top() const noexcept { return -N + static_cast<int>(exponents.size()) - 1; }
  friend bool operator==(const CharacterCoset&, const CharacterCoset&) = default;
};

/// Reduces chi modulo F_(-N)^perp and keeps the window -N .. top. Throws
/// WindowError if chi has a nonzero exponent above top.
CharacterCoset reduce(const GaloisField& field, const Character& chi, int N, int top);
/// Coset representative with no exponents below -N.
Character representative(const CharacterCoset& coset);

/// All p^(s(top+1+N)) cosets in lexicographic order (highest level fastest).
std::vector<CharacterCoset> coset_enumerate(const GaloisField& field, int N, int top);

/// "a_-N;...;a_top" as semicolon-separated digit tuples.
std::string to_string(const CharacterCoset& coset);

}  // namespace lfw
