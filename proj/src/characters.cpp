#include "lfwave/characters.hpp"

#include <numbers>

#include "lfwave/errors.hpp"

namespace lfw {

cplx root_of_unity(int p, int t) {
  t %= p;
  if (t < 0) t += p;
  if ((4 * t) % p == 0) {
    switch ((4 * t) / p) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * t / p);
}

Character Character::rademacher(int k, GFElement u) {
  Character chi;
  chi.set(k, std::move(u));
  return chi;
}

GFElement Character::exponent(const GaloisField& field, int k) const {
  const auto it = exponents_.find(k);
  return it == exponents_.end() ? field.zero() : it->second;
}

void Character::set(int k, GFElement a) {
  if (a.is_zero())
    exponents_.erase(k);
  else
    exponents_[k] = std::move(a);
}

int pairing_phase(const GaloisField& field, const Character& chi, const LaurentElement& x) {
  int t = 0;
  for (const auto& [k, a] : chi.exponents()) {
    if (k < x.start || k >= x.end()) continue;
    t = (t + field.dot(a, x.coeffs[static_cast<std::size_t>(k - x.start)])) % field.p();
  }
  return t;
}

cplx rademacher_eval(const GaloisField& field, int k, const GFElement& u, const LaurentElement& x) {
  field.check(u);
  if (k < x.start || k >= x.end()) return {1.0, 0.0};
  return root_of_unity(field.p(), field.dot(u, x.coeffs[static_cast<std::size_t>(k - x.start)]));
}

cplx char_eval(const GaloisField& field, const Character& chi, const LaurentElement& x) {
  return root_of_unity(field.p(), pairing_phase(field, chi, x));
}

Character char_mul(const GaloisField& field, const Character& chi, const Character& phi) {
  Character r = chi;
  for (const auto& [k, a] : phi.exponents()) r.set(k, field.add(r.exponent(field, k), a));
  return r;
}

Character char_pow(const GaloisField& field, const Character& chi, const GFElement& b) {
  Character r;
  for (const auto& [k, a] : chi.exponents()) r.set(k, field.mul(a, b));
  return r;
}

Character char_inverse(const GaloisField& field, const Character& chi) {
  Character r;
  for (const auto& [k, a] : chi.exponents()) r.set(k, field.neg(a));
  return r;
}

Character char_dilate(const Character& chi) {
  Character r;
  for (const auto& [k, a] : chi.exponents()) r.set(k + 1, a);
  return r;
}

Character char_dilate_inv(const Character& chi) {
  Character r;
  for (const auto& [k, a] : chi.exponents()) r.set(k - 1, a);
  return r;
}

CharacterCoset reduce(const GaloisField& field, const Character& chi, int N, int top) {
  if (top < -N - 1) throw WindowError("coset window top below -N - 1");
  CharacterCoset c{N, std::vector<GFElement>(static_cast<std::size_t>(top + 1 + N), field.zero())};
  for (const auto& [k, a] : chi.exponents()) {
    if (k < -N) continue;
    if (k > top) throw WindowError("character has exponent at index " + std::to_string(k) + " above window top");
    c.exponents[static_cast<std::size_t>(k + N)] = a;
  }
  return c;
}

Character representative(const CharacterCoset& coset) {
  Character chi;
  for (std::size_t i = 0; i < coset.exponents.size(); ++i) chi.set(-coset.N + static_cast<int>(i), coset.exponents[i]);
  return chi;
}

std::vector<CharacterCoset> coset_enumerate(const GaloisField& field, int N, int top) {
  if (top < -N - 1) throw WindowError("coset window top below -N - 1");
  const std::size_t levels = static_cast<std::size_t>(top + 1 + N);
  std::size_t count = 1;
  for (std::size_t i = 0; i < levels; ++i) count *= field.order();
  std::vector<CharacterCoset> out;
  out.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    CharacterCoset c{N, std::vector<GFElement>(levels, field.zero())};
    std::size_t rest = idx;
    for (std::size_t i = levels; i-- > 0;) {
      c.exponents[i] = field.from_index(rest % field.order());
      rest /= field.order();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string to_string(const CharacterCoset& coset) {
  std::string out;
  for (std::size_t i = 0; i < coset.exponents.size(); ++i) {
    if (i) out += ';';
    out += to_string(coset.exponents[i]);
  }
  return out;
}

}  // namespace lfw
