#include "lfwave/galois_field.hpp"

#include <algorithm>
#include <sstream>

#include "lfwave/errors.hpp"

namespace lfw {

namespace {

std::size_t int_pow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

int mod(int a, int p) {
  const int r = a % p;
  return r < 0 ? r + p : r;
}

// Remainder of `num` modulo the monic polynomial `den`, coefficients mod p.
std::vector<int> poly_rem(std::vector<int> num, std::span<const int> den, int p) {
  const int dd = static_cast<int>(den.size()) - 1;
  for (int i = static_cast<int>(num.size()) - 1; i >= dd; --i) {
    const int c = num[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    for (int k = 0; k <= dd; ++k) {
      auto& t = num[static_cast<std::size_t>(i - dd + k)];
      t = mod(t - c * den[static_cast<std::size_t>(k)], p);
    }
  }
  num.resize(static_cast<std::size_t>(std::max(dd, 0)));
  return num;
}

void validate_params(int p, int s) {
  if (!GaloisField::is_prime(p)) throw ParameterError("p = " + std::to_string(p) + " is not prime");
  if (s < 1) throw ParameterError("extension degree s must be >= 1");
}

}  // namespace

bool GFElement::is_zero() const noexcept {
  return std::all_of(digits.begin(), digits.end(), [](int d) { return d == 0; });
}

int modulus(const GFElement& a) noexcept { return a.is_zero() ? 0 : 1; }

GaloisField::GaloisField(int p, int s) : GaloisField(p, s, AdditiveTag{}) {
  poly_ = default_reduction_poly(p, s);
}

GaloisField::GaloisField(int p, int s, std::vector<int> reduction_poly)
    : GaloisField(p, s, AdditiveTag{}) {
  if (reduction_poly.size() != static_cast<std::size_t>(s) + 1 || reduction_poly.back() != 1)
    throw ConfigurationError("reduction polynomial must be monic of degree " + std::to_string(s));
  for (int c : reduction_poly)
    if (c < 0 || c >= p) throw ConfigurationError("reduction polynomial coefficient out of range");
  if (!is_irreducible(p, reduction_poly))
    throw ConfigurationError("reduction polynomial is reducible over Z_" + std::to_string(p));
  poly_ = std::move(reduction_poly);
}

GaloisField::GaloisField(int p, int s, AdditiveTag) : p_(p), s_(s), order_(0) {
  validate_params(p, s);
  order_ = int_pow(static_cast<std::size_t>(p), s);
}

GaloisField GaloisField::additive_only(int p, int s) { return GaloisField(p, s, AdditiveTag{}); }

GFElement GaloisField::zero() const { return GFElement{p_, std::vector<int>(static_cast<std::size_t>(s_), 0)}; }

GFElement GaloisField::one() const {
  GFElement e = zero();
  e.digits[0] = 1;
  return e;
}

GFElement GaloisField::element(std::vector<int> digits) const {
  GFElement e{p_, std::move(digits)};
  check(e);
  return e;
}

void GaloisField::check(const GFElement& a) const {
  if (a.p != p_ || a.digits.size() != static_cast<std::size_t>(s_))
    throw ParameterError("element does not belong to GF(" + std::to_string(p_) + "^" + std::to_string(s_) + ")");
  for (int d : a.digits)
    if (d < 0 || d >= p_) throw ParameterError("digit " + std::to_string(d) + " outside [0, p)");
}

GFElement GaloisField::add(const GFElement& a, const GFElement& b) const {
  check(a);
  check(b);
  GFElement r = a;
  for (std::size_t l = 0; l < r.digits.size(); ++l) r.digits[l] = (a.digits[l] + b.digits[l]) % p_;
  return r;
}

GFElement GaloisField::neg(const GFElement& a) const {
  check(a);
  GFElement r = a;
  for (int& d : r.digits) d = (p_ - d) % p_;
  return r;
}

GFElement GaloisField::sub(const GFElement& a, const GFElement& b) const { return add(a, neg(b)); }

GFElement GaloisField::mul(const GFElement& a, const GFElement& b) const {
  check(a);
  check(b);
  if (!poly_) throw ConfigurationError("field has no reduction polynomial; multiplication unavailable");
  std::vector<int> prod(static_cast<std::size_t>(2 * s_ - 1), 0);
  for (int i = 0; i < s_; ++i)
    for (int j = 0; j < s_; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + a.digits[static_cast<std::size_t>(i)] * b.digits[static_cast<std::size_t>(j)]) % p_;
  return GFElement{p_, poly_rem(std::move(prod), *poly_, p_)};
}

GFElement GaloisField::inverse(const GFElement& a) const {
  if (a.is_zero()) throw RangeError("zero has no multiplicative inverse");
  // a^(q-2) in a group of order q-1
  GFElement result = one();
  GFElement base = a;
  std::size_t e = order_ - 2;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

int GaloisField::dot(const GFElement& a, const GFElement& b) const {
  check(a);
  check(b);
  int acc = 0;
  for (std::size_t l = 0; l < a.digits.size(); ++l) acc = (acc + a.digits[l] * b.digits[l]) % p_;
  return acc;
}

std::size_t GaloisField::index(const GFElement& a) const {
  check(a);
  std::size_t j = 0;
  for (int l = s_ - 1; l >= 0; --l) j = j * static_cast<std::size_t>(p_) + static_cast<std::size_t>(a.digits[static_cast<std::size_t>(l)]);
  return j;
}

GFElement GaloisField::from_index(std::size_t j) const {
  if (j >= order_) throw RangeError("index " + std::to_string(j) + " outside [0, " + std::to_string(order_) + ")");
  GFElement e = zero();
  for (int& d : e.digits) {
    d = static_cast<int>(j % static_cast<std::size_t>(p_));
    j /= static_cast<std::size_t>(p_);
  }
  return e;
}

bool GaloisField::is_prime(int n) noexcept {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool GaloisField::is_irreducible(int p, std::span<const int> poly) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  for (int d = 1; 2 * d <= deg; ++d) {
    const std::size_t count = int_pow(static_cast<std::size_t>(p), d);
    for (std::size_t code = 0; code < count; ++code) {
      std::vector<int> factor(static_cast<std::size_t>(d) + 1);
      std::size_t c = code;
      for (int i = 0; i < d; ++i) {
        factor[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(p));
        c /= static_cast<std::size_t>(p);
      }
      factor[static_cast<std::size_t>(d)] = 1;
      const auto rem = poly_rem(std::vector<int>(poly.begin(), poly.end()), factor, p);
      if (std::all_of(rem.begin(), rem.end(), [](int x) { return x == 0; })) return false;
    }
  }
  return true;
}

std::vector<int> GaloisField::default_reduction_poly(int p, int s) {
  validate_params(p, s);
  const std::size_t count = int_pow(static_cast<std::size_t>(p), s);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<int> poly(static_cast<std::size_t>(s) + 1);
    std::size_t c = code;
    for (int i = 0; i < s; ++i) {
      poly[static_cast<std::size_t>(i)] = static_cast<int>(c % static_cast<std::size_t>(p));
      c /= static_cast<std::size_t>(p);
    }
    poly[static_cast<std::size_t>(s)] = 1;
    if (is_irreducible(p, poly)) return poly;
  }
  throw ConfigurationError("no irreducible polynomial found");  // unreachable for prime p
}

std::string to_string(const GFElement& a) {
  std::string out;
  for (std::size_t l = 0; l < a.digits.size(); ++l) {
    if (l) out += ' ';
    out += std::to_string(a.digits[l]);
  }
  return out;
}

GFElement parse_gf_element(const GaloisField& field, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> digits;
  std::string tok;
  while (in >> tok) {
    try {
      std::size_t used = 0;
      digits.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw ParseError("bad digit '" + tok + "'");
    } catch (const std::logic_error&) {
      throw ParseError("bad digit '" + tok + "'");
    }
  }
  if (digits.size() != static_cast<std::size_t>(field.s()))
    throw ParseError("expected " + std::to_string(field.s()) + " digits, got " + std::to_string(digits.size()));
  try {
    return field.element(std::move(digits));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace lfw
