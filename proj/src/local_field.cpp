#include "lfwave/local_field.hpp"

#include <algorithm>
#include <cmath>

#include "lfwave/errors.hpp"

namespace lfw {

LaurentElement LocalField::basis(int k) const { return LaurentElement{k, {field_.one()}}; }

LaurentElement LocalField::make(int start, std::vector<GFElement> coeffs) const {
  for (const auto& c : coeffs) field_.check(c);
  return normalize(LaurentElement{start, std::move(coeffs)});
}

LaurentElement LocalField::normalize(LaurentElement a) const {
  auto first = std::find_if(a.coeffs.begin(), a.coeffs.end(), [](const GFElement& c) { return !c.is_zero(); });
  if (first == a.coeffs.end()) return {};
  auto last = std::find_if(a.coeffs.rbegin(), a.coeffs.rend(), [](const GFElement& c) { return !c.is_zero(); }).base();
  a.start += static_cast<int>(first - a.coeffs.begin());
  a.coeffs = std::vector<GFElement>(first, last);
  return a;
}

GFElement LocalField::digit(const LaurentElement& a, int k) const {
  if (k < a.start || k >= a.end()) return field_.zero();
  return a.coeffs[static_cast<std::size_t>(k - a.start)];
}

LaurentElement LocalField::add(const LaurentElement& a, const LaurentElement& b) const {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int lo = std::min(a.start, b.start);
  const int hi = std::max(a.end(), b.end());
  LaurentElement r{lo, {}};
  r.coeffs.reserve(static_cast<std::size_t>(hi - lo));
  for (int k = lo; k < hi; ++k) r.coeffs.push_back(field_.add(digit(a, k), digit(b, k)));
  return normalize(std::move(r));
}

LaurentElement LocalField::neg(const LaurentElement& a) const {
  LaurentElement r = a;
  for (auto& c : r.coeffs) c = field_.neg(c);
  return r;
}

LaurentElement LocalField::sub(const LaurentElement& a, const LaurentElement& b) const { return add(a, neg(b)); }

LaurentElement LocalField::mul(const LaurentElement& a, const LaurentElement& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  LaurentElement r{a.start + b.start, std::vector<GFElement>(a.coeffs.size() + b.coeffs.size() - 1, field_.zero())};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j)
      r.coeffs[i + j] = field_.add(r.coeffs[i + j], field_.mul(a.coeffs[i], b.coeffs[j]));
  return normalize(std::move(r));
}

LaurentElement LocalField::scalar_mul(const GFElement& lambda, const LaurentElement& a) const {
  LaurentElement r = a;
  for (auto& c : r.coeffs) c = field_.mul(lambda, c);
  return normalize(std::move(r));
}

std::optional<int> LocalField::valuation(const LaurentElement& a) const {
  const LaurentElement n = normalize(a);
  if (n.is_zero()) return std::nullopt;
  return n.start;
}

double LocalField::norm(const LaurentElement& a) const {
  const auto v = valuation(a);
  if (!v) return 0.0;
  return std::pow(static_cast<double>(field_.p()), -static_cast<double>(field_.s()) * *v);
}

bool LocalField::in_subgroup(const LaurentElement& a, int n) const {
  const auto v = valuation(a);
  return !v || *v >= n;
}

LaurentElement LocalField::dilate(const LaurentElement& x) const {
  LaurentElement r = x;
  if (!r.is_zero()) --r.start;
  return r;
}

LaurentElement LocalField::dilate_inv(const LaurentElement& x) const {
  LaurentElement r = x;
  if (!r.is_zero()) ++r.start;
  return r;
}

LaurentElement LocalField::shift_from_index(int depth, std::size_t index) const {
  const std::size_t q = field_.order();
  LaurentElement h{-depth, std::vector<GFElement>(static_cast<std::size_t>(depth), field_.zero())};
  // coeffs[depth - j] holds the digit at index -j; index -1 varies fastest.
  for (int j = 1; j <= depth; ++j) {
    h.coeffs[static_cast<std::size_t>(depth - j)] = field_.from_index(index % q);
    index /= q;
  }
  if (index != 0) throw RangeError("shift index outside H_0^(" + std::to_string(depth) + ")");
  return normalize(std::move(h));
}

ShiftSet LocalField::enumerate_shifts(int depth) const {
  if (depth < 1) throw RangeError("shift depth must be >= 1");
  ShiftSet set{depth, {}};
  std::size_t count = 1;
  for (int j = 0; j < depth; ++j) count *= field_.order();
  set.elements.reserve(count);
  for (std::size_t i = 0; i < count; ++i) set.elements.push_back(shift_from_index(depth, i));
  return set;
}

std::string to_string(const LaurentElement& a) {
  std::string out = "start=" + std::to_string(a.start) + "; digits=[";
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (i) out += ';';
    out += to_string(a.coeffs[i]);
  }
  out += ']';
  return out;
}

LaurentElement parse_laurent(const LocalField& lf, std::string_view text) {
  const auto start_pos = text.find("start=");
  const auto digits_pos = text.find("digits=[");
  const auto close = text.rfind(']');
  if (start_pos == std::string_view::npos || digits_pos == std::string_view::npos || close == std::string_view::npos ||
      close < digits_pos)
    throw ParseError("expected 'start=n; digits=[...]'");
  int start = 0;
  try {
    start = std::stoi(std::string(text.substr(start_pos + 6)));
  } catch (const std::logic_error&) {
    throw ParseError("bad start index");
  }
  const auto body = text.substr(digits_pos + 8, close - digits_pos - 8);
  std::vector<GFElement> coeffs;
  if (body.find_first_not_of(" \t") != std::string_view::npos) {
    std::size_t pos = 0;
    while (true) {
      const auto semi = body.find(';', pos);
      coeffs.push_back(parse_gf_element(lf.field(), body.substr(pos, semi - pos)));
      if (semi == std::string_view::npos) break;
      pos = semi + 1;
    }
  }
  return lf.make(start, std::move(coeffs));
}

}  // namespace lfw
