#include "lfwave/mra_masks.hpp"

#include <cmath>

#include "lfwave/errors.hpp"

namespace lfw {

namespace {

std::size_t pow_size(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

void check_depth(int N) {
  if (N < 0) throw ParameterError("mask depth N must be >= 0");
}

}  // namespace

Mask::Mask(GaloisField field, int N) : field_(std::move(field)), N_(N) {
  check_depth(N);
  values_.assign(pow_size(field_.order(), N + 1), cplx{});
}

Mask::Mask(GaloisField field, int N, std::vector<cplx> values)
    : field_(std::move(field)), N_(N), values_(std::move(values)) {
  check_depth(N);
  if (values_.size() != pow_size(field_.order(), N + 1))
    throw ParameterError("mask table has " + std::to_string(values_.size()) + " entries, expected p^(s(N+1))");
}

std::span<const cplx> Mask::row(std::size_t prefix) const {
  if (prefix >= prefix_count()) throw RangeError("prefix index out of range");
  return std::span<const cplx>(values_).subspan(prefix * field_.order(), field_.order());
}

std::span<cplx> Mask::row(std::size_t prefix) {
  if (prefix >= prefix_count()) throw RangeError("prefix index out of range");
  return std::span<cplx>(values_).subspan(prefix * field_.order(), field_.order());
}

std::vector<GFElement> Mask::prefix_tuple(std::size_t prefix) const {
  if (prefix >= prefix_count()) throw RangeError("prefix index out of range");
  std::vector<GFElement> out(static_cast<std::size_t>(N_), field_.zero());
  for (std::size_t i = out.size(); i-- > 0;) {
    out[i] = field_.from_index(prefix % field_.order());
    prefix /= field_.order();
  }
  return out;
}

RefinementCoefficients::RefinementCoefficients(GaloisField field, int N) : field_(std::move(field)), N_(N) {
  check_depth(N);
  values_.assign(pow_size(field_.order(), N + 1), cplx{});
}

RefinementCoefficients::RefinementCoefficients(GaloisField field, int N, std::vector<cplx> values)
    : field_(std::move(field)), N_(N), values_(std::move(values)) {
  check_depth(N);
  if (values_.size() != pow_size(field_.order(), N + 1))
    throw ParameterError("coefficient table has " + std::to_string(values_.size()) + " entries, expected p^(s(N+1))");
}

cplx mask_eval(const Mask& m, const CharacterCoset& chi) {
  if (chi.N < m.N())
    throw ParameterError("coset modulo F_(-" + std::to_string(chi.N) + ")^perp does not resolve mask depth " +
                         std::to_string(m.N()));
  const GaloisField& f = m.field();
  std::size_t flat = 0;
  for (int k = -m.N(); k <= 0; ++k) {
    const int pos = k + chi.N;
    const std::size_t v = pos < static_cast<int>(chi.exponents.size()) ? f.index(chi.exponents[static_cast<std::size_t>(pos)]) : 0;
    flat = flat * f.order() + v;
  }
  return m.values()[flat];
}

cplx mask_eval(const Mask& m, const Character& chi) {
  std::size_t flat = 0;
  for (int k = -m.N(); k <= 0; ++k) flat = flat * m.field().order() + m.field().index(chi.exponent(m.field(), k));
  return m.values()[flat];
}

Mask mask_from_coefficients(const RefinementCoefficients& beta) {
  // Digit a_-k of the mask index pairs with digit h_-(k+1) of the shift
  // index, and both sit at weight q^k, so the sum is one quotient DFT.
  std::vector<cplx> v(beta.values().begin(), beta.values().end());
  quotient_dft(v, beta.field().p(), beta.field().s() * (beta.N() + 1), -1);
  const double scale = 1.0 / static_cast<double>(beta.field().order());
  for (auto& c : v) c *= scale;
  return Mask(beta.field(), beta.N(), std::move(v));
}

RefinementCoefficients coefficients_from_mask(const Mask& m) {
  std::vector<cplx> v(m.values().begin(), m.values().end());
  quotient_dft(v, m.field().p(), m.field().s() * (m.N() + 1), +1);
  const double scale = std::pow(static_cast<double>(m.field().order()), -m.N());
  for (auto& c : v) c *= scale;
  return RefinementCoefficients(m.field(), m.N(), std::move(v));
}

DualStepFunction synthesize_refinable(const Mask& m, int M, double tolerance) {
  if (M < 0) throw ParameterError("frequency support level M must be >= 0");
  if (std::abs(m.values()[0] - 1.0) > tolerance)
    throw NormalizationError("scaling mask must satisfy m(identity) = 1");
  const int N = m.N();
  const GaloisField& f = m.field();
  const std::size_t q = f.order();
  DualStepFunction phi_hat(f, Window{N, M});
  const int L = N + M;
  std::vector<std::size_t> lv(static_cast<std::size_t>(L));
  for (std::size_t idx = 0; idx < phi_hat.size(); ++idx) {
    std::size_t rest = idx;
    for (int i = L - 1; i >= 0; --i) {
      lv[static_cast<std::size_t>(i)] = rest % q;
      rest /= q;
    }
    cplx prod = 1.0;
    // chi A^-k carries the exponent of level j + k at level j, so its mask
    // window -N .. 0 reads table positions k .. k + N.
    for (int k = 0; k < L && prod != cplx{}; ++k) {
      std::size_t flat = 0;
      for (int t = 0; t <= N; ++t) {
        const int pos = k + t;
        flat = flat * q + (pos < L ? lv[static_cast<std::size_t>(pos)] : 0);
      }
      prod *= m.values()[flat];
    }
    phi_hat[idx] = prod;
  }
  return phi_hat;
}

ScalingReport check_scaling_orthonormality(const DualStepFunction& phi_hat) {
  const Window w = phi_hat.window();
  if (w.M < 0) throw ParameterError("scaling check needs M >= 0");
  const std::size_t block = pow_size(phi_hat.field().order(), w.M);
  ScalingReport report;
  report.sums.assign(phi_hat.size() / block, 0.0);
  for (std::size_t prefix = 0; prefix < report.sums.size(); ++prefix) {
    double sum = 0.0;
    for (std::size_t j = 0; j < block; ++j) sum += std::norm(phi_hat[prefix * block + j]);
    report.sums[prefix] = sum;
    const double dev = std::abs(sum - 1.0);
    if (dev > report.max_deviation) {
      report.max_deviation = dev;
      report.worst_prefix = prefix;
    }
  }
  return report;
}

FamilyReport check_mask_family_orthogonality(std::span<const Mask> family) {
  if (family.empty()) throw ParameterError("empty mask family");
  const GaloisField& f = family.front().field();
  const std::size_t q = f.order();
  if (family.size() != q) throw ParameterError("mask family needs exactly p^s masks");
  for (const auto& m : family)
    if (m.field() != f || m.N() != family.front().N()) throw ParameterError("masks in a family must share (p, s, N)");
  FamilyReport report;
  report.prefix_count = family.front().prefix_count();
  for (std::size_t prefix = 0; prefix < report.prefix_count; ++prefix) {
    for (std::size_t k = 0; k < q; ++k) {
      for (std::size_t l = 0; l < q; ++l) {
        cplx sum = 0.0;
        for (std::size_t a0 = 0; a0 < q; ++a0) sum += family[k](prefix, a0) * std::conj(family[l](prefix, a0));
        const double dev = std::abs(sum - (k == l ? 1.0 : 0.0));
        if (dev > report.max_deviation) {
          report.max_deviation = dev;
          report.worst_prefix = prefix;
          report.worst_k = k;
          report.worst_l = l;
        }
      }
    }
  }
  return report;
}

Mask haar_mask(const GaloisField& field, int N) {
  Mask m(field, N);
  for (std::size_t prefix = 0; prefix < m.prefix_count(); ++prefix) m(prefix, 0) = 1.0;
  return m;
}

Mask random_admissible_mask(const GaloisField& field, int N, std::mt19937_64& rng) {
  Mask m(field, N);
  const std::size_t q = field.order();
  m(0, 0) = 1.0;
  std::normal_distribution<double> gauss;
  std::uniform_int_distribution<std::size_t> subset(1, (std::size_t{1} << q) - 1);
  for (std::size_t prefix = 1; prefix < m.prefix_count(); ++prefix) {
    const std::size_t support = subset(rng);
    double norm2 = 0.0;
    for (std::size_t a0 = 0; a0 < q; ++a0) {
      if (!((support >> a0) & 1U)) continue;
      const cplx z{gauss(rng), gauss(rng)};
      m(prefix, a0) = z;
      norm2 += std::norm(z);
    }
    const double scale = 1.0 / std::sqrt(norm2);
    for (auto& z : m.row(prefix)) z *= scale;
  }
  return m;
}

}  // namespace lfw
