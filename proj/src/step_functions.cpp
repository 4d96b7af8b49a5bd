#include "lfwave/step_functions.hpp"

#include <cmath>

#include "lfwave/errors.hpp"

namespace lfw {

namespace {

std::size_t pow_size(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// Per-level GF indices (lowest level first) of a flat table index.
std::vector<std::size_t> level_indices(std::size_t flat, std::size_t q, int levels) {
  std::vector<std::size_t> out(static_cast<std::size_t>(levels));
  for (int i = levels - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = flat % q;
    flat /= q;
  }
  return out;
}

std::size_t flat_index(std::span<const std::size_t> levels, std::size_t q) {
  std::size_t flat = 0;
  for (std::size_t v : levels) flat = flat * q + v;
  return flat;
}

void check_window(Window w) {
  if (w.N < 0 || w.levels() < 0) throw WindowError("window needs N >= 0 and N + M >= 0");
}

void check_same_field(const GaloisField& a, const GaloisField& b) {
  if (a.p() != b.p() || a.s() != b.s()) throw ParameterError("step functions over different fields");
}

LaurentElement point_of(const LocalField& lf, const StepFunction& f, std::size_t idx) {
  return lf.make(-f.window().N, f.tuple_of(idx));
}

Character character_of(const DualStepFunction& g, std::size_t idx) {
  return representative(CharacterCoset{g.window().N, g.tuple_of(idx)});
}

}  // namespace

void quotient_dft(std::span<cplx> values, int p, int axes, int sign) {
  const auto up = static_cast<std::size_t>(p);
  if (values.size() != pow_size(up, axes)) throw ParameterError("quotient_dft: table size is not p^axes");
  std::vector<cplx> roots(up);
  for (int t = 0; t < p; ++t) roots[static_cast<std::size_t>(t)] = root_of_unity(p, sign * t);
  std::vector<cplx> in(up), out(up);
  std::size_t stride = 1;
  for (int axis = 0; axis < axes; ++axis, stride *= up) {
    const std::size_t block = stride * up;
    for (std::size_t base = 0; base < values.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t j = 0; j < up; ++j) in[j] = values[base + off + j * stride];
        for (std::size_t a = 0; a < up; ++a) {
          cplx acc = 0.0;
          for (std::size_t x = 0; x < up; ++x) acc += in[x] * roots[(a * x) % up];
          out[a] = acc;
        }
        for (std::size_t a = 0; a < up; ++a) values[base + off + a * stride] = out[a];
      }
    }
  }
}

template <Domain D>
BasicStepFunction<D>::BasicStepFunction(GaloisField field, Window window)
    : field_(std::move(field)), window_(window) {
  check_window(window_);
  values_.assign(pow_size(field_.order(), window_.levels()), cplx{});
}

template <Domain D>
BasicStepFunction<D>::BasicStepFunction(GaloisField field, Window window, std::vector<cplx> values)
    : field_(std::move(field)), window_(window), values_(std::move(values)) {
  check_window(window_);
  if (values_.size() != pow_size(field_.order(), window_.levels()))
    throw ParameterError("step table has " + std::to_string(values_.size()) + " entries, expected p^(s(N+M))");
}

template <Domain D>
std::size_t BasicStepFunction<D>::index_of(std::span<const GFElement> tuple) const {
  if (tuple.size() != static_cast<std::size_t>(window_.levels())) throw ParameterError("digit tuple length does not match window");
  std::size_t flat = 0;
  for (const auto& a : tuple) flat = flat * field_.order() + field_.index(a);
  return flat;
}

template <Domain D>
std::vector<GFElement> BasicStepFunction<D>::tuple_of(std::size_t index) const {
  if (index >= values_.size()) throw RangeError("table index out of range");
  std::vector<GFElement> out;
  out.reserve(static_cast<std::size_t>(window_.levels()));
  for (std::size_t v : level_indices(index, field_.order(), window_.levels())) out.push_back(field_.from_index(v));
  return out;
}

template class BasicStepFunction<Domain::time>;
template class BasicStepFunction<Domain::frequency>;

double cell_measure(const StepFunction& f) {
  return std::pow(static_cast<double>(f.field().order()), -f.window().M);
}

double cell_measure(const DualStepFunction& f) {
  return std::pow(static_cast<double>(f.field().order()), -f.window().N);
}

cplx evaluate(const StepFunction& f, const LaurentElement& x) {
  const LocalField lf(f.field());
  const Window w = f.window();
  if (!lf.in_subgroup(x, -w.N)) return {};
  std::vector<GFElement> tuple;
  for (int k = -w.N; k < w.M; ++k) tuple.push_back(lf.digit(x, k));
  return f[f.index_of(tuple)];
}

cplx evaluate(const DualStepFunction& g, const Character& chi) {
  const Window w = g.window();
  if (!chi.exponents().empty() && chi.exponents().rbegin()->first >= w.M) return {};
  std::vector<GFElement> tuple;
  for (int k = -w.N; k < w.M; ++k) tuple.push_back(chi.exponent(g.field(), k));
  return g[g.index_of(tuple)];
}

DualStepFunction fourier(const StepFunction& f) {
  std::vector<cplx> v(f.values().begin(), f.values().end());
  quotient_dft(v, f.field().p(), f.field().s() * f.window().levels(), -1);
  const double mu = cell_measure(f);
  for (auto& c : v) c *= mu;
  return DualStepFunction(f.field(), f.window(), std::move(v));
}

StepFunction inv_fourier(const DualStepFunction& g) {
  std::vector<cplx> v(g.values().begin(), g.values().end());
  quotient_dft(v, g.field().p(), g.field().s() * g.window().levels(), +1);
  const double nu = cell_measure(g);
  for (auto& c : v) c *= nu;
  return StepFunction(g.field(), g.window(), std::move(v));
}

DualStepFunction fourier_direct(const StepFunction& f) {
  const LocalField lf(f.field());
  DualStepFunction out(f.field(), f.window());
  std::vector<LaurentElement> points;
  for (std::size_t x = 0; x < f.size(); ++x) points.push_back(point_of(lf, f, x));
  const double mu = cell_measure(f);
  for (std::size_t a = 0; a < out.size(); ++a) {
    const Character chi = character_of(out, a);
    cplx acc = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x) acc += f[x] * std::conj(char_eval(f.field(), chi, points[x]));
    out[a] = acc * mu;
  }
  return out;
}

StepFunction inv_fourier_direct(const DualStepFunction& g) {
  const LocalField lf(g.field());
  StepFunction out(g.field(), g.window());
  std::vector<Character> chars;
  for (std::size_t a = 0; a < g.size(); ++a) chars.push_back(character_of(g, a));
  const double nu = cell_measure(g);
  for (std::size_t x = 0; x < out.size(); ++x) {
    const LaurentElement pt = point_of(lf, out, x);
    cplx acc = 0.0;
    for (std::size_t a = 0; a < g.size(); ++a) acc += g[a] * char_eval(g.field(), chars[a], pt);
    out[x] = acc * nu;
  }
  return out;
}

namespace {

// Shared re-indexing for widen(). `zero_low` selects the time picture (new
// low levels must be zero, new high levels replicate) versus frequency
// (new high levels must be zero, new low levels replicate).
template <Domain D>
BasicStepFunction<D> widen_impl(const BasicStepFunction<D>& f, Window target, bool zero_low) {
  const Window w = f.window();
  if (target.N < w.N || target.M < w.M) throw WindowError("widen cannot shrink a window");
  if (target == w) return f;
  BasicStepFunction<D> out(f.field(), target);
  const std::size_t q = f.field().order();
  const int pad_low = target.N - w.N;
  std::vector<std::size_t> old_levels(static_cast<std::size_t>(w.levels()));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const auto lv = level_indices(idx, q, target.levels());
    bool vanishes = false;
    if (zero_low) {
      for (int i = 0; i < pad_low; ++i) vanishes |= lv[static_cast<std::size_t>(i)] != 0;
    } else {
      for (int i = pad_low + w.levels(); i < target.levels(); ++i) vanishes |= lv[static_cast<std::size_t>(i)] != 0;
    }
    if (vanishes) continue;
    for (int i = 0; i < w.levels(); ++i) old_levels[static_cast<std::size_t>(i)] = lv[static_cast<std::size_t>(i + pad_low)];
    out[idx] = f[flat_index(old_levels, q)];
  }
  return out;
}

template <Domain D>
cplx inner_product_impl(const BasicStepFunction<D>& f, const BasicStepFunction<D>& g) {
  check_same_field(f.field(), g.field());
  const Window w{std::max(f.window().N, g.window().N), std::max(f.window().M, g.window().M)};
  const auto fw = widen(f, w);
  const auto gw = widen(g, w);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < fw.size(); ++i) acc += fw[i] * std::conj(gw[i]);
  return acc * cell_measure(fw);
}

}  // namespace

StepFunction widen(const StepFunction& f, Window target) { return widen_impl(f, target, true); }
DualStepFunction widen(const DualStepFunction& g, Window target) { return widen_impl(g, target, false); }

cplx inner_product(const StepFunction& f, const StepFunction& g) { return inner_product_impl(f, g); }
cplx inner_product(const DualStepFunction& f, const DualStepFunction& g) { return inner_product_impl(f, g); }

StepFunction shift(const StepFunction& f, const LaurentElement& h) {
  const Window w = f.window();
  const LocalField lf(f.field());
  if (!lf.in_subgroup(h, -w.N))
    throw WindowError("shift " + to_string(h) + " reaches below the support level -" + std::to_string(w.N));
  const std::size_t q = f.field().order();
  // Per-level GF index of -h restricted to the window.
  std::vector<std::size_t> minus_h;
  for (int k = -w.N; k < w.M; ++k) minus_h.push_back(f.field().index(f.field().neg(lf.digit(h, k))));
  // Addition table on GF indices.
  std::vector<std::size_t> add_table(q * q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b)
      add_table[a * q + b] = f.field().index(f.field().add(f.field().from_index(a), f.field().from_index(b)));
  StepFunction out(f.field(), w);
  std::vector<std::size_t> src(static_cast<std::size_t>(w.levels()));
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const auto lv = level_indices(idx, q, w.levels());
    for (std::size_t i = 0; i < lv.size(); ++i) src[i] = add_table[lv[i] * q + minus_h[i]];
    out[idx] = f[flat_index(src, q)];
  }
  return out;
}

}  // namespace lfw
