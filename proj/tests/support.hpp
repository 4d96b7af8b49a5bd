#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "lfwave/characters.hpp"
#include "lfwave/galois_field.hpp"
#include "lfwave/local_field.hpp"
#include "lfwave/mra_masks.hpp"
#include "lfwave/step_functions.hpp"

namespace testing {

using lfw::cplx;

inline std::vector<cplx> random_values(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  std::vector<cplx> v(n);
  for (auto& x : v) x = {g(rng), g(rng)};
  return v;
}

inline double max_abs_diff(std::span<const cplx> a, std::span<const cplx> b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

inline lfw::GFElement random_element(const lfw::GaloisField& f, std::mt19937_64& rng) {
  return f.from_index(std::uniform_int_distribution<std::size_t>(0, f.order() - 1)(rng));
}

/// Element with random digits at levels lo .. hi-1.
inline lfw::LaurentElement random_laurent(const lfw::LocalField& lf, int lo, int hi, std::mt19937_64& rng) {
  std::vector<lfw::GFElement> c;
  for (int k = lo; k < hi; ++k) c.push_back(random_element(lf.field(), rng));
  return lf.make(lo, c);
}

inline lfw::Character random_character(const lfw::GaloisField& f, int lo, int hi, std::mt19937_64& rng) {
  lfw::Character chi;
  for (int k = lo; k < hi; ++k) chi.set(k, random_element(f, rng));
  return chi;
}

/// First admissible random mask whose refinable function passes the scaling check.
inline lfw::Mask surviving_mask(const lfw::GaloisField& f, int N, int M, std::mt19937_64& rng) {
  for (;;) {
    lfw::Mask m = lfw::random_admissible_mask(f, N, rng);
    if (lfw::check_scaling_orthonormality(lfw::synthesize_refinable(m, M)).passed()) return m;
  }
}

}  // namespace testing
