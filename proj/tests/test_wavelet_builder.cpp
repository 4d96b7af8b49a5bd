#include <doctest.h>

#include "lfwave/errors.hpp"
#include "lfwave/wavelet_builder.hpp"
#include "support.hpp"

using lfw::cplx;
using lfw::GaloisField;
using lfw::LocalField;
using lfw::Mask;

namespace {

const double r = std::sqrt(0.5);

Mask with_row(const GaloisField& f, std::size_t prefix, std::vector<cplx> row) {
  Mask m = lfw::haar_mask(f, 1);
  for (std::size_t j = 0; j < row.size(); ++j) m(prefix, j) = row[j];
  return m;
}

}  // namespace

TEST_CASE("seeding keeps the identity when the first entry is nonzero") {
  const auto cm = lfw::seed_matrix(with_row(GaloisField(2, 1), 1, {r, r}), 1);
  Eigen::MatrixXcd expected(2, 2);
  expected << r, r, 0, 1;
  CHECK((cm.entries - expected).norm() == 0.0);
}

TEST_CASE("seeding pivots on the first nonzero column") {
  const GaloisField f(3, 1);
  const auto cm = lfw::seed_matrix(with_row(f, 2, {0, 0, 1}), 2);
  Eigen::MatrixXcd expected(3, 3);
  expected << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  CHECK((cm.entries - expected).norm() == 0.0);
  const auto tiny = lfw::seed_matrix(with_row(f, 1, {1e-13, 1, 0}), 1);
  // Entries below 1e-12 count as zero, so column 1 is the pivot and row 1 receives e_0.
  CHECK(tiny.entries(1, 0) == cplx(1.0));
  CHECK(tiny.entries(1, 1) == cplx(0.0));
  CHECK(tiny.entries(2, 2) == cplx(1.0));
  CHECK_THROWS_AS(lfw::seed_matrix(with_row(f, 1, {0, 0, 0}), 1), lfw::InvalidMaskError);
}

TEST_CASE("Gram-Schmidt completes a 2x2 row") {
  const auto cm = lfw::unitarize(lfw::seed_matrix(with_row(GaloisField(2, 1), 1, {r, r}), 1));
  Eigen::MatrixXcd expected(2, 2);
  expected << r, r, -r, r;
  CHECK((cm.entries - expected).norm() < 1e-15);
  CHECK(lfw::unitarity_defect(cm.entries) < 1e-15);
}

TEST_CASE("Gram-Schmidt on random rows") {
  std::mt19937_64 rng(13);
  for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}}) {
    const GaloisField f(p, s);
    for (int t = 0; t < 20; ++t) {
      const Mask m = lfw::random_admissible_mask(f, 1, rng);
      for (std::size_t prefix = 0; prefix < m.prefix_count(); ++prefix) {
        const auto cm = lfw::unitarize(lfw::seed_matrix(m, prefix));
        CHECK(lfw::unitarity_defect(cm.entries) < 1e-12);
        for (std::size_t j = 0; j < f.order(); ++j) CHECK(cm.entries(0, j) == m(prefix, j));
      }
    }
  }
}

TEST_CASE("unitarize preconditions") {
  lfw::CompletionMatrix cm{0, Eigen::MatrixXcd::Identity(2, 2)};
  cm.entries(0, 0) = 2.0;
  CHECK_THROWS_AS(lfw::unitarize(cm), lfw::PreconditionError);
  cm.entries << 1, 0, 1, 0;
  CHECK_THROWS_AS(lfw::unitarize(cm), lfw::DependentRowsError);
}

TEST_CASE("Haar families") {
  for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const GaloisField f(p, s);
    const auto family = lfw::derive_wavelet_masks(lfw::haar_mask(f, 1));
    REQUIRE(family.size() == f.order());
    for (std::size_t l = 0; l < family.size(); ++l)
      for (std::size_t prefix = 0; prefix < family[l].prefix_count(); ++prefix)
        for (std::size_t a0 = 0; a0 < f.order(); ++a0) CHECK(family[l](prefix, a0) == cplx(a0 == l ? 1.0 : 0.0));
    const auto cm = lfw::assemble_completion_matrix(family, 0);
    CHECK(lfw::unitarity_defect(cm.entries) == 0.0);
  }
}

TEST_CASE("derivation names the failing prefix") {
  const GaloisField f(2, 1);
  try {
    lfw::derive_wavelet_masks(with_row(f, 1, {0, 0}));
    FAIL("expected InvalidMaskError");
  } catch (const lfw::InvalidMaskError& e) {
    CHECK(std::string(e.what()).find("prefix 1") != std::string::npos);
  }
}

TEST_CASE("Haar wavelet values") {
  const GaloisField f(2, 1);
  const LocalField lf(f);
  const auto ws = lfw::build_wavelet_system(lfw::haar_mask(f, 1), 1);
  REQUIRE(ws.wavelets.size() == 1);
  const auto& psi = ws.wavelets[0];
  CHECK(psi.window() == lfw::Window{1, 2});
  CHECK(std::abs(lfw::evaluate(psi, lf.zero()) - 1.0) < 1e-15);
  CHECK(std::abs(lfw::evaluate(psi, lf.basis(1)) - 1.0) < 1e-15);
  CHECK(std::abs(lfw::evaluate(psi, lf.basis(0)) + 1.0) < 1e-15);
  CHECK(std::abs(lfw::evaluate(psi, lf.add(lf.basis(0), lf.basis(1))) + 1.0) < 1e-15);
  CHECK(std::abs(lfw::evaluate(psi, lf.basis(-1))) < 1e-15);
  CHECK(std::abs(lfw::evaluate(ws.phi, lf.basis(0)) - 1.0) < 1e-15);
  CHECK(std::abs(lfw::evaluate(ws.phi, lf.basis(-1))) < 1e-15);
}

TEST_CASE("Haar systems verify") {
  for (auto [p, s] : {std::pair{2, 1}, {3, 1}, {2, 2}}) {
    const auto ws = lfw::build_wavelet_system(lfw::haar_mask(GaloisField(p, s), 1), 1);
    const auto report = lfw::verify_wavelet_system(ws, 3);
    CHECK(report.passed());
    CHECK(report.function_count == static_cast<std::size_t>(std::pow(p, s)));
    CHECK(report.shift_count == static_cast<std::size_t>(std::pow(p, 3 * s)));
    CHECK_THROWS_AS(lfw::verify_wavelet_system(ws, 1), lfw::ParameterError);
  }
}

TEST_CASE("random surviving masks give orthonormal systems") {
  std::mt19937_64 rng(14);
  for (auto [p, s, N] : {std::tuple{2, 1, 1}, {2, 1, 2}, {3, 1, 1}}) {
    const GaloisField f(p, s);
    const Mask m0 = testing::surviving_mask(f, N, N + 1, rng);
    const auto ws = lfw::build_wavelet_system(m0, N + 1);
    CHECK(lfw::check_mask_family_orthogonality(ws.family()).passed(1e-12));
    CHECK(lfw::verify_wavelet_system(ws, N + 2).passed());
    // The scaling function is its own wavelet for l = 0.
    const auto psi0_hat = lfw::wavelet_spectrum(m0, ws.phi_hat);
    const auto wide = lfw::widen(ws.phi_hat, psi0_hat.window());
    CHECK(testing::max_abs_diff(psi0_hat.values(), wide.values()) < 1e-12);
    // Frequency-side orthonormality agrees with the time side.
    for (std::size_t k = 0; k < ws.wavelet_hats.size(); ++k)
      for (std::size_t l = 0; l < ws.wavelet_hats.size(); ++l)
        CHECK(std::abs(lfw::inner_product(ws.wavelet_hats[k], ws.wavelet_hats[l]) - (k == l ? 1.0 : 0.0)) < 1e-10);
  }
}

TEST_CASE("broken unitarity is detected") {
  const GaloisField f(2, 1);
  const auto ws = lfw::build_wavelet_system(lfw::haar_mask(f, 1), 1);
  auto family = ws.family();
  family[1](1, 1) += 0.1;
  const auto broken = lfw::synthesize_wavelets(family, ws.phi_hat);
  CHECK(lfw::verify_wavelet_system(broken, 3).max_deviation >= 0.01);
  CHECK_FALSE(lfw::check_mask_family_orthogonality(family).passed());
}

TEST_CASE("Vandermonde matrices") {
  const auto v2 = lfw::vandermonde_matrix(2);
  Eigen::MatrixXcd expected(2, 2);
  expected << 1, 1, 1, -1;
  CHECK((v2 - expected).norm() < 1e-15);
  CHECK(std::abs(lfw::kron_power(v2, 2).determinant() - 16.0) < 1e-12);
  CHECK(lfw::kron_power(v2, 0).size() == 1);
  const auto report = lfw::vandermonde_kron_check(2, 1, 2);
  CHECK(report.size == 4);
  CHECK(report.nonsingular);
  CHECK(std::exp(report.log_abs_det) == doctest::Approx(16.0));
  CHECK(report.system_matrix_error < 1e-12);
  CHECK(report.dft_unitarity_error < 1e-12);
  CHECK_THROWS_AS(lfw::vandermonde_kron_check(3, 2, 4), lfw::SizeError);
}

TEST_CASE("system matrix is built from characters") {
  const GaloisField f(3, 1);
  const auto a = lfw::orthonormality_system_matrix(f, 2);
  const Eigen::MatrixXcd v = lfw::kron_power(lfw::vandermonde_matrix(3), 2) / 9.0;
  CHECK((a - v).cwiseAbs().maxCoeff() < 1e-12);
}
