#include "lfwave/wavelet_builder.hpp"

#include <cmath>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "lfwave/characters.hpp"
#include "lfwave/errors.hpp"

namespace lfw {

namespace {

constexpr double kZeroEntry = 1e-12;
constexpr double kReorthogonalizeAbove = 0.7;

std::string describe_prefix(const Mask& m, std::size_t prefix) {
  std::string out = "prefix ";
  const auto tuple = m.prefix_tuple(prefix);
  if (tuple.empty()) return out + "(empty)";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) out += ';';
    out += to_string(tuple[i]);
  }
  return out;
}

}  // namespace

CompletionMatrix seed_matrix(const Mask& m0, std::size_t prefix) {
  const auto q = static_cast<Eigen::Index>(m0.field().order());
  const auto row0 = m0.row(prefix);
  CompletionMatrix cm{prefix, Eigen::MatrixXcd::Zero(q, q)};
  for (Eigen::Index j = 0; j < q; ++j) cm.entries(0, j) = row0[static_cast<std::size_t>(j)];

  if (std::abs(row0[0]) > kZeroEntry) {
    for (Eigen::Index l = 1; l < q; ++l) cm.entries(l, l) = 1.0;
    return cm;
  }
  Eigen::Index pivot = -1;
  for (Eigen::Index j = 1; j < q; ++j) {
    if (std::abs(row0[static_cast<std::size_t>(j)]) > kZeroEntry) {
      pivot = j;
      break;
    }
  }
  if (pivot < 0) throw InvalidMaskError("scaling mask row is identically zero at " + describe_prefix(m0, prefix));
  cm.entries(pivot, 0) = 1.0;
  for (Eigen::Index l = 1; l < q; ++l)
    if (l != pivot) cm.entries(l, l) = 1.0;
  return cm;
}

CompletionMatrix unitarize(CompletionMatrix m, double tolerance) {
  auto& a = m.entries;
  const Eigen::Index n = a.rows();
  if (std::abs(a.row(0).norm() - 1.0) > tolerance)
    throw PreconditionError("first row has norm " + std::to_string(a.row(0).norm()) + ", expected 1");
  for (Eigen::Index l = 1; l < n; ++l) {
    for (int pass = 0; pass < 2; ++pass) {
      // Classical: all coefficients come from the row as it stood.
      Eigen::VectorXcd coeff(l);
      for (Eigen::Index j = 0; j < l; ++j) coeff(j) = a.row(j).dot(a.row(l));  // <r_l, r_j>
      for (Eigen::Index j = 0; j < l; ++j) a.row(l) -= coeff(j) * a.row(j);
      if (pass == 0 && coeff.cwiseAbs().maxCoeff() <= kReorthogonalizeAbove) break;
    }
    const double norm = a.row(l).norm();
    if (norm < 1e-12) throw DependentRowsError("row " + std::to_string(l) + " is linearly dependent on earlier rows");
    a.row(l) /= norm;
  }
  return m;
}

double unitarity_defect(const Eigen::MatrixXcd& m) {
  const Eigen::MatrixXcd g = m * m.adjoint() - Eigen::MatrixXcd::Identity(m.rows(), m.rows());
  return g.cwiseAbs().maxCoeff();
}

CompletionMatrix assemble_completion_matrix(std::span<const Mask> family, std::size_t prefix) {
  const auto q = static_cast<Eigen::Index>(family.size());
  CompletionMatrix cm{prefix, Eigen::MatrixXcd(q, q)};
  for (Eigen::Index l = 0; l < q; ++l) {
    const auto row = family[static_cast<std::size_t>(l)].row(prefix);
    for (Eigen::Index j = 0; j < q; ++j) cm.entries(l, j) = row[static_cast<std::size_t>(j)];
  }
  return cm;
}

std::vector<Mask> derive_wavelet_masks(const Mask& m0, double tolerance) {
  const std::size_t q = m0.field().order();
  std::vector<Mask> family(q, Mask(m0.field(), m0.N()));
  family[0] = m0;
  for (std::size_t prefix = 0; prefix < m0.prefix_count(); ++prefix) {
    CompletionMatrix cm;
    try {
      cm = unitarize(seed_matrix(m0, prefix), tolerance);
    } catch (const InvalidMaskError&) {
      throw;
    } catch (const DependentRowsError& e) {
      throw DependentRowsError(std::string(e.what()) + " at " + describe_prefix(m0, prefix));
    } catch (const PreconditionError& e) {
      throw PreconditionError(std::string(e.what()) + " at " + describe_prefix(m0, prefix));
    }
    for (std::size_t l = 1; l < q; ++l)
      for (std::size_t a0 = 0; a0 < q; ++a0)
        family[l](prefix, a0) = cm.entries(static_cast<Eigen::Index>(l), static_cast<Eigen::Index>(a0));
  }
  return family;
}

DualStepFunction wavelet_spectrum(const Mask& m, const DualStepFunction& phi_hat) {
  const Window w = phi_hat.window();
  if (m.field().p() != phi_hat.field().p() || m.field().s() != phi_hat.field().s() || m.N() != w.N)
    throw ParameterError("mask and refinable function disagree on (p, s, N)");
  const std::size_t q = m.field().order();
  DualStepFunction out(phi_hat.field(), Window{w.N, w.M + 1});
  std::size_t tail = 1;  // q^M: levels 1 .. M
  for (int i = 0; i < w.M; ++i) tail *= q;
  // Level window -N .. M: the first N+1 levels index the mask, the last N+M
  // levels are exactly the table index of chi A^-1 in phi_hat.
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    const cplx mv = m.values()[idx / tail];
    if (mv == cplx{}) continue;
    out[idx] = mv * phi_hat[idx % phi_hat.size()];
  }
  return out;
}

std::vector<Mask> WaveletSystem::family() const {
  std::vector<Mask> out;
  out.reserve(wavelet_masks.size() + 1);
  out.push_back(scaling_mask);
  out.insert(out.end(), wavelet_masks.begin(), wavelet_masks.end());
  return out;
}

WaveletSystem synthesize_wavelets(std::span<const Mask> masks, const DualStepFunction& phi_hat) {
  const GaloisField& f = phi_hat.field();
  if (masks.size() != f.order()) throw ParameterError("need p^s masks to synthesize a wavelet system");
  WaveletSystem ws{masks[0], {}, phi_hat, inv_fourier(phi_hat), {}, {}};
  for (std::size_t l = 1; l < masks.size(); ++l) {
    ws.wavelet_masks.push_back(masks[l]);
    ws.wavelet_hats.push_back(wavelet_spectrum(masks[l], phi_hat));
    ws.wavelets.push_back(inv_fourier(ws.wavelet_hats.back()));
  }
  return ws;
}

WaveletSystem build_wavelet_system(const Mask& m0, int M, double tolerance) {
  const DualStepFunction phi_hat = synthesize_refinable(m0, M, tolerance);
  const auto family = derive_wavelet_masks(m0, tolerance);
  return synthesize_wavelets(family, phi_hat);
}

VerificationReport verify_wavelet_system(const WaveletSystem& ws, int shift_depth) {
  const int N = ws.phi.window().N;
  if (shift_depth < N + 1) throw ParameterError("shift depth must be at least N + 1");
  const LocalField lf(ws.phi.field());
  const Window common{shift_depth, ws.phi.window().M + 1};

  std::vector<StepFunction> fns;
  fns.push_back(widen(ws.phi, common));
  for (const auto& psi : ws.wavelets) fns.push_back(widen(psi, common));

  const ShiftSet shifts = lf.enumerate_shifts(shift_depth);
  std::vector<std::vector<StepFunction>> shifted(fns.size());
  for (std::size_t k = 0; k < fns.size(); ++k)
    for (const auto& h : shifts.elements) shifted[k].push_back(shift(fns[k], h));

  VerificationReport report;
  report.shift_depth = shift_depth;
  report.shift_count = shifts.elements.size();
  report.function_count = fns.size();
  const double mu = cell_measure(fns[0]);
  const std::size_t n = fns[0].size();
  for (std::size_t k = 0; k < fns.size(); ++k) {
    for (std::size_t l = 0; l < fns.size(); ++l) {
      for (std::size_t g = 0; g < shifts.elements.size(); ++g) {
        const auto a = shifted[k][g].values();
        for (std::size_t h = 0; h < shifts.elements.size(); ++h) {
          const auto b = shifted[l][h].values();
          cplx acc = 0.0;
          for (std::size_t i = 0; i < n; ++i) acc += a[i] * std::conj(b[i]);
          const double dev = std::abs(acc * mu - ((k == l && g == h) ? 1.0 : 0.0));
          if (dev > report.max_deviation) {
            report.max_deviation = dev;
            report.worst_k = k;
            report.worst_l = l;
            report.worst_g = shifts.elements[g];
            report.worst_h = shifts.elements[h];
          }
        }
      }
    }
  }

  const Window deeper{shift_depth + 1, common.M};
  const LaurentElement far = lf.basis(-(shift_depth + 1));
  for (std::size_t k = 0; k < fns.size(); ++k) {
    const StepFunction fk = widen(fns[k], deeper);
    for (std::size_t l = 0; l < fns.size(); ++l) {
      const StepFunction fl = shift(widen(fns[l], deeper), far);
      report.disjoint_spot_check = std::max(report.disjoint_spot_check, std::abs(inner_product(fk, fl)));
    }
  }
  return report;
}

Eigen::MatrixXcd vandermonde_matrix(int p) {
  Eigen::MatrixXcd v(p, p);
  for (int j = 0; j < p; ++j)
    for (int k = 0; k < p; ++k) v(j, k) = root_of_unity(p, j * k);
  return v;
}

Eigen::MatrixXcd kron_power(const Eigen::MatrixXcd& v, int n) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(1, 1);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXcd next = Eigen::kroneckerProduct(out, v).eval();
    out.swap(next);
  }
  return out;
}

Eigen::MatrixXcd orthonormality_system_matrix(const GaloisField& field, int N) {
  if (N < 0) throw ParameterError("N must be >= 0");
  const LocalField lf(field);
  std::size_t size = 1;
  for (int i = 0; i < N; ++i) size *= field.order();
  const double scale = std::pow(static_cast<double>(field.order()), -N);
  const auto cosets = coset_enumerate(field, N, -1);
  Eigen::MatrixXcd a(static_cast<Eigen::Index>(size), static_cast<Eigen::Index>(size));
  for (std::size_t r = 0; r < size; ++r) {
    const LaurentElement h = N == 0 ? lf.zero() : lf.shift_from_index(N, r);
    for (std::size_t c = 0; c < size; ++c)
      a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          scale * char_eval(field, representative(cosets[c]), h);
  }
  return a;
}

VandermondeReport vandermonde_kron_check(int p, int s, int N, std::size_t cap) {
  const GaloisField field(p, s);
  if (N < 0) throw ParameterError("N must be >= 0");
  const int n = s * N;
  std::size_t size = 1;
  for (int i = 0; i < n; ++i) {
    size *= static_cast<std::size_t>(p);
    if (size > cap) throw SizeError("p^(sN) exceeds the cap of " + std::to_string(cap));
  }

  VandermondeReport r;
  r.p = p;
  r.s = s;
  r.N = N;
  r.size = size;
  const Eigen::MatrixXcd v = vandermonde_matrix(p);
  r.det_v = v.determinant();
  r.dft_unitarity_error = unitarity_defect(v / std::sqrt(static_cast<double>(p)));

  const Eigen::MatrixXcd a = kron_power(v, n);
  const Eigen::PartialPivLU<Eigen::MatrixXcd> lu(a);
  const Eigen::VectorXcd diag = lu.matrixLU().diagonal();
  r.nonsingular = true;
  for (Eigen::Index i = 0; i < diag.size(); ++i) {
    const double mag = std::abs(diag(i));
    if (!(mag > 0.0) || !std::isfinite(mag)) r.nonsingular = false;
    r.log_abs_det += std::log(mag);
  }
  // |det V| = p^(p/2) and det(A (x) B) = det(A)^m det(B)^n give
  // |det V^((x) n)| = p^(n p^n / 2).
  r.expected_log_abs_det = 0.5 * n * static_cast<double>(size) * std::log(static_cast<double>(p));
  r.relative_error = r.expected_log_abs_det == 0.0
                         ? std::abs(r.log_abs_det)
                         : std::abs(r.log_abs_det - r.expected_log_abs_det) / r.expected_log_abs_det;

  const Eigen::MatrixXcd sys = orthonormality_system_matrix(field, N);
  r.system_matrix_error = (sys - a / static_cast<double>(size)).cwiseAbs().maxCoeff();
  return r;
}

}  // namespace lfw
