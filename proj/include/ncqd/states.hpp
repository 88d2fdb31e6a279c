#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ncqd/jacobi.hpp"
#include "ncqd/matrix.hpp"
#include "ncqd/rng.hpp"

namespace ncqd {

// State vector of a bipartite system; amplitude of |i_A j_B> sits at index
// i * d_B + j. Construction enforces normalization to 1e-12.
class PureState {
 public:
  explicit PureState(std::vector<cplx> amplitudes) : amps_(std::move(amplitudes)) {
    double norm2 = 0.0;
    for (const cplx& a : amps_) norm2 += std::norm(a);
    const double dev = std::abs(std::sqrt(norm2) - 1.0);
    if (dev > 1e-12)
      throw validation_error("pure state not normalized: |norm - 1| = " + detail::fmt_g(dev) +
                             " exceeds 1e-12");
  }

  const std::vector<cplx>& amplitudes() const { return amps_; }
  int dim() const { return static_cast<int>(amps_.size()); }
  const cplx& operator[](int i) const { return amps_[i]; }

 private:
  std::vector<cplx> amps_;
};

struct DensityMatrix {
  ComplexMatrix mat;
  int d_a = 0;
  int d_b = 0;

  int dim() const { return d_a * d_b; }
};

// Checks hermiticity, unit trace and positivity and reports the violated
// invariant together with the measured deviation.
inline DensityMatrix validate(const ComplexMatrix& rho, int d_a, int d_b) {
  if (d_a < 1 || d_b < 1)
    throw dimension_error("validate: subsystem dimensions must be positive, got " +
                          std::to_string(d_a) + ", " + std::to_string(d_b));
  if (!rho.is_square() || rho.rows() != d_a * d_b)
    throw dimension_error("validate: matrix of dimension " + std::to_string(rho.rows()) + "x" +
                          std::to_string(rho.cols()) + " does not factor as " +
                          std::to_string(d_a) + "*" + std::to_string(d_b));
  for (const cplx& e : rho.entries())
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag()))
      throw validation_error("validate: entries must be finite");

  const double herm = hermiticity_deviation(rho);
  if (herm > 1e-10)
    throw validation_error("validate: hermiticity violated, max |rho - rho^dagger| = " +
                           detail::fmt_g(herm) + " exceeds 1e-10");
  const double trace_dev = std::abs(rho.trace() - cplx{1.0});
  if (trace_dev > 1e-10)
    throw validation_error("validate: trace violated, |tr(rho) - 1| = " +
                           detail::fmt_g(trace_dev) + " exceeds 1e-10");
  const EigResult eig = hermitian_eig(rho);
  const double min_eig = eig.eigenvalues.back();
  if (min_eig < -1e-10)
    throw validation_error("validate: positivity violated, min eigenvalue = " +
                           detail::fmt_g(min_eig) + " below -1e-10");
  return {rho, d_a, d_b};
}

// |psi><psi| for a state whose validity is guaranteed by construction.
inline DensityMatrix projector(const PureState& psi, int d_a, int d_b) {
  if (psi.dim() != d_a * d_b)
    throw dimension_error("projector: state of dimension " + std::to_string(psi.dim()) +
                          " does not factor as " + std::to_string(d_a) + "*" + std::to_string(d_b));
  const int n = psi.dim();
  ComplexMatrix rho(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  return {std::move(rho), d_a, d_b};
}

// |beta_ab> = (|0, b> + (-1)^a |1, 1 xor b>) / sqrt(2)
inline PureState bell_state(int a_bit, int b_bit) {
  if ((a_bit != 0 && a_bit != 1) || (b_bit != 0 && b_bit != 1))
    throw validation_error("bell_state: bits must be 0 or 1");
  std::vector<cplx> amps(4);
  const double r = 1.0 / std::numbers::sqrt2;
  amps[b_bit] = r;
  amps[2 + (1 - b_bit)] = a_bit ? -r : r;
  return PureState(std::move(amps));
}

namespace detail {

inline void require_unit_interval(double p, const char* who) {
  if (!(p >= 0.0 && p <= 1.0))
    throw validation_error(std::string(who) + ": p = " + fmt_g(p) + " outside [0, 1]");
}

}  // namespace detail

// (1 - p) I/4 + p |psi><psi|
inline DensityMatrix pseudo_pure(double p, const PureState& psi) {
  detail::require_unit_interval(p, "pseudo_pure");
  if (psi.dim() != 4)
    throw dimension_error("pseudo_pure: expected a two-qubit state, got dimension " +
                          std::to_string(psi.dim()));
  ComplexMatrix mat = projector(psi, 2, 2).mat * cplx{p};
  for (int i = 0; i < 4; ++i) mat(i, i) += (1.0 - p) / 4.0;
  return {std::move(mat), 2, 2};
}

// p |beta_11><beta_11| + (1 - p)/2 (|beta_01><beta_01| + |beta_00><beta_00|)
inline DensityMatrix bell_diag_rho1(double p) {
  detail::require_unit_interval(p, "bell_diag_rho1");
  const ComplexMatrix mat = projector(bell_state(1, 1), 2, 2).mat * cplx{p} +
                            projector(bell_state(0, 1), 2, 2).mat * cplx{(1.0 - p) / 2.0} +
                            projector(bell_state(0, 0), 2, 2).mat * cplx{(1.0 - p) / 2.0};
  return {mat, 2, 2};
}

// p |beta_11><beta_11| + (1 - p) |beta_01><beta_01|
inline DensityMatrix bell_diag_rho2(double p) {
  detail::require_unit_interval(p, "bell_diag_rho2");
  const ComplexMatrix mat = projector(bell_state(1, 1), 2, 2).mat * cplx{p} +
                            projector(bell_state(0, 1), 2, 2).mat * cplx{1.0 - p};
  return {mat, 2, 2};
}

// Haar-distributed pure state: i.i.d. complex Gaussian amplitudes, normalized.
inline PureState haar_random_pure(int d_a, int d_b, Xoshiro256pp& rng) {
  if (d_a < 2 || d_b < 2)
    throw dimension_error("haar_random_pure: subsystem dimensions must be >= 2");
  const int n = d_a * d_b;
  std::vector<cplx> amps(n);
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (cplx& a : amps) {
      a = rng.complex_gaussian();
      norm2 += std::norm(a);
    }
  } while (norm2 < 1e-24);
  const double inv = 1.0 / std::sqrt(norm2);
  for (cplx& a : amps) a *= inv;
  return PureState(std::move(amps));
}

inline PureState haar_random_pure(int d_a, int d_b, RngSeed seed) {
  Xoshiro256pp rng(seed);
  return haar_random_pure(d_a, d_b, rng);
}

}  // namespace ncqd
