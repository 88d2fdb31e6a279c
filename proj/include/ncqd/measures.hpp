#pragma once

// Non-commutativity measures of quantum correlations. A bipartite state
// rho = sum_ij |i><j| (x) B_ij is sliced into its block operators along one
// side; the measures sum the norms of all pairwise block commutators. The
// slicing basis ("representation") is a free choice, and the measure value
// genuinely depends on it; the Schmidt basis minimizes it for pure states.

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "ncqd/jacobi.hpp"
#include "ncqd/matrix.hpp"
#include "ncqd/states.hpp"

namespace ncqd {

struct BlockSet {
  Side side = Side::A;
  int dim_local = 0;                 // dimension of the decomposed subsystem
  int dim_other = 0;                 // dimension of the blocks themselves
  std::vector<ComplexMatrix> items;  // dim_local^2 blocks, row-major in (i, j)

  const ComplexMatrix& block(int i, int j) const { return items[i * dim_local + j]; }
};

struct MeasureValue {
  double value = 0.0;
  NormKind norm_kind = NormKind::HilbertSchmidt;
  Side side = Side::A;
};

namespace detail {

inline void slice_blocks(const ComplexMatrix& rho, BlockSet& out) {
  const int d_loc = out.dim_local, d_oth = out.dim_other;
  out.items.reserve(static_cast<std::size_t>(d_loc) * d_loc);
  for (int i = 0; i < d_loc; ++i)
    for (int j = 0; j < d_loc; ++j) {
      ComplexMatrix blk(d_oth, d_oth);
      for (int k = 0; k < d_oth; ++k)
        for (int l = 0; l < d_oth; ++l)
          blk(k, l) = out.side == Side::A ? rho(i * d_oth + k, j * d_oth + l)
                                          : rho(k * d_loc + i, l * d_loc + j);
      out.items.push_back(std::move(blk));
    }
}

}  // namespace detail

// Blocks of rho in the computational representation of the chosen side.
inline BlockSet blocks(const DensityMatrix& rho, Side side) {
  BlockSet out{side, side == Side::A ? rho.d_a : rho.d_b,
               side == Side::A ? rho.d_b : rho.d_a, {}};
  detail::slice_blocks(rho.mat, out);
  return out;
}

// Blocks of rho after the representation change on the chosen side, i.e. of
// (u (x) I)^dagger rho (u (x) I) for side A and (I (x) u)^dagger rho (I (x) u)
// for side B. The other side's basis never affects the measure.
inline BlockSet blocks(const DensityMatrix& rho, Side side, const ComplexMatrix& u_local) {
  const int d_loc = side == Side::A ? rho.d_a : rho.d_b;
  const int d_oth = side == Side::A ? rho.d_b : rho.d_a;
  if (u_local.rows() != d_loc || u_local.cols() != d_loc)
    throw dimension_error("blocks: u_local must be " + std::to_string(d_loc) + "x" +
                          std::to_string(d_loc) + ", got " + std::to_string(u_local.rows()) + "x" +
                          std::to_string(u_local.cols()));
  const double dev = unitarity_deviation(u_local);
  if (dev > 1e-10)
    throw validation_error("blocks: u_local not unitary, max |u^dagger u - I| = " +
                           detail::fmt_g(dev) + " exceeds 1e-10");
  const ComplexMatrix full = side == Side::A ? kron(u_local, ComplexMatrix::identity(d_oth))
                                             : kron(ComplexMatrix::identity(d_oth), u_local);
  const ComplexMatrix rotated = full.dagger() * rho.mat * full;
  BlockSet out{side, d_loc, d_oth, {}};
  detail::slice_blocks(rotated, out);
  return out;
}

// Sum of commutator norms over unordered pairs of distinct blocks.
// Self-pairs commute identically and are skipped.
inline MeasureValue d_g_from_blocks(const BlockSet& bs, NormKind norm_kind) {
  double total = 0.0;
  for (std::size_t p = 0; p < bs.items.size(); ++p)
    for (std::size_t q = p + 1; q < bs.items.size(); ++q) {
      const ComplexMatrix comm = commutator(bs.items[p], bs.items[q]);
      total += norm_kind == NormKind::HilbertSchmidt ? hs_norm(comm) : trace_norm(comm);
    }
  return {total, norm_kind, bs.side};
}

inline MeasureValue d_g(const DensityMatrix& rho, Side side, NormKind norm_kind) {
  return d_g_from_blocks(blocks(rho, side), norm_kind);
}

inline MeasureValue d_g(const DensityMatrix& rho, Side side, NormKind norm_kind,
                        const ComplexMatrix& u_local) {
  return d_g_from_blocks(blocks(rho, side, u_local), norm_kind);
}

namespace detail {

inline void require_two_qubit(const PureState& psi, const char* who) {
  if (psi.dim() != 4)
    throw dimension_error(std::string(who) + ": expected a two-qubit state, got dimension " +
                          std::to_string(psi.dim()));
}

}  // namespace detail

// Wootters' concurrence C = 2 |ad - bc| for |psi> = a|00> + b|01> + c|10> + d|11>.
inline double concurrence_pure(const PureState& psi) {
  detail::require_two_qubit(psi, "concurrence_pure");
  return 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
}

// |(rho_A)_01| = |a* c + b* d| (side A) or |(rho_B)_01| = |a* b + c* d| (side B):
// the coherence of the reduced state, the quantity behind the representation
// dependence of the Hilbert-Schmidt measure.
inline double coherence_offdiag(const PureState& psi, Side side) {
  detail::require_two_qubit(psi, "coherence_offdiag");
  if (side == Side::A)
    return std::abs(std::conj(psi[0]) * psi[2] + std::conj(psi[1]) * psi[3]);
  return std::abs(std::conj(psi[0]) * psi[1] + std::conj(psi[2]) * psi[3]);
}

// Closed form of the Hilbert-Schmidt measure for a two-qubit pure state in
// the computational representation:
//   C [1 + (sqrt(C^2 + 4 h^2) + 2 h) / (2 sqrt(2))],  h the side coherence.
inline double pure_closed_form(const PureState& psi, Side side) {
  const double c = concurrence_pure(psi);
  const double h = coherence_offdiag(psi, side);
  constexpr double inv_2sqrt2 = 0.35355339059327373;  // 1 / (2 sqrt(2))
  return c * (1.0 + inv_2sqrt2 * (std::hypot(c, 2.0 * h) + 2.0 * h));
}

// Schmidt-representation value C (1 + C / (2 sqrt(2))), the minimum of the
// Hilbert-Schmidt measure over representations of a pure state. Equals
// 2 sqrt(l0 l1) + sqrt(2) l0 l1 in the Schmidt coefficients.
inline double pure_schmidt_value(const PureState& psi) {
  const double c = concurrence_pure(psi);
  constexpr double inv_2sqrt2 = 0.35355339059327373;
  return c * (1.0 + inv_2sqrt2 * c);
}

struct SchmidtDecomposition {
  std::vector<double> lambdas;  // descending, sum 1
  ComplexMatrix basis_a;        // columns |v_n>
  ComplexMatrix basis_b;        // columns |u_n>, psi = sum_n sqrt(l_n) |v_n>|u_n>
};

inline SchmidtDecomposition schmidt(const PureState& psi, int d_a, int d_b) {
  if (psi.dim() != d_a * d_b)
    throw dimension_error("schmidt: state of dimension " + std::to_string(psi.dim()) +
                          " does not factor as " + std::to_string(d_a) + "*" + std::to_string(d_b));
  const ComplexMatrix amp(d_a, d_b, psi.amplitudes());
  SvdResult svd = svd_small(amp);
  SchmidtDecomposition out;
  out.lambdas.reserve(svd.singular_values.size());
  for (double s : svd.singular_values) out.lambdas.push_back(s * s);
  out.basis_a = std::move(svd.u);
  out.basis_b = svd.v.conjugate();
  return out;
}

inline const ComplexMatrix& schmidt_local_basis(const SchmidtDecomposition& sd, Side side) {
  return side == Side::A ? sd.basis_a : sd.basis_b;
}

}  // namespace ncqd
