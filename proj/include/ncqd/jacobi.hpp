#pragma once

// Jacobi-rotation solvers: cyclic Jacobi for Hermitian eigendecomposition
// and one-sided Jacobi for the SVD. At dimension <= 16 these converge in a
// handful of sweeps and are far more robust than anything clever.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ncqd/matrix.hpp"

namespace ncqd {

struct EigResult {
  std::vector<double> eigenvalues;  // descending
  ComplexMatrix eigenvectors;       // columns, a = V diag(lambda) V^dagger
};

struct SvdResult {
  std::vector<double> singular_values;  // descending, length min(m, n)
  ComplexMatrix u;                      // m x m unitary
  ComplexMatrix v;                      // n x n unitary, a = U Sigma V^dagger
};

namespace detail {

struct JacobiRotation {
  double c;  // real cosine
  cplx s;    // complex sine, c^2 + |s|^2 = 1
  double t;  // tangent of the rotation angle
};

// Rotation J = [[c, s], [-conj(s), c]] such that J^dagger B J is diagonal
// for the Hermitian 2x2 B = [[app, apq], [conj(apq), aqq]]. Requires apq != 0.
inline JacobiRotation make_rotation(double app, double aqq, cplx apq) {
  const double mag = std::abs(apq);
  const cplx phase = apq / mag;
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::hypot(1.0, tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  return {c, t * c * phase, t};
}

// Right-multiplication by J on columns p, q.
inline void rotate_cols(ComplexMatrix& m, int p, int q, const JacobiRotation& r) {
  for (int k = 0; k < m.rows(); ++k) {
    const cplx mp = m(k, p), mq = m(k, q);
    m(k, p) = r.c * mp - std::conj(r.s) * mq;
    m(k, q) = r.s * mp + r.c * mq;
  }
}

// Left-multiplication by J^dagger on rows p, q.
inline void rotate_rows(ComplexMatrix& m, int p, int q, const JacobiRotation& r) {
  for (int k = 0; k < m.cols(); ++k) {
    const cplx mp = m(p, k), mq = m(q, k);
    m(p, k) = r.c * mp - r.s * mq;
    m(q, k) = std::conj(r.s) * mp + r.c * mq;
  }
}

inline double offdiag_frobenius(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) sum += std::norm(a(i, j));
  return std::sqrt(sum);
}

// Fills the columns of u listed in `slots` with unit vectors orthogonal to
// every column already present, drawn from the standard basis.
inline void complete_orthonormal(ComplexMatrix& u, const std::vector<int>& filled,
                                 const std::vector<int>& slots) {
  const int m = u.rows();
  std::vector<int> have = filled;
  for (int slot : slots) {
    ComplexMatrix best(m, 1);
    double best_norm = -1.0;
    for (int cand = 0; cand < m; ++cand) {
      ComplexMatrix r(m, 1);
      r(cand, 0) = 1.0;
      for (int pass = 0; pass < 2; ++pass)
        for (int col : have) {
          cplx overlap = 0.0;
          for (int k = 0; k < m; ++k) overlap += std::conj(u(k, col)) * r(k, 0);
          for (int k = 0; k < m; ++k) r(k, 0) -= overlap * u(k, col);
        }
      const double rn = hs_norm(r);
      if (rn > best_norm) {
        best_norm = rn;
        best = r;
      }
    }
    for (int k = 0; k < m; ++k) u(k, slot) = best(k, 0) / best_norm;
    have.push_back(slot);
  }
}

}  // namespace detail

inline constexpr int kJacobiMaxSweeps = 100;

inline EigResult hermitian_eig(const ComplexMatrix& a) {
  if (!a.is_square()) throw dimension_error("hermitian_eig: matrix must be square");
  const double dev = hermiticity_deviation(a);
  if (dev > 1e-10)
    throw validation_error("hermitian_eig: input not Hermitian, max deviation " +
                           detail::fmt_g(dev) + " exceeds 1e-10");

  const int n = a.rows();
  const double scale = hs_norm(a);
  ComplexMatrix w = a;
  ComplexMatrix v = ComplexMatrix::identity(n);
  if (scale == 0.0) return {std::vector<double>(n, 0.0), v};

  const double target = 1e-14 * scale;
  const double skip = target / (static_cast<double>(n) * n);
  int sweep = 0;
  for (; sweep < kJacobiMaxSweeps; ++sweep) {
    if (detail::offdiag_frobenius(w) <= target) break;
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(w(p, q)) <= skip) continue;
        const auto rot = detail::make_rotation(w(p, p).real(), w(q, q).real(), w(p, q));
        detail::rotate_cols(w, p, q, rot);
        detail::rotate_rows(w, p, q, rot);
        w(p, q) = w(q, p) = 0.0;
        w(p, p) = w(p, p).real();
        w(q, q) = w(q, q).real();
        detail::rotate_cols(v, p, q, rot);
        rotated = true;
      }
    if (!rotated) break;
  }
  if (sweep == kJacobiMaxSweeps && detail::offdiag_frobenius(w) > target)
    throw convergence_error("hermitian_eig: off-diagonal mass still above threshold after " +
                                std::to_string(kJacobiMaxSweeps) + " sweeps",
                            kJacobiMaxSweeps);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return w(i, i).real() > w(j, j).real(); });

  EigResult out{std::vector<double>(n), ComplexMatrix(n, n)};
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = w(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  return out;
}

inline SvdResult svd_small(const ComplexMatrix& a) {
  if (a.rows() < a.cols()) {
    SvdResult t = svd_small(a.dagger());
    return {std::move(t.singular_values), std::move(t.v), std::move(t.u)};
  }
  const int m = a.rows(), n = a.cols();
  const double scale = hs_norm(a);
  ComplexMatrix w = a;
  ComplexMatrix v = ComplexMatrix::identity(n);

  if (scale > 0.0) {
    int sweep = 0;
    for (; sweep < kJacobiMaxSweeps; ++sweep) {
      bool rotated = false;
      for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
          cplx g = 0.0;
          double app = 0.0, aqq = 0.0;
          for (int k = 0; k < m; ++k) {
            g += std::conj(w(k, p)) * w(k, q);
            app += std::norm(w(k, p));
            aqq += std::norm(w(k, q));
          }
          if (app == 0.0 || aqq == 0.0 || std::abs(g) <= 1e-14 * std::sqrt(app * aqq)) continue;
          const auto rot = detail::make_rotation(app, aqq, g);
          detail::rotate_cols(w, p, q, rot);
          detail::rotate_cols(v, p, q, rot);
          rotated = true;
        }
      if (!rotated) break;
    }
    if (sweep == kJacobiMaxSweeps)
      throw convergence_error("svd_small: column pairs still coupled after " +
                                  std::to_string(kJacobiMaxSweeps) + " sweeps",
                              kJacobiMaxSweeps);
  }

  std::vector<double> norms(n);
  for (int j = 0; j < n; ++j) {
    double s = 0.0;
    for (int k = 0; k < m; ++k) s += std::norm(w(k, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return norms[i] > norms[j]; });

  SvdResult out{std::vector<double>(n), ComplexMatrix(m, m), ComplexMatrix(n, n)};
  const double rank_tol = scale * 1e-13;
  std::vector<int> filled, missing;
  for (int j = 0; j < n; ++j) {
    const int src = order[j];
    out.singular_values[j] = norms[src];
    for (int i = 0; i < n; ++i) out.v(i, j) = v(i, src);
    if (norms[src] > rank_tol) {
      for (int i = 0; i < m; ++i) out.u(i, j) = w(i, src) / norms[src];
      filled.push_back(j);
    } else {
      missing.push_back(j);
    }
  }
  for (int j = n; j < m; ++j) missing.push_back(j);
  detail::complete_orthonormal(out.u, filled, missing);
  return out;
}

// Trace norm: sum of the square roots of the eigenvalues of a^dagger a.
// Mild negative eigenvalues are rounding noise and get clamped; anything
// below -1e-12 signals a broken product upstream and is an error.
inline double trace_norm(const ComplexMatrix& a) {
  if (!a.is_square()) throw dimension_error("trace_norm: matrix must be square");
  const EigResult eig = hermitian_eig(a.dagger() * a);
  double sum = 0.0;
  for (double lambda : eig.eigenvalues) {
    if (lambda < -1e-12)
      throw validation_error("trace_norm: eigenvalue " + detail::fmt_g(lambda) +
                             " of a^dagger a is negative beyond tolerance");
    sum += std::sqrt(std::max(lambda, 0.0));
  }
  return sum;
}

}  // namespace ncqd
