#pragma once

// Batch drivers behind the CLI: the Haar-random scatter (measure value vs
// squared concurrence in two representations) and family sweeps over the
// mixing parameter p. CSV serialization keeps 9 significant digits.

#include <cmath>
#include <string>
#include <vector>

#include "ncqd/measures.hpp"
#include "ncqd/optimizer.hpp"
#include "ncqd/states.hpp"

namespace ncqd {

struct RandomRow {
  double c2 = 0.0;         // squared concurrence
  double dg_comp = 0.0;    // Hilbert-Schmidt measure, computational basis
  double dg_schmidt = 0.0; // same state, Schmidt basis
};

struct RandomSummary {
  double max_comp = 0.0;
  double c_at_max_comp = 0.0;
  double max_schmidt = 0.0;
  double c_at_max_schmidt = 0.0;
};

struct RandomScatter {
  std::vector<RandomRow> rows;
  RandomSummary summary;
};

inline RandomScatter random_scatter(int n, RngSeed seed) {
  if (n < 1) throw validation_error("random_scatter: sample count must be >= 1");
  Xoshiro256pp rng(seed);
  RandomScatter out;
  out.rows.reserve(n);
  for (int k = 0; k < n; ++k) {
    const PureState psi = haar_random_pure(2, 2, rng);
    const double c = concurrence_pure(psi);
    const DensityMatrix rho = projector(psi, 2, 2);
    const double comp = d_g(rho, Side::A, NormKind::HilbertSchmidt).value;
    const SchmidtDecomposition sd = schmidt(psi, 2, 2);
    const double sch = d_g(rho, Side::A, NormKind::HilbertSchmidt, sd.basis_a).value;
    out.rows.push_back({c * c, comp, sch});
    if (k == 0 || comp > out.summary.max_comp) {
      out.summary.max_comp = comp;
      out.summary.c_at_max_comp = c;
    }
    if (k == 0 || sch > out.summary.max_schmidt) {
      out.summary.max_schmidt = sch;
      out.summary.c_at_max_schmidt = c;
    }
  }
  return out;
}

enum class Family { PseudoPurePsi, Werner, Rho1, Rho2 };

inline const char* to_string(Family f) {
  switch (f) {
    case Family::PseudoPurePsi: return "pseudo_pure_psi";
    case Family::Werner: return "werner";
    case Family::Rho1: return "rho1";
    case Family::Rho2: return "rho2";
  }
  return "?";
}

// (|00> + |01> + |10>) / sqrt(3), the asymmetric sweep state.
inline PureState unbalanced_psi() {
  const double r = 1.0 / std::sqrt(3.0);
  return PureState({r, r, r, 0.0});
}

inline DensityMatrix family_state(Family family, double p) {
  switch (family) {
    case Family::PseudoPurePsi: return pseudo_pure(p, unbalanced_psi());
    case Family::Werner: return pseudo_pure(p, bell_state(0, 0));
    case Family::Rho1: return bell_diag_rho1(p);
    case Family::Rho2: return bell_diag_rho2(p);
  }
  throw validation_error("family_state: unknown family");
}

struct ScanRow {
  double p = 0.0;
  double dg_comp = 0.0;
  double d_prime = 0.0;
  bool converged = true;
};

// Uniform p-grid on [0, 1]; d' is minimized on side A at each point.
inline std::vector<ScanRow> scan_family(Family family, int grid, const OptimizerConfig& cfg = {}) {
  if (grid < 2) throw validation_error("scan_family: grid must be >= 2");
  std::vector<ScanRow> rows;
  rows.reserve(grid);
  for (int k = 0; k < grid; ++k) {
    const double p = static_cast<double>(k) / (grid - 1);
    const DensityMatrix rho = family_state(family, p);
    const double comp = d_g(rho, Side::A, NormKind::HilbertSchmidt).value;
    const OptimizationReport rep = d_prime(rho, Side::A, cfg);
    rows.push_back({p, comp, rep.d_prime, rep.converged});
  }
  return rows;
}

namespace detail {

inline std::string csv_value(double x) { return fmt_g(x, 9); }

}  // namespace detail

inline std::string csv_random(const RandomScatter& scatter) {
  std::string out = "c2,dg_comp,dg_schmidt\n";
  for (const RandomRow& r : scatter.rows)
    out += detail::csv_value(r.c2) + "," + detail::csv_value(r.dg_comp) + "," +
           detail::csv_value(r.dg_schmidt) + "\n";
  return out;
}

inline std::string csv_scan(const std::vector<ScanRow>& rows) {
  std::string out = "p,dg_comp,d_prime,converged\n";
  for (const ScanRow& r : rows)
    out += detail::csv_value(r.p) + "," + detail::csv_value(r.dg_comp) + "," +
           detail::csv_value(r.d_prime) + "," + (r.converged ? "1" : "0") + "\n";
  return out;
}

}  // namespace ncqd
