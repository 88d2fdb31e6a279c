#pragma once

// Representation-minimized measure d': the Hilbert-Schmidt measure minimized
// over the local basis of one side. The basis search runs over SU(2) (the
// conjugation kills any global phase), by multi-start Nelder-Mead in the
// three parameters below. For pure states the minimum has a closed form.

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "ncqd/measures.hpp"
#include "ncqd/nelder_mead.hpp"
#include "ncqd/rng.hpp"

namespace ncqd {

// Canonical domain: alpha, beta in [0, 2 pi), theta in [0, pi/2]; any real
// triple is meaningful and wrapping is applied only on read-out.
struct SU2Params {
  double alpha = 0.0;
  double beta = 0.0;
  double theta = 0.0;
};

// U = [[e^{i alpha} cos theta,  e^{i beta} sin theta],
//      [-e^{-i beta} sin theta, e^{-i alpha} cos theta]], det U = 1.
inline ComplexMatrix su2_from_params(const SU2Params& p) {
  const double c = std::cos(p.theta), s = std::sin(p.theta);
  const cplx ea = std::polar(1.0, p.alpha), eb = std::polar(1.0, p.beta);
  return ComplexMatrix(2, 2, {ea * c, eb * s, -std::conj(eb) * s, std::conj(ea) * c});
}

// Wraps parameters into the canonical domain without changing the matrix.
inline SU2Params canonicalize(SU2Params p) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto wrap = [](double x) {
    x = std::fmod(x, two_pi);
    return x < 0.0 ? x + two_pi : x;
  };
  p.theta = std::fmod(p.theta, two_pi);
  if (p.theta < 0.0) {  // sin flips sign: absorb into beta
    p.theta = -p.theta;
    p.beta += std::numbers::pi;
  }
  if (p.theta > std::numbers::pi) {  // same flip again
    p.theta = two_pi - p.theta;
    p.beta += std::numbers::pi;
  }
  if (p.theta > std::numbers::pi / 2.0) {  // cos flips sign: absorb into alpha
    p.theta = std::numbers::pi - p.theta;
    p.alpha += std::numbers::pi;
  }
  p.alpha = wrap(p.alpha);
  p.beta = wrap(p.beta);
  return p;
}

struct OptimizerConfig {
  int n_starts = 24;
  int max_iters = 400;          // per start
  double simplex_tol = 1e-10;   // spread of simplex values
  RngSeed seed{1};
};

struct OptimizationReport {
  double d_prime = 0.0;
  SU2Params best_params;
  Side side = Side::A;
  std::vector<double> start_values;  // per-start minima
  long evaluations = 0;
  bool converged = false;            // at least one start met the spread criterion
};

inline OptimizationReport d_prime(const DensityMatrix& rho, Side side,
                                  const OptimizerConfig& cfg = {}) {
  const int d_loc = side == Side::A ? rho.d_a : rho.d_b;
  if (d_loc != 2)
    throw dimension_error("d_prime: basis search is over SU(2); side " +
                          std::string(to_string(side)) + " has local dimension " +
                          std::to_string(d_loc));
  if (cfg.n_starts < 1 || cfg.max_iters < 1 || !(cfg.simplex_tol > 0.0))
    throw validation_error("d_prime: optimizer configuration values must be positive");

  const auto objective = [&rho, side](const std::array<double, 3>& x) {
    return d_g(rho, side, NormKind::HilbertSchmidt, su2_from_params({x[0], x[1], x[2]})).value;
  };

  constexpr double edge = 0.3;  // initial simplex edge, radians
  Xoshiro256pp rng(cfg.seed);
  OptimizationReport report;
  report.side = side;
  report.start_values.reserve(cfg.n_starts);
  std::array<double, 3> best_x{};
  for (int k = 0; k < cfg.n_starts; ++k) {
    std::array<double, 3> x0{0.0, 0.0, 0.0};  // start 0 is the identity representation
    if (k > 0)
      x0 = {rng.uniform(0.0, 2.0 * std::numbers::pi), rng.uniform(0.0, 2.0 * std::numbers::pi),
            rng.uniform(0.0, std::numbers::pi / 2.0)};
    const SimplexResult<3> res = nelder_mead<3>(objective, x0, edge, cfg.simplex_tol, cfg.max_iters);
    report.start_values.push_back(res.value);
    report.evaluations += res.evaluations;
    report.converged = report.converged || res.converged;
    if (k == 0 || res.value < report.d_prime) {
      report.d_prime = res.value;
      best_x = res.x;
    }
  }
  report.best_params = canonicalize({best_x[0], best_x[1], best_x[2]});
  return report;
}

// Analytic fast path: for pure two-qubit states the minimum over
// representations sits at the Schmidt basis.
inline double d_prime_pure(const PureState& psi) { return pure_schmidt_value(psi); }

}  // namespace ncqd
