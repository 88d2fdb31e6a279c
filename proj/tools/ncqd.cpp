// Command-line front end: evaluate the non-commutativity measures of a state
// supplied in a file, generate the Haar-random scatter, sweep the built-in
// state families, minimize over representations, or print a Schmidt
// decomposition. Exit codes: 0 ok, 2 bad input, 3 optimizer non-convergence.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncqd/experiments.hpp"
#include "ncqd/measures.hpp"
#include "ncqd/optimizer.hpp"
#include "ncqd/state_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitConvergence = 3;

ncqd::ParsedState load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ncqd::error("cannot open '" + path + "'");
  try {
    return ncqd::parse_state_text(in);
  } catch (const ncqd::parse_error& e) {
    throw ncqd::parse_error(path + ":" + std::to_string(e.line) + ": " + e.what(), e.line);
  }
}

std::vector<ncqd::Side> parse_sides(const std::string& side) {
  if (side == "A") return {ncqd::Side::A};
  if (side == "B") return {ncqd::Side::B};
  if (side == "both") return {ncqd::Side::A, ncqd::Side::B};
  throw ncqd::validation_error("--side must be A, B or both, got '" + side + "'");
}

ncqd::NormKind parse_norm(const std::string& norm) {
  if (norm == "hs") return ncqd::NormKind::HilbertSchmidt;
  if (norm == "trace") return ncqd::NormKind::Trace;
  throw ncqd::validation_error("--norm must be hs or trace, got '" + norm + "'");
}

ncqd::Family parse_family(const std::string& name) {
  if (name == "pseudo_pure_psi") return ncqd::Family::PseudoPurePsi;
  if (name == "werner") return ncqd::Family::Werner;
  if (name == "rho1") return ncqd::Family::Rho1;
  if (name == "rho2") return ncqd::Family::Rho2;
  throw ncqd::validation_error(
      "--family must be one of pseudo_pure_psi, werner, rho1, rho2; got '" + name + "'");
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ncqd::error("cannot open '" + path + "' for writing");
  out << text;
}

std::string fmt(double x, int significant) { return ncqd::detail::fmt_g(x, significant); }

// u_local for one side from the --basis flag; empty means computational.
std::optional<ncqd::ComplexMatrix> basis_unitary(const std::string& basis,
                                                 const ncqd::ParsedState& state,
                                                 ncqd::Side side) {
  if (basis == "comp") return std::nullopt;
  if (basis == "schmidt") {
    if (!state.is_pure())
      throw ncqd::validation_error("--basis schmidt requires a pure input state");
    const ncqd::SchmidtDecomposition sd =
        ncqd::schmidt(*state.pure, state.rho.d_a, state.rho.d_b);
    return ncqd::schmidt_local_basis(sd, side);
  }
  double a = 0.0, b = 0.0, t = 0.0;
  if (std::sscanf(basis.c_str(), "%lf,%lf,%lf", &a, &b, &t) != 3)
    throw ncqd::validation_error("--basis must be comp, schmidt or 'alpha,beta,theta'; got '" +
                                 basis + "'");
  const int d_loc = side == ncqd::Side::A ? state.rho.d_a : state.rho.d_b;
  if (d_loc != 2)
    throw ncqd::validation_error("--basis alpha,beta,theta needs local dimension 2, side " +
                                 std::string(ncqd::to_string(side)) + " has " +
                                 std::to_string(d_loc));
  return ncqd::su2_from_params({a, b, t});
}

int run_eval(const std::string& file, const std::string& side, const std::string& norm,
             const std::string& basis) {
  const ncqd::ParsedState state = load_state(file);
  const ncqd::NormKind kind = parse_norm(norm);
  for (ncqd::Side s : parse_sides(side)) {
    const auto u = basis_unitary(basis, state, s);
    const ncqd::MeasureValue mv = u ? ncqd::d_g(state.rho, s, kind, *u)
                                    : ncqd::d_g(state.rho, s, kind);
    const char* name = kind == ncqd::NormKind::HilbertSchmidt ? "D'_G" : "D_G";
    std::cout << name << "(side=" << ncqd::to_string(s) << ", norm=" << norm
              << ", basis=" << basis << ") = " << fmt(mv.value, 7) << "\n";
  }
  return kExitOk;
}

int run_random(int n, std::uint64_t seed, const std::string& out) {
  const ncqd::RandomScatter scatter = ncqd::random_scatter(n, ncqd::RngSeed{seed});
  write_text(out, ncqd::csv_random(scatter));
  const ncqd::RandomSummary& s = scatter.summary;
  std::cerr << "max dg_comp    = " << fmt(s.max_comp, 9) << " at C = " << fmt(s.c_at_max_comp, 9)
            << "\n"
            << "max dg_schmidt = " << fmt(s.max_schmidt, 9)
            << " at C = " << fmt(s.c_at_max_schmidt, 9) << "\n";
  return kExitOk;
}

int run_scan(const std::string& family, int grid, const ncqd::OptimizerConfig& cfg,
             const std::string& out) {
  const std::vector<ncqd::ScanRow> rows = ncqd::scan_family(parse_family(family), grid, cfg);
  write_text(out, ncqd::csv_scan(rows));
  return kExitOk;
}

int run_minimize(const std::string& file, const std::string& side,
                 const ncqd::OptimizerConfig& cfg) {
  const ncqd::ParsedState state = load_state(file);
  bool all_converged = true;
  for (ncqd::Side s : parse_sides(side)) {
    const ncqd::OptimizationReport rep = ncqd::d_prime(state.rho, s, cfg);
    all_converged = all_converged && rep.converged;
    std::cout << "d'(side=" << ncqd::to_string(s) << ") = " << fmt(rep.d_prime, 9) << "\n"
              << "  best params: alpha=" << fmt(rep.best_params.alpha, 9)
              << " beta=" << fmt(rep.best_params.beta, 9)
              << " theta=" << fmt(rep.best_params.theta, 9) << "\n"
              << "  converged: " << (rep.converged ? "yes" : "no")
              << "  evaluations: " << rep.evaluations << "\n  start minima:";
    for (double v : rep.start_values) std::cout << " " << fmt(v, 9);
    std::cout << "\n";
  }
  return all_converged ? kExitOk : kExitConvergence;
}

int run_schmidt(const std::string& file) {
  const ncqd::ParsedState state = load_state(file);
  if (!state.is_pure()) throw ncqd::validation_error("schmidt requires a pure input state");
  const ncqd::SchmidtDecomposition sd =
      ncqd::schmidt(*state.pure, state.rho.d_a, state.rho.d_b);
  std::cout << "lambdas:";
  for (double l : sd.lambdas) std::cout << " " << fmt(l, 9);
  std::cout << "\nbasis A columns:\n";
  for (int i = 0; i < sd.basis_a.rows(); ++i) {
    std::cout << " ";
    for (int j = 0; j < sd.basis_a.cols(); ++j)
      std::cout << " " << ncqd::format_complex(sd.basis_a(i, j));
    std::cout << "\n";
  }
  std::cout << "basis B columns:\n";
  for (int i = 0; i < sd.basis_b.rows(); ++i) {
    std::cout << " ";
    for (int j = 0; j < sd.basis_b.cols(); ++j)
      std::cout << " " << ncqd::format_complex(sd.basis_b(i, j));
    std::cout << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-commutativity measures of quantum correlations for bipartite states"};
  app.require_subcommand(1);

  std::string file, side = "A", norm = "hs", basis = "comp", family, out;
  int n = 100000, grid = 201, starts = 24, iters = 400;
  std::uint64_t seed = 1;
  double tol = 1e-10;

  CLI::App* eval = app.add_subcommand("eval", "Evaluate D_G or D'_G of a state file");
  eval->add_option("file", file, "state file")->required();
  eval->add_option("--side", side, "A, B or both");
  eval->add_option("--norm", norm, "hs or trace");
  eval->add_option("--basis", basis, "comp, schmidt or alpha,beta,theta");

  CLI::App* random = app.add_subcommand("random", "Haar-random two-qubit scatter as CSV");
  random->add_option("--n", n, "sample count");
  random->add_option("--seed", seed, "RNG seed");
  random->add_option("--out", out, "CSV path (default stdout)");

  CLI::App* scan = app.add_subcommand("scan", "Sweep a state family over p as CSV");
  scan->add_option("--family", family, "pseudo_pure_psi, werner, rho1 or rho2")->required();
  scan->add_option("--grid", grid, "number of p points");
  scan->add_option("--seed", seed, "optimizer RNG seed");
  scan->add_option("--starts", starts, "optimizer starts");
  scan->add_option("--iters", iters, "optimizer iterations per start");
  scan->add_option("--tol", tol, "simplex value-spread tolerance");
  scan->add_option("--out", out, "CSV path (default stdout)");

  CLI::App* minimize = app.add_subcommand("minimize", "Minimize D'_G over representations");
  minimize->add_option("file", file, "state file")->required();
  minimize->add_option("--side", side, "A, B or both");
  minimize->add_option("--seed", seed, "optimizer RNG seed");
  minimize->add_option("--starts", starts, "optimizer starts");
  minimize->add_option("--iters", iters, "optimizer iterations per start");
  minimize->add_option("--tol", tol, "simplex value-spread tolerance");

  CLI::App* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition of a pure state");
  schmidt_cmd->add_option("file", file, "state file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    ncqd::OptimizerConfig cfg;
    cfg.n_starts = starts;
    cfg.max_iters = iters;
    cfg.simplex_tol = tol;
    cfg.seed = ncqd::RngSeed{seed};
    if (eval->parsed()) return run_eval(file, side, norm, basis);
    if (random->parsed()) return run_random(n, seed, out);
    if (scan->parsed()) return run_scan(family, grid, cfg, out);
    if (minimize->parsed()) return run_minimize(file, side, cfg);
    if (schmidt_cmd->parsed()) return run_schmidt(file);
  } catch (const ncqd::convergence_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}
