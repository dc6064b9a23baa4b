#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fracpow/assembly.hpp"
#include "fracpow/sparse.hpp"

namespace fracpow {

struct SolveReport {
  long iterations = 0;
  double final_relative_residual = 0.0;
  double shift = 0.0;
  double wall_time = 0.0;  // seconds
};

struct SolveError : std::runtime_error {
  SolveError(const std::string& what, SolveReport r) : std::runtime_error(what), report(r) {}
  SolveReport report;
};

struct SolveResult {
  std::vector<double> x;
  SolveReport report;
};

/// Jacobi-preconditioned conjugate gradients with x0 = 0. Requires SPD A and
/// tol in (0, 1e-4]. The reported residual is the true ||Ax-b||/||b||; the
/// iteration cap is 10*dim, past which a SolveError carries the report.
SolveResult solve_spd(const SparseMatrix& A, const std::vector<double>& b, double tol);

/// (mu M + K) x = b for mu >= 0. Symmetric K takes the CG path; otherwise
/// Jacobi-preconditioned BiCGStab with a true-residual check and restarts.
/// Deterministic: x0 = 0, no randomized starts.
SolveResult solve_shifted(const FemSystem& sys, double mu, const std::vector<double>& b,
                          double tol);
SolveResult solve_shifted(const SparseMatrix& K, const SparseMatrix& M, bool symmetric,
                          double mu, const std::vector<double>& b, double tol);

}  // namespace fracpow
