#pragma once

#include <functional>
#include <vector>

#include "fracpow/assembly.hpp"
#include "fracpow/field.hpp"
#include "fracpow/linsolve.hpp"
#include "fracpow/sparse.hpp"

namespace fracpow {

/// Sinc rule for the fractional-inverse integral after the substitution
/// mu = e^y: nodes y_l = l*k for l = -m_neg..n_pos, weights
/// (k sin(pi beta)/pi) e^{(1-beta) y_l}. Applied to an operator pencil it
/// realizes sum_l w_l (e^{y_l} M + K)^{-1} b.
struct SincRule {
  double beta = 0.5;
  double k = 0.5;
  long m_neg = 0;  // nodes on the negative axis
  long n_pos = 0;  // nodes on the positive axis

  long node_count() const { return m_neg + n_pos + 1; }
  double node(long l) const { return static_cast<double>(l) * k; }
  double weight(long l) const;
};

/// Truncation balanced against the e^{-pi^2/(2k)} quadrature error. The
/// integrand decays like e^{-(1-beta)|y|} to the left and e^{-beta y} to the
/// right, so equalizing all three error terms gives
///   m_neg = ceil(pi^2 / (2 (1-beta) k^2)),  n_pos = ceil(pi^2 / (2 beta k^2)).
/// beta outside [0.01, 0.99] makes the counts explode and is rejected.
SincRule build_rule_balanced(double beta, double k);

/// Symmetric truncation: m_neg = n_pos = n with step k = 1/sqrt(n).
SincRule build_rule_symmetric(double beta, long n);

/// e^{-pi^2/(2k)} with unit constant; a relative-scale figure used for
/// reporting and step selection only.
double quadrature_error_estimate(const SincRule& rule);

/// Step size whose error estimate equals `target` (target in (0,1)).
double step_for_estimate(double target);

struct FractionalSolveResult {
  FieldVector u;
  std::vector<SolveReport> node_reports;  // ascending l
};

/// u = sum_l w_l x_l with (e^{y_l} M + K) x_l = b. Node solves are
/// independent and may run on `threads` workers; the weighted sum is always
/// accumulated in ascending l, so the result does not depend on the thread
/// count. Failed node solves are aggregated into one SolveError naming the
/// offending nodes and shifts.
std::vector<double> apply_fractional_inverse(const SparseMatrix& K, const SparseMatrix& M,
                                             bool symmetric, const SincRule& rule,
                                             const std::vector<double>& b, double tol,
                                             int threads = 1,
                                             std::vector<SolveReport>* reports = nullptr);

FractionalSolveResult apply_fractional_inverse(const FemSystem& sys, const SincRule& rule,
                                               const std::vector<double>& load,
                                               double tol = 1e-10, int threads = 1);
FractionalSolveResult apply_fractional_inverse(const FemSystem& sys, const SincRule& rule,
                                               const std::function<double(double, double)>& f,
                                               double tol = 1e-10, int threads = 1);

}  // namespace fracpow
