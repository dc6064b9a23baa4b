#include "fracpow/sincquad.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <string>
#include <thread>

#include "fracpow/errors.hpp"

namespace fracpow {

namespace {

constexpr double kPi = std::numbers::pi;

void check_beta_domain(double beta) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::domain_error("fractional order beta must lie in (0,1), got " +
                            std::to_string(beta));
}

// ceil with a one-ulp-scale backoff so expressions that are integers in exact
// arithmetic do not round up.
long safe_ceil(double v) { return static_cast<long>(std::ceil(v - 1e-12 * v)); }

}  // namespace

double SincRule::weight(long l) const {
  return k * std::sin(kPi * beta) / kPi * std::exp((1.0 - beta) * node(l));
}

SincRule build_rule_balanced(double beta, double k) {
  check_beta_domain(beta);
  if (!(k > 0.0 && k <= 1.0))
    throw std::invalid_argument("quadrature step k must lie in (0,1], got " +
                                std::to_string(k));
  const double pi2 = kPi * kPi;
  const long m = safe_ceil(pi2 / (2.0 * (1.0 - beta) * k * k));
  const long n = safe_ceil(pi2 / (2.0 * beta * k * k));
  if (beta < 0.01 || beta > 0.99)
    throw ConfigError("beta = " + std::to_string(beta) +
                      " is outside [0.01, 0.99]; the balanced node counts degenerate "
                      "(m_neg = " +
                      std::to_string(m) + ", n_pos = " + std::to_string(n) + ")");
  return {beta, k, m, n};
}

SincRule build_rule_symmetric(double beta, long n) {
  check_beta_domain(beta);
  if (n < 1) throw std::invalid_argument("node count n must be positive");
  return {beta, 1.0 / std::sqrt(static_cast<double>(n)), n, n};
}

double quadrature_error_estimate(const SincRule& rule) {
  return std::exp(-kPi * kPi / (2.0 * rule.k));
}

double step_for_estimate(double target) {
  if (!(target > 0.0 && target < 1.0))
    throw std::invalid_argument("error-estimate target must lie in (0,1)");
  return kPi * kPi / (2.0 * std::log(1.0 / target));
}

std::vector<double> apply_fractional_inverse(const SparseMatrix& K, const SparseMatrix& M,
                                             bool symmetric, const SincRule& rule,
                                             const std::vector<double>& b, double tol,
                                             int threads, std::vector<SolveReport>* reports) {
  const long count = rule.node_count();
  std::vector<std::vector<double>> solutions(count);
  std::vector<SolveReport> node_reports(count);
  std::vector<std::string> failures(count);

  // On coefficient vectors, (mu I + A_h)^{-1} applied to the projection of f
  // is the solve (mu M + K) x = b: A_h = M^{-1} K and the projection has
  // coefficients M^{-1} b, so (mu I + M^{-1} K)^{-1} M^{-1} b = (mu M + K)^{-1} b.
  auto solve_node = [&](long idx) {
    const long l = idx - rule.m_neg;
    const double mu = std::exp(rule.node(l));
    try {
      SolveResult res = solve_shifted(K, M, symmetric, mu, b, tol);
      solutions[idx] = std::move(res.x);
      node_reports[idx] = res.report;
    } catch (const SolveError& e) {
      node_reports[idx] = e.report;
      failures[idx] = "node l=" + std::to_string(l) + " (mu=" + std::to_string(mu) +
                      "): " + e.what();
    }
  };

  const int workers = static_cast<int>(std::max<long>(1, std::min<long>(threads, count)));
  if (workers == 1) {
    for (long idx = 0; idx < count; ++idx) solve_node(idx);
  } else {
    std::atomic<long> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
      pool.emplace_back([&]() {
        for (long idx = next.fetch_add(1); idx < count; idx = next.fetch_add(1))
          solve_node(idx);
      });
    for (auto& t : pool) t.join();
  }

  std::string aggregate;
  for (const auto& f : failures)
    if (!f.empty()) aggregate += (aggregate.empty() ? "" : "; ") + f;
  if (!aggregate.empty())
    throw SolveError("fractional inverse: " + aggregate, node_reports.front());

  // fixed ascending-l accumulation keeps runs bitwise reproducible
  std::vector<double> u(b.size(), 0.0);
  for (long idx = 0; idx < count; ++idx) {
    const double w = rule.weight(idx - rule.m_neg);
    const auto& x = solutions[idx];
    for (std::size_t i = 0; i < u.size(); ++i) u[i] += w * x[i];
  }

  if (reports) *reports = std::move(node_reports);
  return u;
}

FractionalSolveResult apply_fractional_inverse(const FemSystem& sys, const SincRule& rule,
                                               const std::vector<double>& load, double tol,
                                               int threads) {
  FractionalSolveResult out;
  auto u = apply_fractional_inverse(sys.form, sys.mass, sys.symmetric, rule, load, tol,
                                    threads, &out.node_reports);
  out.u = {sys.mesh, std::move(u)};
  return out;
}

FractionalSolveResult apply_fractional_inverse(const FemSystem& sys, const SincRule& rule,
                                               const std::function<double(double, double)>& f,
                                               double tol, int threads) {
  return apply_fractional_inverse(sys, rule, assemble_load(sys.mesh, f), tol, threads);
}

}  // namespace fracpow
