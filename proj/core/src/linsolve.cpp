#include "fracpow/linsolve.hpp"

#include <chrono>
#include <cmath>

namespace fracpow {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_tol(double tol) {
  if (!(tol > 0.0 && tol <= 1e-4))
    throw std::invalid_argument("solver tolerance must lie in (0, 1e-4], got " +
                                std::to_string(tol));
}

std::vector<double> jacobi_inverse(const SparseMatrix& A) {
  auto d = A.diagonal();
  for (auto& v : d) v = (v != 0.0) ? 1.0 / v : 1.0;
  return d;
}

double true_relative_residual(const SparseMatrix& A, const std::vector<double>& x,
                              const std::vector<double>& b, double norm_b,
                              std::vector<double>& scratch) {
  A.multiply(x, scratch);
  for (std::size_t i = 0; i < scratch.size(); ++i) scratch[i] = b[i] - scratch[i];
  return norm2(scratch) / norm_b;
}

SolveResult cg_jacobi(const SparseMatrix& A, const std::vector<double>& b, double tol) {
  const auto t0 = Clock::now();
  const long dim = A.rows();
  const long max_iter = 10 * dim;
  const double norm_b = norm2(b);

  SolveResult out;
  out.x.assign(dim, 0.0);
  if (norm_b == 0.0) {
    out.report.wall_time = seconds_since(t0);
    return out;
  }

  const auto dinv = jacobi_inverse(A);
  std::vector<double> r = b;  // x0 = 0
  std::vector<double> z(dim), p(dim), q(dim);
  for (long i = 0; i < dim; ++i) z[i] = dinv[i] * r[i];
  p = z;
  double rz = dot(r, z);

  long it = 0;
  while (it < max_iter) {
    ++it;
    A.multiply(p, q);
    const double alpha = rz / dot(p, q);
    for (long i = 0; i < dim; ++i) {
      out.x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
    }
    if (norm2(r) / norm_b <= tol) {
      // recursion residual can drift; accept only the true one
      const double rr = true_relative_residual(A, out.x, b, norm_b, q);
      if (rr <= tol) {
        out.report.iterations = it;
        out.report.final_relative_residual = rr;
        out.report.wall_time = seconds_since(t0);
        return out;
      }
      // refresh and restart the recursion from the current iterate
      A.multiply(out.x, q);
      for (long i = 0; i < dim; ++i) r[i] = b[i] - q[i];
      for (long i = 0; i < dim; ++i) z[i] = dinv[i] * r[i];
      p = z;
      rz = dot(r, z);
      continue;
    }
    double rz_new = 0.0;
    for (long i = 0; i < dim; ++i) {
      z[i] = dinv[i] * r[i];
      rz_new += r[i] * z[i];
    }
    const double beta = rz_new / rz;
    rz = rz_new;
    for (long i = 0; i < dim; ++i) p[i] = z[i] + beta * p[i];
  }

  SolveReport rep;
  rep.iterations = it;
  rep.final_relative_residual = true_relative_residual(A, out.x, b, norm_b, q);
  rep.wall_time = seconds_since(t0);
  throw SolveError("CG did not reach tol " + std::to_string(tol) + " within " +
                       std::to_string(max_iter) + " iterations (residual " +
                       std::to_string(rep.final_relative_residual) + ")",
                   rep);
}

SolveResult bicgstab_jacobi(const SparseMatrix& A, const std::vector<double>& b, double tol) {
  const auto t0 = Clock::now();
  const long dim = A.rows();
  const long max_iter = 10 * dim;
  const double norm_b = norm2(b);

  SolveResult out;
  out.x.assign(dim, 0.0);
  if (norm_b == 0.0) {
    out.report.wall_time = seconds_since(t0);
    return out;
  }

  const auto dinv = jacobi_inverse(A);
  std::vector<double> r = b;  // x0 = 0
  std::vector<double> rhat = r, p(dim, 0.0), v(dim, 0.0);
  std::vector<double> phat(dim), shat(dim), s(dim), t(dim), scratch(dim);
  double rho = 1.0, alpha = 1.0, omega = 1.0;

  const double tiny = 1e-290;
  long it = 0;
  auto restart = [&]() {
    A.multiply(out.x, scratch);
    for (long i = 0; i < dim; ++i) r[i] = b[i] - scratch[i];
    rhat = r;
    std::fill(p.begin(), p.end(), 0.0);
    std::fill(v.begin(), v.end(), 0.0);
    rho = alpha = omega = 1.0;
  };
  auto accept_if_converged = [&]() -> bool {
    const double rr = true_relative_residual(A, out.x, b, norm_b, scratch);
    if (rr <= tol) {
      out.report.iterations = it;
      out.report.final_relative_residual = rr;
      out.report.wall_time = seconds_since(t0);
      return true;
    }
    restart();
    return false;
  };

  while (it < max_iter) {
    ++it;
    const double rho_new = dot(rhat, r);
    if (std::abs(rho_new) < tiny) {
      restart();
      continue;
    }
    const double beta = (rho_new / rho) * (alpha / omega);
    rho = rho_new;
    for (long i = 0; i < dim; ++i) p[i] = r[i] + beta * (p[i] - omega * v[i]);
    for (long i = 0; i < dim; ++i) phat[i] = dinv[i] * p[i];
    A.multiply(phat, v);
    alpha = rho / dot(rhat, v);
    for (long i = 0; i < dim; ++i) s[i] = r[i] - alpha * v[i];
    if (norm2(s) / norm_b <= tol) {
      for (long i = 0; i < dim; ++i) out.x[i] += alpha * phat[i];
      if (accept_if_converged()) return out;
      continue;
    }
    for (long i = 0; i < dim; ++i) shat[i] = dinv[i] * s[i];
    A.multiply(shat, t);
    const double tt = dot(t, t);
    if (tt < tiny) {
      restart();
      continue;
    }
    omega = dot(t, s) / tt;
    for (long i = 0; i < dim; ++i) {
      out.x[i] += alpha * phat[i] + omega * shat[i];
      r[i] = s[i] - omega * t[i];
    }
    if (norm2(r) / norm_b <= tol && accept_if_converged()) return out;
    if (std::abs(omega) < tiny) restart();
  }

  SolveReport rep;
  rep.iterations = it;
  rep.final_relative_residual = true_relative_residual(A, out.x, b, norm_b, scratch);
  rep.wall_time = seconds_since(t0);
  throw SolveError("BiCGStab did not reach tol " + std::to_string(tol) + " within " +
                       std::to_string(max_iter) + " iterations (residual " +
                       std::to_string(rep.final_relative_residual) + ")",
                   rep);
}

}  // namespace

SolveResult solve_spd(const SparseMatrix& A, const std::vector<double>& b, double tol) {
  check_tol(tol);
  if (A.rows() != A.cols() || A.rows() != static_cast<long>(b.size()))
    throw std::invalid_argument("solve_spd: dimension mismatch");
  return cg_jacobi(A, b, tol);
}

SolveResult solve_shifted(const SparseMatrix& K, const SparseMatrix& M, bool symmetric,
                          double mu, const std::vector<double>& b, double tol) {
  check_tol(tol);
  if (mu < 0.0) throw std::invalid_argument("solve_shifted: shift must be >= 0");
  const SparseMatrix A = SparseMatrix::sum(mu, M, 1.0, K);
  SolveResult res = symmetric ? cg_jacobi(A, b, tol) : bicgstab_jacobi(A, b, tol);
  res.report.shift = mu;
  return res;
}

SolveResult solve_shifted(const FemSystem& sys, double mu, const std::vector<double>& b,
                          double tol) {
  return solve_shifted(sys.form, sys.mass, sys.symmetric, mu, b, tol);
}

}  // namespace fracpow
