#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracpow/assembly.hpp"
#include "fracpow/linsolve.hpp"
#include "fracpow/norms.hpp"
#include "testutil.hpp"

using namespace fracpow;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_SUITE("linsolve") {

TEST_CASE("consistent mass system reproduces the constant vector") {
  const auto sys = assemble(build_uniform_mesh(3), laplace_form());
  std::vector<double> ones(sys.mass.rows(), 1.0);
  const auto b = sys.mass.multiply(ones);
  const auto res = solve_spd(sys.mass, b, 1e-10);
  for (double v : res.x) CHECK(v == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(res.report.final_relative_residual <= 1e-10);
}

TEST_CASE("zero right-hand side short-circuits") {
  const auto sys = assemble(build_uniform_mesh(2), laplace_form());
  const auto res = solve_spd(sys.mass, std::vector<double>(sys.mass.rows(), 0.0), 1e-10);
  CHECK(res.report.iterations == 0);
  for (double v : res.x) CHECK(v == 0.0);
}

TEST_CASE("random diagonally dominant SPD system meets the residual contract") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> val(-1.0, 1.0);
  const long n = 50;
  std::vector<Triplet> t;
  for (long i = 0; i < n; ++i) {
    for (long j = i + 1; j < std::min(n, i + 4); ++j) {
      const double v = 0.1 * val(rng);
      t.push_back({i, j, v});
      t.push_back({j, i, v});
    }
    t.push_back({i, i, 2.0});
  }
  const auto A = SparseMatrix::from_triplets(n, n, std::move(t));
  const auto b = testutil::random_vector(n, rng);
  const auto res = solve_spd(A, b, 1e-10);

  // direct residual recomputation
  auto r = A.multiply(res.x);
  for (long i = 0; i < n; ++i) r[i] -= b[i];
  CHECK(norm2(r) / norm2(b) <= 1e-10);
}

TEST_CASE("tolerance domain is enforced") {
  const auto sys = assemble(build_uniform_mesh(2), laplace_form());
  std::vector<double> b(sys.mass.rows(), 1.0);
  CHECK_THROWS_AS(solve_spd(sys.mass, b, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(solve_spd(sys.mass, b, 1e-3), std::invalid_argument);
  CHECK_THROWS_AS(solve_shifted(sys, -1.0, b, 1e-10), std::invalid_argument);
}

TEST_CASE("unsolvable singular system raises with the report attached") {
  std::vector<Triplet> t = {{0, 0, 1.0}};  // second row identically zero
  const auto A = SparseMatrix::from_triplets(2, 2, std::move(t));
  CHECK_THROWS_AS(solve_spd(A, {0.0, 1.0}, 1e-10), SolveError);
  try {
    solve_spd(A, {0.0, 1.0}, 1e-10);
  } catch (const SolveError& e) {
    CHECK(e.report.iterations == 20);  // 10 * dim
  }
}

TEST_CASE("dominant shift behaves like a scaled mass solve") {
  const auto sys = assemble(build_uniform_mesh(3), laplace_form());
  std::mt19937 rng(3);
  const auto b = testutil::random_vector(sys.mass.rows(), rng);
  const double mu = 1e12;
  const auto res = solve_shifted(sys, mu, b, 1e-10);

  auto r = sys.mass.multiply(res.x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = mu * r[i] - b[i];
  CHECK(norm2(r) / norm2(b) <= 1e-6);
}

TEST_CASE("zero shift on the Laplacian recovers the eigenfunction solution") {
  // f = sin(pi x) sin(2 pi y) is an eigenfunction with eigenvalue 5 pi^2,
  // so the Galerkin solution approximates f / (5 pi^2) at second order
  auto f = [](double x, double y) { return std::sin(pi * x) * std::sin(2.0 * pi * y); };
  auto uex = [&](double x, double y) { return f(x, y) / (5.0 * pi * pi); };
  double errs[2];
  int i = 0;
  for (int level : {4, 5}) {
    const Mesh mesh = build_uniform_mesh(level);
    const auto sys = assemble(mesh, laplace_form());
    const auto res = solve_shifted(sys, 0.0, assemble_load(mesh, f), 1e-10);
    errs[i++] = error_l2(mesh, {mesh, res.x}, uex);
  }
  CHECK(errs[0] < 5e-4);
  CHECK(errs[0] / errs[1] > 3.6);
  CHECK(errs[0] / errs[1] < 4.4);
}

TEST_CASE("shifted solves agree with a dense LU reference") {
  std::mt19937 rng(17);
  for (double b_conv : {0.0, 1.0}) {
    const auto sys = assemble(build_uniform_mesh(3), convection_diffusion_form(b_conv));
    for (int trial = 0; trial < 10; ++trial) {
      const double mu = std::pow(10.0, -2 + trial % 6);
      const auto b = testutil::random_vector(sys.form.rows(), rng);
      const auto res = solve_shifted(sys, mu, b, 1e-10);
      const auto xref = testutil::lu_solve(SparseMatrix::sum(mu, sys.mass, 1.0, sys.form), b);

      double diff = 0.0, scale = 0.0;
      for (std::size_t i = 0; i < xref.size(); ++i) {
        diff += (res.x[i] - xref[i]) * (res.x[i] - xref[i]);
        scale += xref[i] * xref[i];
      }
      CHECK(std::sqrt(diff / scale) <= 1e-9);  // within 10x solver tolerance
      CHECK(res.report.final_relative_residual <= 1e-10);
      CHECK(res.report.shift == mu);
    }
  }
}

TEST_CASE("solution norm is non-increasing in the shift for the symmetric form") {
  const auto sys = assemble(build_uniform_mesh(3), laplace_form());
  std::mt19937 rng(29);
  const auto b = testutil::random_vector(sys.form.rows(), rng);
  double prev = std::numeric_limits<double>::infinity();
  for (double mu : {0.0, 1.0, 10.0, 100.0, 1e4}) {
    const auto res = solve_shifted(sys, mu, b, 1e-10);
    const double nrm = norm2(res.x);
    CHECK(nrm <= prev * (1.0 + 1e-9));
    prev = nrm;
  }
}

TEST_CASE("non-symmetric path is deterministic") {
  const auto sys = assemble(build_uniform_mesh(3), convection_diffusion_form(5.0));
  std::mt19937 rng(41);
  const auto b = testutil::random_vector(sys.form.rows(), rng);
  const auto r1 = solve_shifted(sys, 0.5, b, 1e-10);
  const auto r2 = solve_shifted(sys, 0.5, b, 1e-10);
  CHECK(r1.report.iterations == r2.report.iterations);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(r1.x[i] == r2.x[i]);
}

}  // TEST_SUITE
