#include <doctest.h>

#include <cmath>
#include <numbers>
#include <string>

#include "fracpow/errors.hpp"
#include "fracpow/oracle.hpp"
#include "fracpow/sincquad.hpp"
#include "testutil.hpp"

using namespace fracpow;

namespace {

constexpr double pi = std::numbers::pi;

SparseMatrix scalar_matrix(double v) {
  return SparseMatrix::from_triplets(1, 1, {{0, 0, v}});
}

}  // namespace

TEST_SUITE("sincquad") {

TEST_CASE("balanced rule equalizes truncation against the quadrature decay") {
  // negative side resolves the e^{-(1-beta)|y|} tail, positive side the
  // slower e^{-beta y} tail
  const auto rule = build_rule_balanced(0.5, 0.5);
  CHECK(rule.m_neg == 40);  // ceil(pi^2 / (2 * 0.5 * 0.25))
  CHECK(rule.n_pos == 40);
  CHECK(rule.node_count() == 81);

  const auto lopsided = build_rule_balanced(0.25, 0.2);
  CHECK(lopsided.m_neg == 165);  // ceil(pi^2 / (2 * 0.75 * 0.04))
  CHECK(lopsided.n_pos == 494);  // ceil(pi^2 / (2 * 0.25 * 0.04))
  CHECK(lopsided.n_pos > lopsided.m_neg);  // small beta needs the positive side
}

TEST_CASE("balance is symmetric at beta = 1/2") {
  for (double k : {0.1, 0.25, 0.5, 0.9}) {
    const auto rule = build_rule_balanced(0.5, k);
    CHECK(rule.m_neg == rule.n_pos);
  }
}

TEST_CASE("401-point configuration") {
  // the balanced rule lands exactly on 200+200 at k = pi/sqrt(200) for
  // beta = 1/2; the symmetric rule gives 401 points for every beta
  const auto balanced = build_rule_balanced(0.5, pi / std::sqrt(200.0));
  CHECK(balanced.m_neg == 200);
  CHECK(balanced.n_pos == 200);
  CHECK(balanced.node_count() == 401);

  for (double beta : {0.1, 0.5, 0.9}) {
    const auto sym = build_rule_symmetric(beta, 200);
    CHECK(sym.node_count() == 401);
  }
}

TEST_CASE("beta domain and endpoint guards") {
  CHECK_THROWS_AS(build_rule_balanced(0.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(build_rule_balanced(1.0, 0.5), std::domain_error);
  CHECK_THROWS_AS(build_rule_balanced(-0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(build_rule_balanced(1.3, 0.5), std::domain_error);
  CHECK_THROWS_AS(build_rule_symmetric(0.0, 10), std::domain_error);

  // inside (0,1) but outside [0.01, 0.99]: counts explode, config error
  CHECK_THROWS_AS(build_rule_balanced(0.005, 0.5), ConfigError);
  try {
    build_rule_balanced(0.005, 0.5);
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("n_pos") != std::string::npos);
  }

  CHECK_THROWS_AS(build_rule_balanced(0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_rule_balanced(0.5, 1.5), std::invalid_argument);
}

TEST_CASE("symmetric rule arithmetic grid") {
  const auto rule = build_rule_symmetric(0.3, 4);
  CHECK(rule.k == doctest::Approx(0.5));
  CHECK(rule.node_count() == 9);
  CHECK(rule.node(-rule.m_neg) == doctest::Approx(-2.0));
  CHECK(rule.node(rule.n_pos) == doctest::Approx(2.0));

  const auto tiny = build_rule_symmetric(0.3, 1);
  CHECK(tiny.node_count() == 3);
  CHECK(tiny.k == doctest::Approx(1.0));
}

TEST_CASE("weight at the origin") {
  for (double beta : {0.25, 0.5, 0.9}) {
    const auto rule = build_rule_symmetric(beta, 9);
    CHECK(rule.weight(0) == doctest::Approx(rule.k * std::sin(pi * beta) / pi).epsilon(1e-14));
  }
}

TEST_CASE("error estimate values") {
  SincRule rule = build_rule_balanced(0.5, 0.5);
  CHECK(quadrature_error_estimate(rule) == doctest::Approx(std::exp(-pi * pi)).epsilon(1e-13));

  // halving k squares the estimate
  SincRule half = build_rule_balanced(0.5, 0.25);
  const double e1 = quadrature_error_estimate(rule);
  const double e2 = quadrature_error_estimate(half);
  CHECK(e2 == doctest::Approx(e1 * e1).epsilon(1e-10));

  // large k claims no accuracy
  SincRule loose{0.5, 1e6, 1, 1};
  CHECK(quadrature_error_estimate(loose) == doctest::Approx(1.0).epsilon(1e-5));

  CHECK(step_for_estimate(e1) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("scalar rule reproduces fractional powers") {
  const auto M = scalar_matrix(1.0);
  for (double lambda : {1.0, 10.0, 100.0}) {
    const auto K = scalar_matrix(lambda);
    for (double beta : {0.25, 0.5, 0.75}) {
      const auto rule = build_rule_balanced(beta, 0.1);
      const auto u = apply_fractional_inverse(K, M, true, rule, {1.0}, 1e-10);
      const double expected = std::pow(lambda, -beta);
      CHECK(std::abs(u[0] - expected) / expected <= 1e-6);
    }
  }
}

TEST_CASE("zero data gives the zero solution") {
  const auto sys = assemble(build_uniform_mesh(2), laplace_form());
  const auto rule = build_rule_balanced(0.5, 0.4);
  const auto res = apply_fractional_inverse(sys, rule, [](double, double) { return 0.0; });
  for (double v : res.u.values) CHECK(v == 0.0);
  CHECK(static_cast<long>(res.node_reports.size()) == rule.node_count());
}

TEST_CASE("discrete eigenvector is scaled by lambda^-beta") {
  const auto sys = assemble(build_uniform_mesh(3), laplace_form());
  const auto dec = dense_spectral(sys);
  const auto rule = build_rule_balanced(0.5, 0.25);

  for (long j : {0L, 5L}) {
    // load vector of the eigenfunction psi_j is M psi_j
    std::vector<double> psi(dec.dim);
    for (long r = 0; r < dec.dim; ++r) psi[r] = dec.vec(r, j);
    const auto b = sys.mass.multiply(psi);

    const auto u = apply_fractional_inverse(sys.form, sys.mass, true, rule, b, 1e-12);
    const double scale = std::pow(dec.eigenvalues[j], -0.5);
    double diff = 0.0;
    for (long r = 0; r < dec.dim; ++r) diff = std::max(diff, std::abs(u[r] - scale * psi[r]));
    // quadrature error bound with a generous constant
    CHECK(diff <= 10.0 * quadrature_error_estimate(rule) * scale *
                      std::sqrt(dec.eigenvalues[j]));
  }
}

TEST_CASE("summation order is fixed and cancellation-free") {
  const auto sys = assemble(build_uniform_mesh(3), convection_diffusion_form(1.0));
  const auto rule = build_rule_balanced(0.5, 0.4);
  const auto b = assemble_load(sys.mesh, [](double x, double y) { return x * y; });

  const auto u = apply_fractional_inverse(sys.form, sys.mass, sys.symmetric, rule, b, 1e-10);

  // recompute ascending and descending from independent node solves
  std::vector<std::vector<double>> xs;
  for (long l = -rule.m_neg; l <= rule.n_pos; ++l)
    xs.push_back(solve_shifted(sys, std::exp(rule.node(l)), b, 1e-10).x);

  std::vector<double> asc(b.size(), 0.0), desc(b.size(), 0.0);
  for (long idx = 0; idx < rule.node_count(); ++idx) {
    const double w = rule.weight(idx - rule.m_neg);
    for (std::size_t i = 0; i < b.size(); ++i) asc[i] += w * xs[idx][i];
  }
  for (long idx = rule.node_count() - 1; idx >= 0; --idx) {
    const double w = rule.weight(idx - rule.m_neg);
    for (std::size_t i = 0; i < b.size(); ++i) desc[i] += w * xs[idx][i];
  }

  const double scale = norm2(asc);
  for (std::size_t i = 0; i < b.size(); ++i) {
    CHECK(u[i] == asc[i]);  // apply uses exactly the ascending order
    CHECK(std::abs(asc[i] - desc[i]) <= 1e-12 * scale);
  }
}

TEST_CASE("thread count does not change the result") {
  const auto sys = assemble(build_uniform_mesh(3), convection_diffusion_form(2.0));
  const auto rule = build_rule_balanced(0.4, 0.45);
  const auto b = assemble_load(sys.mesh, [](double x, double y) { return x + y * y; });

  const auto u1 = apply_fractional_inverse(sys.form, sys.mass, false, rule, b, 1e-10, 1);
  const auto u4 = apply_fractional_inverse(sys.form, sys.mass, false, rule, b, 1e-10, 4);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(u1[i] == u4[i]);
}

TEST_CASE("failing node solves are aggregated with node ids and shifts") {
  // second equation 0 = 1 is unsolvable for every shift
  const auto K = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}});
  const auto M = SparseMatrix::from_triplets(2, 2, {{0, 0, 1.0}});
  const auto rule = build_rule_symmetric(0.5, 1);
  CHECK_THROWS_AS(apply_fractional_inverse(K, M, true, rule, {0.0, 1.0}, 1e-10), SolveError);
  try {
    apply_fractional_inverse(K, M, true, rule, {0.0, 1.0}, 1e-10);
  } catch (const SolveError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("node l=-1") != std::string::npos);
    CHECK(msg.find("node l=0") != std::string::npos);
    CHECK(msg.find("node l=1") != std::string::npos);
    CHECK(msg.find("mu=") != std::string::npos);
  }
}

}  // TEST_SUITE
