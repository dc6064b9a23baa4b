#include "fracpow/assembly.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <string>

#include "fracpow/errors.hpp"
#include "fracpow/linsolve.hpp"

namespace fracpow {

namespace {

struct GaussPoint {
  double xi, eta, w;  // tensor rule on the reference square [-1,1]^2
};

std::vector<GaussPoint> tensor_gauss(int points_per_axis) {
  static const double g2 = 1.0 / std::sqrt(3.0);
  static const double g3 = std::sqrt(0.6);
  std::vector<double> x, w;
  if (points_per_axis == 2) {
    x = {-g2, g2};
    w = {1.0, 1.0};
  } else {
    x = {-g3, 0.0, g3};
    w = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
  }
  std::vector<GaussPoint> gp;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = 0; b < x.size(); ++b) gp.push_back({x[a], x[b], w[a] * w[b]});
  return gp;
}

// Bilinear shapes on [-1,1]^2, counterclockwise from (-1,-1).
void shapes(double xi, double eta, double N[4], double dxi[4], double deta[4]) {
  N[0] = 0.25 * (1 - xi) * (1 - eta);
  N[1] = 0.25 * (1 + xi) * (1 - eta);
  N[2] = 0.25 * (1 + xi) * (1 + eta);
  N[3] = 0.25 * (1 - xi) * (1 + eta);
  dxi[0] = -0.25 * (1 - eta);
  dxi[1] = 0.25 * (1 - eta);
  dxi[2] = 0.25 * (1 + eta);
  dxi[3] = -0.25 * (1 + eta);
  deta[0] = -0.25 * (1 - xi);
  deta[1] = -0.25 * (1 + xi);
  deta[2] = 0.25 * (1 + xi);
  deta[3] = 0.25 * (1 - xi);
}

struct AssembledPair {
  SparseMatrix mass;
  SparseMatrix form;
};

// dof_of maps node id -> matrix index or -1 (skips the row/column).
AssembledPair assemble_matrices(const Mesh& mesh, const CoefficientForm& coeffs,
                                const std::function<long(long)>& dof_of, long dim) {
  const auto gauss = tensor_gauss(2);
  const double h = mesh.h();
  const double jac = 0.25 * h * h;
  const double dscale = 2.0 / h;

  std::vector<Triplet> kt, mt;
  kt.reserve(mesh.cell_count() * 16);
  mt.reserve(mesh.cell_count() * 16);

  double N[4], dxi[4], deta[4];
  for (long cell = 0; cell < mesh.cell_count(); ++cell) {
    const auto nodes = mesh.cell_nodes(cell);
    const auto [x0, y0] = mesh.cell_origin(cell);
    double Ke[4][4] = {};
    double Me[4][4] = {};

    for (const auto& gp : gauss) {
      shapes(gp.xi, gp.eta, N, dxi, deta);
      const double xg = x0 + 0.5 * (gp.xi + 1.0) * h;
      const double yg = y0 + 0.5 * (gp.eta + 1.0) * h;
      const auto ad = coeffs.a_diff(xg, yg);
      const auto ac = coeffs.a_conv(xg, yg);
      const auto as = coeffs.a_skew(xg, yg);
      const double ar = coeffs.a_react(xg, yg);
      for (double v : {ad[0], ad[1], ad[2], ad[3], ac[0], ac[1], as[0], as[1], ar})
        if (!std::isfinite(v))
          throw AssemblyError("non-finite coefficient at (" + std::to_string(xg) + ", " +
                                  std::to_string(yg) + ") in cell " + std::to_string(cell),
                              cell);

      const double w = gp.w * jac;
      double dx[4], dy[4];
      for (int a = 0; a < 4; ++a) {
        dx[a] = dxi[a] * dscale;
        dy[a] = deta[a] * dscale;
      }
      // rows = test functions, columns = trial functions
      for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
          const double diff = ad[0] * dx[c] * dx[r] + ad[1] * dx[c] * dy[r] +
                              ad[2] * dy[c] * dx[r] + ad[3] * dy[c] * dy[r];
          const double conv = (ac[0] * dx[c] + ac[1] * dy[c]) * N[r];
          const double skew = N[c] * (as[0] * dx[r] + as[1] * dy[r]);
          Ke[r][c] += w * (diff + conv + skew + ar * N[c] * N[r]);
          Me[r][c] += w * N[c] * N[r];
        }
      }
    }

    for (int r = 0; r < 4; ++r) {
      const long gr = dof_of(nodes[r]);
      if (gr < 0) continue;
      for (int c = 0; c < 4; ++c) {
        const long gc = dof_of(nodes[c]);
        if (gc < 0) continue;
        kt.push_back({gr, gc, Ke[r][c]});
        mt.push_back({gr, gc, Me[r][c]});
      }
    }
  }

  return {SparseMatrix::from_triplets(dim, dim, std::move(mt)),
          SparseMatrix::from_triplets(dim, dim, std::move(kt))};
}

}  // namespace

FemSystem assemble(const Mesh& mesh, const CoefficientForm& coeffs) {
  auto [mass, form] = assemble_matrices(
      mesh, coeffs, [&mesh](long node) { return mesh.interior_index(node); },
      mesh.interior_count());

  FemSystem sys;
  sys.mesh = mesh;
  sys.mass = std::move(mass);
  sys.form = std::move(form);
  sys.form_sym = SparseMatrix::sum(0.5, sys.form, 0.5, sys.form.transposed());
  sys.coefficients = coeffs;
  sys.symmetric = sys.form.is_symmetric(1e-13 * std::max(1.0, sys.form.max_abs()));
  return sys;
}

UnconstrainedMatrices assemble_unconstrained(const Mesh& mesh, const CoefficientForm& coeffs) {
  auto [mass, form] = assemble_matrices(
      mesh, coeffs, [](long node) { return node; }, mesh.node_count());
  return {std::move(mass), std::move(form)};
}

std::vector<double> assemble_load(const Mesh& mesh,
                                  const std::function<double(double, double)>& f) {
  const auto gauss = tensor_gauss(3);
  const double h = mesh.h();
  const double jac = 0.25 * h * h;

  std::vector<double> b(mesh.interior_count(), 0.0);
  double N[4], dxi[4], deta[4];
  for (long cell = 0; cell < mesh.cell_count(); ++cell) {
    const auto nodes = mesh.cell_nodes(cell);
    const auto [x0, y0] = mesh.cell_origin(cell);
    for (const auto& gp : gauss) {
      shapes(gp.xi, gp.eta, N, dxi, deta);
      const double xg = x0 + 0.5 * (gp.xi + 1.0) * h;
      const double yg = y0 + 0.5 * (gp.eta + 1.0) * h;
      const double fv = f(xg, yg);
      if (!std::isfinite(fv))
        throw AssemblyError("non-finite load value at (" + std::to_string(xg) + ", " +
                                std::to_string(yg) + ")",
                            cell);
      const double w = gp.w * jac * fv;
      for (int r = 0; r < 4; ++r) {
        const long dof = mesh.interior_index(nodes[r]);
        if (dof >= 0) b[dof] += w * N[r];
      }
    }
  }
  return b;
}

FieldVector l2_project(const FemSystem& sys, const std::function<double(double, double)>& f) {
  const auto b = assemble_load(sys.mesh, f);
  auto result = solve_spd(sys.mass, b, 1e-12);
  return {sys.mesh, std::move(result.x)};
}

bool check_coercivity_proxy(const FemSystem& sys, double c0_estimate, int samples,
                            unsigned seed) {
  const FemSystem lap = assemble(sys.mesh, laplace_form());
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);

  bool ok = true;
  std::vector<double> v(sys.mesh.interior_count());
  for (int s = 0; s < samples; ++s) {
    for (auto& x : v) x = uni(rng);
    const double sv = dot(sys.form_sym.multiply(v), v);
    const double lv = dot(lap.form.multiply(v), v);
    if (sv < 0.5 * c0_estimate * lv) {
      std::cerr << "warning: coercivity proxy failed on sample " << s << ": <Sv,v>=" << sv
                << " < 0.5*" << c0_estimate << "*<K_lap v,v>=" << 0.5 * c0_estimate * lv
                << "\n";
      ok = false;
    }
  }
  return ok;
}

}  // namespace fracpow
