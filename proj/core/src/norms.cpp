#include "fracpow/norms.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace fracpow {

namespace {

struct Gauss1D {
  double x, w;
};
constexpr std::array<Gauss1D, 3> kGauss3 = {
    Gauss1D{-0.7745966692414834, 5.0 / 9.0},
    Gauss1D{0.0, 8.0 / 9.0},
    Gauss1D{0.7745966692414834, 5.0 / 9.0},
};

}  // namespace

double error_l2(const Mesh& mesh, const FieldVector& u_h,
                const std::function<double(double, double)>& u_exact) {
  if (!(u_h.mesh == mesh)) throw std::invalid_argument("error_l2: mesh mismatch");

  const double h = mesh.h();
  const double jac = 0.25 * h * h;
  double total = 0.0;

  for (long cell = 0; cell < mesh.cell_count(); ++cell) {
    const auto nodes = mesh.cell_nodes(cell);
    const auto [x0, y0] = mesh.cell_origin(cell);
    double vals[4];
    for (int c = 0; c < 4; ++c) {
      const long dof = mesh.interior_index(nodes[c]);
      vals[c] = dof >= 0 ? u_h.values[dof] : 0.0;
    }
    for (const auto& gx : kGauss3) {
      for (const auto& gy : kGauss3) {
        const double xi = 0.5 * (gx.x + 1.0);
        const double eta = 0.5 * (gy.x + 1.0);
        const double uh = (1 - xi) * (1 - eta) * vals[0] + xi * (1 - eta) * vals[1] +
                          xi * eta * vals[2] + (1 - xi) * eta * vals[3];
        const double diff = uh - u_exact(x0 + xi * h, y0 + eta * h);
        total += gx.w * gy.w * jac * diff * diff;
      }
    }
  }
  return std::sqrt(total);
}

double error_between(const FemSystem& sys, const FieldVector& u, const FieldVector& v,
                     ErrorNorm norm) {
  if (!(u.mesh == sys.mesh) || !(v.mesh == sys.mesh))
    throw std::invalid_argument("error_between: mesh mismatch");

  std::vector<double> d(u.values.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = u.values[i] - v.values[i];

  if (norm == ErrorNorm::L2) return std::sqrt(dot(sys.mass.multiply(d), d));

  const FemSystem lap = assemble(sys.mesh, laplace_form());
  return std::sqrt(dot(lap.form.multiply(d), d));
}

}  // namespace fracpow
