#include "fracpow/field.hpp"

#include <algorithm>

namespace fracpow {

FieldVector zero_field(const Mesh& mesh) {
  return {mesh, std::vector<double>(mesh.interior_count(), 0.0)};
}

FieldVector interpolate(const Mesh& mesh, const std::function<double(double, double)>& f) {
  FieldVector v = zero_field(mesh);
  for (long dof = 0; dof < mesh.interior_count(); ++dof) {
    const long node = mesh.node_of_interior(dof);
    v.values[dof] = f(mesh.node_x(node), mesh.node_y(node));
  }
  return v;
}

double evaluate(const FieldVector& u, double x, double y) {
  const Mesh& mesh = u.mesh;
  const int n = mesh.cells_per_side();
  const double h = mesh.h();
  x = std::clamp(x, 0.0, 1.0);
  y = std::clamp(y, 0.0, 1.0);
  const long ci = std::min(static_cast<long>(x / h), static_cast<long>(n - 1));
  const long cj = std::min(static_cast<long>(y / h), static_cast<long>(n - 1));
  const double xi = x / h - ci;   // local coordinates in [0,1]
  const double eta = y / h - cj;

  const auto nodes = mesh.cell_nodes(cj * n + ci);
  double vals[4];
  for (int c = 0; c < 4; ++c) {
    const long dof = mesh.interior_index(nodes[c]);
    vals[c] = dof >= 0 ? u.values[dof] : 0.0;
  }
  return (1 - xi) * (1 - eta) * vals[0] + xi * (1 - eta) * vals[1] + xi * eta * vals[2] +
         (1 - xi) * eta * vals[3];
}

}  // namespace fracpow
