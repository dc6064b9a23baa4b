#include "fracpow/mesh.hpp"

#include <string>

#include "fracpow/errors.hpp"

namespace fracpow {

Mesh::Mesh(int level) : level_(level), n_(1 << level), h_(1.0 / (1 << level)) {}

bool Mesh::is_boundary_node(long node) const {
  const long i = node % (n_ + 1);
  const long j = node / (n_ + 1);
  return i == 0 || i == n_ || j == 0 || j == n_;
}

long Mesh::interior_index(long node) const {
  const long i = node % (n_ + 1);
  const long j = node / (n_ + 1);
  if (i == 0 || i == n_ || j == 0 || j == n_) return -1;
  return (j - 1) * (n_ - 1) + (i - 1);
}

long Mesh::node_of_interior(long dof) const {
  const long i = dof % (n_ - 1) + 1;
  const long j = dof / (n_ - 1) + 1;
  return node_id(i, j);
}

std::array<long, 4> Mesh::cell_nodes(long cell) const {
  if (cell < 0 || cell >= cell_count())
    throw std::out_of_range("cell index " + std::to_string(cell) + " out of range");
  const long ci = cell % n_;
  const long cj = cell / n_;
  return {node_id(ci, cj), node_id(ci + 1, cj), node_id(ci + 1, cj + 1), node_id(ci, cj + 1)};
}

std::pair<double, double> Mesh::cell_origin(long cell) const {
  const long ci = cell % n_;
  const long cj = cell / n_;
  return {ci * h_, cj * h_};
}

Mesh build_uniform_mesh(int level) {
  if (level < 1 || level > 12)
    throw ConfigError("mesh level must be in [1, 12], got " + std::to_string(level));
  return Mesh(level);
}

}  // namespace fracpow
