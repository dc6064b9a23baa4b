#pragma once

#include <array>
#include <utility>

namespace fracpow {

/// Uniform structured quadrilateral grid of the unit square (0,1)^2 with a
/// homogeneous Dirichlet boundary. Nodes and cells are numbered
/// lexicographically with x fastest; the (n-1)^2 interior nodes carry
/// contiguous degree-of-freedom indices in the same order. Everything is
/// computed from the refinement level, so a Mesh is a cheap value type and
/// can be shared freely across threads.
class Mesh {
 public:
  Mesh() = default;
  explicit Mesh(int level);

  int level() const { return level_; }
  int cells_per_side() const { return n_; }
  double h() const { return h_; }

  long node_count() const { return static_cast<long>(n_ + 1) * (n_ + 1); }
  long cell_count() const { return static_cast<long>(n_) * n_; }
  long interior_count() const { return static_cast<long>(n_ - 1) * (n_ - 1); }

  long node_id(long i, long j) const { return j * (n_ + 1) + i; }
  double node_x(long node) const { return h_ * static_cast<double>(node % (n_ + 1)); }
  double node_y(long node) const { return h_ * static_cast<double>(node / (n_ + 1)); }
  bool is_boundary_node(long node) const;

  /// Interior dof of a grid node, or -1 on the boundary.
  long interior_index(long node) const;
  /// Grid node owning an interior dof.
  long node_of_interior(long dof) const;

  /// Corner nodes of a cell, counterclockwise from the lower-left.
  std::array<long, 4> cell_nodes(long cell) const;
  /// Lower-left corner coordinates of a cell.
  std::pair<double, double> cell_origin(long cell) const;

  bool operator==(const Mesh& other) const { return level_ == other.level_; }

 private:
  int level_ = 0;
  int n_ = 0;
  double h_ = 0.0;
};

/// Levels 1..12 are accepted; 12 is a memory guard (~16.8M cells).
Mesh build_uniform_mesh(int level);

}  // namespace fracpow
