#pragma once

#include <functional>
#include <vector>

#include "fracpow/mesh.hpp"

namespace fracpow {

/// Coefficient vector of a bilinear finite element function over the interior
/// nodes of its mesh. Boundary values are identically zero.
struct FieldVector {
  Mesh mesh;
  std::vector<double> values;
};

FieldVector zero_field(const Mesh& mesh);

/// Nodal interpolant of f at the interior nodes.
FieldVector interpolate(const Mesh& mesh, const std::function<double(double, double)>& f);

/// Bilinear point evaluation; coordinates are clamped to the closed square.
double evaluate(const FieldVector& u, double x, double y);

}  // namespace fracpow
