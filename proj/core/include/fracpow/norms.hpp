#pragma once

#include <functional>

#include "fracpow/assembly.hpp"
#include "fracpow/field.hpp"

namespace fracpow {

enum class ErrorNorm { L2, H1Semi };

/// Continuum L^2 distance between the FE function and a closed form, by 3x3
/// Gauss per cell (exact for squared bilinears, so the quadrature error of
/// the error stays below the discretization signal).
double error_l2(const Mesh& mesh, const FieldVector& u_h,
                const std::function<double(double, double)>& u_exact);

/// Discrete norm of u - v: mass matrix for L2, pure-Laplacian stiffness for
/// the H1 seminorm.
double error_between(const FemSystem& sys, const FieldVector& u, const FieldVector& v,
                     ErrorNorm norm);

}  // namespace fracpow
