#pragma once

#include <array>
#include <functional>

namespace fracpow {

/// Real coefficients of the second-order form
///   A(u,v) = ∫ Σ_ij a_diff[i][j] ∂_i u ∂_j v + Σ_i a_conv[i] ∂_i u v
///            + Σ_i a_skew[i] u ∂_i v + a_react u v.
/// The caller vouches for coercivity; check_coercivity_proxy offers a
/// numerical sanity check only.
struct CoefficientForm {
  std::function<std::array<double, 4>(double, double)> a_diff;  // row-major 2x2
  std::function<std::array<double, 2>(double, double)> a_conv;
  std::function<std::array<double, 2>(double, double)> a_skew;
  std::function<double(double, double)> a_react;
};

/// a_diff = I, everything else zero.
CoefficientForm laplace_form();

/// a_diff = I, a_conv = (b, b): the constant-convection model problem.
CoefficientForm convection_diffusion_form(double b);

}  // namespace fracpow
