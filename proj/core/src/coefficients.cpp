#include "fracpow/coefficients.hpp"

namespace fracpow {

CoefficientForm laplace_form() {
  CoefficientForm c;
  c.a_diff = [](double, double) { return std::array<double, 4>{1.0, 0.0, 0.0, 1.0}; };
  c.a_conv = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  c.a_skew = [](double, double) { return std::array<double, 2>{0.0, 0.0}; };
  c.a_react = [](double, double) { return 0.0; };
  return c;
}

CoefficientForm convection_diffusion_form(double b) {
  CoefficientForm c = laplace_form();
  c.a_conv = [b](double, double) { return std::array<double, 2>{b, b}; };
  return c;
}

}  // namespace fracpow
