#include "fracpow/oracle.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <string>

#include "fracpow/errors.hpp"

namespace fracpow {

namespace {

Eigen::MatrixXd to_eigen(const SparseMatrix& m) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.rows(), m.cols());
  for (long r = 0; r < m.rows(); ++r)
    for (long i = m.row_offsets()[r]; i < m.row_offsets()[r + 1]; ++i)
      d(r, m.col_indices()[i]) = m.values()[i];
  return d;
}

}  // namespace

SpectralDecomposition dense_spectral(const FemSystem& sys) {
  if (!sys.symmetric)
    throw std::domain_error("dense_spectral requires a symmetric form (no convection)");
  const long dim = sys.form.rows();
  if (dim > kDenseOracleDofLimit)
    throw ConfigError("dense_spectral limited to " + std::to_string(kDenseOracleDofLimit) +
                      " dofs, got " + std::to_string(dim));

  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> es(to_eigen(sys.form),
                                                               to_eigen(sys.mass));
  if (es.info() != Eigen::Success)
    throw std::runtime_error("generalized eigensolve failed to converge");

  SpectralDecomposition dec;
  dec.dim = dim;
  dec.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + dim);
  dec.eigenvectors.assign(es.eigenvectors().data(), es.eigenvectors().data() + dim * dim);
  return dec;
}

FieldVector spectral_fractional(const SpectralDecomposition& dec, const FemSystem& sys,
                                double beta, const std::vector<double>& load) {
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::domain_error("spectral_fractional: beta must lie in [0,1]");
  if (dec.dim != static_cast<long>(load.size()))
    throw std::invalid_argument("spectral_fractional: decomposition/load size mismatch");

  FieldVector u = zero_field(sys.mesh);
  for (long j = 0; j < dec.dim; ++j) {
    double cj = 0.0;
    for (long r = 0; r < dec.dim; ++r) cj += dec.vec(r, j) * load[r];
    const double scale = cj * std::pow(dec.eigenvalues[j], -beta);
    for (long r = 0; r < dec.dim; ++r) u.values[r] += scale * dec.vec(r, j);
  }
  return u;
}

FieldVector spectral_fractional(const SpectralDecomposition& dec, const FemSystem& sys,
                                double beta, const std::function<double(double, double)>& f) {
  return spectral_fractional(dec, sys, beta, assemble_load(sys.mesh, f));
}

double dotted_norm(const SpectralDecomposition& dec, const FemSystem& sys, double s,
                   const FieldVector& v) {
  if (!(s >= 0.0 && s <= 2.0)) throw std::domain_error("dotted_norm: s must lie in [0,2]");
  if (dec.dim != static_cast<long>(v.values.size()))
    throw std::invalid_argument("dotted_norm: decomposition/vector size mismatch");

  const auto mv = sys.mass.multiply(v.values);
  double total = 0.0;
  for (long j = 0; j < dec.dim; ++j) {
    double cj = 0.0;
    for (long r = 0; r < dec.dim; ++r) cj += dec.vec(r, j) * mv[r];
    total += std::pow(dec.eigenvalues[j], s) * cj * cj;
  }
  return std::sqrt(total);
}

ManufacturedSolution manufactured_solution(double beta, double b) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::domain_error("manufactured_solution: beta must lie in (0,1)");
  constexpr double pi = std::numbers::pi;
  const double lambda = 5.0 * pi * pi + 0.5 * b * b;
  const double lam_pow = std::pow(lambda, -beta);

  ManufacturedSolution s;
  s.lambda = lambda;
  s.f = [b](double x, double y) {
    return std::exp(0.5 * b * (x + y)) * std::sin(pi * x) * std::sin(2.0 * pi * y);
  };
  s.u = [b, lam_pow](double x, double y) {
    return std::exp(0.5 * b * (x + y)) * lam_pow * std::sin(pi * x) * std::sin(2.0 * pi * y);
  };
  return s;
}

}  // namespace fracpow
