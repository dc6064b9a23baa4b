#pragma once

#include <functional>
#include <vector>

#include "fracpow/assembly.hpp"
#include "fracpow/field.hpp"

namespace fracpow {

/// Dense generalized eigendecomposition K Psi = M Psi diag(lambda) with
/// ascending eigenvalues and M-orthonormal eigenvectors (Psi^T M Psi = I).
struct SpectralDecomposition {
  long dim = 0;
  std::vector<double> eigenvalues;
  std::vector<double> eigenvectors;  // column-major dim x dim

  double vec(long row, long j) const { return eigenvectors[j * dim + row]; }
};

inline constexpr long kDenseOracleDofLimit = 5000;

/// Requires a symmetric form and at most kDenseOracleDofLimit interior dofs.
SpectralDecomposition dense_spectral(const FemSystem& sys);

/// u = Psi diag(lambda^-beta) Psi^T load(f). beta in [0,1]; the endpoints
/// reproduce the L^2 projection (0) and the plain inverse (1) and exist for
/// cross-checks.
FieldVector spectral_fractional(const SpectralDecomposition& dec, const FemSystem& sys,
                                double beta, const std::vector<double>& load);
FieldVector spectral_fractional(const SpectralDecomposition& dec, const FemSystem& sys,
                                double beta, const std::function<double(double, double)>& f);

/// (sum_j lambda_j^s |psi_j^T M v|^2)^{1/2} for s in [0,2]. s = 0 is the L^2
/// norm, s = 1 the energy norm of the symmetric part.
double dotted_norm(const SpectralDecomposition& dec, const FemSystem& sys, double s,
                   const FieldVector& v);

/// Closed-form fractional solution of the constant-convection problem on the
/// unit square: the substitution v = e^{-b(x+y)/2} u symmetrizes the form,
/// and sin(pi x) sin(2 pi y) is an eigenfunction of the symmetrized operator
/// with eigenvalue 5 pi^2 + b^2/2.
struct ManufacturedSolution {
  std::function<double(double, double)> f;
  std::function<double(double, double)> u;
  double lambda;
};
ManufacturedSolution manufactured_solution(double beta, double b);

}  // namespace fracpow
