#pragma once

#include <functional>
#include <vector>

#include "fracpow/coefficients.hpp"
#include "fracpow/field.hpp"
#include "fracpow/mesh.hpp"
#include "fracpow/sparse.hpp"

namespace fracpow {

/// Interior-dof matrices of a coefficient form on a mesh: mass M, form K and
/// its symmetric part (K + K^T)/2. Dirichlet conditions are imposed by
/// elimination, so M stays symmetric positive definite. `symmetric` records
/// whether K passed the symmetry test at assembly time.
struct FemSystem {
  Mesh mesh;
  SparseMatrix mass;
  SparseMatrix form;
  SparseMatrix form_sym;
  CoefficientForm coefficients;
  bool symmetric = false;
};

/// Element integrals use 2x2 Gauss per cell, exact for bilinear trial/test
/// pairs with constant coefficients.
FemSystem assemble(const Mesh& mesh, const CoefficientForm& coeffs);

/// Same matrices over all (n+1)^2 nodes, no Dirichlet elimination. Used for
/// whole-domain identities such as Σ_ij M_ij = |Ω| and K_lap · 1 = 0.
struct UnconstrainedMatrices {
  SparseMatrix mass;
  SparseMatrix form;
};
UnconstrainedMatrices assemble_unconstrained(const Mesh& mesh, const CoefficientForm& coeffs);

/// Load vector b_i = ∫ f φ_i over interior nodes, by 3x3 Gauss per cell (one
/// order above the trial space).
std::vector<double> assemble_load(const Mesh& mesh,
                                  const std::function<double(double, double)>& f);

/// L^2 projection onto the FE space: solves M c = load(f) to relative
/// residual 1e-12.
FieldVector l2_project(const FemSystem& sys, const std::function<double(double, double)>& f);

/// Samples <S v, v> >= 0.5 * c0 * <K_lap v, v> over seeded random interior
/// vectors, S the symmetric part of the form. A failed sample warns on
/// stderr and makes the result false; coercivity itself remains the caller's
/// contract.
bool check_coercivity_proxy(const FemSystem& sys, double c0_estimate, int samples = 100,
                            unsigned seed = 0x5eedu);

}  // namespace fracpow
