#pragma once

#include "qcollide/linalg.hpp"

namespace qcollide {

// Tolerances for the density-matrix invariants: Hermitian to 1e-10, unit trace
// to 1e-10, eigenvalues above -1e-10. Anything inside [-1e-10, 0) is treated
// as an exact zero by consumers (entropy, positivity checks); anything below
// is an error.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kEigenvalueFloor = -1e-10;

class DensityMatrix {
 public:
  DensityMatrix() = default;

  // Checks all invariants (including an eigendecomposition for positivity).
  // Use at module boundaries; throws PhysicalityError/DimensionError.
  static DensityMatrix validated(ComplexMatrix m);

  // Trust the caller: for outputs that are density matrices by construction
  // (CPTP maps applied to valid inputs). The invariants still hold; they are
  // just not re-verified on every hot-loop step.
  static DensityMatrix unchecked(ComplexMatrix m);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }

  // Diagonal entry, as a population (real part; imaginary part is roundoff).
  double population(int k) const { return m_(k, k).real(); }

  // Full invariant check; throws with a description of the violation.
  void check() const;

 private:
  explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}

  ComplexMatrix m_;
};

DensityMatrix partial_trace_ancilla(const DensityMatrix& joint, int dim_s,
                                    int dim_a);

// (1/2)·sum of |eigenvalues| of (a - b). In [0, 1] for density matrices.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

// -sum w log w over the spectrum, natural log, 0·log 0 = 0. Eigenvalues in
// [-1e-10, 0) count as 0; below that the input was not a density matrix.
double von_neumann_entropy(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

// ⟨op⟩ = Re tr(rho·op); intended for Hermitian observables.
double expectation(const DensityMatrix& rho, const ComplexMatrix& op);

}  // namespace qcollide
