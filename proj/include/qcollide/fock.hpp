#pragma once

#include "qcollide/density.hpp"
#include "qcollide/linalg.hpp"

namespace qcollide {

// Truncated single-mode Fock space holding levels |0⟩..|n_levels-1⟩.
struct FockSpace {
  explicit FockSpace(int n_levels);

  int n_levels;
};

// Truncated ladder operator: a[m, m+1] = sqrt(m+1). The commutator [a, a†]
// equals identity except for the bottom-right entry, which is 1 - n_levels;
// states must keep negligible weight on the top levels for the truncation to
// be faithful.
ComplexMatrix annihilation(const FockSpace& space);
ComplexMatrix creation(const FockSpace& space);
ComplexMatrix number_operator(const FockSpace& space);

// Cavity Hamiltonian diag(omega_c·(k + 1/2)); omega_c > 0.
ComplexMatrix system_hamiltonian(const FockSpace& space, double omega_c);

DensityMatrix vacuum_state(const FockSpace& space);
DensityMatrix fock_state(const FockSpace& space, int k);

// Population of the top two Fock levels; the truncation-damage indicator.
double truncation_leakage(const DensityMatrix& rho);

}  // namespace qcollide
