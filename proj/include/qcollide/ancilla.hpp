#pragma once

#include "qcollide/linalg.hpp"

namespace qcollide {

// Qubit basis convention: index 0 is the excited level (sigma_Z eigenvalue +1,
// energy +omega_a/2), index 1 the ground level. sigma_plus maps ground to
// excited.
const ComplexMatrix& sigma_x();
const ComplexMatrix& sigma_y();
const ComplexMatrix& sigma_z();
const ComplexMatrix& sigma_plus();
const ComplexMatrix& sigma_minus();

// Gell-Mann matrices, 1-based index 1..8, standard normalization tr(λi λj) = 2δij.
const ComplexMatrix& gell_mann(int i);

enum class AncillaVariant { DiagonalQubit, GenericQubit, Qutrit };

// An ancilla species: level structure and free Hamiltonian. Diagonal and
// generic qubits share the same physics (H_A = omega_a/2 · sigma_Z); they
// differ only in how genomes encode their states.
//
// Qutrit basis convention: index 0 is the ground level at energy 0; omega_1
// and omega_2 are the first/second excitation energies, omega_1 <= omega_2.
struct AncillaKind {
  static AncillaKind diagonal_qubit(double omega_a);
  static AncillaKind generic_qubit(double omega_a);
  static AncillaKind qutrit(double omega_1, double omega_2);

  int dim() const { return variant == AncillaVariant::Qutrit ? 3 : 2; }
  bool is_qubit() const { return variant != AncillaVariant::Qutrit; }
  ComplexMatrix hamiltonian() const;
  void validate() const;

  AncillaVariant variant = AncillaVariant::GenericQubit;
  double omega_a = 1.0;
  double omega_1 = 1.0;
  double omega_2 = 2.0;
};

// Interaction strengths; unused ones stay 0. g_l/g_nl drive qubits, g_l1/g_l2
// (linear) and g_nl (two-photon) drive qutrits.
struct CouplingConstants {
  double g_l = 0.0;
  double g_nl = 0.0;
  double g_l1 = 0.0;
  double g_l2 = 0.0;
};

}  // namespace qcollide
