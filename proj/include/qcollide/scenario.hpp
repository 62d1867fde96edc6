#pragma once

#include <vector>

#include "qcollide/ancilla.hpp"
#include "qcollide/density.hpp"
#include "qcollide/fock.hpp"

namespace qcollide {

// One fully specified collision run: the cavity, the ancilla species and
// couplings, the per-collision time, the initial cavity state, and the state
// of each incoming ancilla in order.
struct CollisionScenario {
  FockSpace space;
  double omega_c = 1.0;
  AncillaKind ancilla;
  CouplingConstants couplings;
  double t_c = 0.0;
  DensityMatrix initial_state;
  std::vector<DensityMatrix> ancilla_states;

  int collisions() const { return static_cast<int>(ancilla_states.size()); }
  double total_time() const { return collisions() * t_c; }
  void validate() const;
};

// H = H_S ⊗ I + I ⊗ H_A + H_int on the joint space (system slow index).
// Qubits:  H_int = g_l (a σ₊ + a† σ₋) + g_nl (a² σ₊ + a†² σ₋)
// Qutrits: H_int = g_l1 a|0⟩⟨1| + g_l2 a|1⟩⟨2| + g_nl a²|0⟩⟨2| + h.c.
ComplexMatrix joint_hamiltonian(const FockSpace& space, double omega_c,
                                const AncillaKind& ancilla,
                                const CouplingConstants& couplings);

// The coupling term H_int alone. On resonance H_int commutes with the free
// part, so exp(-i H_int t) implements the same collision with both free
// rotations removed: a frame co-rotating with the cavity.
ComplexMatrix interaction_hamiltonian(const FockSpace& space,
                                      const AncillaKind& ancilla,
                                      const CouplingConstants& couplings);

// One collision: tr_A[ u (rho_s ⊗ rho_a) u† ]. Reference implementation; the
// engine below computes the same map faster.
DensityMatrix collide(const DensityMatrix& rho_s, const DensityMatrix& rho_a,
                      const ComplexMatrix& u);

// Repeated-collision stepper for one fixed (H, t_c). The propagator is
// eigendecomposed once at construction; step() applies the collision map in
// ancilla-block form, which avoids ever forming the joint density matrix.
// step() is const and allocation-local, so one engine may serve many threads.
class CollisionEngine {
 public:
  CollisionEngine(const FockSpace& space, double omega_c,
                  const AncillaKind& ancilla, const CouplingConstants& couplings,
                  double t_c);

  // Same stepper for a caller-supplied joint Hamiltonian (system slow index).
  CollisionEngine(const ComplexMatrix& h_joint, int system_dim, int ancilla_dim,
                  double t_c);

  const ComplexMatrix& propagator() const { return u_; }
  int system_dim() const { return dim_s_; }
  int ancilla_dim() const { return dim_a_; }

  DensityMatrix step(const DensityMatrix& rho_s,
                     const DensityMatrix& rho_a) const;

  DensityMatrix run(const DensityMatrix& initial,
                    const std::vector<DensityMatrix>& ancilla_states) const;

 private:
  int dim_s_ = 0;
  int dim_a_ = 0;
  ComplexMatrix u_;
  // blocks_[a*dim_a+b](i,k) = u_(i*dim_a+a, k*dim_a+b)
  std::vector<ComplexMatrix> blocks_;
};

// States after 0..n collisions (element 0 is the initial state).
std::vector<DensityMatrix> run_trajectory(const CollisionScenario& scenario);

// Final state only; same dynamics without storing the trajectory.
DensityMatrix final_state(const CollisionScenario& scenario);

}  // namespace qcollide
