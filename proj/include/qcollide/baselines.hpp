#pragma once

#include <array>
#include <vector>

#include "qcollide/ancilla.hpp"
#include "qcollide/density.hpp"
#include "qcollide/fock.hpp"
#include "qcollide/scenario.hpp"

namespace qcollide {

// Largest |chi| for which Gibbs(beta) - chi·sigma_Y stays positive
// semidefinite: sqrt(p_excited·p_ground) = 1/(2 cosh(beta·omega_a/2)).
double chi_max(double beta, double omega_a);

// Thermal qubit with a coherence of magnitude chi: Gibbs(beta) - chi·sigma_Y.
// Throws PhysicalityError when |chi| exceeds chi_max.
DensityMatrix coherent_thermal_ancilla(double beta, double chi, double omega_a);

// A stream of identically prepared ancillae: the conventional collision-model
// reference the optimized sequences are measured against. Coherent-thermal
// streams evolve in the frame co-rotating with the free evolution (coupling
// term only, exact at resonance), which keeps the fixed ancilla coherence in
// phase with the cavity; thermal streams are diagonal, hence frame-invariant,
// and use the full Hamiltonian.
struct BaselineStream {
  enum class Kind { HomogeneousThermal, CoherentThermal };

  Kind kind = Kind::HomogeneousThermal;
  double beta_a = 1.0;  // HomogeneousThermal: ancilla Gibbs temperature
  double beta = 1.0;    // CoherentThermal: Gibbs part
  double chi = 0.0;     // CoherentThermal: coherence magnitude

  FockSpace space{20};
  double omega_c = 1.0;
  AncillaKind ancilla;
  CouplingConstants couplings;
  DensityMatrix initial_state;

  DensityMatrix ancilla_state() const;
};

// Trajectory of n identical collisions (element 0 = initial state).
std::vector<DensityMatrix> run_baseline(const BaselineStream& stream, int n,
                                        double t_c);

struct ChiSweepSpec {
  FockSpace space{20};
  double omega_c = 1.0;
  double omega_a = 1.0;
  CouplingConstants couplings;
  DensityMatrix initial_state;

  double beta = 5.0;        // ancilla Gibbs part
  double alpha = 0.5;       // coherent target amplitude
  double total_time = 10.0;
  double t_c = 0.01;
  std::vector<double> grid;  // chi values to scan, all within ±chi_max
};

struct ChiSweepResult {
  double chi_best = 0.0;
  double distance_best = 0.0;
  // (chi, trace distance to the target) for each grid point.
  std::vector<std::array<double, 2>> curve;
};

// Uniform grid of `points` chi values spanning ±chi_max(beta, omega_a).
std::vector<double> uniform_chi_grid(double beta, double omega_a, int points);

// Scan the grid for the chi minimizing the final-state distance to |alpha⟩,
// then sharpen the best interior bracket by golden-section search. Runs in
// the co-rotating frame, like the coherent-thermal stream in run_baseline.
ChiSweepResult sweep_chi(const ChiSweepSpec& spec);

}  // namespace qcollide
