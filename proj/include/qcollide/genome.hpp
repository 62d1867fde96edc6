#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qcollide/ancilla.hpp"
#include "qcollide/density.hpp"
#include "qcollide/fock.hpp"
#include "qcollide/scenario.hpp"

namespace qcollide {

// All genes live in [0,1] and are rescaled to physical ranges on decode.
using Genome = std::vector<double>;

enum class OptimizationMode { FixedLength, VariableLength };

// A physics constant exposed to the optimizer as a leading ("head") gene.
// Valid names: omega_a | omega_1 | delta_omega_12 | g_l | g_nl | g_l1 | g_l2.
struct HeadGeneSpec {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
};

// Shape of a genome: head genes first, then one block of genes per collision.
// Block width is set by the ancilla variant: 1 gene (diagonal qubit, a Gibbs
// temperature), 3 (generic qubit, Bloch vector), 8 (qutrit, Euler angles plus
// spectrum).
//
// Fixed mode pins (t_c, n); variable mode pins the total time T and derives
// t_c = T/n from the genome's own length, with n capped by max_collisions.
struct GenomeLayout {
  AncillaVariant ancilla = AncillaVariant::GenericQubit;
  OptimizationMode mode = OptimizationMode::FixedLength;
  std::vector<HeadGeneSpec> head;

  int fixed_collisions = 0;  // fixed mode
  double fixed_t_c = 0.0;    // fixed mode

  double total_time = 0.0;    // variable mode
  int max_collisions = 100;   // variable mode

  double beta_lo = -5.0;  // diagonal-qubit gene range
  double beta_hi = 5.0;

  int genes_per_collision() const;
  int head_size() const { return static_cast<int>(head.size()); }
  std::size_t length_for(int n) const;
  // Collision count encoded by a genome of length len; throws on misfit.
  int collisions_for_length(std::size_t len) const;
  double collision_time(int n) const;
  void validate() const;
};

// Linear map [0,1] -> [lo, hi].
double rescale(double gene, double lo, double hi);

// Gibbs qubit state at inverse temperature beta (basis: excited, ground).
DensityMatrix decode_diagonal_qubit(double gene, double beta_lo, double beta_hi,
                                    double omega_a);

// (I + B·σ)/2 with B = r(sinθcosφ, sinθsinφ, cosθ), r ∈ [0,1], θ ∈ [0,π],
// φ ∈ [0,2π], from three genes.
DensityMatrix decode_bloch_qubit(const double* genes);

// Qutrit state V ρ_D V† from eight genes. V is the SU(3) Euler product
// exp(iλ₃α)exp(iλ₂β)exp(iλ₃γ)exp(iλ₅θ)exp(iλ₃a)exp(iλ₂b) with
// α,γ,a ∈ [0,π) and β,θ,b ∈ [0,π/2]; the spectrum comes from two angles
// η,δ ∈ [0,π/2] via z² = sin²η, y² = sin²δ,
// ρ_D = diag(z²(1−y²), z²y², 1−z²).
DensityMatrix decode_euler_qutrit(const double* genes);

// Everything a genome does not encode: the space, the base physics constants
// (overridden by head genes where the layout exposes them), and the initial
// cavity state.
struct ScenarioTemplate {
  FockSpace space;
  double omega_c = 1.0;
  AncillaKind ancilla;
  CouplingConstants couplings;
  DensityMatrix initial_state;
};

CollisionScenario decode(const Genome& genome, const GenomeLayout& layout,
                         const ScenarioTemplate& tmpl);

void validate_genome(const Genome& genome, const GenomeLayout& layout);

}  // namespace qcollide
