#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "qcollide/baselines.hpp"
#include "qcollide/config.hpp"
#include "qcollide/ga.hpp"
#include "qcollide/objective.hpp"

namespace qcollide {

inline constexpr const char* kArtifactVersion = "qcollide 0.1.0";

// The pieces an experiment config expands into.
struct ExperimentSetup {
  GenomeLayout layout;
  ScenarioTemplate tmpl;
  Objective objective;
};

ExperimentSetup build_setup(const ExperimentConfig& config);

// Genome fitness = objective(final state of the decoded scenario). Reuses one
// propagator when the physics is the same for every genome: a single engine
// in fixed mode, one engine per collision count in variable mode. Safe to
// call from several threads.
class ScenarioEvaluator {
 public:
  ScenarioEvaluator(GenomeLayout layout, ScenarioTemplate tmpl,
                    Objective objective);

  double operator()(const Genome& genome) const;

  const GenomeLayout& layout() const { return layout_; }
  const ScenarioTemplate& scenario_template() const { return tmpl_; }
  const Objective& objective() const { return objective_; }

 private:
  DensityMatrix simulate(const CollisionScenario& scenario) const;

  GenomeLayout layout_;
  ScenarioTemplate tmpl_;
  Objective objective_;
  bool fixed_physics_ = false;
  std::shared_ptr<class EngineCache> engines_;
};

struct DecodedSummary {
  int collisions = 0;
  double t_c = 0.0;
  double total_time = 0.0;
  double omega_c = 1.0;
  AncillaKind ancilla;
  CouplingConstants couplings;
  // Per-collision physical parameters: [beta] for diagonal qubits,
  // [r, theta, phi] for generic qubits, the eight angles for qutrits.
  std::vector<std::vector<double>> ancilla_parameters;
};

DecodedSummary summarize(const Genome& genome, const GenomeLayout& layout,
                         const ScenarioTemplate& tmpl);

struct RunResult {
  std::string config_echo;  // normalized JSON of the effective config
  Genome best_genome;
  double best_fitness = 0.0;
  DecodedSummary decoded;
  int generations_run = 0;
  long evaluations = 0;
  double wall_clock_seconds = 0.0;
  std::string version = kArtifactVersion;
};

// Run the GA experiment described by the config, streaming per-generation
// records to <output_dir>/trace.jsonl and writing <output_dir>/result.json.
// Before returning, the stored best genome is decoded and re-scored; a
// mismatch beyond 1e-12 aborts the run.
RunResult run_experiment(const ExperimentConfig& config);

// Run the homogeneous/coherent-thermal stream of the config with no GA,
// writing <output_dir>/baseline_curve.dat (time vs distance-to-target) and
// <output_dir>/baseline.json.
void run_baseline_experiment(const ExperimentConfig& config);

// Chi sweep for the config's coherent target; writes
// <output_dir>/chi_sweep.dat and <output_dir>/sweep.json.
ChiSweepResult run_chi_sweep(const ExperimentConfig& config);

// Scan result_dir recursively for run/baseline/sweep records and write
// plain-text plot series under out_dir: optimized distance vs total time
// grouped by t_c, baseline trajectories, decoded diagonal-ancilla sequences,
// GA-vs-baseline gain by target temperature, and chi-sweep curves.
std::vector<std::filesystem::path> emit_plot_data(
    const std::filesystem::path& result_dir,
    const std::filesystem::path& out_dir);

}  // namespace qcollide
