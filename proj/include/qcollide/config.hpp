#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qcollide/ancilla.hpp"
#include "qcollide/ga.hpp"
#include "qcollide/genome.hpp"

namespace qcollide {

enum class ExperimentFamily {
  Thermalize,
  Coherent,
  Squeezed,
  NonGaussian,
  FockPrep,
  BaselineOnly,
};

struct Bounds {
  double lo = 0.0;
  double hi = 1.0;
};

// Parsed and validated experiment description. Defaults follow the reference
// hyperparameters: N=200, K=4, mu=1; M=100 and nu=1000 in fixed mode; M=50,
// p̄=0.05, n_max=100 in variable mode; n_levels=20 (30 for non-Gaussianity
// searches and |zeta| >= 1 squeezing).
struct ExperimentConfig {
  ExperimentFamily family = ExperimentFamily::Thermalize;
  OptimizationMode mode = OptimizationMode::FixedLength;
  int n_levels = 20;
  AncillaVariant ancilla = AncillaVariant::GenericQubit;

  // Target parameters; which one is required depends on the family.
  std::optional<double> target_beta;
  std::optional<double> target_alpha;
  std::optional<double> target_zeta;
  std::optional<int> target_fock;

  // Initial cavity state: vacuum unless an inverse temperature is given.
  std::optional<double> initial_beta;

  // Fixed mode uses (t_c, collisions); variable mode uses total_time.
  std::optional<double> t_c;
  std::optional<int> collisions;
  std::optional<double> total_time;

  // Base physics constants; head genes listed in `optimize` override them.
  double omega_c = 1.0;
  double omega_a = 1.0;
  double omega_1 = 1.0;
  double delta_omega_12 = 1.0;
  double g_l = 1.0;
  double g_nl = 0.0;
  double g_l1 = 1.0;
  double g_l2 = 1.0;
  std::vector<std::string> optimize;

  Bounds beta_a_bounds{-5.0, 5.0};
  Bounds omega_a_bounds{0.0, 5.0};
  Bounds omega_1_bounds{0.0, 5.0};
  Bounds delta_omega_12_bounds{0.0, 5.0};
  Bounds g_l_bounds{-1.0, 1.0};
  Bounds g_nl_bounds{-1.0, 1.0};
  Bounds g_l1_bounds{-1.0, 1.0};
  Bounds g_l2_bounds{-1.0, 1.0};

  GaConfig ga;
  int n_max = 100;  // variable-mode collision cap

  // Baseline stream settings (BaselineOnly family and the baseline command).
  std::optional<double> baseline_beta_a;
  std::optional<double> baseline_beta;
  std::optional<double> baseline_chi;

  int sweep_points = 129;

  std::string output_dir = "out";

  void validate() const;
};

// Load a JSON config file. Unknown keys anywhere are rejected; parse errors
// carry the line number; cross-field rules (exactly one way of fixing the
// time grid, a target matching the family, ...) throw ConfigError.
ExperimentConfig load_config(const std::filesystem::path& path);
ExperimentConfig parse_config(const std::string& text,
                              const std::string& origin = "<string>");

}  // namespace qcollide
