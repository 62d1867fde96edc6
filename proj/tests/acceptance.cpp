// Release gate: one test case per acceptance criterion. Each case prints a
// [criterion N] PASS/FAIL line with the measured numbers so a full run reads
// as a checklist. GA budgets and tolerances are pinned for a single core;
// every randomized search runs the seed set {1, 2, 3}.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qcollide/config.hpp"
#include "qcollide/errors.hpp"
#include "qcollide/experiment.hpp"
#include "qcollide/linalg.hpp"
#include "qcollide/objective.hpp"
#include "qcollide/states.hpp"

using namespace qcollide;

namespace {

constexpr std::uint64_t kSeeds[] = {1, 2, 3};

void report(int criterion, bool pass, const std::string& details) {
  std::printf("[criterion %d] %s: %s\n", criterion, pass ? "PASS" : "FAIL",
              details.c_str());
  std::fflush(stdout);
}

std::string fmt(const char* pattern, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), pattern, value);
  return buf;
}

struct GaOutcome {
  double fitness = 0.0;
  Genome genome;
  DecodedSummary decoded;
};

GaOutcome run_ga(ExperimentConfig cfg, std::uint64_t seed) {
  cfg.ga.seed = seed;
  ExperimentSetup setup = build_setup(cfg);
  ScenarioEvaluator evaluate(setup.layout, setup.tmpl, setup.objective);
  GaRun run = evolve([&](const Genome& g) { return evaluate(g); },
                     setup.layout, cfg.ga);
  return {run.best_fitness, run.best_genome,
          summarize(run.best_genome, setup.layout, setup.tmpl)};
}

// Best fitness over the seed set (fitness is maximized).
GaOutcome best_over_seeds(const ExperimentConfig& cfg) {
  GaOutcome best;
  bool first = true;
  for (std::uint64_t seed : kSeeds) {
    GaOutcome outcome = run_ga(cfg, seed);
    if (first || outcome.fitness > best.fitness) {
      best = outcome;
      first = false;
    }
  }
  return best;
}

GaConfig ga_budget(int population, int elite, int generations) {
  GaConfig ga;
  ga.population = population;
  ga.elite = elite;
  ga.generations = generations;
  return ga;
}

ExperimentConfig thermal_config(AncillaVariant variant, double t_c, int n) {
  ExperimentConfig cfg;
  cfg.family = ExperimentFamily::Thermalize;
  cfg.mode = OptimizationMode::FixedLength;
  cfg.n_levels = 20;
  cfg.ancilla = variant;
  cfg.target_beta = 1.0;
  cfg.t_c = t_c;
  cfg.collisions = n;
  return cfg;
}

double homogeneous_distance(double beta, double t_c, int n) {
  FockSpace space(20);
  BaselineStream stream;
  stream.kind = BaselineStream::Kind::HomogeneousThermal;
  stream.beta_a = beta;
  stream.space = space;
  stream.ancilla = AncillaKind::generic_qubit(1.0);
  stream.couplings = CouplingConstants{.g_l = 1.0, .g_nl = 0.0, .g_l1 = 0.0,
                                       .g_l2 = 0.0};
  stream.initial_state = vacuum_state(space);
  DensityMatrix target = thermal_state(system_hamiltonian(space, 1.0), beta);
  return trace_distance(run_baseline(stream, n, t_c).back(), target);
}

}  // namespace

TEST_CASE("criterion 1: optimized heating beats the homogeneous stream") {
  ExperimentConfig cfg = thermal_config(AncillaVariant::GenericQubit, 0.5, 6);
  cfg.ga = ga_budget(200, 100, 1000);
  cfg.ga.stop_fitness = -0.029;

  double best = 1.0;
  std::string per_seed;
  for (std::uint64_t seed : kSeeds) {
    double d = -run_ga(cfg, seed).fitness;
    best = std::min(best, d);
    per_seed += fmt(" %.4f", d);
  }

  // The un-optimized comparator: the same-temperature stream needs small
  // collision times to resemble a relaxation process, so the gap is measured
  // against t_c = 0.1 (t_c = 0.5 is printed for context).
  double stream_fine = homogeneous_distance(1.0, 0.1, 30);
  double stream_coarse = homogeneous_distance(1.0, 0.5, 6);

  bool pass = best <= 0.05 && best <= 0.03 && stream_fine >= 0.2;
  report(1, pass,
         "optimized distance per seed{" + per_seed + " }, best " +
             fmt("%.4f", best) + " (need <= 0.03); homogeneous stream at T=3: " +
             fmt("%.3f", stream_fine) + " at t_c=0.1 (need >= 0.2), " +
             fmt("%.3f", stream_coarse) + " at t_c=0.5");
  CHECK(best <= 0.05);
  CHECK(best <= 0.03);
  CHECK(stream_fine >= 0.2);
}

TEST_CASE("criterion 2: diagonal ancillae match generic ones on thermal targets") {
  bool all = true;
  for (double t_c : {0.1, 0.5, 1.0}) {
    for (int total_time = 1; total_time <= 5; ++total_time) {
      int n = static_cast<int>(std::lround(total_time / t_c));
      // The t_c = 0.1 column has up to 150 genes and needs the full budget;
      // the short-genome columns converge with a third of the evaluations.
      GaConfig ga = t_c == 0.1 ? ga_budget(200, 100, 1000)
                               : ga_budget(100, 50, 300);

      ExperimentConfig generic =
          thermal_config(AncillaVariant::GenericQubit, t_c, n);
      generic.ga = ga;
      ExperimentConfig diagonal =
          thermal_config(AncillaVariant::DiagonalQubit, t_c, n);
      diagonal.ga = ga;

      double j_generic = best_over_seeds(generic).fitness;
      double j_diagonal = best_over_seeds(diagonal).fitness;
      double gap = std::abs(j_diagonal - j_generic);
      all = all && gap <= 0.02;
      std::printf("  t_c=%.1f T=%d: generic %.4f diagonal %.4f gap %.4f\n",
                  t_c, total_time, -j_generic, -j_diagonal, gap);
      std::fflush(stdout);
      CHECK(gap <= 0.02);
    }
  }
  report(2, all, "|J_diagonal - J_generic| <= 0.02 on all 15 (t_c, T) cells");
}

TEST_CASE("criterion 3: the best collision time for heating is interior") {
  // T = 3 split as 30 x 0.1, 6 x 0.5, and 3 x 1.0 collisions.
  double distance[3] = {0.0, 0.0, 0.0};
  const double tcs[3] = {0.1, 0.5, 1.0};
  const int counts[3] = {30, 6, 3};
  for (int i = 0; i < 3; ++i) {
    ExperimentConfig cfg =
        thermal_config(AncillaVariant::GenericQubit, tcs[i], counts[i]);
    cfg.ga = ga_budget(200, 100, 1000);
    distance[i] = -best_over_seeds(cfg).fitness;
  }
  bool pass = distance[1] < distance[0] && distance[1] < distance[2];
  report(3, pass,
         "distance at t_c {0.1, 0.5, 1.0} = {" + fmt("%.4f", distance[0]) +
             ", " + fmt("%.4f", distance[1]) + ", " + fmt("%.4f", distance[2]) +
             "}; t_c=0.5 must beat both neighbors");
  CHECK(distance[1] < distance[0]);
  CHECK(distance[1] < distance[2]);
}

TEST_CASE("criterion 4: one excited ancilla prepares the one-photon state") {
  ExperimentConfig cfg;
  cfg.family = ExperimentFamily::FockPrep;
  cfg.mode = OptimizationMode::VariableLength;
  cfg.n_levels = 20;
  cfg.target_fock = 1;
  cfg.total_time = 5.0;
  cfg.optimize = {"g_l"};
  cfg.n_max = 20;
  cfg.ga = ga_budget(150, 40, 1500);
  cfg.ga.stop_fitness = -4e-4;

  GaOutcome best;
  bool first = true;
  std::string per_seed;
  for (std::uint64_t seed : kSeeds) {
    GaOutcome outcome = run_ga(cfg, seed);
    per_seed += fmt(" %.2e", -outcome.fitness);
    if (first || outcome.fitness > best.fitness) {
      best = outcome;
      first = false;
    }
  }

  // Winner strategy: a single collision with a near-excited Bloch ancilla.
  double r = best.decoded.ancilla_parameters[0][0];
  double theta = best.decoded.ancilla_parameters[0][1];
  double p_excited = 0.5 * (1.0 + r * std::cos(theta));

  bool pass = -best.fitness <= 1e-3 && best.decoded.collisions == 1 &&
              p_excited >= 0.95;
  report(4, pass,
         "distance per seed{" + per_seed + " } (need min <= 1e-3); winner uses " +
             std::to_string(best.decoded.collisions) +
             " collision(s), excited population " + fmt("%.4f", p_excited) +
             " (need >= 0.95)");
  CHECK(-best.fitness <= 1e-3);
  CHECK(best.decoded.collisions == 1);
  CHECK(p_excited >= 0.95);
}

TEST_CASE("criterion 5: coherent targets need ancilla coherence") {
  ExperimentConfig generic;
  generic.family = ExperimentFamily::Coherent;
  generic.mode = OptimizationMode::FixedLength;
  generic.n_levels = 20;
  generic.ancilla = AncillaVariant::GenericQubit;
  generic.target_alpha = 1.0;
  generic.t_c = 0.5;
  generic.collisions = 10;
  generic.ga = ga_budget(200, 100, 1000);
  generic.ga.stop_fitness = -0.045;

  double best_generic = 1.0;
  std::string generic_seeds;
  for (std::uint64_t seed : kSeeds) {
    double d = -run_ga(generic, seed).fitness;
    best_generic = std::min(best_generic, d);
    generic_seeds += fmt(" %.4f", d);
  }

  ExperimentConfig diagonal = generic;
  diagonal.ancilla = AncillaVariant::DiagonalQubit;
  diagonal.ga = ga_budget(100, 50, 200);
  diagonal.ga.stop_fitness.reset();

  double worst_diagonal = 1.0;
  std::string diagonal_seeds;
  for (std::uint64_t seed : kSeeds) {
    double d = -run_ga(diagonal, seed).fitness;
    worst_diagonal = std::min(worst_diagonal, d);
    diagonal_seeds += fmt(" %.4f", d);
  }

  // The searched chi curve must dip once, inside the admissible interval.
  FockSpace space(20);
  ChiSweepSpec spec{
      .space = space,
      .omega_c = 1.0,
      .omega_a = 1.0,
      .couplings = CouplingConstants{.g_l = 1.0, .g_nl = 0.0, .g_l1 = 0.0,
                                     .g_l2 = 0.0},
      .initial_state = vacuum_state(space),
      .beta = 5.0,
      .alpha = 0.5,
      .total_time = 10.0,
      .t_c = 0.01,
      .grid = uniform_chi_grid(5.0, 1.0, 129),
  };
  ChiSweepResult sweep = sweep_chi(spec);
  std::size_t argmin = 0;
  for (std::size_t i = 1; i < sweep.curve.size(); ++i) {
    if (sweep.curve[i][1] < sweep.curve[argmin][1]) argmin = i;
  }
  int reversals = 0;
  for (std::size_t i = 2; i < sweep.curve.size(); ++i) {
    bool prev_fall = sweep.curve[i - 1][1] < sweep.curve[i - 2][1];
    bool fall = sweep.curve[i][1] < sweep.curve[i - 1][1];
    if (fall != prev_fall) ++reversals;
  }
  bool interior = argmin > 0 && argmin + 1 < sweep.curve.size();

  bool pass = best_generic <= 0.06 && worst_diagonal >= 0.5 && interior &&
              reversals == 1 && sweep.distance_best < 0.05;
  report(5, pass,
         "generic per seed{" + generic_seeds + " } best " +
             fmt("%.4f", best_generic) + " (need <= 0.06); diagonal per seed{" +
             diagonal_seeds + " } floor " + fmt("%.4f", worst_diagonal) +
             " (need >= 0.5); chi sweep: interior minimum at chi=" +
             fmt("%.4f", sweep.chi_best) + ", distance " +
             fmt("%.5f", sweep.distance_best) + ", slope reversals " +
             std::to_string(reversals) + " (need exactly 1)");
  CHECK(best_generic <= 0.06);
  CHECK(worst_diagonal >= 0.5);
  CHECK(interior);
  CHECK(reversals == 1);
  CHECK(sweep.distance_best < 0.05);
}

TEST_CASE("criterion 6: squeezing needs the two-photon coupling") {
  ExperimentConfig nonlinear;
  nonlinear.family = ExperimentFamily::Squeezed;
  nonlinear.mode = OptimizationMode::VariableLength;
  nonlinear.n_levels = 20;
  nonlinear.target_zeta = 0.5;
  nonlinear.total_time = 5.0;
  nonlinear.optimize = {"omega_a", "g_l", "g_nl"};
  nonlinear.n_max = 100;
  nonlinear.ga = ga_budget(200, 50, 3000);
  nonlinear.ga.stop_fitness = -0.025;

  double best_nonlinear = 1.0;
  double best_g_nl = 0.0;
  std::string nonlinear_seeds;
  for (std::uint64_t seed : kSeeds) {
    GaOutcome outcome = run_ga(nonlinear, seed);
    nonlinear_seeds += fmt(" %.4f", -outcome.fitness);
    if (-outcome.fitness < best_nonlinear) {
      best_nonlinear = -outcome.fitness;
      best_g_nl = outcome.decoded.couplings.g_nl;
    }
  }

  ExperimentConfig linear = nonlinear;
  linear.optimize = {"omega_a", "g_l"};
  linear.g_nl = 0.0;
  linear.ga = ga_budget(200, 50, 300);
  linear.ga.stop_fitness.reset();

  double linear_floor = 1.0;
  std::string linear_seeds;
  for (std::uint64_t seed : kSeeds) {
    double d = -run_ga(linear, seed).fitness;
    linear_floor = std::min(linear_floor, d);
    linear_seeds += fmt(" %.4f", d);
  }

  bool pass = best_nonlinear <= 0.03 && linear_floor >= 0.25;
  report(6, pass,
         "nonlinear per seed{" + nonlinear_seeds + " } best " +
             fmt("%.4f", best_nonlinear) + " (need <= 0.03, winner g_nl " +
             fmt("%.3f", best_g_nl) + "); linear-only per seed{" +
             linear_seeds + " } floor " + fmt("%.4f", linear_floor) +
             " (need >= 0.25)");
  CHECK(best_nonlinear <= 0.03);
  CHECK(linear_floor >= 0.25);
}

TEST_CASE("criterion 7: non-Gaussianity values and maximization") {
  FockSpace space(30);
  const double expected[4] = {1.38, 1.91, 2.25, 2.50};
  bool oracle_ok = true;
  std::string values;
  for (int k = 1; k <= 4; ++k) {
    double ng = nongaussianity(fock_state(space, k));
    values += fmt(" %.4f", ng);
    oracle_ok = oracle_ok && std::abs(ng - expected[k - 1]) <= 0.02;
    CHECK(ng == doctest::Approx(expected[k - 1]).epsilon(0.02));
  }

  ExperimentConfig cfg;
  cfg.family = ExperimentFamily::NonGaussian;
  cfg.mode = OptimizationMode::VariableLength;
  cfg.n_levels = 30;
  cfg.total_time = 5.0;
  cfg.n_max = 100;
  cfg.ga = ga_budget(200, 50, 1500);
  cfg.ga.stop_fitness = 1.32;

  double best = 0.0;
  std::string per_seed;
  for (std::uint64_t seed : kSeeds) {
    double ng = run_ga(cfg, seed).fitness;
    best = std::max(best, ng);
    per_seed += fmt(" %.3f", ng);
  }

  bool pass = oracle_ok && best >= 1.3;
  report(7, pass,
         "Fock 1..4 non-Gaussianity {" + values +
             " } vs {1.38 1.91 2.25 2.50} +-0.02; linear search per seed{" +
             per_seed + " } best " + fmt("%.3f", best) + " (need >= 1.3)");
  CHECK(best >= 1.3);
}

TEST_CASE("criterion 8: structural property battery") {
  std::mt19937_64 rng(424242);
  auto random_complex_matrix = [&](int dim) {
    std::normal_distribution<double> normal;
    ComplexMatrix m(dim, dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) m(i, j) = Complex(normal(rng), normal(rng));
    return m;
  };
  auto random_density = [&](int dim) {
    ComplexMatrix b = random_complex_matrix(dim);
    ComplexMatrix m = b * b.adjoint();
    return DensityMatrix::unchecked(m / m.trace());
  };

  // Operator algebra: unitary propagators, lossless partial trace, and the
  // metric properties of the trace distance.
  int algebra_failures = 0;
  for (int round = 0; round < 20; ++round) {
    ComplexMatrix a = random_complex_matrix(12);
    ComplexMatrix h = 0.5 * (a + a.adjoint());
    ComplexMatrix u = propagator(h, 0.7);
    if ((u * u.adjoint() - ComplexMatrix::Identity(12, 12)).norm() > 1e-11)
      ++algebra_failures;

    DensityMatrix rho_s = random_density(6);
    DensityMatrix rho_a = random_density(2);
    ComplexMatrix joint = tensor(rho_s.matrix(), rho_a.matrix());
    if ((partial_trace_ancilla(joint, 6, 2) - rho_s.matrix()).norm() > 1e-12)
      ++algebra_failures;

    DensityMatrix x = random_density(8), y = random_density(8),
                  z = random_density(8);
    double dxy = trace_distance(x, y);
    if (std::abs(dxy - trace_distance(y, x)) > 1e-12) ++algebra_failures;
    if (trace_distance(x, x) > 1e-12) ++algebra_failures;
    if (trace_distance(x, z) > dxy + trace_distance(y, z) + 1e-12)
      ++algebra_failures;
    ComplexMatrix a8 = a.topLeftCorner(8, 8);
    ComplexMatrix w = propagator(0.5 * (a8 + a8.adjoint()).eval(), 1.3);
    DensityMatrix ux = DensityMatrix::unchecked(w * x.matrix() * w.adjoint());
    DensityMatrix uy = DensityMatrix::unchecked(w * y.matrix() * w.adjoint());
    if (std::abs(trace_distance(ux, uy) - dxy) > 1e-11) ++algebra_failures;
  }
  CHECK(algebra_failures == 0);

  // Decoder totality: every genome in [0,1]^L decodes to a valid scenario.
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  int decode_failures = 0;
  long decoded_states = 0;
  auto drill = [&](const GenomeLayout& layout, const ScenarioTemplate& tmpl,
                   int genomes, bool variable) {
    std::uniform_int_distribution<int> length(1, layout.max_collisions);
    for (int i = 0; i < genomes; ++i) {
      int n = variable ? length(rng) : layout.fixed_collisions;
      Genome genome(layout.length_for(n));
      for (double& gene : genome) gene = uniform(rng);
      try {
        CollisionScenario scenario = decode(genome, layout, tmpl);
        scenario.validate();
        for (const DensityMatrix& state : scenario.ancilla_states) {
          state.check();
          ++decoded_states;
        }
      } catch (const std::exception&) {
        ++decode_failures;
      }
    }
  };

  FockSpace space(10);
  CouplingConstants couplings{.g_l = 1.0, .g_nl = 0.2, .g_l1 = 0.8,
                              .g_l2 = 0.6};
  ScenarioTemplate qubit_tmpl{space, 1.0, AncillaKind::generic_qubit(1.0),
                              couplings, vacuum_state(space)};
  ScenarioTemplate diag_tmpl{space, 1.0, AncillaKind::diagonal_qubit(1.0),
                             couplings, vacuum_state(space)};
  ScenarioTemplate qutrit_tmpl{space, 1.0, AncillaKind::qutrit(1.0, 2.0),
                               couplings, vacuum_state(space)};

  GenomeLayout fixed_generic;
  fixed_generic.ancilla = AncillaVariant::GenericQubit;
  fixed_generic.mode = OptimizationMode::FixedLength;
  fixed_generic.head = {{"g_l", -1.0, 1.0}};
  fixed_generic.fixed_collisions = 5;
  fixed_generic.fixed_t_c = 0.3;
  drill(fixed_generic, qubit_tmpl, 40000, false);

  GenomeLayout fixed_diagonal = fixed_generic;
  fixed_diagonal.ancilla = AncillaVariant::DiagonalQubit;
  fixed_diagonal.head = {};
  drill(fixed_diagonal, diag_tmpl, 30000, false);

  GenomeLayout variable_qutrit;
  variable_qutrit.ancilla = AncillaVariant::Qutrit;
  variable_qutrit.mode = OptimizationMode::VariableLength;
  variable_qutrit.total_time = 4.0;
  variable_qutrit.max_collisions = 12;
  drill(variable_qutrit, qutrit_tmpl, 30000, true);

  CHECK(decode_failures == 0);
  CHECK(decoded_states > 100000);

  // GA mechanics: genes stay in [0,1], the elite makes the best monotone,
  // and a seed fixes the whole history.
  GenomeLayout ga_layout = fixed_generic;
  auto synthetic = [](const Genome& g) {
    double score = 0.0;
    for (double gene : g) score -= (gene - 0.3) * (gene - 0.3);
    return score;
  };
  GaConfig ga;
  ga.population = 40;
  ga.elite = 10;
  ga.generations = 30;
  ga.seed = 7;

  int ga_failures = 0;
  std::vector<GenerationRecord> history;
  GaRun first = evolve(synthetic, ga_layout, ga,
                       [&](const GenerationRecord& r) { history.push_back(r); });
  for (std::size_t i = 0; i < history.size(); ++i) {
    for (double gene : history[i].best_genome) {
      if (gene < 0.0 || gene > 1.0) ++ga_failures;
    }
    if (i > 0 && history[i].best_fitness < history[i - 1].best_fitness - 1e-15)
      ++ga_failures;
  }
  GaRun second = evolve(synthetic, ga_layout, ga);
  if (second.best_genome != first.best_genome ||
      second.best_fitness != first.best_fitness)
    ++ga_failures;
  if (first.evaluations != 40 + 30L * (40 - 10)) ++ga_failures;
  CHECK(ga_failures == 0);

  // Admissible-coherence cap against an independent bisection.
  int chi_failures = 0;
  for (double beta : {0.2, 1.0, 3.0, 5.0}) {
    for (double omega : {0.5, 1.0, 2.0}) {
      if (std::abs(chi_max(beta, omega) -
                   oracles::chi_max_bisect(beta, omega)) > 1e-9)
        ++chi_failures;
    }
  }
  CHECK(chi_failures == 0);

  // Covariance oracles: vacuum and coherent states sit at the vacuum noise,
  // thermal states at (2 n_bar + 1)/2, all with zero cross correlations.
  FockSpace big(20);
  int covariance_failures = 0;
  auto check_sigma = [&](const DensityMatrix& rho, double diagonal) {
    Eigen::Matrix2d sigma = covariance_matrix(rho);
    if (std::abs(sigma(0, 0) - diagonal) > 1e-6) ++covariance_failures;
    if (std::abs(sigma(1, 1) - diagonal) > 1e-6) ++covariance_failures;
    if (std::abs(sigma(0, 1)) > 1e-6) ++covariance_failures;
  };
  check_sigma(vacuum_state(big), 0.5);
  check_sigma(coherent_state(big, Complex(0.8, 0.3)), 0.5);
  double n_bar = 1.0 / std::expm1(1.0);
  check_sigma(thermal_state(system_hamiltonian(big, 1.0), 1.0),
              0.5 * (2.0 * n_bar + 1.0));
  if (nongaussianity(coherent_state(big, Complex(0.8, 0.3))) > 1e-8)
    ++covariance_failures;
  CHECK(covariance_failures == 0);

  bool pass = algebra_failures == 0 && decode_failures == 0 &&
              ga_failures == 0 && chi_failures == 0 && covariance_failures == 0;
  report(8, pass,
         "operator algebra, 100k-genome decoder drill (" +
             std::to_string(decoded_states) + " states), GA mechanics, " +
             "coherence cap, covariance oracles: " +
             std::to_string(algebra_failures + decode_failures + ga_failures +
                            chi_failures + covariance_failures) +
             " failures");
}
