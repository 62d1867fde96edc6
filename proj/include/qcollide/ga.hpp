#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "qcollide/genome.hpp"

namespace qcollide {

struct GaConfig {
  int population = 200;          // N
  int elite = 100;               // M, copied unchanged each generation
  int tournament = 4;            // K draws with replacement
  double mutation_factor = 1.0;  // mu; per-gene rate is min(mu/L, 1)
  double p_collision = 0.05;     // p̄, insert/delete block probability
  int generations = 1000;
  std::uint64_t seed = 1;
  std::optional<double> stop_fitness;  // stop early once best >= this
  int threads = 1;

  void validate() const;  // N > M >= 1, N - M even, K >= 1, mu > 0, ...
};

struct GenerationRecord {
  int generation = 0;
  double best_fitness = 0.0;
  double mean_fitness = 0.0;
  Genome best_genome;
};

struct GaRun {
  std::vector<GenerationRecord> history;
  Genome best_genome;
  double best_fitness = 0.0;
  long evaluations = 0;
};

using FitnessFn = std::function<double(const Genome&)>;
using GenerationSink = std::function<void(const GenerationRecord&)>;

// Index of the fittest of k uniform draws (with replacement); ties go to the
// lowest population index.
std::size_t tournament_select(const std::vector<double>& fitness, int k,
                              std::mt19937_64& rng);

// Whole-arithmetic blend: one gamma for all genes of the couple,
// child_a = γ·a + (1−γ)·b and child_b = γ·b + (1−γ)·a.
std::pair<Genome, Genome> blend_with_gamma(const Genome& a, const Genome& b,
                                           double gamma);
std::pair<Genome, Genome> blend_crossover(const Genome& a, const Genome& b,
                                          std::mt19937_64& rng);

// Each gene independently resampled from U[0,1] with probability min(mu/L, 1).
Genome mutate_fixed(Genome genome, double mu, std::mt19937_64& rng);

// Variable-length crossover: split both parents after head + n_r·block genes
// (n_r clamped to each parent's own block count), swap the tails, then blend
// the gene positions the two temporaries share. Deterministic core; the
// random wrapper draws n_r ~ U{1..max(n_a, n_b)} and gamma.
std::pair<Genome, Genome> crossover_variable_core(const Genome& a,
                                                  const Genome& b,
                                                  const GenomeLayout& layout,
                                                  int n_r, double gamma);
std::pair<Genome, Genome> crossover_variable(const Genome& a, const Genome& b,
                                             const GenomeLayout& layout,
                                             std::mt19937_64& rng);

// Structural edits used by variable-length mutation. Insertion slots run
// 0..n (before each block and at the end); the new block is fresh U[0,1].
Genome insert_collision(Genome genome, const GenomeLayout& layout, int slot,
                        std::mt19937_64& rng);
Genome remove_collision(Genome genome, const GenomeLayout& layout, int block);

// With probability p_collision insert a random block (unless at
// max_collisions), independently with probability p_collision delete a random
// block (unless a single collision remains), then apply per-gene mutation at
// rate mu/L on the result.
Genome mutate_variable(Genome genome, double mu, double p_collision,
                       const GenomeLayout& layout, std::mt19937_64& rng);

// Run the GA: per generation carry the elite copies unchanged, fill the rest
// with tournament-selected couples passed through crossover and mutation, and
// evaluate the newcomers. Deterministic for a given seed and config; the
// evaluator must not draw randomness. Evaluator exceptions score -inf.
GaRun evolve(const FitnessFn& fitness, const GenomeLayout& layout,
             const GaConfig& config, const GenerationSink& sink = {});

}  // namespace qcollide
