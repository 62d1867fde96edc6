#include "qcollide/ga.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <limits>
#include <numeric>
#include <thread>

namespace qcollide {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double safe_eval(const FitnessFn& fitness, const Genome& genome) {
  try {
    return fitness(genome);
  } catch (const std::exception& e) {
    std::cerr << "fitness evaluation failed, genome scored -inf: " << e.what()
              << '\n';
    return kNegInf;
  }
}

// Evaluators draw no randomness, so splitting a batch over threads cannot
// change any result; genomes are always generated on the main thread first.
std::vector<double> evaluate_batch(const FitnessFn& fitness,
                                   const std::vector<Genome>& batch,
                                   int threads) {
  std::vector<double> values(batch.size());
  int workers = std::min<int>(threads, static_cast<int>(batch.size()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < batch.size(); ++i) {
      values[i] = safe_eval(fitness, batch[i]);
    }
    return values;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < batch.size();
         i = next.fetch_add(1)) {
      values[i] = safe_eval(fitness, batch[i]);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers) - 1);
  for (int t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (std::thread& t : pool) t.join();
  return values;
}

std::size_t best_index(const std::vector<double>& fitness) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < fitness.size(); ++i) {
    if (fitness[i] > fitness[best]) best = i;
  }
  return best;
}

}  // namespace

void GaConfig::validate() const {
  if (population < 2) {
    throw std::invalid_argument("GA population must be at least 2");
  }
  if (elite < 1 || elite >= population) {
    throw std::invalid_argument("GA elite count must be in [1, population)");
  }
  if ((population - elite) % 2 != 0) {
    throw std::invalid_argument(
        "population minus elite must be even (offspring come in pairs)");
  }
  if (tournament < 1) {
    throw std::invalid_argument("tournament size must be at least 1");
  }
  if (!(mutation_factor >= 0.0)) {
    throw std::invalid_argument("mutation factor must be non-negative");
  }
  if (!(p_collision >= 0.0 && p_collision <= 1.0)) {
    throw std::invalid_argument("p_collision must lie in [0, 1]");
  }
  if (generations < 0) {
    throw std::invalid_argument("generations must be non-negative");
  }
  if (threads < 1) {
    throw std::invalid_argument("threads must be at least 1");
  }
}

std::size_t tournament_select(const std::vector<double>& fitness, int k,
                              std::mt19937_64& rng) {
  if (fitness.empty()) {
    throw std::invalid_argument("tournament_select: empty population");
  }
  std::uniform_int_distribution<std::size_t> pick(0, fitness.size() - 1);
  std::size_t best = pick(rng);
  for (int draw = 1; draw < k; ++draw) {
    std::size_t idx = pick(rng);
    if (fitness[idx] > fitness[best] ||
        (fitness[idx] == fitness[best] && idx < best)) {
      best = idx;
    }
  }
  return best;
}

std::pair<Genome, Genome> blend_with_gamma(const Genome& a, const Genome& b,
                                           double gamma) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("blend: genomes differ in length");
  }
  Genome ca(a.size()), cb(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ca[i] = gamma * a[i] + (1.0 - gamma) * b[i];
    cb[i] = gamma * b[i] + (1.0 - gamma) * a[i];
  }
  return {std::move(ca), std::move(cb)};
}

std::pair<Genome, Genome> blend_crossover(const Genome& a, const Genome& b,
                                          std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return blend_with_gamma(a, b, unit(rng));
}

Genome mutate_fixed(Genome genome, double mu, std::mt19937_64& rng) {
  if (genome.empty()) return genome;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double rate = std::min(mu / static_cast<double>(genome.size()), 1.0);
  for (double& gene : genome) {
    if (unit(rng) < rate) {
      gene = unit(rng);
    }
  }
  return genome;
}

std::pair<Genome, Genome> crossover_variable_core(const Genome& a,
                                                  const Genome& b,
                                                  const GenomeLayout& layout,
                                                  int n_r, double gamma) {
  std::size_t head = static_cast<std::size_t>(layout.head_size());
  std::size_t block = static_cast<std::size_t>(layout.genes_per_collision());
  int na = layout.collisions_for_length(a.size());
  int nb = layout.collisions_for_length(b.size());
  std::size_t cut_a = head + block * static_cast<std::size_t>(std::min(n_r, na));
  std::size_t cut_b = head + block * static_cast<std::size_t>(std::min(n_r, nb));

  Genome temp_a(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(cut_a));
  temp_a.insert(temp_a.end(), b.begin() + static_cast<std::ptrdiff_t>(cut_b),
                b.end());
  Genome temp_b(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(cut_b));
  temp_b.insert(temp_b.end(), a.begin() + static_cast<std::ptrdiff_t>(cut_a),
                a.end());

  // Blend only the gene positions both temporaries have; the overhang of the
  // longer one is inherited as-is.
  std::size_t shared = std::min(temp_a.size(), temp_b.size());
  for (std::size_t i = 0; i < shared; ++i) {
    double ga = temp_a[i];
    double gb = temp_b[i];
    temp_a[i] = gamma * ga + (1.0 - gamma) * gb;
    temp_b[i] = gamma * gb + (1.0 - gamma) * ga;
  }
  return {std::move(temp_a), std::move(temp_b)};
}

std::pair<Genome, Genome> crossover_variable(const Genome& a, const Genome& b,
                                             const GenomeLayout& layout,
                                             std::mt19937_64& rng) {
  int na = layout.collisions_for_length(a.size());
  int nb = layout.collisions_for_length(b.size());
  std::uniform_int_distribution<int> pick(1, std::max(na, nb));
  // The suffix-aligned swap keeps both children within [1, max(na, nb)]
  // collisions, but guard the cap anyway and fall back to plain copies.
  for (int attempt = 0; attempt < 100; ++attempt) {
    int n_r = pick(rng);
    int child_a = std::min(n_r, na) + nb - std::min(n_r, nb);
    int child_b = std::min(n_r, nb) + na - std::min(n_r, na);
    if (child_a >= 1 && child_a <= layout.max_collisions && child_b >= 1 &&
        child_b <= layout.max_collisions) {
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      return crossover_variable_core(a, b, layout, n_r, unit(rng));
    }
  }
  return {a, b};
}

Genome insert_collision(Genome genome, const GenomeLayout& layout, int slot,
                        std::mt19937_64& rng) {
  int n = layout.collisions_for_length(genome.size());
  if (slot < 0 || slot > n) {
    throw std::invalid_argument("insert_collision: slot out of range");
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t block = static_cast<std::size_t>(layout.genes_per_collision());
  Genome fresh(block);
  for (double& gene : fresh) gene = unit(rng);
  genome.insert(genome.begin() + layout.head_size() +
                    static_cast<std::ptrdiff_t>(block) * slot,
                fresh.begin(), fresh.end());
  return genome;
}

Genome remove_collision(Genome genome, const GenomeLayout& layout, int block) {
  int n = layout.collisions_for_length(genome.size());
  if (block < 0 || block >= n) {
    throw std::invalid_argument("remove_collision: block out of range");
  }
  if (n <= 1) {
    throw std::invalid_argument("remove_collision: cannot go below 1 collision");
  }
  auto first = genome.begin() + layout.head_size() +
               static_cast<std::ptrdiff_t>(layout.genes_per_collision()) * block;
  genome.erase(first, first + layout.genes_per_collision());
  return genome;
}

Genome mutate_variable(Genome genome, double mu, double p_collision,
                       const GenomeLayout& layout, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  int n = layout.collisions_for_length(genome.size());
  bool insert = unit(rng) < p_collision && n < layout.max_collisions;
  if (insert) {
    std::uniform_int_distribution<int> slot(0, n);
    genome = insert_collision(std::move(genome), layout, slot(rng), rng);
    n += 1;
  }
  bool remove = unit(rng) < p_collision && n > 1;
  if (remove) {
    std::uniform_int_distribution<int> block(0, n - 1);
    genome = remove_collision(std::move(genome), layout, block(rng));
  }
  return mutate_fixed(std::move(genome), mu, rng);
}

GaRun evolve(const FitnessFn& fitness, const GenomeLayout& layout,
             const GaConfig& config, const GenerationSink& sink) {
  config.validate();
  layout.validate();
  const bool variable = layout.mode == OptimizationMode::VariableLength;
  std::mt19937_64 rng(config.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Genome> population;
  population.reserve(static_cast<std::size_t>(config.population));
  for (int i = 0; i < config.population; ++i) {
    int n = layout.fixed_collisions;
    if (variable) {
      std::uniform_int_distribution<int> pick_n(1, layout.max_collisions);
      n = pick_n(rng);
    }
    Genome genome(layout.length_for(n));
    for (double& gene : genome) gene = unit(rng);
    population.push_back(std::move(genome));
  }

  GaRun run;
  std::vector<double> fit =
      evaluate_batch(fitness, population, config.threads);
  run.evaluations += static_cast<long>(population.size());

  auto record = [&](int generation) {
    std::size_t best = best_index(fit);
    GenerationRecord rec;
    rec.generation = generation;
    rec.best_fitness = fit[best];
    rec.mean_fitness =
        std::accumulate(fit.begin(), fit.end(), 0.0) / fit.size();
    rec.best_genome = population[best];
    if (sink) sink(rec);
    run.history.push_back(std::move(rec));
  };
  auto done = [&] {
    return config.stop_fitness &&
           run.history.back().best_fitness >= *config.stop_fitness;
  };

  record(0);
  std::vector<std::size_t> order(population.size());
  for (int gen = 1; gen <= config.generations && !done(); ++gen) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      if (fit[l] != fit[r]) return fit[l] > fit[r];
      return l < r;
    });

    std::vector<Genome> next;
    std::vector<double> next_fit;
    next.reserve(population.size());
    next_fit.reserve(population.size());
    for (int e = 0; e < config.elite; ++e) {
      next.push_back(population[order[static_cast<std::size_t>(e)]]);
      next_fit.push_back(fit[order[static_cast<std::size_t>(e)]]);
    }

    std::vector<Genome> offspring;
    offspring.reserve(static_cast<std::size_t>(config.population - config.elite));
    int couples = (config.population - config.elite) / 2;
    for (int c = 0; c < couples; ++c) {
      const Genome& pa =
          population[tournament_select(fit, config.tournament, rng)];
      const Genome& pb =
          population[tournament_select(fit, config.tournament, rng)];
      auto [child_a, child_b] =
          variable ? crossover_variable(pa, pb, layout, rng)
                   : blend_crossover(pa, pb, rng);
      if (variable) {
        child_a = mutate_variable(std::move(child_a), config.mutation_factor,
                                  config.p_collision, layout, rng);
        child_b = mutate_variable(std::move(child_b), config.mutation_factor,
                                  config.p_collision, layout, rng);
      } else {
        child_a = mutate_fixed(std::move(child_a), config.mutation_factor, rng);
        child_b = mutate_fixed(std::move(child_b), config.mutation_factor, rng);
      }
      offspring.push_back(std::move(child_a));
      offspring.push_back(std::move(child_b));
    }

    std::vector<double> offspring_fit =
        evaluate_batch(fitness, offspring, config.threads);
    run.evaluations += static_cast<long>(offspring.size());
    for (std::size_t i = 0; i < offspring.size(); ++i) {
      next.push_back(std::move(offspring[i]));
      next_fit.push_back(offspring_fit[i]);
    }
    if (next.size() != population.size()) {
      throw std::logic_error("GA population size drifted");
    }
    population = std::move(next);
    fit = std::move(next_fit);
    record(gen);
  }

  std::size_t best = best_index(fit);
  run.best_genome = population[best];
  run.best_fitness = fit[best];
  return run;
}

}  // namespace qcollide
