#include "qcollide/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "qcollide/errors.hpp"
#include "qcollide/states.hpp"

namespace qcollide {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const char* family_name(ExperimentFamily family) {
  switch (family) {
    case ExperimentFamily::Thermalize:
      return "thermalize";
    case ExperimentFamily::Coherent:
      return "coherent";
    case ExperimentFamily::Squeezed:
      return "squeezed";
    case ExperimentFamily::NonGaussian:
      return "nongaussian";
    case ExperimentFamily::FockPrep:
      return "fock";
    case ExperimentFamily::BaselineOnly:
      return "baseline";
  }
  return "?";
}

const char* mode_name(OptimizationMode mode) {
  return mode == OptimizationMode::FixedLength ? "fixed" : "variable";
}

const char* ancilla_name(AncillaVariant variant) {
  switch (variant) {
    case AncillaVariant::DiagonalQubit:
      return "diagonal";
    case AncillaVariant::GenericQubit:
      return "qubit";
    case AncillaVariant::Qutrit:
      return "qutrit";
  }
  return "?";
}

Bounds head_bounds(const ExperimentConfig& config, const std::string& name) {
  if (name == "omega_a") return config.omega_a_bounds;
  if (name == "omega_1") return config.omega_1_bounds;
  if (name == "delta_omega_12") return config.delta_omega_12_bounds;
  if (name == "g_l") return config.g_l_bounds;
  if (name == "g_nl") return config.g_nl_bounds;
  if (name == "g_l1") return config.g_l1_bounds;
  if (name == "g_l2") return config.g_l2_bounds;
  throw ConfigError("no bounds for head gene '" + name + "'");
}

json bounds_json(const Bounds& b) { return json::array({b.lo, b.hi}); }

// Effective config, defaults included, in the same shape the parser accepts.
ordered_json config_to_json(const ExperimentConfig& c) {
  ordered_json j;
  j["experiment"] = family_name(c.family);
  j["mode"] = mode_name(c.mode);
  j["n_levels"] = c.n_levels;
  j["ancilla"] = ancilla_name(c.ancilla);

  ordered_json target = ordered_json::object();
  if (c.target_beta) target["beta"] = *c.target_beta;
  if (c.target_alpha) target["alpha"] = *c.target_alpha;
  if (c.target_zeta) target["zeta"] = *c.target_zeta;
  if (c.target_fock) target["fock"] = *c.target_fock;
  if (!target.empty()) j["target"] = target;

  if (c.initial_beta) j["initial"] = ordered_json{{"beta", *c.initial_beta}};

  ordered_json time = ordered_json::object();
  if (c.t_c) time["t_c"] = *c.t_c;
  if (c.collisions) time["collisions"] = *c.collisions;
  if (c.total_time) time["total"] = *c.total_time;
  j["time"] = time;

  ordered_json physics = ordered_json::object();
  physics["omega_c"] = c.omega_c;
  if (c.ancilla == AncillaVariant::Qutrit) {
    physics["omega_1"] = c.omega_1;
    physics["delta_omega_12"] = c.delta_omega_12;
    physics["g_nl"] = c.g_nl;
    physics["g_l1"] = c.g_l1;
    physics["g_l2"] = c.g_l2;
  } else {
    physics["omega_a"] = c.omega_a;
    physics["g_l"] = c.g_l;
    physics["g_nl"] = c.g_nl;
  }
  if (!c.optimize.empty()) physics["optimize"] = c.optimize;
  j["physics"] = physics;

  ordered_json bounds = ordered_json::object();
  bounds["beta_a"] = bounds_json(c.beta_a_bounds);
  for (const std::string& name : c.optimize) {
    bounds[name] = bounds_json(head_bounds(c, name));
  }
  j["bounds"] = bounds;

  if (c.family != ExperimentFamily::BaselineOnly) {
    ordered_json ga = ordered_json::object();
    ga["population"] = c.ga.population;
    ga["elite"] = c.ga.elite;
    ga["tournament"] = c.ga.tournament;
    ga["mutation_factor"] = c.ga.mutation_factor;
    ga["generations"] = c.ga.generations;
    ga["seed"] = c.ga.seed;
    ga["threads"] = c.ga.threads;
    if (c.ga.stop_fitness) ga["stop_fitness"] = *c.ga.stop_fitness;
    if (c.mode == OptimizationMode::VariableLength) {
      ga["p_collision"] = c.ga.p_collision;
      ga["n_max"] = c.n_max;
    }
    j["ga"] = ga;
  }

  ordered_json baseline = ordered_json::object();
  if (c.baseline_beta_a) baseline["beta_a"] = *c.baseline_beta_a;
  if (c.baseline_beta) baseline["beta"] = *c.baseline_beta;
  if (c.baseline_chi) baseline["chi"] = *c.baseline_chi;
  if (!baseline.empty()) j["baseline"] = baseline;

  j["output"] = c.output_dir;
  return j;
}

std::string dat_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw ConfigError("cannot write " + path.string());
  }
  return out;
}

AncillaKind ancilla_from_config(const ExperimentConfig& config) {
  switch (config.ancilla) {
    case AncillaVariant::DiagonalQubit:
      return AncillaKind::diagonal_qubit(config.omega_a);
    case AncillaVariant::GenericQubit:
      return AncillaKind::generic_qubit(config.omega_a);
    case AncillaVariant::Qutrit:
      return AncillaKind::qutrit(config.omega_1,
                                 config.omega_1 + config.delta_omega_12);
  }
  throw ConfigError("unreachable ancilla variant");
}

CouplingConstants couplings_from_config(const ExperimentConfig& config) {
  if (config.ancilla == AncillaVariant::Qutrit) {
    return CouplingConstants{
        .g_l = 0.0, .g_nl = config.g_nl, .g_l1 = config.g_l1,
        .g_l2 = config.g_l2};
  }
  return CouplingConstants{
      .g_l = config.g_l, .g_nl = config.g_nl, .g_l1 = 0.0, .g_l2 = 0.0};
}

}  // namespace

ExperimentSetup build_setup(const ExperimentConfig& config) {
  config.validate();

  FockSpace space(config.n_levels);
  ComplexMatrix h_s = system_hamiltonian(space, config.omega_c);
  DensityMatrix initial = config.initial_beta
                              ? thermal_state(h_s, *config.initial_beta)
                              : vacuum_state(space);

  ScenarioTemplate tmpl{space, config.omega_c, ancilla_from_config(config),
                        couplings_from_config(config), initial};

  GenomeLayout layout;
  layout.ancilla = config.ancilla;
  layout.mode = config.mode;
  for (const std::string& name : config.optimize) {
    Bounds b = head_bounds(config, name);
    layout.head.push_back(HeadGeneSpec{name, b.lo, b.hi});
  }
  if (config.mode == OptimizationMode::FixedLength) {
    layout.fixed_collisions = *config.collisions;
    layout.fixed_t_c = *config.t_c;
  } else {
    layout.total_time = *config.total_time;
    layout.max_collisions = config.n_max;
  }
  layout.beta_lo = config.beta_a_bounds.lo;
  layout.beta_hi = config.beta_a_bounds.hi;
  layout.validate();

  Objective objective;
  switch (config.family) {
    case ExperimentFamily::Thermalize:
      objective = Objective::trace_distance_to(
          thermal_state(h_s, *config.target_beta));
      break;
    case ExperimentFamily::Coherent:
    case ExperimentFamily::BaselineOnly:
      if (config.target_alpha) {
        objective = Objective::trace_distance_to(
            coherent_state(space, Complex(*config.target_alpha, 0.0)));
      } else {
        objective = Objective::trace_distance_to(
            thermal_state(h_s, *config.target_beta));
      }
      break;
    case ExperimentFamily::Squeezed:
      objective = Objective::trace_distance_to(
          squeezed_vacuum(space, Complex(*config.target_zeta, 0.0)));
      break;
    case ExperimentFamily::FockPrep:
      objective = Objective::trace_distance_to(
          fock_state(space, *config.target_fock));
      break;
    case ExperimentFamily::NonGaussian:
      objective = Objective::maximize_nongaussianity();
      break;
  }

  return ExperimentSetup{std::move(layout), std::move(tmpl),
                         std::move(objective)};
}

// One propagator per collision count. Node handles stay put on insert, so the
// returned reference survives later growth; the mutex only guards the map.
class EngineCache {
 public:
  const CollisionEngine& get(const CollisionScenario& scenario) {
    int n = scenario.collisions();
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = by_count_.find(n);
    if (it == by_count_.end()) {
      it = by_count_
               .emplace(n, std::make_unique<CollisionEngine>(
                               scenario.space, scenario.omega_c,
                               scenario.ancilla, scenario.couplings,
                               scenario.t_c))
               .first;
    }
    return *it->second;
  }

 private:
  std::mutex mutex_;
  std::map<int, std::unique_ptr<CollisionEngine>> by_count_;
};

ScenarioEvaluator::ScenarioEvaluator(GenomeLayout layout, ScenarioTemplate tmpl,
                                     Objective objective)
    : layout_(std::move(layout)),
      tmpl_(std::move(tmpl)),
      objective_(std::move(objective)) {
  layout_.validate();
  // Head genes change the joint Hamiltonian per genome; caching a propagator
  // is only sound when the genome controls ancilla states alone.
  fixed_physics_ = layout_.head.empty();
  if (fixed_physics_) {
    engines_ = std::make_shared<EngineCache>();
  }
}

DensityMatrix ScenarioEvaluator::simulate(
    const CollisionScenario& scenario) const {
  if (fixed_physics_) {
    return engines_->get(scenario).run(scenario.initial_state,
                                       scenario.ancilla_states);
  }
  CollisionEngine engine(scenario.space, scenario.omega_c, scenario.ancilla,
                         scenario.couplings, scenario.t_c);
  return engine.run(scenario.initial_state, scenario.ancilla_states);
}

double ScenarioEvaluator::operator()(const Genome& genome) const {
  CollisionScenario scenario = decode(genome, layout_, tmpl_);
  return objective_.evaluate(simulate(scenario));
}

DecodedSummary summarize(const Genome& genome, const GenomeLayout& layout,
                         const ScenarioTemplate& tmpl) {
  CollisionScenario scenario = decode(genome, layout, tmpl);

  DecodedSummary summary;
  summary.collisions = scenario.collisions();
  summary.t_c = scenario.t_c;
  summary.total_time = scenario.total_time();
  summary.omega_c = scenario.omega_c;
  summary.ancilla = scenario.ancilla;
  summary.couplings = scenario.couplings;

  constexpr double kPi = 3.14159265358979323846;
  int head = layout.head_size();
  int width = layout.genes_per_collision();
  for (int i = 0; i < summary.collisions; ++i) {
    const double* g = genome.data() + head + i * width;
    std::vector<double> params;
    switch (layout.ancilla) {
      case AncillaVariant::DiagonalQubit:
        params = {rescale(g[0], layout.beta_lo, layout.beta_hi)};
        break;
      case AncillaVariant::GenericQubit:
        params = {rescale(g[0], 0.0, 1.0), rescale(g[1], 0.0, kPi),
                  rescale(g[2], 0.0, 2.0 * kPi)};
        break;
      case AncillaVariant::Qutrit:
        params = {rescale(g[0], 0.0, kPi),     rescale(g[1], 0.0, kPi / 2),
                  rescale(g[2], 0.0, kPi),     rescale(g[3], 0.0, kPi / 2),
                  rescale(g[4], 0.0, kPi),     rescale(g[5], 0.0, kPi / 2),
                  rescale(g[6], 0.0, kPi / 2), rescale(g[7], 0.0, kPi / 2)};
        break;
    }
    summary.ancilla_parameters.push_back(std::move(params));
  }
  return summary;
}

namespace {

ordered_json decoded_to_json(const DecodedSummary& d) {
  ordered_json ancilla = ordered_json::object();
  ancilla["variant"] = ancilla_name(d.ancilla.variant);
  if (d.ancilla.is_qubit()) {
    ancilla["omega_a"] = d.ancilla.omega_a;
  } else {
    ancilla["omega_1"] = d.ancilla.omega_1;
    ancilla["omega_2"] = d.ancilla.omega_2;
  }

  ordered_json j;
  j["collisions"] = d.collisions;
  j["t_c"] = d.t_c;
  j["total_time"] = d.total_time;
  j["omega_c"] = d.omega_c;
  j["ancilla"] = ancilla;
  j["couplings"] = ordered_json{{"g_l", d.couplings.g_l},
                                {"g_nl", d.couplings.g_nl},
                                {"g_l1", d.couplings.g_l1},
                                {"g_l2", d.couplings.g_l2}};
  j["ancilla_parameters"] = d.ancilla_parameters;
  return j;
}

}  // namespace

RunResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.family == ExperimentFamily::BaselineOnly) {
    throw ConfigError("baseline configs run without a genetic search");
  }

  ExperimentSetup setup = build_setup(config);
  ScenarioEvaluator evaluator(setup.layout, setup.tmpl, setup.objective);

  std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);
  std::ofstream trace = open_output(dir / "trace.jsonl");
  GenerationSink sink = [&trace](const GenerationRecord& rec) {
    ordered_json line;
    line["generation"] = rec.generation;
    line["best_fitness"] = rec.best_fitness;
    line["mean_fitness"] = rec.mean_fitness;
    line["best_genome"] = rec.best_genome;
    trace << line.dump() << '\n';
  };

  auto start = std::chrono::steady_clock::now();
  GaRun run = evolve([&evaluator](const Genome& g) { return evaluator(g); },
                     setup.layout, config.ga, sink);
  std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  trace.close();

  // The stored winner must reproduce its recorded score when re-simulated.
  double refit = evaluator(run.best_genome);
  if (std::abs(refit - run.best_fitness) > 1e-12) {
    throw NumericalError("stored best genome re-scores to " +
                         std::to_string(refit) + ", recorded " +
                         std::to_string(run.best_fitness));
  }

  RunResult result;
  result.config_echo = config_to_json(config).dump(2);
  result.best_genome = run.best_genome;
  result.best_fitness = run.best_fitness;
  result.decoded = summarize(run.best_genome, setup.layout, setup.tmpl);
  result.generations_run =
      run.history.empty() ? 0 : run.history.back().generation;
  result.evaluations = run.evaluations;
  result.wall_clock_seconds = elapsed.count();

  ordered_json out;
  out["version"] = result.version;
  out["config"] = ordered_json::parse(result.config_echo);
  out["best_fitness"] = result.best_fitness;
  out["best_genome"] = result.best_genome;
  out["decoded"] = decoded_to_json(result.decoded);
  out["generations_run"] = result.generations_run;
  out["evaluations"] = result.evaluations;
  out["wall_clock_seconds"] = result.wall_clock_seconds;

  std::ofstream result_file = open_output(dir / "result.json");
  result_file << out.dump(2) << '\n';
  return result;
}

void run_baseline_experiment(const ExperimentConfig& config) {
  config.validate();
  if (config.family != ExperimentFamily::BaselineOnly) {
    throw ConfigError("baseline runs need the baseline experiment family");
  }

  FockSpace space(config.n_levels);
  ComplexMatrix h_s = system_hamiltonian(space, config.omega_c);
  DensityMatrix initial = config.initial_beta
                              ? thermal_state(h_s, *config.initial_beta)
                              : vacuum_state(space);
  DensityMatrix target =
      config.target_beta
          ? thermal_state(h_s, *config.target_beta)
          : coherent_state(space, Complex(*config.target_alpha, 0.0));

  BaselineStream stream;
  if (config.baseline_beta_a) {
    stream.kind = BaselineStream::Kind::HomogeneousThermal;
    stream.beta_a = *config.baseline_beta_a;
  } else {
    stream.kind = BaselineStream::Kind::CoherentThermal;
    stream.beta = *config.baseline_beta;
    stream.chi = *config.baseline_chi;
  }
  stream.space = space;
  stream.omega_c = config.omega_c;
  stream.ancilla = ancilla_from_config(config);
  stream.couplings = couplings_from_config(config);
  stream.initial_state = initial;

  int n = *config.collisions;
  double t_c = *config.t_c;
  std::vector<DensityMatrix> trajectory = run_baseline(stream, n, t_c);

  std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);

  std::vector<std::array<double, 2>> curve;
  curve.reserve(trajectory.size());
  std::ofstream dat = open_output(dir / "baseline_curve.dat");
  dat << "# time distance_to_target\n";
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    double t = static_cast<double>(i) * t_c;
    double d = trace_distance(trajectory[i], target);
    curve.push_back({t, d});
    dat << dat_number(t) << ' ' << dat_number(d) << '\n';
  }

  ordered_json out;
  out["version"] = kArtifactVersion;
  out["config"] = config_to_json(config);
  out["final_distance"] = curve.back()[1];
  out["curve"] = curve;
  std::ofstream result_file = open_output(dir / "baseline.json");
  result_file << out.dump(2) << '\n';
}

ChiSweepResult run_chi_sweep(const ExperimentConfig& config) {
  config.validate();
  if (!config.target_alpha) {
    throw ConfigError("the chi sweep needs target.alpha");
  }
  if (!config.baseline_beta) {
    throw ConfigError("the chi sweep needs baseline.beta");
  }
  if (!config.t_c || !config.collisions) {
    throw ConfigError("the chi sweep needs time.t_c and time.collisions");
  }
  if (config.ancilla == AncillaVariant::Qutrit) {
    throw ConfigError("the chi sweep uses qubit ancillae");
  }

  FockSpace space(config.n_levels);
  ComplexMatrix h_s = system_hamiltonian(space, config.omega_c);
  DensityMatrix initial = config.initial_beta
                              ? thermal_state(h_s, *config.initial_beta)
                              : vacuum_state(space);

  ChiSweepSpec spec{
      .space = space,
      .omega_c = config.omega_c,
      .omega_a = config.omega_a,
      .couplings = couplings_from_config(config),
      .initial_state = initial,
      .beta = *config.baseline_beta,
      .alpha = *config.target_alpha,
      .total_time = *config.collisions * *config.t_c,
      .t_c = *config.t_c,
      .grid = uniform_chi_grid(*config.baseline_beta, config.omega_a,
                               config.sweep_points),
  };
  ChiSweepResult result = sweep_chi(spec);

  std::filesystem::path dir(config.output_dir);
  std::filesystem::create_directories(dir);

  std::ofstream dat = open_output(dir / "chi_sweep.dat");
  dat << "# chi distance_to_target\n";
  for (const auto& point : result.curve) {
    dat << dat_number(point[0]) << ' ' << dat_number(point[1]) << '\n';
  }

  ordered_json out;
  out["version"] = kArtifactVersion;
  out["config"] = config_to_json(config);
  out["chi_best"] = result.chi_best;
  out["distance_best"] = result.distance_best;
  std::ofstream result_file = open_output(dir / "sweep.json");
  result_file << out.dump(2) << '\n';
  return result;
}

namespace {

std::string run_label(const std::filesystem::path& record_path) {
  std::string name = record_path.parent_path().filename().string();
  if (name.empty()) name = "run";
  for (char& c : name) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
              (c >= '0' && c <= '9') || c == '.' || c == '_' || c == '-';
    if (!ok) c = '_';
  }
  return name;
}

struct PlotWriter {
  std::filesystem::path out_dir;
  std::vector<std::filesystem::path> written;

  void write(const std::string& name, const std::string& header,
             const std::vector<std::array<double, 2>>& rows) {
    std::filesystem::path path = out_dir / name;
    std::ofstream out = open_output(path);
    out << "# " << header << '\n';
    for (const auto& row : rows) {
      out << dat_number(row[0]) << ' ' << dat_number(row[1]) << '\n';
    }
    written.push_back(path);
  }
};

}  // namespace

std::vector<std::filesystem::path> emit_plot_data(
    const std::filesystem::path& result_dir,
    const std::filesystem::path& out_dir) {
  std::vector<std::filesystem::path> results, baselines, sweeps;
  for (const auto& entry :
       std::filesystem::recursive_directory_iterator(result_dir)) {
    if (!entry.is_regular_file()) continue;
    std::string name = entry.path().filename().string();
    if (name == "result.json") results.push_back(entry.path());
    if (name == "baseline.json") baselines.push_back(entry.path());
    if (name == "sweep.json") sweeps.push_back(entry.path());
  }
  std::sort(results.begin(), results.end());
  std::sort(baselines.begin(), baselines.end());
  std::sort(sweeps.begin(), sweeps.end());

  auto parse_file = [](const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    return json::parse(in);
  };

  std::filesystem::create_directories(out_dir);
  PlotWriter writer{out_dir, {}};

  // Distance (or non-Gaussianity) of each optimized run against its total
  // interaction time, one series per (family, t_c).
  std::map<std::pair<std::string, std::string>,
           std::vector<std::array<double, 2>>>
      series;
  // (target beta, t_c, collisions) -> best fitness, for the gain file.
  std::map<std::string, double> ga_by_thermal_key;
  auto thermal_key = [](double beta, double t_c, int n) {
    return dat_number(beta) + "|" + dat_number(t_c) + "|" + std::to_string(n);
  };

  for (const auto& path : results) {
    json j = parse_file(path);
    std::string family = j["config"]["experiment"].get<std::string>();
    double t_c = j["decoded"]["t_c"].get<double>();
    double total_time = j["decoded"]["total_time"].get<double>();
    double fitness = j["best_fitness"].get<double>();
    double value = family == "nongaussian" ? fitness : -fitness;
    series[{family, short_number(t_c)}].push_back({total_time, value});

    if (family == "thermalize" && j["config"]["target"].contains("beta")) {
      double beta = j["config"]["target"]["beta"].get<double>();
      int n = j["decoded"]["collisions"].get<int>();
      std::string key = thermal_key(beta, t_c, n);
      auto it = ga_by_thermal_key.find(key);
      if (it == ga_by_thermal_key.end() || fitness > it->second) {
        ga_by_thermal_key[key] = fitness;
      }
    }

    if (j["decoded"]["ancilla"]["variant"].get<std::string>() == "diagonal") {
      std::vector<std::array<double, 2>> rows;
      const json& params = j["decoded"]["ancilla_parameters"];
      for (std::size_t i = 0; i < params.size(); ++i) {
        rows.push_back(
            {static_cast<double>(i + 1), params[i][0].get<double>()});
      }
      writer.write(run_label(path) + "_betas.dat", "collision beta_a", rows);
    }
  }

  for (auto& [key, rows] : series) {
    std::sort(rows.begin(), rows.end());
    std::string value_name =
        key.first == "nongaussian" ? "nongaussianity" : "trace_distance";
    writer.write("optimized_" + key.first + "_tc" + key.second + ".dat",
                 "total_time " + value_name, rows);
  }

  // GA best vs the homogeneous thermal stream on the same problem,
  // as a percent improvement of -fitness.
  std::vector<std::array<double, 2>> gains;
  for (const auto& path : baselines) {
    json j = parse_file(path);
    const json& config = j["config"];

    std::vector<std::array<double, 2>> rows;
    for (const auto& point : j["curve"]) {
      rows.push_back({point[0].get<double>(), point[1].get<double>()});
    }
    writer.write(run_label(path) + "_trajectory.dat",
                 "time distance_to_target", rows);

    if (config.contains("baseline") && config["baseline"].contains("beta_a") &&
        config.contains("target") && config["target"].contains("beta")) {
      double beta = config["target"]["beta"].get<double>();
      double t_c = config["time"]["t_c"].get<double>();
      int n = config["time"]["collisions"].get<int>();
      auto it = ga_by_thermal_key.find(thermal_key(beta, t_c, n));
      if (it != ga_by_thermal_key.end()) {
        double j_cm = -j["final_distance"].get<double>();
        double j_ga = it->second;
        if (j_cm < 0.0) {
          gains.push_back({beta, -100.0 * (j_ga - j_cm) / j_cm});
        }
      }
    }
  }
  if (!gains.empty()) {
    std::sort(gains.begin(), gains.end());
    writer.write("gain_thermalize.dat", "target_beta gain_percent", gains);
  }

  for (const auto& path : sweeps) {
    json j = parse_file(path);
    std::filesystem::path dat = path.parent_path() / "chi_sweep.dat";
    std::vector<std::array<double, 2>> rows;
    if (std::filesystem::exists(dat)) {
      std::ifstream in(dat);
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        double chi = 0.0, dist = 0.0;
        if (row >> chi >> dist) rows.push_back({chi, dist});
      }
    }
    double alpha = j["config"]["target"]["alpha"].get<double>();
    writer.write(run_label(path) + "_chi_sweep_alpha" + short_number(alpha) +
                     ".dat",
                 "chi distance_to_target", rows);
  }

  return writer.written;
}

}  // namespace qcollide
