#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qcollide/errors.hpp"
#include "qcollide/experiment.hpp"

namespace {

int fail(const std::string& type, const std::string& message,
         nlohmann::ordered_json extra = {}) {
  nlohmann::ordered_json record;
  record["error"]["type"] = type;
  record["error"]["message"] = message;
  for (auto& item : extra.items()) {
    record["error"][item.key()] = item.value();
  }
  std::cerr << record.dump() << std::endl;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Engineered collision models: evolve ancilla sequences that "
               "steer a cavity mode to a target state"};
  app.set_version_flag("--version", qcollide::kArtifactVersion);
  app.require_subcommand(1);

  std::string config_path;
  std::string out_override;
  std::uint64_t seed = 0;
  int generations = 0;
  int threads = 0;

  CLI::App* run = app.add_subcommand(
      "run", "Optimize an ancilla sequence for the configured target");
  run->add_option("config", config_path, "JSON experiment config")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::Option* out_opt =
      run->add_option("--out", out_override, "Override the output directory");
  CLI::Option* seed_opt =
      run->add_option("--seed", seed, "Override the search seed");
  CLI::Option* gen_opt = run->add_option("--generations", generations,
                                         "Override the generation count");
  CLI::Option* threads_opt = run->add_option(
      "--threads", threads, "Evaluation threads (results are identical)");

  CLI::App* baseline = app.add_subcommand(
      "baseline", "Run a homogeneous or coherent-thermal ancilla stream");
  baseline->add_option("config", config_path, "JSON experiment config")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::Option* baseline_out =
      baseline->add_option("--out", out_override, "Override the output directory");

  CLI::App* sweep = app.add_subcommand(
      "sweep-chi", "Scan the ancilla coherence of a thermal stream against a "
                   "coherent target");
  sweep->add_option("config", config_path, "JSON experiment config")
      ->required()
      ->check(CLI::ExistingFile);
  CLI::Option* sweep_out =
      sweep->add_option("--out", out_override, "Override the output directory");

  std::string results_dir;
  std::string plots_dir = "plots";
  CLI::App* plots = app.add_subcommand(
      "plots", "Collect run records into plain-text plot series");
  plots->add_option("results", results_dir, "Directory holding run outputs")
      ->required()
      ->check(CLI::ExistingDirectory);
  plots->add_option("out", plots_dir, "Where to write the .dat files");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(plots)) {
      auto written = qcollide::emit_plot_data(results_dir, plots_dir);
      for (const auto& path : written) {
        std::cout << path.string() << '\n';
      }
      return 0;
    }

    qcollide::ExperimentConfig config = qcollide::load_config(config_path);
    if (*out_opt || *baseline_out || *sweep_out) config.output_dir = out_override;
    if (*seed_opt) config.ga.seed = seed;
    if (*gen_opt) config.ga.generations = generations;
    if (*threads_opt) config.ga.threads = threads;
    config.validate();

    if (app.got_subcommand(run)) {
      qcollide::RunResult result = qcollide::run_experiment(config);
      std::printf("best fitness %.12g after %d generations, %ld evaluations "
                  "(%.1f s)\n",
                  result.best_fitness, result.generations_run,
                  result.evaluations, result.wall_clock_seconds);
      std::printf("decoded: %d collisions, t_c = %g\n",
                  result.decoded.collisions, result.decoded.t_c);
      std::printf("results in %s\n", config.output_dir.c_str());
    } else if (app.got_subcommand(baseline)) {
      qcollide::run_baseline_experiment(config);
      std::printf("results in %s\n", config.output_dir.c_str());
    } else if (app.got_subcommand(sweep)) {
      qcollide::ChiSweepResult result = qcollide::run_chi_sweep(config);
      std::printf("best chi %.12g, distance %.12g\n", result.chi_best,
                  result.distance_best);
      std::printf("results in %s\n", config.output_dir.c_str());
    }
    return 0;
  } catch (const qcollide::ConfigError& e) {
    return fail("config", e.what());
  } catch (const qcollide::TruncationError& e) {
    return fail("truncation", e.what(),
                {{"required_levels", e.required_levels}});
  } catch (const qcollide::PhysicalityError& e) {
    return fail("physicality", e.what());
  } catch (const qcollide::NumericalError& e) {
    return fail("numerical", e.what());
  } catch (const qcollide::DimensionError& e) {
    return fail("dimension", e.what());
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }
}
