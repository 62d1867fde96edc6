#include "qcollide/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace qcollide {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, const std::string& section,
                         const std::set<std::string>& allowed) {
  for (const auto& item : obj.items()) {
    if (!allowed.contains(item.key())) {
      throw ConfigError("unknown key '" + item.key() + "' in " + section);
    }
  }
}

template <typename T>
T get_as(const json& obj, const std::string& section, const std::string& key) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("bad value for '" + key + "' in " + section + ": " +
                      e.what());
  }
}

template <typename T>
void maybe(const json& obj, const std::string& section, const std::string& key,
           T& out) {
  if (obj.contains(key)) {
    out = get_as<T>(obj, section, key);
  }
}

template <typename T>
void maybe_opt(const json& obj, const std::string& section,
               const std::string& key, std::optional<T>& out) {
  if (obj.contains(key)) {
    out = get_as<T>(obj, section, key);
  }
}

void maybe_bounds(const json& obj, const std::string& section,
                  const std::string& key, Bounds& out) {
  if (!obj.contains(key)) return;
  auto pair = get_as<std::vector<double>>(obj, section, key);
  if (pair.size() != 2 || !(pair[0] <= pair[1])) {
    throw ConfigError("bounds '" + key + "' in " + section +
                      " must be [lo, hi] with lo <= hi");
  }
  out = Bounds{pair[0], pair[1]};
}

ExperimentFamily parse_family(const std::string& s) {
  if (s == "thermalize") return ExperimentFamily::Thermalize;
  if (s == "coherent") return ExperimentFamily::Coherent;
  if (s == "squeezed") return ExperimentFamily::Squeezed;
  if (s == "nongaussian") return ExperimentFamily::NonGaussian;
  if (s == "fock") return ExperimentFamily::FockPrep;
  if (s == "baseline") return ExperimentFamily::BaselineOnly;
  throw ConfigError("unknown experiment family '" + s + "'");
}

AncillaVariant parse_ancilla(const std::string& s) {
  if (s == "diagonal") return AncillaVariant::DiagonalQubit;
  if (s == "qubit") return AncillaVariant::GenericQubit;
  if (s == "qutrit") return AncillaVariant::Qutrit;
  throw ConfigError("unknown ancilla '" + s +
                    "' (expected diagonal, qubit, or qutrit)");
}

bool head_name_fits(const std::string& name, AncillaVariant variant) {
  bool qubit = variant != AncillaVariant::Qutrit;
  if (name == "omega_a" || name == "g_l") return qubit;
  if (name == "g_nl") return true;
  if (name == "omega_1" || name == "delta_omega_12" || name == "g_l1" ||
      name == "g_l2") {
    return !qubit;
  }
  return false;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_levels < 2) {
    throw ConfigError("n_levels must be at least 2");
  }

  bool fixed_time = t_c.has_value() || collisions.has_value();
  if (fixed_time && total_time.has_value()) {
    throw ConfigError(
        "give either time.total or time.t_c with time.collisions, not both");
  }
  bool needs_fixed = mode == OptimizationMode::FixedLength ||
                     family == ExperimentFamily::BaselineOnly;
  if (needs_fixed) {
    if (!t_c.has_value() || !collisions.has_value()) {
      throw ConfigError("fixed-length runs need time.t_c and time.collisions");
    }
    if (!(*t_c > 0.0) || *collisions < 1) {
      throw ConfigError("time.t_c must be positive and time.collisions >= 1");
    }
  } else {
    if (!total_time.has_value()) {
      throw ConfigError("variable-length runs need time.total");
    }
    if (!(*total_time > 0.0)) {
      throw ConfigError("time.total must be positive");
    }
  }

  int targets = static_cast<int>(target_beta.has_value()) +
                static_cast<int>(target_alpha.has_value()) +
                static_cast<int>(target_zeta.has_value()) +
                static_cast<int>(target_fock.has_value());
  switch (family) {
    case ExperimentFamily::Thermalize:
      if (!target_beta || targets != 1) {
        throw ConfigError("thermalize needs exactly target.beta");
      }
      break;
    case ExperimentFamily::Coherent:
      if (!target_alpha || targets != 1) {
        throw ConfigError("coherent needs exactly target.alpha");
      }
      break;
    case ExperimentFamily::Squeezed:
      if (!target_zeta || targets != 1) {
        throw ConfigError("squeezed needs exactly target.zeta");
      }
      break;
    case ExperimentFamily::FockPrep:
      if (!target_fock || targets != 1) {
        throw ConfigError("fock needs exactly target.fock");
      }
      if (*target_fock < 0 || *target_fock >= n_levels) {
        throw ConfigError("target.fock outside the truncated space");
      }
      break;
    case ExperimentFamily::NonGaussian:
      if (targets != 0) {
        throw ConfigError("nongaussian maximizes non-Gaussianity; no target");
      }
      break;
    case ExperimentFamily::BaselineOnly: {
      if (!target_beta && !target_alpha) {
        throw ConfigError("baseline needs target.beta or target.alpha");
      }
      bool homogeneous = baseline_beta_a.has_value();
      bool coherent_thermal =
          baseline_beta.has_value() || baseline_chi.has_value();
      if (homogeneous == coherent_thermal) {
        throw ConfigError(
            "baseline needs either baseline.beta_a or baseline.beta with "
            "baseline.chi");
      }
      if (coherent_thermal &&
          (!baseline_beta.has_value() || !baseline_chi.has_value())) {
        throw ConfigError("coherent-thermal baseline needs beta and chi");
      }
      break;
    }
  }

  for (std::size_t i = 0; i < optimize.size(); ++i) {
    if (!head_name_fits(optimize[i], ancilla)) {
      throw ConfigError("physics.optimize entry '" + optimize[i] +
                        "' does not apply to this ancilla");
    }
    for (std::size_t j = i + 1; j < optimize.size(); ++j) {
      if (optimize[i] == optimize[j]) {
        throw ConfigError("physics.optimize lists '" + optimize[i] + "' twice");
      }
    }
  }
  if (!(omega_c > 0.0)) {
    throw ConfigError("physics.omega_c must be positive");
  }
  if (delta_omega_12 < 0.0) {
    throw ConfigError("physics.delta_omega_12 must be non-negative");
  }
  if (n_max < 1) {
    throw ConfigError("ga.n_max must be at least 1");
  }
  if (sweep_points < 1) {
    throw ConfigError("sweep.points must be at least 1");
  }
  if (family != ExperimentFamily::BaselineOnly) {
    try {
      ga.validate();
    } catch (const std::exception& e) {
      throw ConfigError(std::string("ga: ") + e.what());
    }
  }
}

ExperimentConfig parse_config(const std::string& text,
                              const std::string& origin) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports "parse error at line L, column C: ..."
    throw ConfigError(origin + ": " + e.what());
  }
  if (!root.is_object()) {
    throw ConfigError(origin + ": top level must be an object");
  }

  reject_unknown_keys(root, "the top level",
                      {"experiment", "mode", "n_levels", "ancilla", "target",
                       "initial", "time", "physics", "bounds", "ga", "baseline",
                       "sweep", "output"});

  ExperimentConfig cfg;
  cfg.family =
      parse_family(get_as<std::string>(root, "the top level", "experiment"));
  if (root.contains("mode")) {
    std::string mode = get_as<std::string>(root, "the top level", "mode");
    if (mode == "fixed") {
      cfg.mode = OptimizationMode::FixedLength;
    } else if (mode == "variable") {
      cfg.mode = OptimizationMode::VariableLength;
    } else {
      throw ConfigError("mode must be 'fixed' or 'variable', got '" + mode +
                        "'");
    }
  }
  if (root.contains("ancilla")) {
    cfg.ancilla =
        parse_ancilla(get_as<std::string>(root, "the top level", "ancilla"));
  }

  if (root.contains("target")) {
    const json& target = root.at("target");
    reject_unknown_keys(target, "target", {"beta", "alpha", "zeta", "fock"});
    maybe_opt(target, "target", "beta", cfg.target_beta);
    maybe_opt(target, "target", "alpha", cfg.target_alpha);
    maybe_opt(target, "target", "zeta", cfg.target_zeta);
    maybe_opt(target, "target", "fock", cfg.target_fock);
  }
  if (root.contains("initial")) {
    const json& initial = root.at("initial");
    reject_unknown_keys(initial, "initial", {"beta"});
    maybe_opt(initial, "initial", "beta", cfg.initial_beta);
  }
  if (root.contains("time")) {
    const json& time = root.at("time");
    reject_unknown_keys(time, "time", {"t_c", "collisions", "total"});
    maybe_opt(time, "time", "t_c", cfg.t_c);
    maybe_opt(time, "time", "collisions", cfg.collisions);
    maybe_opt(time, "time", "total", cfg.total_time);
  }
  if (root.contains("physics")) {
    const json& physics = root.at("physics");
    reject_unknown_keys(physics, "physics",
                        {"omega_c", "omega_a", "omega_1", "delta_omega_12",
                         "g_l", "g_nl", "g_l1", "g_l2", "optimize"});
    maybe(physics, "physics", "omega_c", cfg.omega_c);
    maybe(physics, "physics", "omega_a", cfg.omega_a);
    maybe(physics, "physics", "omega_1", cfg.omega_1);
    maybe(physics, "physics", "delta_omega_12", cfg.delta_omega_12);
    maybe(physics, "physics", "g_l", cfg.g_l);
    maybe(physics, "physics", "g_nl", cfg.g_nl);
    maybe(physics, "physics", "g_l1", cfg.g_l1);
    maybe(physics, "physics", "g_l2", cfg.g_l2);
    maybe(physics, "physics", "optimize", cfg.optimize);
  }
  if (root.contains("bounds")) {
    const json& bounds = root.at("bounds");
    reject_unknown_keys(bounds, "bounds",
                        {"beta_a", "omega_a", "omega_1", "delta_omega_12",
                         "g_l", "g_nl", "g_l1", "g_l2"});
    maybe_bounds(bounds, "bounds", "beta_a", cfg.beta_a_bounds);
    maybe_bounds(bounds, "bounds", "omega_a", cfg.omega_a_bounds);
    maybe_bounds(bounds, "bounds", "omega_1", cfg.omega_1_bounds);
    maybe_bounds(bounds, "bounds", "delta_omega_12", cfg.delta_omega_12_bounds);
    maybe_bounds(bounds, "bounds", "g_l", cfg.g_l_bounds);
    maybe_bounds(bounds, "bounds", "g_nl", cfg.g_nl_bounds);
    maybe_bounds(bounds, "bounds", "g_l1", cfg.g_l1_bounds);
    maybe_bounds(bounds, "bounds", "g_l2", cfg.g_l2_bounds);
  }

  // Reference hyperparameters; the elite default differs by mode.
  cfg.ga.population = 200;
  cfg.ga.elite = cfg.mode == OptimizationMode::FixedLength ? 100 : 50;
  cfg.ga.tournament = 4;
  cfg.ga.mutation_factor = 1.0;
  cfg.ga.p_collision = 0.05;
  cfg.ga.generations = 1000;
  cfg.ga.seed = 1;
  if (root.contains("ga")) {
    const json& ga = root.at("ga");
    reject_unknown_keys(ga, "ga",
                        {"population", "elite", "tournament", "mutation_factor",
                         "p_collision", "n_max", "generations", "seed",
                         "stop_fitness", "threads"});
    maybe(ga, "ga", "population", cfg.ga.population);
    maybe(ga, "ga", "elite", cfg.ga.elite);
    maybe(ga, "ga", "tournament", cfg.ga.tournament);
    maybe(ga, "ga", "mutation_factor", cfg.ga.mutation_factor);
    maybe(ga, "ga", "p_collision", cfg.ga.p_collision);
    maybe(ga, "ga", "n_max", cfg.n_max);
    maybe(ga, "ga", "generations", cfg.ga.generations);
    maybe(ga, "ga", "seed", cfg.ga.seed);
    maybe_opt(ga, "ga", "stop_fitness", cfg.ga.stop_fitness);
    maybe(ga, "ga", "threads", cfg.ga.threads);
  }
  if (root.contains("baseline")) {
    const json& baseline = root.at("baseline");
    reject_unknown_keys(baseline, "baseline", {"beta_a", "beta", "chi"});
    maybe_opt(baseline, "baseline", "beta_a", cfg.baseline_beta_a);
    maybe_opt(baseline, "baseline", "beta", cfg.baseline_beta);
    maybe_opt(baseline, "baseline", "chi", cfg.baseline_chi);
  }
  if (root.contains("sweep")) {
    const json& sweep = root.at("sweep");
    reject_unknown_keys(sweep, "sweep", {"points"});
    maybe(sweep, "sweep", "points", cfg.sweep_points);
  }
  maybe(root, "the top level", "output", cfg.output_dir);

  // Larger default space where weight reaches high Fock levels.
  cfg.n_levels = 20;
  if (cfg.family == ExperimentFamily::NonGaussian ||
      (cfg.family == ExperimentFamily::Squeezed && cfg.target_zeta &&
       std::abs(*cfg.target_zeta) >= 1.0)) {
    cfg.n_levels = 30;
  }
  maybe(root, "the top level", "n_levels", cfg.n_levels);

  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

}  // namespace qcollide
