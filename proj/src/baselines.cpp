#include "qcollide/baselines.hpp"

#include <cmath>
#include <string>

#include "qcollide/states.hpp"

namespace qcollide {

namespace {

// Positivity slack: chi exactly at chi_max gives a zero eigenvalue.
constexpr double kChiTol = 1e-12;

// A fixed ancilla coherence pumps the cavity only while it stays in phase
// with the mode, so the coherent-thermal stepper keeps the coupling term
// alone: the frame co-rotating with the free evolution (exact at resonance,
// where the free part commutes with the coupling). Thermal streams are
// diagonal, hence frame-invariant, and keep the full Hamiltonian.
CollisionEngine stream_engine(const BaselineStream& stream, double t_c) {
  if (stream.kind == BaselineStream::Kind::CoherentThermal) {
    return CollisionEngine(
        interaction_hamiltonian(stream.space, stream.ancilla, stream.couplings),
        stream.space.n_levels, stream.ancilla.dim(), t_c);
  }
  return CollisionEngine(stream.space, stream.omega_c, stream.ancilla,
                         stream.couplings, t_c);
}

}  // namespace

double chi_max(double beta, double omega_a) {
  return 0.5 / std::cosh(0.5 * beta * omega_a);
}

DensityMatrix coherent_thermal_ancilla(double beta, double chi, double omega_a) {
  double cap = chi_max(beta, omega_a);
  if (std::abs(chi) > cap + kChiTol) {
    throw PhysicalityError("coherent_thermal_ancilla: |chi| = " +
                           std::to_string(std::abs(chi)) +
                           " exceeds chi_max = " + std::to_string(cap));
  }
  ComplexMatrix m =
      thermal_state(AncillaKind::generic_qubit(omega_a).hamiltonian(), beta)
          .matrix() -
      chi * sigma_y();
  return DensityMatrix::unchecked(std::move(m));
}

DensityMatrix BaselineStream::ancilla_state() const {
  if (kind == Kind::HomogeneousThermal) {
    return thermal_state(ancilla.hamiltonian(), beta_a);
  }
  if (!ancilla.is_qubit()) {
    throw PhysicalityError("coherent-thermal baseline needs qubit ancillae");
  }
  return coherent_thermal_ancilla(beta, chi, ancilla.omega_a);
}

std::vector<DensityMatrix> run_baseline(const BaselineStream& stream, int n,
                                        double t_c) {
  CollisionScenario scenario{stream.space,
                             stream.omega_c,
                             stream.ancilla,
                             stream.couplings,
                             t_c,
                             stream.initial_state,
                             std::vector<DensityMatrix>(
                                 static_cast<std::size_t>(n),
                                 stream.ancilla_state())};
  scenario.validate();
  CollisionEngine engine = stream_engine(stream, t_c);
  std::vector<DensityMatrix> trajectory;
  trajectory.reserve(scenario.ancilla_states.size() + 1);
  trajectory.push_back(scenario.initial_state);
  for (const DensityMatrix& rho_a : scenario.ancilla_states) {
    trajectory.push_back(engine.step(trajectory.back(), rho_a));
  }
  return trajectory;
}

std::vector<double> uniform_chi_grid(double beta, double omega_a, int points) {
  if (points < 1) {
    throw std::invalid_argument("uniform_chi_grid: need at least one point");
  }
  double cap = chi_max(beta, omega_a);
  std::vector<double> grid(static_cast<std::size_t>(points));
  if (points == 1) {
    grid[0] = 0.0;
    return grid;
  }
  for (int i = 0; i < points; ++i) {
    grid[static_cast<std::size_t>(i)] = -cap + 2.0 * cap * i / (points - 1);
  }
  return grid;
}

ChiSweepResult sweep_chi(const ChiSweepSpec& spec) {
  if (spec.grid.empty()) {
    throw std::invalid_argument("sweep_chi: empty chi grid");
  }
  int n = static_cast<int>(std::lround(spec.total_time / spec.t_c));
  if (n < 1) {
    throw std::invalid_argument("sweep_chi: total_time shorter than t_c");
  }
  DensityMatrix target = coherent_state(spec.space, spec.alpha);
  // Co-rotating frame, same as the coherent-thermal stream in run_baseline.
  CollisionEngine engine(
      interaction_hamiltonian(spec.space, AncillaKind::generic_qubit(spec.omega_a),
                              spec.couplings),
      spec.space.n_levels, 2, spec.t_c);

  auto distance_at = [&](double chi) {
    DensityMatrix rho_a =
        coherent_thermal_ancilla(spec.beta, chi, spec.omega_a);
    DensityMatrix state = spec.initial_state;
    for (int i = 0; i < n; ++i) {
      state = engine.step(state, rho_a);
    }
    return trace_distance(state, target);
  };

  ChiSweepResult result;
  result.curve.reserve(spec.grid.size());
  std::size_t best = 0;
  for (std::size_t i = 0; i < spec.grid.size(); ++i) {
    double d = distance_at(spec.grid[i]);
    result.curve.push_back({spec.grid[i], d});
    if (d < result.curve[best][1]) best = i;
  }
  result.chi_best = result.curve[best][0];
  result.distance_best = result.curve[best][1];

  // Golden-section sharpening inside the winning bracket, when there is one.
  if (best > 0 && best + 1 < spec.grid.size()) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = spec.grid[best - 1];
    double hi = spec.grid[best + 1];
    double x1 = hi - inv_phi * (hi - lo);
    double x2 = lo + inv_phi * (hi - lo);
    double f1 = distance_at(x1);
    double f2 = distance_at(x2);
    for (int iter = 0; iter < 80 && hi - lo > 1e-10; ++iter) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - inv_phi * (hi - lo);
        f1 = distance_at(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + inv_phi * (hi - lo);
        f2 = distance_at(x2);
      }
    }
    double mid = 0.5 * (lo + hi);
    double fm = distance_at(mid);
    if (fm < result.distance_best) {
      result.chi_best = mid;
      result.distance_best = fm;
    }
  }
  return result;
}

}  // namespace qcollide
