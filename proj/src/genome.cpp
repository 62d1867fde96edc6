#include "qcollide/genome.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcollide/states.hpp"

namespace qcollide {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(i λ3 x) = diag(e^{ix}, e^{-ix}, 1)
ComplexMatrix exp_lambda3(double x) {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 0) = std::exp(Complex(0, x));
  m(1, 1) = std::exp(Complex(0, -x));
  return m;
}

// exp(i λ2 x): real rotation in the 0-1 block.
ComplexMatrix exp_lambda2(double x) {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 0) = std::cos(x);
  m(0, 1) = std::sin(x);
  m(1, 0) = -std::sin(x);
  m(1, 1) = std::cos(x);
  return m;
}

// exp(i λ5 x): real rotation in the 0-2 block.
ComplexMatrix exp_lambda5(double x) {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 0) = std::cos(x);
  m(0, 2) = std::sin(x);
  m(2, 0) = -std::sin(x);
  m(2, 2) = std::cos(x);
  return m;
}

double* constant_slot(const std::string& name, double& omega_a, double& omega_1,
                      double& delta_omega_12, CouplingConstants& c) {
  if (name == "omega_a") return &omega_a;
  if (name == "omega_1") return &omega_1;
  if (name == "delta_omega_12") return &delta_omega_12;
  if (name == "g_l") return &c.g_l;
  if (name == "g_nl") return &c.g_nl;
  if (name == "g_l1") return &c.g_l1;
  if (name == "g_l2") return &c.g_l2;
  return nullptr;
}

}  // namespace

int GenomeLayout::genes_per_collision() const {
  switch (ancilla) {
    case AncillaVariant::DiagonalQubit:
      return 1;
    case AncillaVariant::GenericQubit:
      return 3;
    case AncillaVariant::Qutrit:
      return 8;
  }
  throw std::invalid_argument("GenomeLayout: unknown ancilla variant");
}

std::size_t GenomeLayout::length_for(int n) const {
  return static_cast<std::size_t>(head_size()) +
         static_cast<std::size_t>(n) * genes_per_collision();
}

int GenomeLayout::collisions_for_length(std::size_t len) const {
  std::size_t head = static_cast<std::size_t>(head_size());
  std::size_t block = static_cast<std::size_t>(genes_per_collision());
  if (len < head + block || (len - head) % block != 0) {
    throw std::invalid_argument(
        "genome length " + std::to_string(len) + " does not fit layout (head " +
        std::to_string(head) + ", block " + std::to_string(block) + ")");
  }
  return static_cast<int>((len - head) / block);
}

double GenomeLayout::collision_time(int n) const {
  if (mode == OptimizationMode::FixedLength) {
    return fixed_t_c;
  }
  return total_time / n;
}

void GenomeLayout::validate() const {
  genes_per_collision();
  for (const HeadGeneSpec& spec : head) {
    if (!(spec.lo <= spec.hi)) {
      throw std::invalid_argument("head gene " + spec.name +
                                  " has an empty range");
    }
    static const char* names[] = {"omega_a", "omega_1", "delta_omega_12",
                                  "g_l",     "g_nl",    "g_l1",
                                  "g_l2"};
    bool known = false;
    for (const char* n : names) known = known || spec.name == n;
    if (!known) {
      throw std::invalid_argument("unknown head gene name: " + spec.name);
    }
  }
  if (mode == OptimizationMode::FixedLength) {
    if (fixed_collisions < 1 || !(fixed_t_c > 0.0)) {
      throw std::invalid_argument(
          "fixed-length layout needs collisions >= 1 and t_c > 0");
    }
  } else {
    if (!(total_time > 0.0) || max_collisions < 1) {
      throw std::invalid_argument(
          "variable-length layout needs total_time > 0 and max_collisions >= 1");
    }
  }
  if (!(beta_lo <= beta_hi)) {
    throw std::invalid_argument("diagonal beta range is empty");
  }
}

double rescale(double gene, double lo, double hi) {
  return lo + (hi - lo) * gene;
}

DensityMatrix decode_diagonal_qubit(double gene, double beta_lo, double beta_hi,
                                    double omega_a) {
  double beta = rescale(gene, beta_lo, beta_hi);
  return thermal_state(AncillaKind::diagonal_qubit(omega_a).hamiltonian(), beta);
}

DensityMatrix decode_bloch_qubit(const double* genes) {
  double r = rescale(genes[0], 0.0, 1.0);
  double theta = rescale(genes[1], 0.0, kPi);
  double phi = rescale(genes[2], 0.0, 2.0 * kPi);
  double bx = r * std::sin(theta) * std::cos(phi);
  double by = r * std::sin(theta) * std::sin(phi);
  double bz = r * std::cos(theta);
  ComplexMatrix m =
      0.5 * (ComplexMatrix::Identity(2, 2) + bx * sigma_x() + by * sigma_y() +
             bz * sigma_z());
  return DensityMatrix::unchecked(std::move(m));
}

DensityMatrix decode_euler_qutrit(const double* genes) {
  double alpha = rescale(genes[0], 0.0, kPi);
  double beta = rescale(genes[1], 0.0, kPi / 2);
  double gamma = rescale(genes[2], 0.0, kPi);
  double theta = rescale(genes[3], 0.0, kPi / 2);
  double a = rescale(genes[4], 0.0, kPi);
  double b = rescale(genes[5], 0.0, kPi / 2);
  double eta = rescale(genes[6], 0.0, kPi / 2);
  double delta = rescale(genes[7], 0.0, kPi / 2);

  ComplexMatrix v = exp_lambda3(alpha) * exp_lambda2(beta) * exp_lambda3(gamma) *
                    exp_lambda5(theta) * exp_lambda3(a) * exp_lambda2(b);

  double z2 = std::sin(eta) * std::sin(eta);
  double y2 = std::sin(delta) * std::sin(delta);
  ComplexMatrix rho_d = ComplexMatrix::Zero(3, 3);
  rho_d(0, 0) = z2 * (1.0 - y2);
  rho_d(1, 1) = z2 * y2;
  rho_d(2, 2) = 1.0 - z2;

  ComplexMatrix m = v * rho_d * v.adjoint();
  return DensityMatrix::unchecked(0.5 * (m + m.adjoint()));
}

void validate_genome(const Genome& genome, const GenomeLayout& layout) {
  int n = layout.collisions_for_length(genome.size());
  if (layout.mode == OptimizationMode::FixedLength) {
    if (n != layout.fixed_collisions) {
      throw std::invalid_argument("genome encodes " + std::to_string(n) +
                                  " collisions, layout fixes " +
                                  std::to_string(layout.fixed_collisions));
    }
  } else if (n > layout.max_collisions) {
    throw std::invalid_argument("genome encodes " + std::to_string(n) +
                                " collisions, cap is " +
                                std::to_string(layout.max_collisions));
  }
  for (double gene : genome) {
    if (!(gene >= 0.0 && gene <= 1.0)) {
      throw std::invalid_argument("gene outside [0,1]: " + std::to_string(gene));
    }
  }
}

CollisionScenario decode(const Genome& genome, const GenomeLayout& layout,
                         const ScenarioTemplate& tmpl) {
  layout.validate();
  validate_genome(genome, layout);
  if (tmpl.ancilla.variant != layout.ancilla) {
    throw std::invalid_argument(
        "decode: template ancilla variant does not match layout");
  }

  double omega_a = tmpl.ancilla.omega_a;
  double omega_1 = tmpl.ancilla.omega_1;
  double delta_omega_12 = tmpl.ancilla.omega_2 - tmpl.ancilla.omega_1;
  CouplingConstants couplings = tmpl.couplings;
  for (std::size_t h = 0; h < layout.head.size(); ++h) {
    const HeadGeneSpec& spec = layout.head[h];
    double* slot =
        constant_slot(spec.name, omega_a, omega_1, delta_omega_12, couplings);
    if (slot == nullptr) {
      throw std::invalid_argument("decode: unknown head gene " + spec.name);
    }
    *slot = rescale(genome[h], spec.lo, spec.hi);
  }

  CollisionScenario scenario{
      tmpl.space, tmpl.omega_c,
      layout.ancilla == AncillaVariant::Qutrit
          ? AncillaKind::qutrit(omega_1, omega_1 + delta_omega_12)
          : (layout.ancilla == AncillaVariant::DiagonalQubit
                 ? AncillaKind::diagonal_qubit(omega_a)
                 : AncillaKind::generic_qubit(omega_a)),
      couplings,
      0.0,
      tmpl.initial_state,
      {}};

  int n = layout.collisions_for_length(genome.size());
  scenario.t_c = layout.collision_time(n);
  scenario.ancilla_states.reserve(static_cast<std::size_t>(n));
  const double* block = genome.data() + layout.head_size();
  for (int i = 0; i < n; ++i, block += layout.genes_per_collision()) {
    switch (layout.ancilla) {
      case AncillaVariant::DiagonalQubit:
        scenario.ancilla_states.push_back(decode_diagonal_qubit(
            block[0], layout.beta_lo, layout.beta_hi, omega_a));
        break;
      case AncillaVariant::GenericQubit:
        scenario.ancilla_states.push_back(decode_bloch_qubit(block));
        break;
      case AncillaVariant::Qutrit:
        scenario.ancilla_states.push_back(decode_euler_qutrit(block));
        break;
    }
  }
  return scenario;
}

}  // namespace qcollide
