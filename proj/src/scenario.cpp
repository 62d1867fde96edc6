#include "qcollide/scenario.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

namespace qcollide {

void CollisionScenario::validate() const {
  ancilla.validate();
  if (!(t_c > 0.0) || !std::isfinite(t_c)) {
    throw PhysicalityError("scenario: collision time must be positive, got " +
                           std::to_string(t_c));
  }
  if (ancilla_states.empty()) {
    throw PhysicalityError("scenario: needs at least one collision");
  }
  if (initial_state.dim() != space.n_levels) {
    throw DimensionError("scenario: initial state dimension " +
                         std::to_string(initial_state.dim()) +
                         " does not match n_levels = " +
                         std::to_string(space.n_levels));
  }
  for (const DensityMatrix& rho_a : ancilla_states) {
    if (rho_a.dim() != ancilla.dim()) {
      throw DimensionError("scenario: ancilla state dimension " +
                           std::to_string(rho_a.dim()) + " does not match a " +
                           std::to_string(ancilla.dim()) + "-level ancilla");
    }
  }
}

ComplexMatrix interaction_hamiltonian(const FockSpace& space,
                                      const AncillaKind& ancilla,
                                      const CouplingConstants& couplings) {
  ancilla.validate();
  if (!std::isfinite(couplings.g_l) || !std::isfinite(couplings.g_nl) ||
      !std::isfinite(couplings.g_l1) || !std::isfinite(couplings.g_l2)) {
    throw PhysicalityError(
        "interaction_hamiltonian: non-finite coupling constant");
  }
  int da = ancilla.dim();
  ComplexMatrix a = annihilation(space);
  ComplexMatrix h =
      ComplexMatrix::Zero(static_cast<Eigen::Index>(space.n_levels) * da,
                          static_cast<Eigen::Index>(space.n_levels) * da);

  if (ancilla.is_qubit()) {
    ComplexMatrix exchange = tensor(a, sigma_plus());
    ComplexMatrix two_photon = tensor((a * a).eval(), sigma_plus());
    h += couplings.g_l * (exchange + exchange.adjoint());
    h += couplings.g_nl * (two_photon + two_photon.adjoint());
  } else {
    ComplexMatrix e01 = ComplexMatrix::Zero(3, 3);
    ComplexMatrix e12 = ComplexMatrix::Zero(3, 3);
    ComplexMatrix e02 = ComplexMatrix::Zero(3, 3);
    e01(0, 1) = 1.0;
    e12(1, 2) = 1.0;
    e02(0, 2) = 1.0;
    ComplexMatrix l1 = tensor(a, e01);
    ComplexMatrix l2 = tensor(a, e12);
    ComplexMatrix nl = tensor((a * a).eval(), e02);
    h += couplings.g_l1 * (l1 + l1.adjoint());
    h += couplings.g_l2 * (l2 + l2.adjoint());
    h += couplings.g_nl * (nl + nl.adjoint());
  }
  return h;
}

ComplexMatrix joint_hamiltonian(const FockSpace& space, double omega_c,
                                const AncillaKind& ancilla,
                                const CouplingConstants& couplings) {
  int da = ancilla.dim();
  ComplexMatrix id_s = ComplexMatrix::Identity(space.n_levels, space.n_levels);
  ComplexMatrix id_a = ComplexMatrix::Identity(da, da);
  return tensor(system_hamiltonian(space, omega_c), id_a) +
         tensor(id_s, ancilla.hamiltonian()) +
         interaction_hamiltonian(space, ancilla, couplings);
}

DensityMatrix collide(const DensityMatrix& rho_s, const DensityMatrix& rho_a,
                      const ComplexMatrix& u) {
  int ds = rho_s.dim();
  int da = rho_a.dim();
  if (u.rows() != u.cols() ||
      u.rows() != static_cast<Eigen::Index>(ds) * da) {
    throw DimensionError("collide: propagator is " + std::to_string(u.rows()) +
                         "x" + std::to_string(u.cols()) + ", expected " +
                         std::to_string(ds * da) + " square");
  }
  ComplexMatrix joint = tensor(rho_s.matrix(), rho_a.matrix());
  ComplexMatrix evolved = u * joint * u.adjoint();
  ComplexMatrix reduced = partial_trace_ancilla(evolved, ds, da);
  return DensityMatrix::unchecked(0.5 * (reduced + reduced.adjoint()));
}

CollisionEngine::CollisionEngine(const FockSpace& space, double omega_c,
                                 const AncillaKind& ancilla,
                                 const CouplingConstants& couplings, double t_c)
    : CollisionEngine(joint_hamiltonian(space, omega_c, ancilla, couplings),
                      space.n_levels, ancilla.dim(), t_c) {}

CollisionEngine::CollisionEngine(const ComplexMatrix& h_joint, int system_dim,
                                 int ancilla_dim, double t_c)
    : dim_s_(system_dim), dim_a_(ancilla_dim) {
  if (!(t_c > 0.0) || !std::isfinite(t_c)) {
    throw PhysicalityError("CollisionEngine: collision time must be positive");
  }
  if (dim_s_ < 1 || dim_a_ < 1 || h_joint.rows() != h_joint.cols() ||
      h_joint.rows() != static_cast<Eigen::Index>(dim_s_) * dim_a_) {
    throw DimensionError("CollisionEngine: Hamiltonian is " +
                         std::to_string(h_joint.rows()) + "x" +
                         std::to_string(h_joint.cols()) + ", expected " +
                         std::to_string(dim_s_) + "*" + std::to_string(dim_a_) +
                         " square");
  }
  u_ = qcollide::propagator(h_joint, t_c);
  blocks_.resize(static_cast<std::size_t>(dim_a_) * dim_a_);
  for (int a = 0; a < dim_a_; ++a) {
    for (int b = 0; b < dim_a_; ++b) {
      ComplexMatrix block(dim_s_, dim_s_);
      for (int i = 0; i < dim_s_; ++i) {
        for (int k = 0; k < dim_s_; ++k) {
          block(i, k) = u_(i * dim_a_ + a, k * dim_a_ + b);
        }
      }
      blocks_[static_cast<std::size_t>(a) * dim_a_ + b] = std::move(block);
    }
  }
}

DensityMatrix CollisionEngine::step(const DensityMatrix& rho_s,
                                    const DensityMatrix& rho_a) const {
  if (rho_s.dim() != dim_s_ || rho_a.dim() != dim_a_) {
    throw DimensionError("CollisionEngine::step: state dimensions " +
                         std::to_string(rho_s.dim()) + "/" +
                         std::to_string(rho_a.dim()) + " do not match engine " +
                         std::to_string(dim_s_) + "/" + std::to_string(dim_a_));
  }
  // Expand rho_a over its eigenvectors v_m; for each (m, ancilla-out index a)
  // the collision contributes p_m W rho_s W† with W = sum_b v_m[b] U_block[a][b].
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_a.matrix());
  if (es.info() != Eigen::Success) {
    throw NumericalError("CollisionEngine::step: ancilla eigensolver failed");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_s_, dim_s_);
  ComplexMatrix w(dim_s_, dim_s_);
  ComplexMatrix tmp(dim_s_, dim_s_);
  for (int m = 0; m < dim_a_; ++m) {
    double p = es.eigenvalues()[m];
    if (p < kEigenvalueFloor) {
      throw PhysicalityError("CollisionEngine::step: ancilla eigenvalue " +
                             std::to_string(p));
    }
    if (p <= 0.0) {
      continue;
    }
    ComplexVector v = es.eigenvectors().col(m);
    for (int a = 0; a < dim_a_; ++a) {
      w.setZero();
      for (int b = 0; b < dim_a_; ++b) {
        w.noalias() += v[b] * blocks_[static_cast<std::size_t>(a) * dim_a_ + b];
      }
      tmp.noalias() = w * rho_s.matrix();
      out.noalias() += p * (tmp * w.adjoint());
    }
  }
  return DensityMatrix::unchecked(0.5 * (out + out.adjoint()));
}

DensityMatrix CollisionEngine::run(
    const DensityMatrix& initial,
    const std::vector<DensityMatrix>& ancilla_states) const {
  DensityMatrix state = initial;
  for (const DensityMatrix& rho_a : ancilla_states) {
    state = step(state, rho_a);
  }
  return state;
}

std::vector<DensityMatrix> run_trajectory(const CollisionScenario& scenario) {
  scenario.validate();
  CollisionEngine engine(scenario.space, scenario.omega_c, scenario.ancilla,
                         scenario.couplings, scenario.t_c);
  std::vector<DensityMatrix> trajectory;
  trajectory.reserve(scenario.ancilla_states.size() + 1);
  trajectory.push_back(scenario.initial_state);
  for (const DensityMatrix& rho_a : scenario.ancilla_states) {
    trajectory.push_back(engine.step(trajectory.back(), rho_a));
  }
  return trajectory;
}

DensityMatrix final_state(const CollisionScenario& scenario) {
  scenario.validate();
  CollisionEngine engine(scenario.space, scenario.omega_c, scenario.ancilla,
                         scenario.couplings, scenario.t_c);
  return engine.run(scenario.initial_state, scenario.ancilla_states);
}

}  // namespace qcollide
