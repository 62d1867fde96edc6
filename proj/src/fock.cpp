#include "qcollide/fock.hpp"

#include <cmath>
#include <string>

namespace qcollide {

FockSpace::FockSpace(int n_levels) : n_levels(n_levels) {
  if (n_levels < 2) {
    throw DimensionError("FockSpace: need at least 2 levels, got " +
                         std::to_string(n_levels));
  }
}

ComplexMatrix annihilation(const FockSpace& space) {
  ComplexMatrix a = ComplexMatrix::Zero(space.n_levels, space.n_levels);
  for (int m = 0; m + 1 < space.n_levels; ++m) {
    a(m, m + 1) = std::sqrt(static_cast<double>(m + 1));
  }
  return a;
}

ComplexMatrix creation(const FockSpace& space) {
  return annihilation(space).adjoint();
}

ComplexMatrix number_operator(const FockSpace& space) {
  ComplexMatrix n = ComplexMatrix::Zero(space.n_levels, space.n_levels);
  for (int m = 0; m < space.n_levels; ++m) {
    n(m, m) = static_cast<double>(m);
  }
  return n;
}

ComplexMatrix system_hamiltonian(const FockSpace& space, double omega_c) {
  if (!(omega_c > 0.0) || !std::isfinite(omega_c)) {
    throw PhysicalityError("system_hamiltonian: omega_c must be positive, got " +
                           std::to_string(omega_c));
  }
  ComplexMatrix h = ComplexMatrix::Zero(space.n_levels, space.n_levels);
  for (int m = 0; m < space.n_levels; ++m) {
    h(m, m) = omega_c * (m + 0.5);
  }
  return h;
}

DensityMatrix vacuum_state(const FockSpace& space) {
  return fock_state(space, 0);
}

DensityMatrix fock_state(const FockSpace& space, int k) {
  if (k < 0 || k >= space.n_levels) {
    throw DimensionError("fock_state: level " + std::to_string(k) +
                         " outside a " + std::to_string(space.n_levels) +
                         "-level space");
  }
  ComplexMatrix m = ComplexMatrix::Zero(space.n_levels, space.n_levels);
  m(k, k) = 1.0;
  return DensityMatrix::unchecked(std::move(m));
}

double truncation_leakage(const DensityMatrix& rho) {
  int d = rho.dim();
  double leak = rho.population(d - 1);
  if (d >= 2) {
    leak += rho.population(d - 2);
  }
  return leak;
}

}  // namespace qcollide
