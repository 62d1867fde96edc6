#include "qcollide/states.hpp"

#include <cmath>
#include <string>

namespace qcollide {

namespace {

constexpr double kLeakageLimit = 1e-6;

// Smallest n_levels keeping the ideal top-two-level weight under the limit,
// from the exact photon-number distribution.
int required_levels_coherent(double nbar) {
  // Poisson(nbar): p_{k+1} = p_k * nbar / (k+1).
  double p = std::exp(-nbar);
  double tail = 1.0;  // sum_{j >= k} p_j, starts at k = 0
  int k = 0;
  while (k < 100000) {
    // Truncating to d levels keeps |0⟩..|d-1⟩; the top two levels carry
    // p_{d-2} + p_{d-1} <= tail from k = d-2.
    if (tail < kLeakageLimit) {
      return k + 2;
    }
    tail -= p;
    p *= nbar / (k + 1);
    ++k;
  }
  return k;
}

int required_levels_squeezed(double r) {
  // Even-level weights: p_0 = 1/cosh r, p_{2(m+1)} = p_{2m} tanh²r (2m+1)/(2m+2).
  double t2 = std::tanh(r) * std::tanh(r);
  double p = 1.0 / std::cosh(r);
  double tail = 1.0;
  int m = 0;
  while (m < 100000) {
    if (tail < kLeakageLimit) {
      return 2 * m + 2;
    }
    tail -= p;
    p *= t2 * (2 * m + 1) / (2 * m + 2);
    ++m;
  }
  return 2 * m;
}

DensityMatrix pure_state_through(const ComplexMatrix& op, const FockSpace& space,
                                 int suggested_levels, const char* what) {
  ComplexVector psi = op.col(0);  // op|0⟩
  int d = space.n_levels;
  double leak = std::norm(psi[d - 1]) + std::norm(psi[d - 2]);
  if (leak >= kLeakageLimit) {
    throw TruncationError(
        std::string(what) + ": top-two-level population " +
            std::to_string(leak) + " at n_levels = " + std::to_string(d) +
            "; need about " + std::to_string(suggested_levels) + " levels",
        suggested_levels);
  }
  psi /= psi.norm();
  return DensityMatrix::unchecked(psi * psi.adjoint());
}

}  // namespace

DensityMatrix thermal_state(const ComplexMatrix& hamiltonian, double beta) {
  if (!std::isfinite(beta)) {
    throw PhysicalityError("thermal_state: beta is not finite");
  }
  HermitianEig eig = hermitian_eig(hamiltonian);
  // exp(-beta(E - E*)) with E* the extremal energy keeps all exponents <= 0.
  double shift = beta >= 0 ? eig.eigenvalues.minCoeff() : eig.eigenvalues.maxCoeff();
  RealVector weights(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < weights.size(); ++k) {
    weights[k] = std::exp(-beta * (eig.eigenvalues[k] - shift));
  }
  weights /= weights.sum();
  return DensityMatrix::unchecked(eig.eigenvectors * weights.asDiagonal() *
                                  eig.eigenvectors.adjoint());
}

ComplexMatrix displacement_operator(const FockSpace& space, Complex alpha) {
  // alpha a† - alpha* a is anti-Hermitian; exp of it is the propagator of the
  // Hermitian i(alpha a† - alpha* a) at unit time.
  ComplexMatrix k = Complex(0, 1) * (alpha * creation(space) -
                                     std::conj(alpha) * annihilation(space));
  return propagator(k, 1.0);
}

ComplexMatrix squeeze_operator(const FockSpace& space, Complex zeta) {
  ComplexMatrix a = annihilation(space);
  ComplexMatrix k =
      Complex(0, 0.5) * (std::conj(zeta) * (a * a).eval() -
                         zeta * (a.adjoint() * a.adjoint()).eval());
  return propagator(k, 1.0);
}

DensityMatrix coherent_state(const FockSpace& space, Complex alpha) {
  return pure_state_through(displacement_operator(space, alpha), space,
                            required_levels_coherent(std::norm(alpha)),
                            "coherent_state");
}

DensityMatrix squeezed_vacuum(const FockSpace& space, Complex zeta) {
  return pure_state_through(squeeze_operator(space, zeta), space,
                            required_levels_squeezed(std::abs(zeta)),
                            "squeezed_vacuum");
}

}  // namespace qcollide
