#include "qcollide/objective.hpp"

#include <cmath>
#include <iostream>
#include <string>

namespace qcollide {

namespace {

constexpr double kUncertaintyHardFloor = 0.5 - 1e-6;
constexpr double kLeakageWarning = 1e-4;

// h(x) = (x+1/2)log(x+1/2) - (x-1/2)log(x-1/2); the entropy of a Gaussian
// state with symplectic eigenvalue x. h(1/2) = 0.
double gaussian_entropy(double x) {
  double plus = (x + 0.5) * std::log(x + 0.5);
  double minus = x - 0.5;
  if (minus > 0.0) {
    plus -= minus * std::log(minus);
  }
  return plus;
}

}  // namespace

QuadratureFrame::QuadratureFrame(const FockSpace& space) {
  ComplexMatrix a = annihilation(space);
  x0 = 0.5 * (a + a.adjoint());
  x90 = 0.5 * (Complex(0, -1) * a + Complex(0, 1) * a.adjoint());
}

Eigen::Matrix2d covariance_matrix(const DensityMatrix& rho) {
  CovarianceInfo ignored;
  return covariance_matrix(rho, ignored);
}

Eigen::Matrix2d covariance_matrix(const DensityMatrix& rho,
                                  CovarianceInfo& info) {
  info.leakage = truncation_leakage(rho);
  info.truncation_flag = info.leakage > kLeakageWarning;

  QuadratureFrame q{FockSpace(rho.dim())};
  ComplexMatrix p0 = rho.matrix() * q.x0;
  ComplexMatrix p90 = rho.matrix() * q.x90;
  double m0 = p0.trace().real();
  double m90 = p90.trace().real();
  double x0x0 = trace_product(p0, q.x0).real();
  double x90x90 = trace_product(p90, q.x90).real();
  double cross =
      (trace_product(p0, q.x90) + trace_product(p90, q.x0)).real();

  Eigen::Matrix2d sigma;
  sigma(0, 0) = 2.0 * (x0x0 - m0 * m0);
  sigma(1, 1) = 2.0 * (x90x90 - m90 * m90);
  sigma(0, 1) = cross - 2.0 * m0 * m90;
  sigma(1, 0) = sigma(0, 1);
  return sigma;
}

double nongaussianity(const DensityMatrix& rho) {
  Eigen::Matrix2d sigma = covariance_matrix(rho);
  double det = sigma.determinant();
  double nu = det > 0.0 ? std::sqrt(det) : 0.0;
  if (nu < kUncertaintyHardFloor) {
    throw PhysicalityError(
        "nongaussianity: sqrt(det sigma) = " + std::to_string(nu) +
        " violates the uncertainty bound 1/2; the truncation has damaged the "
        "state");
  }
  nu = std::max(nu, 0.5);
  double value = gaussian_entropy(nu) - von_neumann_entropy(rho);
  if (value < 0.0) {
    if (value < -1e-8) {
      std::cerr << "warning: nongaussianity clamped from " << value << " to 0\n";
    }
    value = 0.0;
  }
  return value;
}

double fitness_trace_distance(const DensityMatrix& state,
                              const DensityMatrix& target) {
  return -trace_distance(state, target);
}

Objective Objective::trace_distance_to(DensityMatrix target) {
  Objective o;
  o.has_target_ = true;
  o.target_ = std::move(target);
  return o;
}

Objective Objective::maximize_nongaussianity() {
  return Objective{};
}

double Objective::evaluate(const DensityMatrix& final_state) const {
  if (has_target_) {
    return fitness_trace_distance(final_state, target_);
  }
  return nongaussianity(final_state);
}

}  // namespace qcollide
