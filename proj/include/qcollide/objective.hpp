#pragma once

#include <Eigen/Dense>

#include "qcollide/density.hpp"
#include "qcollide/fock.hpp"

namespace qcollide {

// Quadratures X_phi = (a e^{-i phi} + a† e^{i phi})/2 at phi = 0 and pi/2.
struct QuadratureFrame {
  explicit QuadratureFrame(const FockSpace& space);

  ComplexMatrix x0;
  ComplexMatrix x90;
};

struct CovarianceInfo {
  double leakage = 0.0;        // top-two-level population
  bool truncation_flag = false;  // leakage > 1e-4
};

// Covariance of (X_0, X_{pi/2}) in the doubled convention
// sigma_ij = ⟨X_i X_j + X_j X_i⟩ − ⟨X_i⟩⟨X_j⟩ (no 1/2 on the symmetrized
// moment), so the vacuum gives diag(1/2, 1/2) and sqrt(det σ) = 1/2.
Eigen::Matrix2d covariance_matrix(const DensityMatrix& rho);
Eigen::Matrix2d covariance_matrix(const DensityMatrix& rho, CovarianceInfo& info);

// Relative entropy of non-Gaussianity S(rho ‖ rho_G) = h(sqrt(det σ)) − S(rho)
// with h(x) = (x+1/2)log(x+1/2) − (x−1/2)log(x−1/2). Zero for thermal,
// coherent and squeezed-vacuum states; (k+1)log(k+1) − k·log k for |k⟩⟨k|.
// sqrt(det σ) below 1/2 − 1e-6 means the truncation destroyed the state:
// PhysicalityError. Tiny negative results are clamped to 0.
double nongaussianity(const DensityMatrix& rho);

// -trace_distance(state, target) ∈ [-1, 0]; 0 is a perfect match.
double fitness_trace_distance(const DensityMatrix& state,
                              const DensityMatrix& target);

// What a collision run is scored by: either closeness to a target state or
// the non-Gaussianity of whatever the run produces.
class Objective {
 public:
  static Objective trace_distance_to(DensityMatrix target);
  static Objective maximize_nongaussianity();

  double evaluate(const DensityMatrix& final_state) const;

  bool has_target() const { return has_target_; }
  const DensityMatrix& target() const { return target_; }

 private:
  bool has_target_ = false;
  DensityMatrix target_;
};

}  // namespace qcollide
