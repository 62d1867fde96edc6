#include "qcollide/density.hpp"

#include <cmath>
#include <string>

namespace qcollide {

DensityMatrix DensityMatrix::validated(ComplexMatrix m) {
  DensityMatrix rho(std::move(m));
  rho.check();
  return rho;
}

DensityMatrix DensityMatrix::unchecked(ComplexMatrix m) {
  return DensityMatrix(std::move(m));
}

void DensityMatrix::check() const {
  if (m_.rows() != m_.cols() || m_.rows() == 0) {
    throw DimensionError("density matrix must be square and non-empty");
  }
  double herm_dev = (m_ - m_.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw PhysicalityError("density matrix not Hermitian: max deviation " +
                           std::to_string(herm_dev));
  }
  double trace_dev = std::abs(m_.trace() - Complex(1.0, 0.0));
  if (trace_dev > kTraceTol) {
    throw PhysicalityError("density matrix trace differs from 1 by " +
                           std::to_string(trace_dev));
  }
  HermitianEig eig = hermitian_eig(m_);
  double min_eig = eig.eigenvalues.minCoeff();
  if (min_eig < kEigenvalueFloor) {
    throw PhysicalityError("density matrix has negative eigenvalue " +
                           std::to_string(min_eig));
  }
}

DensityMatrix partial_trace_ancilla(const DensityMatrix& joint, int dim_s,
                                    int dim_a) {
  return DensityMatrix::unchecked(
      partial_trace_ancilla(joint.matrix(), dim_s, dim_a));
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("trace_distance: states have dimensions " +
                         std::to_string(a.dim()) + " and " +
                         std::to_string(b.dim()));
  }
  HermitianEig eig = hermitian_eig(a.matrix() - b.matrix());
  return 0.5 * eig.eigenvalues.cwiseAbs().sum();
}

double von_neumann_entropy(const DensityMatrix& rho) {
  HermitianEig eig = hermitian_eig(rho.matrix());
  double entropy = 0.0;
  for (Eigen::Index k = 0; k < eig.eigenvalues.size(); ++k) {
    double w = eig.eigenvalues[k];
    if (w < kEigenvalueFloor) {
      throw PhysicalityError("von_neumann_entropy: eigenvalue " +
                             std::to_string(w) + " below the positivity floor");
    }
    if (w > 0.0) {
      entropy -= w * std::log(w);
    }
  }
  return entropy;
}

double purity(const DensityMatrix& rho) {
  return trace_product(rho.matrix(), rho.matrix()).real();
}

double expectation(const DensityMatrix& rho, const ComplexMatrix& op) {
  return trace_product(rho.matrix(), op).real();
}

}  // namespace qcollide
