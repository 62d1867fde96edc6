#include "qcollide/linalg.hpp"

#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace qcollide {

HermitianEig hermitian_eig(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("hermitian_eig: matrix is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", expected square");
  }
  ComplexMatrix sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("hermitian_eig: eigensolver failed to converge on a " +
                         std::to_string(m.rows()) + "-dimensional matrix");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

ComplexMatrix propagator(const ComplexMatrix& h, double t) {
  if (!std::isfinite(t)) {
    throw NumericalError("propagator: non-finite time");
  }
  HermitianEig eig = hermitian_eig(h);
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases[k] = std::exp(Complex(0.0, -eig.eigenvalues[k] * t));
  }
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  return Eigen::kroneckerProduct(a, b);
}

ComplexMatrix partial_trace_ancilla(const ComplexMatrix& joint, int dim_s,
                                    int dim_a) {
  if (dim_s < 1 || dim_a < 1) {
    throw DimensionError("partial_trace_ancilla: dimensions must be positive");
  }
  if (joint.rows() != joint.cols() ||
      joint.rows() != static_cast<Eigen::Index>(dim_s) * dim_a) {
    throw DimensionError(
        "partial_trace_ancilla: joint matrix is " + std::to_string(joint.rows()) +
        "x" + std::to_string(joint.cols()) + ", expected " +
        std::to_string(dim_s * dim_a) + " square");
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim_s, dim_s);
  for (int i = 0; i < dim_s; ++i) {
    for (int j = 0; j < dim_s; ++j) {
      Complex sum = 0.0;
      for (int k = 0; k < dim_a; ++k) {
        sum += joint(i * dim_a + k, j * dim_a + k);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionError("trace_product: incompatible shapes");
  }
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace qcollide
