#pragma once

#include <complex>

#include <Eigen/Dense>

#include "qcollide/errors.hpp"

namespace qcollide {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

struct HermitianEig {
  RealVector eigenvalues;      // ascending
  ComplexMatrix eigenvectors;  // unitary, columns match eigenvalues
};

// Eigendecomposition of a Hermitian matrix. The input is symmetrized as
// (m + m†)/2 before decomposition so that roundoff-level asymmetry never
// changes the result.
HermitianEig hermitian_eig(const ComplexMatrix& m);

// exp(-i h t) for Hermitian h, built from the spectral decomposition.
ComplexMatrix propagator(const ComplexMatrix& h, double t);

// Kronecker product a ⊗ b. The left factor owns the slow index: a composite
// basis state |i⟩_a|k⟩_b sits at row i*rows(b)+k. Throughout the library the
// system is the left factor and the ancilla the right one.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// Trace over the fast (right/ancilla) index of a dim_s*dim_a square matrix:
// out[i,j] = sum_k joint[(i,k),(j,k)].
ComplexMatrix partial_trace_ancilla(const ComplexMatrix& joint, int dim_s,
                                    int dim_a);

// tr(a*b) in O(dim^2), without forming the product.
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qcollide
