#include "qcollide/ancilla.hpp"

#include <array>
#include <cmath>
#include <string>

namespace qcollide {

namespace {

ComplexMatrix make2(Complex a00, Complex a01, Complex a10, Complex a11) {
  ComplexMatrix m(2, 2);
  m << a00, a01, a10, a11;
  return m;
}

}  // namespace

const ComplexMatrix& sigma_x() {
  static const ComplexMatrix m = make2(0, 1, 1, 0);
  return m;
}

const ComplexMatrix& sigma_y() {
  static const ComplexMatrix m = make2(0, Complex(0, -1), Complex(0, 1), 0);
  return m;
}

const ComplexMatrix& sigma_z() {
  static const ComplexMatrix m = make2(1, 0, 0, -1);
  return m;
}

const ComplexMatrix& sigma_plus() {
  // |excited⟩⟨ground| in the (excited, ground) basis.
  static const ComplexMatrix m = make2(0, 1, 0, 0);
  return m;
}

const ComplexMatrix& sigma_minus() {
  static const ComplexMatrix m = make2(0, 0, 1, 0);
  return m;
}

const ComplexMatrix& gell_mann(int i) {
  static const std::array<ComplexMatrix, 8> lambdas = [] {
    std::array<ComplexMatrix, 8> l;
    for (auto& m : l) m = ComplexMatrix::Zero(3, 3);
    l[0](0, 1) = 1;
    l[0](1, 0) = 1;
    l[1](0, 1) = Complex(0, -1);
    l[1](1, 0) = Complex(0, 1);
    l[2](0, 0) = 1;
    l[2](1, 1) = -1;
    l[3](0, 2) = 1;
    l[3](2, 0) = 1;
    l[4](0, 2) = Complex(0, -1);
    l[4](2, 0) = Complex(0, 1);
    l[5](1, 2) = 1;
    l[5](2, 1) = 1;
    l[6](1, 2) = Complex(0, -1);
    l[6](2, 1) = Complex(0, 1);
    const double s = 1.0 / std::sqrt(3.0);
    l[7](0, 0) = s;
    l[7](1, 1) = s;
    l[7](2, 2) = -2.0 * s;
    return l;
  }();
  if (i < 1 || i > 8) {
    throw DimensionError("gell_mann: index " + std::to_string(i) +
                         " outside 1..8");
  }
  return lambdas[static_cast<std::size_t>(i - 1)];
}

AncillaKind AncillaKind::diagonal_qubit(double omega_a) {
  AncillaKind k;
  k.variant = AncillaVariant::DiagonalQubit;
  k.omega_a = omega_a;
  k.validate();
  return k;
}

AncillaKind AncillaKind::generic_qubit(double omega_a) {
  AncillaKind k;
  k.variant = AncillaVariant::GenericQubit;
  k.omega_a = omega_a;
  k.validate();
  return k;
}

AncillaKind AncillaKind::qutrit(double omega_1, double omega_2) {
  AncillaKind k;
  k.variant = AncillaVariant::Qutrit;
  k.omega_1 = omega_1;
  k.omega_2 = omega_2;
  k.validate();
  return k;
}

ComplexMatrix AncillaKind::hamiltonian() const {
  if (is_qubit()) {
    return 0.5 * omega_a * sigma_z();
  }
  ComplexMatrix h = ComplexMatrix::Zero(3, 3);
  h(1, 1) = omega_1;
  h(2, 2) = omega_2;
  return h;
}

void AncillaKind::validate() const {
  if (is_qubit()) {
    if (!std::isfinite(omega_a)) {
      throw PhysicalityError("ancilla omega_a is not finite");
    }
    return;
  }
  if (!std::isfinite(omega_1) || !std::isfinite(omega_2)) {
    throw PhysicalityError("qutrit frequencies are not finite");
  }
  if (omega_2 < omega_1) {
    throw PhysicalityError("qutrit levels out of order: omega_1 = " +
                           std::to_string(omega_1) + " > omega_2 = " +
                           std::to_string(omega_2));
  }
}

}  // namespace qcollide
