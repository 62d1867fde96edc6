#pragma once

#include "qcollide/density.hpp"
#include "qcollide/fock.hpp"

namespace qcollide {

// Gibbs state e^{-beta h}/Z on the spectrum of h. Negative beta is allowed
// (population inversion); the extremal energy is subtracted before
// exponentiation so large |beta| stays finite.
DensityMatrix thermal_state(const ComplexMatrix& hamiltonian, double beta);

// D(alpha) = exp(alpha a† - alpha* a), built on the truncated ladder operators.
ComplexMatrix displacement_operator(const FockSpace& space, Complex alpha);

// S(zeta) = exp[(zeta* a² - zeta a†²)/2].
ComplexMatrix squeeze_operator(const FockSpace& space, Complex zeta);

// D(alpha)|0⟩⟨0|D†(alpha). Throws TruncationError (naming a sufficient
// n_levels) when the top two Fock levels would carry 1e-6 or more of the
// ideal state's weight; otherwise the truncated vector is renormalized.
DensityMatrix coherent_state(const FockSpace& space, Complex alpha);

// S(zeta)|0⟩⟨0|S†(zeta), same truncation policy as coherent_state.
DensityMatrix squeezed_vacuum(const FockSpace& space, Complex zeta);

}  // namespace qcollide
