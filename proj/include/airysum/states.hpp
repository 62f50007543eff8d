#pragma once

#include <string>

namespace airysum {

enum class SystemId { SymmetricLinear, Bouncer, HalfSHO, FullSHO };
enum class Parity { Even, Odd, None };

// One bound state.  Dimensionless conventions throughout: rho = 1 for the
// linear systems (lengths in units of (hbar^2/2mF)^(1/3), energies in units
// of rho*F) and beta = 1, epsilon = 2E/(hbar*omega) for the oscillators.
//
// Index origin matches the usual labelling: n >= 1 for the linear-potential
// families (zeta_1 is the first Ai zero), n >= 0 for the oscillators.
struct SpectralPoint {
    SystemId system;
    Parity parity;
    int n;
    double lambda;  // zeta_n, eta_n, or epsilon_n
};

// Builds a validated state with its eigenvalue filled in.
//   SymmetricLinear: parity Odd -> lambda = zeta_n; Even -> lambda = eta_n.
//   Bouncer:         parity ignored (stored None), lambda = zeta_n.
//   HalfSHO:         lambda = 4n+3.   FullSHO: lambda = 2n+1, parity (-1)^n.
SpectralPoint make_state(SystemId system, Parity parity, int n);

inline SpectralPoint make_state(SystemId system, int n) {
    return make_state(system, Parity::None, n);
}

// Dimensionless eigenvalue (zeta_n / eta_n / 4n+3 / 2n+1).
double energy(const SpectralPoint& state);

// Origin data: psi_n(0) for the linear systems and the bouncer (0 for odd
// states by the boundary condition, 1/sqrt(2 eta_n) for even states), and
// the origin slope psi~_n'(0) = (-1)^n sqrt(D_n/sqrt(pi)) for the half
// oscillator.  FullSHO is not supported (throws std::domain_error).
double boundary_value(const SpectralPoint& state);

// Upper classical turning point A_n of the state (dimensionless).
double turning_point(const SpectralPoint& state);

std::string to_string(SystemId system);
std::string to_string(Parity parity);

}  // namespace airysum
