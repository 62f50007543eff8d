#pragma once

#include "airysum/states.hpp"

namespace airysum {

// Closed-form matrix elements of the half-oscillator states psi~_n (the odd
// oscillator eigenfunctions restricted to y >= 0 and renormalized), plus the
// surface-term recursion that generates matrix elements of y^q for both the
// half and the full oscillator.

// <psi~_n | y | psi~_m> = -psi~_n'(0) psi~_m'(0) / (2 [4(n-m)^2 - 1]).
// The diagonal reduces to D_n/(2 sqrt(pi)).
double dipole_half_sho(int n, int m);

// <psi~_n | y^2 | psi~_m>: tridiagonal, a relabelling of the oscillator x^2
// element; the diagonal is 2n + 3/2.
double y2_half_sho(int n, int m);

// <psi~_n | y^3 | psi~_m> = 3 (2n+2m+3) psi~_n'(0) psi~_m'(0)
//                           / ([4(n-m)^2 - 9][4(n-m)^2 - 1]).
double y3_half_sho(int n, int m);

// Surface-term recursion in q:
//   [(eps_n - eps_m)^2 - 4q^2] G_q
//       = J(q) - 4 eps_ave q(q-1) G_{q-2} - q(q-1)(q-2)(q-3) G_{q-4}
// where G_q = <n| y^q |m>, J(1) = -2 psi_n'(0) psi_m'(0) for the half
// oscillator (all other surface terms vanish at a hard wall) and J == 0 for
// the full oscillator.  The bracket vanishes when q = |eps_n - eps_m|/2
// (the outermost selection-rule band); those cases are served by closed
// forms where available (half-SHO q = 2, |n-m| = 1) and otherwise throw
// std::invalid_argument, since the recursion genuinely carries no
// information there.
//
// Supported systems: HalfSHO and FullSHO.
double oscillator_recursion(SystemId system, int q, int n, int m);

}  // namespace airysum
