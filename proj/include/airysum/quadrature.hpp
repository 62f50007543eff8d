#pragma once

#include <functional>
#include <vector>

#include "airysum/states.hpp"

namespace airysum {

struct QuadratureConfig {
    double rel_tol = 1e-10;   // requested relative accuracy
    double abs_floor = 1e-13; // absolute acceptance floor for near-zero results
    double pad = 15.0;        // domain extends this far past the outer turning point
    double panel = 0.5;       // starting composite panel width
    int max_halvings = 4;
};

// Gauss-Legendre nodes/weights on [-1, 1], computed once per order by Newton
// iteration on P_n and cached.
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
const GaussRule& gauss_legendre(int points);

// Composite-panel integral of f over [a, b] with panel-halving refinement.
// Throws AccuracyError when the halving estimate cannot reach the tolerance.
double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          const QuadratureConfig& cfg, double* achieved = nullptr);

// Raw product moments used to cross-check the closed forms:
//   integral_0^inf y^p Ai(y - b1) Ai(y - b2) dy
double airy_product_moment(int p, double b1, double b2, const QuadratureConfig& cfg = {});
//   integral_0^inf Ai'(y - b1) Ai'(y - b2) dy
double airy_prime_product_moment(double b1, double b2, const QuadratureConfig& cfg = {});

// Independent quadrature oracle for matrix elements <a| y^p |b>.
//
// Conventions (the ones every closed form in this library uses):
//  * SymmetricLinear / Bouncer: the integral runs over [0, y_max] with the
//    half-line-normalized wavefunctions
//        phi_n(y) = Ai(y - zeta_n) / Ai'(-zeta_n)            (odd / bouncer)
//        phi_n(y) = Ai(y - eta_n) / (sqrt(eta_n) Ai(-eta_n)) (even)
//    For states of the symmetric potential this equals the full-line matrix
//    element whenever the full-line integrand is even; for same-parity
//    states and odd p it is the half-line moment <|y|^p> instead.
//  * HalfSHO: psi~_n = sqrt(2) * (oscillator eigenfunction 2n+1) on [0, inf).
//  * FullSHO: full-line element; vanishes by parity unless n_a + n_b + p is
//    even, in which case it equals twice the half-line integral.
//
// Both states must belong to the same system family (Bouncer pairs with
// SymmetricLinear odd states).  Declared relative accuracy 1e-10 for
// indices <= 20 and p <= 8.
double quad_matrix_element(const SpectralPoint& a, const SpectralPoint& b, int p,
                           const QuadratureConfig& cfg = {});

// Signed half-line-normalized wavefunction value (exposed for the
// semiclassical-density machinery and tests).
double wavefunction(const SpectralPoint& state, double y);

}  // namespace airysum
