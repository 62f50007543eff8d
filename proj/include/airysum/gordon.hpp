#pragma once

namespace airysum {

// Closed-form definite integrals of Airy-function products over [0, inf),
// assembled from the four surface quantities evaluated at the lower endpoint
// (the upper endpoint vanishes by the decay of Ai):
//   F1 = A B,  F2 = A'B - AB',  F3 = A'B + AB',  F4 = A'B'
// with A = Ai(z - beta1), B = Ai(z - beta2).  These are the Gordon/Albright
// antiderivatives specialized to pure-Ai solutions.
struct AiryProductIntegral {
    int p;
    double beta1;
    double beta2;
    double value;             // integral_0^inf z^p Ai(z-beta1) Ai(z-beta2) dz
    double f1, f2, f3, f4;    // surface quantities at z = 0
};

// p in {0, 1, 2}; shifts must be positive.  Exactly equal shifts take the
// equal-shift antiderivative; nearly coincident but unequal shifts throw
// std::domain_error (the distinct-shift forms lose ~5 digits per decade of
// shift separation).  p > 2 throws std::invalid_argument: higher diagonal
// moments come from the moment recursion instead.
AiryProductIntegral gordon_integral(int p, double shift_a, double shift_b);

// integral_0^inf [Ai'(z - shift)]^2 dz, the derivative-product companion
// used by the kinetic-energy virial check.
double derivative_integral(double shift);

// Full-line dipole matrix element of the symmetric linear potential between
// the n-th odd and k-th even states:  -2 / (sqrt(eta_k) (eta_k - zeta_n)^3).
double dipole_linear(int n_odd, int k_even);

// Full-line even-even matrix element of z^2:
//   -12 (eta_n + eta_k) / (sqrt(eta_n eta_k) (eta_n - eta_k)^4),  n != k.
double z2_even_even(int n_even, int k_even);

}  // namespace airysum
