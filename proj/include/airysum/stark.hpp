#pragma once

#include <vector>

#include "airysum/states.hpp"
#include "airysum/sums.hpp"

namespace airysum {

// Classical (WKB-like) moments and Stark-effect results.  Units follow the
// natural ratios in which every closed form below is a pure number times a
// spectral quantity: linear-system shifts in (Fbar/F)^2 * E_0, oscillator
// shifts in Fbar^2/(m omega^2), first-order oscillator shifts in Fbar*beta.

// <y^p> over the classical probability density of the state:
//   linear/bouncer: A_n^p 2^p p! / (2p+1)!!            (A_n = zeta_n or eta_n)
//   half-SHO:       A_n^p Gamma((1+p)/2)/(sqrt(pi) Gamma(1+p/2)),
//                   A_n = sqrt(4n+3)
double classical_moment(const SpectralPoint& state, int p);

// (quantum <y^p> from the exact moment recursion) / (classical moment);
// approaches 1 from the sub-leading corrections as n grows.
double leading_term_ratio(Parity parity, int p, int n);

// Local-average comparison of the exact bouncer density |psi_n|^2 against
// the classical density P_CL(z) = 1/(2 sqrt(zeta_n (zeta_n - z))).
//
// Box windows are anchored on the wavefunction's own nodes (round(2*window)
// internode gaps, i.e. ~window de Broglie wavelengths), so each average runs
// over complete |psi|^2 lobes and the oscillatory factor integrates out
// exactly rather than leaking O(lambda/W) residue.  Both densities are
// averaged over the same window; the deviation is scaled by pointwise P_CL
// at the window center.  Returns the maximum over window centers inside the
// inner 80% of the classically allowed region.
//
// Requires n >= 10 and window > 1 (in local de Broglie wavelengths).
double semiclassical_density_check(int n, double window_wavelengths);

struct StarkResult {
    SystemId system;
    Parity parity;
    int n;
    int order;
    enum class Method { WKB, PT, ClosedForm } method;
    double value;
};

// First-order Stark shift of the symmetric linear potential.  Identically
// zero: the diagonal dipole <n|z|n> vanishes because |psi_n(z)|^2 is even
// in z for both parities.  Kept as an explicit result so the vanishing is
// part of the tested surface rather than an implicit assumption.
StarkResult stark_linear_first_order(Parity parity, int n);

// Exact second-order Stark shifts of the symmetric linear potential:
// -(7/9) zeta_n (odd) and -(5/9) eta_n (even), in units (Fbar/F)^2 E_0.
StarkResult stark_linear_closed_form(Parity parity, int n);

// Second-order perturbation-theory sum  sum_{k} |<n|y|k>|^2/(E_n - E_k),
// evaluated with the explicit matrix elements and the same tail machinery
// as the sum rules.  Linear system: equals -4 T_7(n) / -4 U_7(n) and must
// reproduce the closed-form -7/9, -5/9 coefficients.  Half-SHO: the
// all-states D_k sum (units Fbar^2/(m omega^2)).
StarkResult pt2_shift(SystemId system, Parity parity, int n, const SummationConfig& cfg = {});

// WKB orders for the half oscillator in an external linear field:
//   order 0: 2n + 3/2     order 1: (2/pi) sqrt(4n+3)     order 2: -1/2 + 4/pi^2
StarkResult wkb_half_sho(int n, int order);

// WKB/PT comparison series for the half oscillator:
//   r1 = E1(WKB)/E1(PT) - 1 = 4 sqrt(4n+3)/(sqrt(pi) D_n) - 1  (closed form)
//   r2 = E2(WKB)/E2(PT) - 1  with E2(PT) from pt2_shift
struct Fig1Row {
    int n;
    double r1;
    double r2;
    long pt2_terms;
    double pt2_tail;
};

std::vector<Fig1Row> fig1_series(int n_max, const SummationConfig& cfg = {});

}  // namespace airysum
