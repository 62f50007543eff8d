#pragma once

#include <utility>

namespace airysum {

// The inverse-power sum families over Airy zeros (zeta_k = |k-th zero of
// Ai|, eta_k = |k-th zero of Ai'|) and over the half-oscillator D_k:
//
//   T_p(n)      = sum_k 1 / (eta_k (eta_k - zeta_n)^p)
//   U_p(n)      = (1/eta_n) sum_k 1 / (zeta_k - eta_n)^p
//   Ttilde_p(n) = sum_k 1 / (eta_k - zeta_n)^p
//   Utilde_p(n) = sum_k 1 / (zeta_k - eta_n)^p
//   S_p(n)      = sum_{k != n} 1 / (zeta_k - zeta_n)^p
//   EvenEvenMonopole(n) = sum_{k != n} (eta_n + eta_k)^2
//                                      / (eta_n eta_k (eta_k - eta_n)^7)
//   HalfShoTRK(n)          = D_n sum_{k != n} (k-n) D_k / [4(n-k)^2 - 1]^2
//   HalfShoCompleteness(n) = D_n sum_{all k}  D_k / [4(n-k)^2 - 1]^2
//   HalfShoKWeighted(n)    = D_n sum_{all k}  k D_k / [4(n-k)^2 - 1]^2
//
// Zero-family sums need p >= 2 to converge (terms decay like k^(-2p/3) at
// best); requesting p < 2 throws DivergentSumError.
enum class SumTag {
    T,
    U,
    Ttilde,
    Utilde,
    S,
    EvenEvenMonopole,
    HalfShoTRK,
    HalfShoCompleteness,
    HalfShoKWeighted
};

struct SumFamily {
    SumTag tag;
    int p = 0;  // inverse power, where applicable
    int n = 1;  // fixed-state index (1-based for zero families, 0-based half-SHO)
};

struct SummationConfig {
    int explicit_terms = 20000;
    int refine_upto = 200;  // Newton-refined zeros; asymptotic beyond
};

enum class TailMethod { None, IntegralEulerMaclaurin };

struct SumEvaluation {
    double explicit_sum = 0.0;
    long explicit_terms = 0;
    double tail_estimate = 0.0;
    TailMethod tail_method = TailMethod::None;
    double total = 0.0;
    double est_error = 0.0;
};

// Explicit compensated summation in ascending k (fixed order, so results are
// bit-reproducible) plus an integral-with-corrections tail built from the
// asymptotic forms of the terms.
SumEvaluation evaluate_sum(const SumFamily& family, const SummationConfig& cfg = {});

// (Ttilde_p(n), Utilde_p(n)) assembled from the convergent building blocks:
// Ttilde_p = zeta_n T_p + T_{p-1} and Utilde_p = eta_n U_p.  Needs p >= 3
// so that T_{p-1} converges.
std::pair<SumEvaluation, SumEvaluation> tilde_sums(int p, int n,
                                                   const SummationConfig& cfg = {});

}  // namespace airysum
