#pragma once

#include <optional>
#include <string>
#include <vector>

#include "airysum/sums.hpp"

namespace airysum {

// One verifiable constraint inside an identity family: an energy-weighted
// sum (LHS) against its closed-form value (RHS).  RHS forms are polynomials
// in the fixed state's eigenvalue, or (4n+1)(2n+1)pi-style polynomials in n
// for the half oscillator.
struct IdentityCheck {
    std::string label;       // e.g. "T5", "U5", "S3"
    SumTag tag;
    int p = 0;
    double tolerance;        // default acceptance tolerance
    bool absolute = false;   // residual criterion: absolute (RHS == 0) or relative
    // rhs(n, lambda) with lambda = zeta_n (T/S families) or eta_n (U families);
    // half-SHO checks receive lambda = 0 and use n.
    double (*rhs)(int n, double lambda);
};

struct IdentityRecord {
    std::string id;
    std::string statement;    // human-readable equality
    std::string provenance;   // which sum rule generates it
    int min_n;                // 1 for zero families, 0 for half-SHO
    std::vector<IdentityCheck> checks;
};

struct VerificationReport {
    std::string id;
    int n = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    long terms_used = 0;
    double tail_estimate = 0.0;
    bool pass = false;
};

// The complete identity registry (16 families).  Stable order; ids unique.
const std::vector<IdentityRecord>& registry();

const IdentityRecord* find_identity(const std::string& id);

// Evaluates every check of the family at index n.  The report carries the
// worst sub-check (largest residual-to-tolerance ratio); pass requires all
// sub-checks within tolerance.  A tolerance override, when given, replaces
// the per-check defaults.  Unknown ids throw std::invalid_argument.
VerificationReport verify_identity(const std::string& id, int n,
                                   const SummationConfig& cfg = {},
                                   std::optional<double> tol_override = std::nullopt);

}  // namespace airysum
