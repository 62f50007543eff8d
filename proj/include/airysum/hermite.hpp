#pragma once

namespace airysum {

// Normalized oscillator eigenfunction c_n H_n(y) exp(-y^2/2) with
// c_n = (2^n n! sqrt(pi))^(-1/2), evaluated by the three-term recurrence on
// the weighted functions themselves.  Never forms raw H_n, so there is no
// factorial overflow; an internal power-of-two scale keeps the iterates
// representable even where exp(-y^2/2) alone would underflow.
// Relative accuracy ~1e-13 for n <= 200, |y| <= 30.
// Throws std::domain_error on non-finite y.
double hermite_weighted(int n, double y);

}  // namespace airysum
