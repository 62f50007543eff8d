#pragma once

#include "airysum/dd.hpp"

namespace airysum {

struct AiryPair {
    double ai;
    double aip;
};

// Ai(x) on the real line.  Absolute error <= 1e-14 * max(1, 10*|Ai(x)|) for
// |x| <= 120; underflows to exact 0 for large positive x.  Throws
// std::domain_error on non-finite input.
double airy_ai(double x);

// Ai'(x), same accuracy contract and error behaviour as airy_ai.
double airy_ai_prime(double x);

// Both values in one call (the two share all the expensive work).
AiryPair airy_ai_both(double x);

namespace detail {

// Maclaurin evaluation in double-double arithmetic.  This doubles as the
// in-repo extended-precision oracle: it is a direct, high-term-count sum of
// the defining power series with no regime switching, trustworthy to
// ~1e-16 relative for |x| <= 9.5 (alternating-term cancellation eats the
// rest of the 31-digit budget beyond that).
struct AiryDD {
    DD ai;
    DD aip;
};

AiryDD airy_maclaurin_dd(double x);

// Asymptotic branches, exposed for the overlap-band consistency tests.
AiryPair airy_asymptotic_neg(double x);  // x <= -7 or so
AiryPair airy_asymptotic_pos(double x);  // x >= +7 or so

}  // namespace detail

}  // namespace airysum
