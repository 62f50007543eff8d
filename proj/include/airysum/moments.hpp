#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

#include "airysum/states.hpp"

namespace airysum {

using Rational = boost::multiprecision::cpp_rational;

double rational_to_double(const Rational& r);

// Exact closed form of a diagonal moment <y^p> for a normalized eigenstate
// of the symmetric linear potential: sum of c_i * lambda^(e_i) with exact
// rational c_i, where lambda is zeta_n (odd states, equivalently the
// bouncer) or eta_n (even states).  Exponents are strictly decreasing, the
// leading one equals p, and successive exponents differ by 3 (negative
// exponents appear for even states, from the origin surface terms).
struct MomentTerm {
    Rational coeff;
    int exponent;
};

struct MomentExpression {
    Parity parity;
    int power;
    std::vector<MomentTerm> terms;

    double eval(double lambda) const;
    std::string to_pretty() const;  // e.g. "256/693 l^5 + 1808/3003 l^2"
};

// Surface-term recursion for the moments, run in exact rational arithmetic:
//   2q(2q-1) M_{q-1} = 4 lambda q(q-1) M_{q-2} + q(q-1)(q-2)(q-3) M_{q-4} - s(q)
// with M_0 = 1 and the origin surface terms s(q): none for odd states
// (psi(0) = 0 kills everything except the q=1 normalization), and
// s(3) = -6/lambda for even states (psi'(0) = 0, psi(0)^2 = R_0/lambda).
// Returns expressions for p = 1..max_p.
std::vector<MomentExpression> moment_recursion_airy(Parity parity, int max_p);

}  // namespace airysum
