#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <vector>

namespace airysum {

using BigInt = boost::multiprecision::cpp_int;

// D_n = 4 (2n+1)! / (2^(2n) (n!)^2), the squared origin slope (times
// sqrt(pi)) of the n-th half-oscillator eigenfunction.  Always a dyadic
// rational: numerator odd-or-even integer over a power of two.
struct DCoefficient {
    int n = 0;
    BigInt numerator;     // D_n = numerator / 2^two_exponent, exact
    int two_exponent = 0;
    double value = 0.0;   // correctly-rounded double view

    bool equals(long long num, int texp) const {
        return numerator == num && two_exponent == texp;
    }
};

// Exact evaluation via the recurrence D_0 = 4, D_{n+1} = D_n (2n+3)/(2(n+1)).
DCoefficient d_coefficient(int n);

// Fast double-precision table D_0..D_{upto-1} for the summation kernels.
// Plain double recurrence: the rounding drift stays below ~1e-13 relative
// even at n ~ 1e6 (random-walk accumulation), far inside the 1e-6 tolerances
// of the sums that consume it; agreement with the exact view is tested.
std::vector<double> d_table(int count);

}  // namespace airysum
