#include "airysum/dcoeff.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <stdexcept>

namespace airysum {

namespace {
using Float50 = boost::multiprecision::cpp_bin_float_50;
}

DCoefficient d_coefficient(int n) {
    if (n < 0) throw std::invalid_argument("d_coefficient: index must be >= 0");

    BigInt num = 4;
    int texp = 0;
    for (int j = 0; j < n; ++j) {
        num *= (2 * j + 3);
        // Divide by 2(j+1): pull the power of two into the exponent, the odd
        // part divides exactly (D_n is dyadic by construction).
        long long m = j + 1;
        ++texp;
        while (m % 2 == 0) {
            m /= 2;
            ++texp;
        }
        num /= m;
    }

    // Normalize: the numerator keeps no factor of two.
    while (texp > 0 && (num & 1) == 0) {
        num >>= 1;
        --texp;
    }

    DCoefficient out;
    out.n = n;
    out.numerator = num;
    out.two_exponent = texp;
    out.value = static_cast<double>(Float50(num) / boost::multiprecision::pow(Float50(2), texp));
    return out;
}

std::vector<double> d_table(int count) {
    std::vector<double> d(static_cast<size_t>(count));
    if (count <= 0) return d;
    d[0] = 4.0;
    for (int j = 0; j + 1 < count; ++j)
        d[static_cast<size_t>(j) + 1] = d[static_cast<size_t>(j)] * (2.0 * j + 3.0) / (2.0 * j + 2.0);
    return d;
}

}  // namespace airysum
