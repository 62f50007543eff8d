#include "airysum/hermite.hpp"

#include <cmath>
#include <stdexcept>

namespace airysum {

namespace {
constexpr double kPiQuarterInv = 0.7511255444649425;  // pi^(-1/4)
}

double hermite_weighted(int n, double y) {
    if (!std::isfinite(y)) throw std::domain_error("hermite_weighted: non-finite argument");
    if (n < 0) throw std::invalid_argument("hermite_weighted: index must be >= 0");

    // Split the Gaussian into a mantissa and a power-of-two exponent so the
    // recurrence can start from a representable value for any y.
    const double wlog2 = -y * y * 0.5 * 1.4426950408889634;  // log2 e
    double ebits = std::floor(wlog2);
    double wmant = std::exp2(wlog2 - ebits);

    double p0 = kPiQuarterInv * wmant;
    if (n == 0) return std::ldexp(p0, static_cast<int>(ebits));
    double p1 = std::sqrt(2.0) * y * p0;

    for (int k = 1; k < n; ++k) {
        const double p2 = std::sqrt(2.0 / (k + 1.0)) * y * p1 - std::sqrt(k / (k + 1.0)) * p0;
        p0 = p1;
        p1 = p2;
        // Renormalize if the pair drifts toward either representability edge.
        const double m = std::fabs(p0) + std::fabs(p1);
        if (m != 0.0 && m < 1e-240) {
            p0 = std::ldexp(p0, 800);
            p1 = std::ldexp(p1, 800);
            ebits -= 800.0;
        } else if (m > 1e240) {
            p0 = std::ldexp(p0, -800);
            p1 = std::ldexp(p1, -800);
            ebits += 800.0;
        }
    }

    if (ebits < -1100.0) return 0.0;  // below even denormal range
    return std::ldexp(p1, static_cast<int>(ebits));
}

}  // namespace airysum
