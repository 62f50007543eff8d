#include "airysum/gordon.hpp"

#include <cmath>
#include <stdexcept>

#include "airysum/airy.hpp"
#include "airysum/zeros.hpp"

namespace airysum {

AiryProductIntegral gordon_integral(int p, double shift_a, double shift_b) {
    if (p < 0 || p > 2)
        throw std::invalid_argument("gordon_integral: p must be 0, 1, or 2");
    if (!(shift_a > 0.0) || !(shift_b > 0.0))
        throw std::domain_error("gordon_integral: shifts must be positive");

    const bool equal = (shift_a == shift_b);
    if (!equal && std::fabs(shift_a - shift_b) < 1e-6)
        throw std::domain_error(
            "gordon_integral: nearly coincident shifts are ill-conditioned in the "
            "distinct-shift forms; pass exactly equal shifts instead");

    const AiryPair a = airy_ai_both(-shift_a);
    const AiryPair b = airy_ai_both(-shift_b);

    AiryProductIntegral r;
    r.p = p;
    r.beta1 = shift_a;
    r.beta2 = shift_b;
    r.f1 = a.ai * b.ai;
    r.f2 = a.aip * b.ai - a.ai * b.aip;
    r.f3 = a.aip * b.ai + a.ai * b.aip;
    r.f4 = a.aip * b.aip;

    if (equal) {
        const double beta = shift_a;
        switch (p) {
            case 0:
                r.value = beta * r.f1 + r.f4;
                break;
            case 1:
                r.value = (2.0 * beta * beta / 3.0) * r.f1 - r.f3 / 6.0 + (2.0 * beta / 3.0) * r.f4;
                break;
            default:
                r.value = ((8.0 * beta * beta * beta + 3.0) / 15.0) * r.f1 -
                          (2.0 * beta / 15.0) * r.f3 + (8.0 * beta * beta / 15.0) * r.f4;
                break;
        }
        return r;
    }

    const double d = shift_a - shift_b;
    const double sg = shift_a + shift_b;
    const double d2 = d * d, d3 = d2 * d, d4 = d2 * d2, d5 = d4 * d;
    switch (p) {
        case 0:
            r.value = r.f2 / d;
            break;
        case 1:
            r.value = -(sg / d2) * r.f1 + (2.0 / d3) * r.f2 - (2.0 / d2) * r.f4;
            break;
        default:
            r.value = -(12.0 * sg / d4) * r.f1 - (4.0 * (sg * d2 - 6.0) / d5) * r.f2 +
                      (2.0 / d2) * r.f3 - (24.0 / d4) * r.f4;
            break;
    }
    return r;
}

double derivative_integral(double shift) {
    if (!(shift > 0.0)) throw std::domain_error("derivative_integral: shift must be positive");
    const AiryPair a = airy_ai_both(-shift);
    const double f1 = a.ai * a.ai;
    const double f3 = 2.0 * a.ai * a.aip;
    const double f4 = a.aip * a.aip;
    return (shift * shift / 3.0) * f1 - f3 / 3.0 + (shift / 3.0) * f4;
}

double dipole_linear(int n_odd, int k_even) {
    if (n_odd < 1 || k_even < 1)
        throw std::invalid_argument("dipole_linear: indices must be >= 1");
    const double zn = shared_zero_table(ZeroKind::AiZero, n_odd)->value(n_odd);
    const double ek = shared_zero_table(ZeroKind::AiPrimeZero, k_even)->value(k_even);
    const double d = ek - zn;
    return -2.0 / (std::sqrt(ek) * d * d * d);
}

double z2_even_even(int n_even, int k_even) {
    if (n_even < 1 || k_even < 1)
        throw std::invalid_argument("z2_even_even: indices must be >= 1");
    if (n_even == k_even)
        throw std::invalid_argument("z2_even_even: diagonal case is the second moment, not this form");
    auto table = shared_zero_table(ZeroKind::AiPrimeZero, std::max(n_even, k_even));
    const double en = table->value(n_even);
    const double ek = table->value(k_even);
    const double d = en - ek;
    return -12.0 * (en + ek) / (std::sqrt(en * ek) * d * d * d * d);
}

}  // namespace airysum
