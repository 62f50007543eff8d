#include "airysum/airy.hpp"

#include <cmath>
#include <stdexcept>

namespace airysum {

namespace {

// Ai(0) = 3^(-2/3)/Gamma(2/3) and Ai'(0) = -3^(-1/3)/Gamma(1/3), split into
// double-double form.
constexpr DD kAi0{0.3550280538878172, 2.05233632436212e-17};
constexpr DD kAip0{-0.2588194037928068, 2.522243111610832e-17};

// Regime switch between the Maclaurin series and the asymptotic expansions.
// At |x| = 9 the asymptotic variable is xi = (2/3)*9^(3/2) = 18, so the
// optimally truncated asymptotic tail is ~e^(-2*xi) ~ 2e-16, while the
// double-double series still has ~24 good digits after cancellation.  A
// crossover much lower (e.g. 4.5, xi = 6.4) caps the asymptotic side at
// ~3e-7 relative and cannot meet the accuracy target.
constexpr double kSeriesCutoff = 9.0;

}  // namespace

namespace detail {

AiryDD airy_maclaurin_dd(double x) {
    // Ai(x) = Ai(0) f(x) + Ai'(0) g(x) with
    //   f = sum a_k,  a_0 = 1,  a_{k+1} = a_k x^3 / ((3k+2)(3k+3))
    //   g = sum b_k,  b_0 = x,  b_{k+1} = b_k x^3 / ((3k+3)(3k+4))
    // and the termwise-differentiated series for f', g'.
    const DD X(x);
    const DD x3 = X * X * X;

    DD a(1.0);            // f terms
    DD b = X;             // g terms
    DD ap = X * X * 0.5;  // f' terms, first is x^2/2 (k = 1)
    DD bp(1.0);           // g' terms

    DD f = a, g = b, fp = ap, gp = bp;
    double max_mag = 1.0;

    for (int k = 0; k < 400; ++k) {
        const double d1 = (3.0 * k + 2.0) * (3.0 * k + 3.0);
        a = a * x3 / d1;
        b = b * x3 / ((3.0 * k + 3.0) * (3.0 * k + 4.0));
        bp = bp * x3 / ((3.0 * k + 1.0) * (3.0 * k + 3.0));
        f = f + a;
        g = g + b;
        gp = gp + bp;
        if (k >= 1) {  // fp was seeded with its k = 1 term
            // Keep the scalar factors exact: (k+1) and k*d1 are exact in
            // double, whereas the quotient (k+1)/k would round and poison
            // the chain at the 1e-16 level (fatal after the cancellation in
            // Ai' on the decaying side).
            ap = ap * x3 * (k + 1.0) / (k * d1);
            fp = fp + ap;
        }

        const double mag = std::fabs(a.hi) + std::fabs(b.hi) + std::fabs(ap.hi) + std::fabs(bp.hi);
        if (mag > max_mag) max_mag = mag;
        if (mag < 1e-33 * max_mag) break;
    }

    AiryDD out;
    out.ai = kAi0 * f + kAip0 * g;
    out.aip = kAi0 * fp + kAip0 * gp;
    return out;
}

// Coefficients u_k, v_k of the large-|x| expansions (DLMF 9.7.2/9.7.3):
//   u_0 = 1, u_k = u_{k-1} (6k-5)(6k-3)(6k-1) / (216 k (2k-1))
//   v_k = u_k (6k+1)/(1-6k)
AiryPair airy_asymptotic_neg(double x) {
    const double z = -x;
    const DD Z(z);
    const DD xi_dd = (Z * sqrt(Z)) * (2.0 / 3.0);
    const double xi = xi_dd.value();

    double s, c;
    dd_sincos(xi_dd - dd_const::pi_over_4, s, c);

    // P = sum (-1)^k u_{2k} xi^-2k      Q = sum (-1)^k u_{2k+1} xi^-(2k+1)
    // R, S likewise with v_k.
    double P = 1.0, Q = 0.0, R = 1.0, S = 0.0;
    double u = 1.0, pw = 1.0, prev = 1.0;
    for (int k = 1; k < 80; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
        pw /= xi;
        const double tu = u * pw;
        if (std::fabs(tu) >= prev) break;  // divergent tail reached
        prev = std::fabs(tu);
        const double tv = tu * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        const int m = k / 2;
        const double sign = (m % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 1) {
            Q += sign * tu;
            S += sign * tv;
        } else {
            P += sign * tu;
            R += sign * tv;
        }
        if (std::fabs(tu) < 1e-19) break;
    }

    const double z14 = std::sqrt(std::sqrt(z));
    const double pref = dd_const::inv_sqrt_pi.value();
    AiryPair out;
    out.ai = pref / z14 * (c * P + s * Q);
    out.aip = pref * z14 * (s * R - c * S);
    return out;
}

AiryPair airy_asymptotic_pos(double x) {
    const DD X(x);
    const DD zeta_dd = (X * sqrt(X)) * (2.0 / 3.0);
    if (zeta_dd.hi > 800.0) return {0.0, 0.0};  // e^-zeta underflows

    const double E = std::exp(-zeta_dd.hi) * (1.0 - zeta_dd.lo);
    const double zeta = zeta_dd.value();

    double S1 = 1.0, S2 = 1.0;  // sum (-1)^k u_k zeta^-k, same with v_k
    double u = 1.0, pw = 1.0, prev = 1.0;
    for (int k = 1; k < 80; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
        pw /= zeta;
        const double tu = u * pw;
        if (std::fabs(tu) >= prev) break;
        prev = std::fabs(tu);
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        S1 += sign * tu;
        S2 += sign * tu * (6.0 * k + 1.0) / (1.0 - 6.0 * k);
        if (std::fabs(tu) < 1e-19) break;
    }

    const double x14 = std::sqrt(std::sqrt(x));
    const double pref = 0.5 * dd_const::inv_sqrt_pi.value() * E;
    AiryPair out;
    out.ai = pref / x14 * S1;
    out.aip = -pref * x14 * S2;
    return out;
}

}  // namespace detail

AiryPair airy_ai_both(double x) {
    if (!std::isfinite(x)) throw std::domain_error("airy_ai: non-finite argument");
    if (x > kSeriesCutoff) return detail::airy_asymptotic_pos(x);
    if (x < -kSeriesCutoff) return detail::airy_asymptotic_neg(x);
    const detail::AiryDD v = detail::airy_maclaurin_dd(x);
    return {v.ai.value(), v.aip.value()};
}

double airy_ai(double x) { return airy_ai_both(x).ai; }

double airy_ai_prime(double x) { return airy_ai_both(x).aip; }

}  // namespace airysum
