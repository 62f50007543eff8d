#include "airysum/sums.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <vector>

#include "airysum/dcoeff.hpp"
#include "airysum/errors.hpp"
#include "airysum/quadrature.hpp"
#include "airysum/zeros.hpp"

namespace airysum {

namespace {

constexpr double kPi = 3.14159265358979323846;

double ipow(double x, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= x;
    return r;
}

// Continuous extensions of the zero tables for the tail integrals;
// coefficients as in zeros.cpp (A&S 10.4.105/106).
double zeta_cont(double k) {
    const double t = 3.0 * kPi * (4.0 * k - 1.0) / 8.0;
    const double it2 = 1.0 / (t * t);
    return std::cbrt(t * t) *
           (1.0 + it2 * (5.0 / 48.0 + it2 * (-5.0 / 36.0 + it2 * (77125.0 / 82944.0))));
}

double eta_cont(double k) {
    const double t = 3.0 * kPi * (4.0 * k - 3.0) / 8.0;
    const double it2 = 1.0 / (t * t);
    return std::cbrt(t * t) *
           (1.0 + it2 * (-7.0 / 48.0 + it2 * (35.0 / 288.0 + it2 * (-181223.0 / 207360.0))));
}

// D_k continued to real k via the Stirling form D_k ~ 8 sqrt(k/pi)
// (1 + 3/(8k) - 7/(128 k^2)); relative error ~ k^-3, negligible where the
// tail starts.
double d_cont(double k) {
    return 8.0 * std::sqrt(k / kPi) * (1.0 + 3.0 / (8.0 * k) - 7.0 / (128.0 * k * k));
}

struct Kernel {
    // term(k) for integer k in the explicit range (may consult tables);
    // cont(k) must agree with term(k) for k beyond the explicit range.
    std::function<double(long)> term;
    std::function<double(double)> cont;
    long first = 1;   // first summed index
    long skip = -1;   // excluded index (k != n families), or -1
    double scale = 1.0;
};

// integral_a^inf f, via the substitution k = a u^-3 (u in (0,1]), which maps
// the k^(-4/3)-and-faster decay of every family onto a bounded smooth
// integrand.  Returns the 64-point value; *err gets |GL64 - GL128|.
double tail_integral(const std::function<double(double)>& f, double a, double* err) {
    auto g = [&](double u) { return f(a / (u * u * u)) * 3.0 * a / ipow(u, 4); };
    auto run = [&](int npts) {
        const GaussRule& gl = gauss_legendre(npts);
        double s = 0.0;
        for (size_t j = 0; j < gl.x.size(); ++j) s += gl.w[j] * g(0.5 + 0.5 * gl.x[j]);
        return 0.5 * s;
    };
    const double i64 = run(64);
    const double i128 = run(128);
    *err = std::fabs(i64 - i128);
    return i128;
}

SumEvaluation evaluate_kernel(const Kernel& k, long explicit_terms) {
    SumEvaluation ev;
    ev.explicit_terms = explicit_terms;

    // Neumaier-compensated fixed-order pass, tracking sum(|term|) for the
    // roundoff component of the error estimate.
    double sum = 0.0, comp = 0.0, abssum = 0.0;
    const long last = k.first + explicit_terms - 1;
    for (long i = k.first; i <= last; ++i) {
        if (i == k.skip) continue;
        const double term = k.term(i);
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
        abssum += std::fabs(term);
    }
    ev.explicit_sum = (sum + comp) * k.scale;

    // Euler-Maclaurin tail from a = last+1:
    //   sum_{i>=a} f(i) = int_a^inf f + f(a)/2 - f'(a)/12 + f'''(a)/720 - ...
    // Kept through the f'/12 term; 2|f'''(a)|/720 bounds the remainder.
    const double a = static_cast<double>(last + 1);
    double ierr = 0.0;
    const double integral = tail_integral(k.cont, a, &ierr);
    const double h = 0.5;
    const double fa = k.cont(a);
    const double fp1 = k.cont(a + h), fm1 = k.cont(a - h);
    const double fp2 = k.cont(a + 2 * h), fm2 = k.cont(a - 2 * h);
    // f' to 4th order: its h^2 stencil error would otherwise leak into the
    // tail at h^2 f'''/72, an order above the Euler-Maclaurin remainder.
    const double fp = (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
    const double f3 = (fp2 - 2.0 * fp1 + 2.0 * fm1 - fm2) / (2.0 * h * h * h);
    ev.tail_estimate = (integral + 0.5 * fa - fp / 12.0) * k.scale;
    ev.tail_method = TailMethod::IntegralEulerMaclaurin;
    ev.total = ev.explicit_sum + ev.tail_estimate;
    ev.est_error =
        (2.0 * std::fabs(f3) / 720.0 + ierr + 4.0 * 1.1e-16 * (abssum + std::fabs(integral))) *
        std::fabs(k.scale);
    return ev;
}

}  // namespace

SumEvaluation evaluate_sum(const SumFamily& family, const SummationConfig& cfg) {
    if (cfg.explicit_terms < 100)
        throw std::invalid_argument("evaluate_sum: need at least 100 explicit terms");

    const bool zero_family = family.tag == SumTag::T || family.tag == SumTag::U ||
                             family.tag == SumTag::Ttilde || family.tag == SumTag::Utilde ||
                             family.tag == SumTag::S || family.tag == SumTag::EvenEvenMonopole;
    const bool powered = family.tag == SumTag::T || family.tag == SumTag::U ||
                         family.tag == SumTag::Ttilde || family.tag == SumTag::Utilde ||
                         family.tag == SumTag::S;

    if (powered && family.p < 2)
        throw DivergentSumError(
            "evaluate_sum: inverse power below the convergence threshold (p >= 2); the "
            "requested sum rule cannot be applied");

    const int n = family.n;
    Kernel k;

    if (zero_family) {
        if (n < 1) throw std::invalid_argument("evaluate_sum: zero-family index is 1-based");
        const long K =
            std::max<long>(cfg.explicit_terms, n + 100);  // fixed state inside explicit range
        auto zt = shared_zero_table(ZeroKind::AiZero, static_cast<int>(K) + 4, cfg.refine_upto);
        auto et =
            shared_zero_table(ZeroKind::AiPrimeZero, static_cast<int>(K) + 4, cfg.refine_upto);
        const int p = family.p;

        switch (family.tag) {
            case SumTag::T: {
                const double zn = zt->value(n);
                k.term = [et, zn, p](long i) {
                    const double e = et->value(static_cast<int>(i));
                    return 1.0 / (e * ipow(e - zn, p));
                };
                k.cont = [zn, p](double x) {
                    const double e = eta_cont(x);
                    return 1.0 / (e * ipow(e - zn, p));
                };
                break;
            }
            case SumTag::U:
            case SumTag::Utilde: {
                const double en = et->value(n);
                k.term = [zt, en, p](long i) {
                    return 1.0 / ipow(zt->value(static_cast<int>(i)) - en, p);
                };
                k.cont = [en, p](double x) { return 1.0 / ipow(zeta_cont(x) - en, p); };
                if (family.tag == SumTag::U) k.scale = 1.0 / en;
                break;
            }
            case SumTag::Ttilde: {
                const double zn = zt->value(n);
                k.term = [et, zn, p](long i) {
                    return 1.0 / ipow(et->value(static_cast<int>(i)) - zn, p);
                };
                k.cont = [zn, p](double x) { return 1.0 / ipow(eta_cont(x) - zn, p); };
                break;
            }
            case SumTag::S: {
                const double zn = zt->value(n);
                k.skip = n;
                k.term = [zt, zn, p](long i) {
                    return 1.0 / ipow(zt->value(static_cast<int>(i)) - zn, p);
                };
                k.cont = [zn, p](double x) { return 1.0 / ipow(zeta_cont(x) - zn, p); };
                break;
            }
            case SumTag::EvenEvenMonopole: {
                const double en = et->value(n);
                k.skip = n;
                k.term = [et, en](long i) {
                    const double e = et->value(static_cast<int>(i));
                    return (en + e) * (en + e) / (en * e * ipow(e - en, 7));
                };
                k.cont = [en](double x) {
                    const double e = eta_cont(x);
                    return (en + e) * (en + e) / (en * e * ipow(e - en, 7));
                };
                break;
            }
            default:
                break;
        }
        return evaluate_kernel(k, K);
    }

    // Half-oscillator families, 0-based summation index.
    if (n < 0) throw std::invalid_argument("evaluate_sum: half-SHO index is 0-based");
    const long K = std::max<long>(cfg.explicit_terms, n + 100);
    auto d = std::make_shared<std::vector<double>>(d_table(static_cast<int>(K) + 4));
    const double dn = (*d)[static_cast<size_t>(n)];
    k.first = 0;
    k.scale = dn;
    auto denom = [n](double x) {
        const double q = 4.0 * (x - n) * (x - n) - 1.0;
        return q * q;
    };
    switch (family.tag) {
        case SumTag::HalfShoTRK:
            k.skip = n;  // the k = n term vanishes identically anyway
            k.term = [d, n, denom](long i) { return (i - n) * (*d)[static_cast<size_t>(i)] / denom(static_cast<double>(i)); };
            k.cont = [n, denom](double x) { return (x - n) * d_cont(x) / denom(x); };
            break;
        case SumTag::HalfShoCompleteness:
            // Dipole completeness includes the diagonal |<n|y|n>|^2 term, so
            // the sum runs over all k.
            k.term = [d, denom](long i) { return (*d)[static_cast<size_t>(i)] / denom(static_cast<double>(i)); };
            k.cont = [denom](double x) { return d_cont(x) / denom(x); };
            break;
        case SumTag::HalfShoKWeighted:
            k.term = [d, denom](long i) { return i * (*d)[static_cast<size_t>(i)] / denom(static_cast<double>(i)); };
            k.cont = [denom](double x) { return x * d_cont(x) / denom(x); };
            break;
        default:
            throw std::invalid_argument("evaluate_sum: unknown family");
    }
    return evaluate_kernel(k, K + 1);  // k = 0..K inclusive
}

std::pair<SumEvaluation, SumEvaluation> tilde_sums(int p, int n, const SummationConfig& cfg) {
    if (p < 3)
        throw DivergentSumError("tilde_sums: needs p >= 3 (T_{p-1} must converge)");
    const SumEvaluation tp = evaluate_sum({SumTag::T, p, n}, cfg);
    const SumEvaluation tpm1 = evaluate_sum({SumTag::T, p - 1, n}, cfg);
    const SumEvaluation up = evaluate_sum({SumTag::U, p, n}, cfg);

    const double zn = shared_zero_table(ZeroKind::AiZero, n, cfg.refine_upto)->value(n);
    const double en = shared_zero_table(ZeroKind::AiPrimeZero, n, cfg.refine_upto)->value(n);

    SumEvaluation tt;
    tt.explicit_terms = tp.explicit_terms;
    tt.explicit_sum = zn * tp.explicit_sum + tpm1.explicit_sum;
    tt.tail_estimate = zn * tp.tail_estimate + tpm1.tail_estimate;
    tt.tail_method = TailMethod::IntegralEulerMaclaurin;
    tt.total = zn * tp.total + tpm1.total;
    tt.est_error = zn * tp.est_error + tpm1.est_error;

    SumEvaluation ut;
    ut.explicit_terms = up.explicit_terms;
    ut.explicit_sum = en * up.explicit_sum;
    ut.tail_estimate = en * up.tail_estimate;
    ut.tail_method = TailMethod::IntegralEulerMaclaurin;
    ut.total = en * up.total;
    ut.est_error = en * up.est_error;
    return {tt, ut};
}

}  // namespace airysum
