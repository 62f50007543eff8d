#include "airysum/stark.hpp"

#include <cmath>
#include <stdexcept>

#include "airysum/airy.hpp"
#include "airysum/dcoeff.hpp"
#include "airysum/moments.hpp"
#include "airysum/quadrature.hpp"
#include "airysum/zeros.hpp"

namespace airysum {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtPi = 1.7724538509055160273;

double double_factorial_odd(int p) {  // (2p+1)!!
    double r = 1.0;
    for (int j = 1; j <= 2 * p + 1; j += 2) r *= j;
    return r;
}

double factorial(int p) {
    double r = 1.0;
    for (int j = 2; j <= p; ++j) r *= j;
    return r;
}

}  // namespace

double classical_moment(const SpectralPoint& state, int p) {
    if (p < 0) throw std::invalid_argument("classical_moment: p must be >= 0");
    const double A = turning_point(state);
    switch (state.system) {
        case SystemId::SymmetricLinear:
        case SystemId::Bouncer:
            // A^p * B(p+1, 1/2)/2 = A^p 2^p p!/(2p+1)!!
            return std::pow(A, p) * std::ldexp(factorial(p), p) / double_factorial_odd(p);
        case SystemId::HalfSHO: {
            // A^p Gamma((1+p)/2) / (sqrt(pi) Gamma(1+p/2))
            if (p % 2 == 0) {
                const int m = p / 2;  // (2m-1)!!/(2^m m!)
                double num = 1.0;
                for (int j = 1; j <= 2 * m - 1; j += 2) num *= j;
                return std::pow(A, p) * num / (std::ldexp(factorial(m), m));
            }
            const int m = (p - 1) / 2;  // m! 2^(m+1) / (pi (2m+1)!!)
            return std::pow(A, p) * std::ldexp(factorial(m), m + 1) /
                   (kPi * double_factorial_odd(m));
        }
        case SystemId::FullSHO:
            break;
    }
    throw std::domain_error("classical_moment: unsupported system");
}

double leading_term_ratio(Parity parity, int p, int n) {
    if (parity == Parity::None)
        throw std::invalid_argument("leading_term_ratio: parity must be even or odd");
    const auto exprs = moment_recursion_airy(parity, p);
    const ZeroKind kind = (parity == Parity::Odd) ? ZeroKind::AiZero : ZeroKind::AiPrimeZero;
    const double lambda = shared_zero_table(kind, n)->value(n);
    const double quantum = exprs.back().eval(lambda);
    const double classical =
        std::pow(lambda, p) * std::ldexp(factorial(p), p) / double_factorial_odd(p);
    return quantum / classical;
}

double semiclassical_density_check(int n, double window_wavelengths) {
    if (n < 10) throw std::invalid_argument("semiclassical_density_check: needs n >= 10");
    if (!(window_wavelengths > 1.0))
        throw std::invalid_argument(
            "semiclassical_density_check: window must exceed one local de Broglie wavelength");

    auto zt = shared_zero_table(ZeroKind::AiZero, n, /*refine_upto=*/n);
    const double zeta_n = zt->value(n);
    const double aip = airy_ai_prime(-zeta_n);
    const double norm = aip * aip;

    // Interior nodes z_j = zeta_n - zeta_j (descending j), plus the wall.
    std::vector<double> nodes;
    nodes.reserve(static_cast<size_t>(n));
    nodes.push_back(0.0);
    for (int j = n - 1; j >= 1; --j) nodes.push_back(zeta_n - zt->value(j));

    const int gaps = std::max(2, static_cast<int>(std::lround(2.0 * window_wavelengths)));
    const int half = gaps / 2;

    const GaussRule& gl = gauss_legendre(16);
    auto lobe_integral = [&](double a, double b) {
        const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
        double s = 0.0;
        for (size_t j = 0; j < gl.x.size(); ++j) {
            const double z = mid + hw * gl.x[j];
            const double v = airy_ai(z - zeta_n);
            s += gl.w[j] * v * v;
        }
        return s * hw / norm;
    };

    double worst = 0.0;
    for (int c = half; c + half < static_cast<int>(nodes.size()); ++c) {
        const double z1 = nodes[static_cast<size_t>(c - half)];
        const double z2 = nodes[static_cast<size_t>(c + half)];
        const double zc = 0.5 * (z1 + z2);
        if (zc < 0.1 * zeta_n || zc > 0.9 * zeta_n) continue;

        double q = 0.0;
        for (int j = c - half; j < c + half; ++j)
            q += lobe_integral(nodes[static_cast<size_t>(j)], nodes[static_cast<size_t>(j) + 1]);
        q /= (z2 - z1);

        const double cl =
            (std::sqrt(zeta_n - z1) - std::sqrt(std::max(zeta_n - z2, 0.0))) /
            (std::sqrt(zeta_n) * (z2 - z1));
        const double pcl = 1.0 / (2.0 * std::sqrt(zeta_n * (zeta_n - zc)));
        worst = std::max(worst, std::fabs(q - cl) / pcl);
    }
    return worst;
}

StarkResult stark_linear_first_order(Parity parity, int n) {
    if (n < 1) throw std::invalid_argument("stark_linear_first_order: n must be >= 1");
    if (parity == Parity::None)
        throw std::invalid_argument("stark_linear_first_order: parity must be even or odd");
    return {SystemId::SymmetricLinear, parity, n, 1, StarkResult::Method::ClosedForm, 0.0};
}

StarkResult stark_linear_closed_form(Parity parity, int n) {
    if (n < 1) throw std::invalid_argument("stark_linear_closed_form: n must be >= 1");
    StarkResult r{SystemId::SymmetricLinear, parity, n, 2, StarkResult::Method::ClosedForm, 0.0};
    if (parity == Parity::Odd) {
        const double zn = shared_zero_table(ZeroKind::AiZero, n)->value(n);
        r.value = -(7.0 / 9.0) * zn;
    } else if (parity == Parity::Even) {
        const double en = shared_zero_table(ZeroKind::AiPrimeZero, n)->value(n);
        r.value = -(5.0 / 9.0) * en;
    } else {
        throw std::invalid_argument("stark_linear_closed_form: parity must be even or odd");
    }
    return r;
}

namespace {

struct Pt2HalfSho {
    double value;
    double tail;
    long terms;
};

// Half-oscillator PT2 sum: (D_n/(8 pi)) sum_{k != n} D_k/((n-k)[4(n-k)^2-1]^2),
// explicit terms plus the same integral-with-corrections tail used by the
// sum rules (terms fall like k^(-7/2), so the tail is tiny but kept anyway).
Pt2HalfSho pt2_half_sho(int n, const SummationConfig& cfg) {
    const long K = std::max<long>(cfg.explicit_terms, n + 100);
    const std::vector<double> d = d_table(static_cast<int>(K) + 4);

    double sum = 0.0, comp = 0.0;
    for (long k = 0; k <= K; ++k) {
        if (k == n) continue;
        const double dd = static_cast<double>(n - k);
        const double q = 4.0 * dd * dd - 1.0;
        const double term = d[static_cast<size_t>(k)] / ((n - k) * q * q);
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }

    auto f = [n](double x) {
        const double dd = x - n;
        const double q = 4.0 * dd * dd - 1.0;
        return 8.0 * std::sqrt(x / kPi) * (1.0 + 3.0 / (8.0 * x) - 7.0 / (128.0 * x * x)) /
               ((n - x) * q * q);
    };
    const double a = static_cast<double>(K + 1);
    const GaussRule& gl = gauss_legendre(64);
    double integral = 0.0;
    for (size_t j = 0; j < gl.x.size(); ++j) {
        const double u = 0.5 + 0.5 * gl.x[j];
        integral += 0.5 * gl.w[j] * f(a / (u * u * u)) * 3.0 * a / (u * u * u * u);
    }
    const double h = 0.5;
    const double fp = (f(a + h) - f(a - h)) / (2.0 * h);
    const double tail = integral + 0.5 * f(a) - fp / 12.0;

    const double scale = d[static_cast<size_t>(n)] / (8.0 * kPi);
    return {scale * ((sum + comp) + tail), scale * tail, K + 1};
}

}  // namespace

StarkResult pt2_shift(SystemId system, Parity parity, int n, const SummationConfig& cfg) {
    switch (system) {
        case SystemId::SymmetricLinear: {
            StarkResult r{system, parity, n, 2, StarkResult::Method::PT, 0.0};
            if (parity == Parity::Odd)
                r.value = -4.0 * evaluate_sum({SumTag::T, 7, n}, cfg).total;
            else if (parity == Parity::Even)
                r.value = -4.0 * evaluate_sum({SumTag::U, 7, n}, cfg).total;
            else
                throw std::invalid_argument("pt2_shift: linear states need a parity");
            return r;
        }
        case SystemId::HalfSHO: {
            StarkResult r{system, Parity::None, n, 2, StarkResult::Method::PT, 0.0};
            r.value = pt2_half_sho(n, cfg).value;
            return r;
        }
        default:
            throw std::invalid_argument(
                "pt2_shift: implemented for the symmetric linear potential and the half "
                "oscillator");
    }
}

StarkResult wkb_half_sho(int n, int order) {
    if (n < 0) throw std::invalid_argument("wkb_half_sho: n must be >= 0");
    StarkResult r{SystemId::HalfSHO, Parity::None, n, order, StarkResult::Method::WKB, 0.0};
    switch (order) {
        case 0: r.value = 2.0 * n + 1.5; break;
        case 1: r.value = (2.0 / kPi) * std::sqrt(4.0 * n + 3.0); break;
        case 2: r.value = -0.5 + 4.0 / (kPi * kPi); break;
        default: throw std::invalid_argument("wkb_half_sho: order must be 0, 1, or 2");
    }
    return r;
}

std::vector<Fig1Row> fig1_series(int n_max, const SummationConfig& cfg) {
    if (n_max < 4) throw std::invalid_argument("fig1_series: needs n_max >= 4");
    const double wkb2 = -0.5 + 4.0 / (kPi * kPi);

    std::vector<Fig1Row> rows;
    rows.reserve(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n) {
        Fig1Row row;
        row.n = n;
        // r1 is pure closed form (no sum): use the correctly-rounded D_n.
        row.r1 = 4.0 * std::sqrt(4.0 * n + 3.0) / (kSqrtPi * d_coefficient(n).value) - 1.0;
        const Pt2HalfSho pt2 = pt2_half_sho(n, cfg);
        row.r2 = wkb2 / pt2.value - 1.0;
        row.pt2_terms = pt2.terms;
        row.pt2_tail = pt2.tail;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace airysum
