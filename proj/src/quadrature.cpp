#include "airysum/quadrature.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <stdexcept>

#include "airysum/airy.hpp"
#include "airysum/errors.hpp"
#include "airysum/hermite.hpp"
#include "airysum/zeros.hpp"

namespace airysum {

const GaussRule& gauss_legendre(int points) {
    static std::mutex mu;
    static std::map<int, GaussRule> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(points);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.x.resize(static_cast<size_t>(points));
    rule.w.resize(static_cast<size_t>(points));
    const int m = (points + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Chebyshev-angle seed, then Newton on P_n.
        double z = std::cos(M_PI * (i + 0.75) / (points + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < points; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = points * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        rule.x[static_cast<size_t>(i)] = -z;
        rule.x[static_cast<size_t>(points - 1 - i)] = z;
        rule.w[static_cast<size_t>(i)] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.w[static_cast<size_t>(points - 1 - i)] = rule.w[static_cast<size_t>(i)];
    }
    return cache.emplace(points, std::move(rule)).first->second;
}

namespace {

double panels(const std::function<double(double)>& f, double a, double b, double h,
              const GaussRule& gl) {
    const int np = std::max(1, static_cast<int>(std::ceil((b - a) / h)));
    const double w = (b - a) / np;
    double sum = 0.0, comp = 0.0;
    for (int i = 0; i < np; ++i) {
        const double lo = a + i * w;
        const double mid = lo + 0.5 * w;
        double s = 0.0;
        for (size_t j = 0; j < gl.x.size(); ++j)
            s += gl.w[j] * f(mid + 0.5 * w * gl.x[j]);
        // Neumaier-compensated accumulation across panels.
        const double term = s * 0.5 * w;
        const double t = sum + term;
        comp += (std::fabs(sum) >= std::fabs(term)) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    return sum + comp;
}

}  // namespace

double adaptive_integrate(const std::function<double(double)>& f, double a, double b,
                          const QuadratureConfig& cfg, double* achieved) {
    const GaussRule& gl = gauss_legendre(32);
    double h = cfg.panel;
    double prev = panels(f, a, b, h, gl);
    double err = std::numeric_limits<double>::infinity();
    for (int k = 0; k < cfg.max_halvings; ++k) {
        h *= 0.5;
        const double cur = panels(f, a, b, h, gl);
        err = std::fabs(cur - prev);
        if (err <= std::max(cfg.rel_tol * std::fabs(cur), cfg.abs_floor)) {
            if (achieved) *achieved = err;
            return cur;
        }
        prev = cur;
    }
    const double rel_achieved = err / std::max(std::fabs(prev), 1e-300);
    throw AccuracyError("adaptive_integrate: tolerance not reached", rel_achieved, cfg.rel_tol);
}

double airy_product_moment(int p, double b1, double b2, const QuadratureConfig& cfg) {
    const double ymax = std::max(b1, b2) + cfg.pad;
    auto f = [p, b1, b2](double y) {
        double v = airy_ai(y - b1) * airy_ai(y - b2);
        for (int i = 0; i < p; ++i) v *= y;
        return v;
    };
    return adaptive_integrate(f, 0.0, ymax, cfg);
}

double airy_prime_product_moment(double b1, double b2, const QuadratureConfig& cfg) {
    const double ymax = std::max(b1, b2) + cfg.pad;
    auto f = [b1, b2](double y) { return airy_ai_prime(y - b1) * airy_ai_prime(y - b2); };
    return adaptive_integrate(f, 0.0, ymax, cfg);
}

double wavefunction(const SpectralPoint& state, double y) {
    switch (state.system) {
        case SystemId::SymmetricLinear:
            if (state.parity == Parity::Even) {
                const double norm = std::sqrt(state.lambda) * airy_ai(-state.lambda);
                return airy_ai(y - state.lambda) / norm;
            }
            [[fallthrough]];
        case SystemId::Bouncer:
            return airy_ai(y - state.lambda) / airy_ai_prime(-state.lambda);
        case SystemId::HalfSHO:
            return std::sqrt(2.0) * hermite_weighted(2 * state.n + 1, y);
        case SystemId::FullSHO:
            return hermite_weighted(state.n, y);
    }
    throw std::domain_error("wavefunction: unsupported system");
}

double quad_matrix_element(const SpectralPoint& a, const SpectralPoint& b, int p,
                           const QuadratureConfig& cfg) {
    if (p < 0) throw std::invalid_argument("quad_matrix_element: p must be >= 0");

    const bool linear_a =
        a.system == SystemId::SymmetricLinear || a.system == SystemId::Bouncer;
    const bool linear_b =
        b.system == SystemId::SymmetricLinear || b.system == SystemId::Bouncer;
    if (a.system != b.system && !(linear_a && linear_b))
        throw std::invalid_argument("quad_matrix_element: states from different systems");

    double prefactor = 1.0;
    if (a.system == SystemId::FullSHO) {
        // Full-line element; definite parity makes odd integrands vanish.
        if ((a.n + b.n + p) % 2 == 1) return 0.0;
        prefactor = 2.0;
    }

    const double ymax = std::max(turning_point(a), turning_point(b)) + cfg.pad;
    auto f = [&](double y) {
        double v = wavefunction(a, y) * wavefunction(b, y);
        for (int i = 0; i < p; ++i) v *= y;
        return v;
    };
    return prefactor * adaptive_integrate(f, 0.0, ymax, cfg);
}

}  // namespace airysum
