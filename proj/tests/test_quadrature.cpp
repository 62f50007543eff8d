#include <doctest.h>

#include <cmath>

#include "airysum/errors.hpp"
#include "airysum/moments.hpp"
#include "airysum/quadrature.hpp"
#include "airysum/zeros.hpp"

using namespace airysum;

TEST_CASE("Gauss-Legendre rule integrates polynomials exactly") {
    const GaussRule& gl = gauss_legendre(32);
    double s = 0.0, sx2 = 0.0;
    for (size_t i = 0; i < gl.x.size(); ++i) {
        s += gl.w[i];
        sx2 += gl.w[i] * gl.x[i] * gl.x[i];
    }
    CHECK(s == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(sx2 == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("oracle self-checks against known moments") {
    // Odd linear state: <y> = 2 zeta_1/3 in the half-line normalization.
    const SpectralPoint odd1 = make_state(SystemId::SymmetricLinear, Parity::Odd, 1);
    const double z1 = odd1.lambda;
    CHECK(quad_matrix_element(odd1, odd1, 1) ==
          doctest::Approx(2.0 * z1 / 3.0).epsilon(1e-10));

    // Half oscillator: <y> diagonal = D_0/(2 sqrt(pi)) = 2/sqrt(pi).
    const SpectralPoint h0 = make_state(SystemId::HalfSHO, 0);
    CHECK(quad_matrix_element(h0, h0, 1) ==
          doctest::Approx(2.0 / std::sqrt(M_PI)).epsilon(1e-10));

    // Normalizations.
    CHECK(quad_matrix_element(odd1, odd1, 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(quad_matrix_element(h0, h0, 0) == doctest::Approx(1.0).epsilon(1e-10));
    const SpectralPoint even3 = make_state(SystemId::SymmetricLinear, Parity::Even, 3);
    CHECK(quad_matrix_element(even3, even3, 0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("declared accuracy holds at the contract edge (n = 20, p = 8)") {
    const auto m = moment_recursion_airy(Parity::Odd, 8);
    const SpectralPoint odd20 = make_state(SystemId::SymmetricLinear, Parity::Odd, 20);
    const double exact = m[7].eval(odd20.lambda);
    CHECK(quad_matrix_element(odd20, odd20, 8) == doctest::Approx(exact).epsilon(1e-10));

    const SpectralPoint h20 = make_state(SystemId::HalfSHO, 20);
    CHECK(quad_matrix_element(h20, h20, 2) == doctest::Approx(2.0 * 20 + 1.5).epsilon(1e-10));
}

TEST_CASE("bouncer states alias the odd linear sector") {
    const SpectralPoint b2 = make_state(SystemId::Bouncer, 2);
    const SpectralPoint odd2 = make_state(SystemId::SymmetricLinear, Parity::Odd, 2);
    CHECK(quad_matrix_element(b2, odd2, 2) ==
          doctest::Approx(quad_matrix_element(odd2, odd2, 2)).epsilon(1e-12));
}

TEST_CASE("full-SHO parity selection") {
    const SpectralPoint f0 = make_state(SystemId::FullSHO, 0);
    const SpectralPoint f2 = make_state(SystemId::FullSHO, 2);
    CHECK(quad_matrix_element(f0, f2, 1) == 0.0);  // odd integrand
    CHECK(quad_matrix_element(f0, f0, 2) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("unreachable tolerance raises AccuracyError with diagnostics") {
    QuadratureConfig cfg;
    cfg.rel_tol = 1e-18;
    cfg.abs_floor = 0.0;
    const SpectralPoint odd1 = make_state(SystemId::SymmetricLinear, Parity::Odd, 1);
    CHECK_THROWS_AS(quad_matrix_element(odd1, odd1, 1, cfg), AccuracyError);
    try {
        quad_matrix_element(odd1, odd1, 1, cfg);
    } catch (const AccuracyError& e) {
        CHECK(e.requested() == 1e-18);
        CHECK(e.achieved() > 0.0);
    }
}

TEST_CASE("cross-system pairs are rejected") {
    const SpectralPoint odd1 = make_state(SystemId::SymmetricLinear, Parity::Odd, 1);
    const SpectralPoint h0 = make_state(SystemId::HalfSHO, 0);
    CHECK_THROWS_AS(quad_matrix_element(odd1, h0, 1), std::invalid_argument);
}
