#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "airysum/airy.hpp"

using namespace airysum;

namespace {

// Independent oracle: bisect the extended-precision Maclaurin evaluation on
// the negative axis; returns the zero magnitude.  No zero-finding machinery
// from the library is involved.
double bisect_series(bool prime, double lo, double hi) {
    auto f = [prime](double w) {
        const detail::AiryDD v = detail::airy_maclaurin_dd(-w);
        return prime ? v.aip.value() : v.ai.value();
    };
    double flo = f(lo);
    REQUIRE(flo * f(hi) < 0.0);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if (flo * fm < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
        if (hi - lo < 1e-15) break;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("closed forms at the origin") {
    // Ai(0) = 3^(-2/3)/Gamma(2/3), Ai'(0) = -3^(-1/3)/Gamma(1/3)
    CHECK(airy_ai(0.0) == doctest::Approx(0.3550280538878172).epsilon(1e-15));
    CHECK(airy_ai_prime(0.0) == doctest::Approx(-0.2588194037928068).epsilon(1e-15));
}

TEST_CASE("first zeros against the bisection oracle") {
    const double zeta1 = bisect_series(false, 2.0, 3.0);
    CHECK(zeta1 == doctest::Approx(2.3381074105).epsilon(1e-9));
    CHECK(std::fabs(airy_ai(-zeta1)) < 1e-13);

    const double eta1 = bisect_series(true, 1.0, 2.0);
    CHECK(eta1 == doctest::Approx(1.0187929716).epsilon(1e-9));
    CHECK(std::fabs(airy_ai_prime(-eta1)) < 1e-13);
}

TEST_CASE("decaying side") {
    // Oracle value from the extended-precision series itself.
    const double oracle = detail::airy_maclaurin_dd(5.0).ai.value();
    CHECK(oracle == doctest::Approx(1.0835e-4).epsilon(1e-4));
    CHECK(airy_ai(5.0) == doctest::Approx(oracle).epsilon(1e-13));
    // Underflow is graceful, not an error.
    CHECK(airy_ai(200.0) == 0.0);
    CHECK(airy_ai_prime(200.0) == 0.0);
}

TEST_CASE("derivative consistency by central differences") {
    const double h = 1e-5;
    const double x = -1.0;
    const double fd = (airy_ai(x + h) - airy_ai(x - h)) / (2.0 * h);
    CHECK(fd == doctest::Approx(airy_ai_prime(x)).epsilon(1e-9));
}

TEST_CASE("series and asymptotic branches agree across the crossover") {
    // Both sides of |x| = 9 to 1e-13 relative; this is the only place the
    // asymptotic code paths can be checked against the series oracle.
    for (double x : {8.6, 8.8, 9.2, 9.4}) {
        const detail::AiryDD s = detail::airy_maclaurin_dd(x);
        const AiryPair a = detail::airy_asymptotic_pos(x);
        CHECK(a.ai == doctest::Approx(s.ai.value()).epsilon(1e-13));
        CHECK(a.aip == doctest::Approx(s.aip.value()).epsilon(1e-13));

        const detail::AiryDD sn = detail::airy_maclaurin_dd(-x);
        const AiryPair an = detail::airy_asymptotic_neg(-x);
        CHECK(an.ai == doctest::Approx(sn.ai.value()).epsilon(1e-13));
        CHECK(an.aip == doctest::Approx(sn.aip.value()).epsilon(1e-13));
    }
}

TEST_CASE("Airy equation residual from a 5-point stencil") {
    const double h = 1e-2;
    for (double x = -30.0; x <= 8.0; x += 0.7) {
        const double f2 = (-airy_ai(x + 2 * h) + 16 * airy_ai(x + h) - 30 * airy_ai(x) +
                           16 * airy_ai(x - h) - airy_ai(x - 2 * h)) /
                          (12 * h * h);
        CHECK(std::fabs(f2 - x * airy_ai(x)) < 1e-6);
    }
}

TEST_CASE("positivity to the right of the first zero") {
    const double zeta1 = bisect_series(false, 2.0, 3.0);
    for (double x = -zeta1 + 1e-6; x < 30.0; x += 0.37) {
        const double v = airy_ai(x);
        CHECK(v > 0.0);
    }
}

TEST_CASE("non-finite arguments are rejected") {
    CHECK_THROWS_AS(airy_ai(std::nan("")), std::domain_error);
    CHECK_THROWS_AS(airy_ai_prime(std::numeric_limits<double>::infinity()), std::domain_error);
}

TEST_CASE("accuracy sampling across the contract window") {
    // Compare the production values against the series oracle where the
    // oracle is trustworthy (|x| <= 9.4).
    for (double x = -9.4; x <= 9.4; x += 0.61) {
        const detail::AiryDD v = detail::airy_maclaurin_dd(x);
        const double budget = 1e-14 * std::max(1.0, std::fabs(v.ai.value()) * 10.0);
        CHECK(std::fabs(airy_ai(x) - v.ai.value()) < budget);
        CHECK(std::fabs(airy_ai_prime(x) - v.aip.value()) <
              1e-14 * std::max(1.0, std::fabs(v.aip.value()) * 10.0));
    }
}
