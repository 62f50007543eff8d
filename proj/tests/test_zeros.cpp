#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "airysum/airy.hpp"
#include "airysum/zeros.hpp"

using namespace airysum;

TEST_CASE("first zeros match the series-oracle values") {
    CHECK(airy_zero(ZeroKind::AiZero, 1) == doctest::Approx(2.3381074105).epsilon(1e-10));
    CHECK(airy_zero(ZeroKind::AiPrimeZero, 1) == doctest::Approx(1.0187929716).epsilon(1e-10));
}

TEST_CASE("leading asymptotic seed reproduces the handbook arithmetic") {
    // [3 pi (2*1 - 1/2)/4]^(2/3) = (9 pi/8)^(2/3) ~ 2.320
    const double seed = std::pow(9.0 * M_PI / 8.0, 2.0 / 3.0);
    CHECK(seed == doctest::Approx(2.320).epsilon(5e-4));
    // The refined-seed routine should land within ~1e-3 of the true zero.
    CHECK(airy_zero_seed(ZeroKind::AiZero, 1) == doctest::Approx(2.33810741).epsilon(1e-3));
}

TEST_CASE("refined residuals stay below 1e-13") {
    for (int k = 1; k <= 40; ++k) {
        CHECK(std::fabs(airy_ai(-airy_zero(ZeroKind::AiZero, k))) < 1e-13);
        CHECK(std::fabs(airy_ai_prime(-airy_zero(ZeroKind::AiPrimeZero, k))) < 1e-13);
    }
}

TEST_CASE("large-index zeros remain accurate") {
    // n = 1e4 lives deep in the asymptotic branch of the Airy evaluation.
    const double z = airy_zero(ZeroKind::AiZero, 10000);
    // |Ai(-z)| < |Ai'| * 1e-12 guarantees the abs-error contract on the zero.
    CHECK(std::fabs(airy_ai(-z)) < 1e-12 * std::fabs(airy_ai_prime(-z)));
}

TEST_CASE("zero_table consistency with airy_zero") {
    const ZeroTable t = zero_table(ZeroKind::AiZero, 5, 5);
    for (int k = 1; k <= 5; ++k)
        CHECK(t.value(k) == doctest::Approx(airy_zero(ZeroKind::AiZero, k)).epsilon(1e-14));
    for (int k = 2; k <= 5; ++k) CHECK(t.value(k) > t.value(k - 1));
}

TEST_CASE("asymptotic entries agree with spot refinement") {
    const ZeroTable t = zero_table(ZeroKind::AiZero, 1000, 200);
    CHECK(std::fabs(t.value(500) - airy_zero(ZeroKind::AiZero, 500)) < 1e-10);
    // Boundary consistency where the table switches regimes.
    CHECK(std::fabs(t.value(201) - airy_zero(ZeroKind::AiZero, 201)) < 1e-9);
    const ZeroTable te = zero_table(ZeroKind::AiPrimeZero, 1000, 200);
    CHECK(std::fabs(te.value(201) - airy_zero(ZeroKind::AiPrimeZero, 201)) < 1e-9);
    CHECK(std::fabs(te.value(500) - airy_zero(ZeroKind::AiPrimeZero, 500)) < 1e-10);
}

TEST_CASE("interlacing of the two zero families") {
    const ZeroTable tz = zero_table(ZeroKind::AiZero, 10, 10);
    const ZeroTable te = zero_table(ZeroKind::AiPrimeZero, 10, 10);
    for (int k = 1; k <= 10; ++k) {
        CHECK(te.value(k) < tz.value(k));
        if (k < 10) CHECK(tz.value(k) < te.value(k + 1));
    }
}

TEST_CASE("argument validation") {
    CHECK_THROWS_AS(airy_zero(ZeroKind::AiZero, 0), std::invalid_argument);
    CHECK_THROWS_AS(zero_table(ZeroKind::AiZero, 5, 6), std::invalid_argument);
}

TEST_CASE("normalization integrals by quadrature") {
    // int_0^inf Ai(z - zeta_n)^2 dz = Ai'(-zeta_n)^2 and
    // int_0^inf Ai(z - eta_n)^2 dz  = eta_n Ai(-eta_n)^2.
    for (int n : {1, 3}) {
        const double zn = airy_zero(ZeroKind::AiZero, n);
        double acc = 0.0;
        const double h = 1e-3;  // trapezoid fine enough for 1e-9 relative here
        for (double z = 0.0; z < zn + 18.0; z += h) {
            const double f0 = airy_ai(z - zn), f1 = airy_ai(z + h - zn);
            acc += 0.5 * h * (f0 * f0 + f1 * f1);
        }
        const double aip = airy_ai_prime(-zn);
        CHECK(acc == doctest::Approx(aip * aip).epsilon(1e-7));
    }
}
