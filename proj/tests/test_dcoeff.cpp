#include <doctest.h>

#include <cmath>

#include "airysum/dcoeff.hpp"
#include "airysum/dd.hpp"

using namespace airysum;

TEST_CASE("small D_n values are exact") {
    CHECK(d_coefficient(0).equals(4, 0));    // 4
    CHECK(d_coefficient(1).equals(6, 0));    // 6
    CHECK(d_coefficient(2).equals(15, 1));   // 15/2
    CHECK(d_coefficient(3).equals(35, 2));   // 35/4
    CHECK(d_coefficient(0).value == 4.0);
    CHECK(d_coefficient(2).value == 7.5);
}

TEST_CASE("recurrence holds exactly and values stay positive") {
    DCoefficient prev = d_coefficient(0);
    for (int n = 0; n < 120; ++n) {
        const DCoefficient next = d_coefficient(n + 1);
        // D_{n+1} * 2(n+1) == D_n * (2n+3), with the dyadic representation:
        // num_{n+1}/2^{t+1} * (n+1)... compare cross products exactly.
        const BigInt lhs = next.numerator * (2 * (n + 1));
        const BigInt rhs = prev.numerator * (2 * n + 3);
        const int dt = next.two_exponent - prev.two_exponent;
        BigInt l = lhs, r = rhs;
        if (dt >= 0)
            r <<= dt;
        else
            l <<= -dt;
        CHECK(l == r);
        CHECK(next.numerator > 0);
        prev = next;
    }
}

TEST_CASE("double view is correctly rounded and the fast table tracks it") {
    const std::vector<double> table = d_table(301);
    for (int n : {0, 1, 2, 10, 50, 150, 300}) {
        const double exact = d_coefficient(n).value;
        // The fast table drifts by at most a few ulps per hundred steps.
        CHECK(table[static_cast<size_t>(n)] ==
              doctest::Approx(exact).epsilon(1e-13));
    }
}

TEST_CASE("double view within 1 ulp of a double-double recurrence") {
    DD d(4.0);
    for (int n = 0; n <= 300; ++n) {
        const double v = d_coefficient(n).value;
        const double ref = d.value();
        CHECK_MESSAGE((v == ref || v == std::nextafter(ref, 0.0) ||
                       v == std::nextafter(ref, 1e308)),
                      "n = ", n);
        d = d * (2.0 * n + 3.0) / (2.0 * n + 2.0);
    }
}

TEST_CASE("Stirling limit D_n -> 8 sqrt(n/pi)") {
    const int n = 10000;
    const double dn = d_coefficient(n).value;
    const double ratio = dn / (8.0 * std::sqrt(n / M_PI));
    // D_n = 8 sqrt(n/pi) (1 + 3/(8n) + O(n^-2)): the limit is approached
    // from above, with the next correction +3/(8n) = 3.75e-5 here.
    CHECK(ratio > 1.0);
    CHECK(ratio < 1.0 + 2.0 * 3.0 / (8.0 * n));
    CHECK(ratio == doctest::Approx(1.0 + 3.0 / (8.0 * n)).epsilon(1e-7));
}
