#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "airysum/states.hpp"
#include "airysum/zeros.hpp"

using namespace airysum;

TEST_CASE("eigenvalues by system") {
    CHECK(energy(make_state(SystemId::SymmetricLinear, Parity::Even, 1)) ==
          doctest::Approx(airy_zero(ZeroKind::AiPrimeZero, 1)).epsilon(1e-15));
    CHECK(energy(make_state(SystemId::SymmetricLinear, Parity::Odd, 2)) ==
          doctest::Approx(airy_zero(ZeroKind::AiZero, 2)).epsilon(1e-15));
    CHECK(energy(make_state(SystemId::HalfSHO, 2)) == 11.0);
    CHECK(energy(make_state(SystemId::FullSHO, 0)) == 1.0);
    CHECK(energy(make_state(SystemId::Bouncer, 1)) ==
          doctest::Approx(2.3381074105).epsilon(1e-10));
}

TEST_CASE("origin data") {
    CHECK(boundary_value(make_state(SystemId::SymmetricLinear, Parity::Odd, 3)) == 0.0);
    const double eta1 = airy_zero(ZeroKind::AiPrimeZero, 1);
    CHECK(boundary_value(make_state(SystemId::SymmetricLinear, Parity::Even, 1)) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * eta1)).epsilon(1e-15));
    CHECK(boundary_value(make_state(SystemId::SymmetricLinear, Parity::Even, 1)) ==
          doctest::Approx(0.7006).epsilon(1e-4));
    CHECK(boundary_value(make_state(SystemId::Bouncer, 7)) == 0.0);

    const double slope0 = boundary_value(make_state(SystemId::HalfSHO, 0));
    CHECK(slope0 * slope0 == doctest::Approx(4.0 / std::sqrt(M_PI)).epsilon(1e-14));
    CHECK(slope0 * slope0 == doctest::Approx(2.2568).epsilon(1e-4));

    CHECK_THROWS_AS(boundary_value(make_state(SystemId::FullSHO, 0)), std::domain_error);
}

TEST_CASE("index validation") {
    CHECK_THROWS_AS(make_state(SystemId::SymmetricLinear, Parity::Odd, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_state(SystemId::SymmetricLinear, Parity::None, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_state(SystemId::HalfSHO, -1), std::invalid_argument);
}
