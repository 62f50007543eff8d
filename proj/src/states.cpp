#include "airysum/states.hpp"

#include <cmath>
#include <stdexcept>

#include "airysum/dcoeff.hpp"
#include "airysum/zeros.hpp"

namespace airysum {

namespace {
constexpr double kSqrtPi = 1.7724538509055160273;
}

SpectralPoint make_state(SystemId system, Parity parity, int n) {
    SpectralPoint s{system, parity, n, 0.0};
    switch (system) {
        case SystemId::SymmetricLinear:
            if (n < 1) throw std::invalid_argument("make_state: linear families are 1-based");
            if (parity == Parity::Odd)
                s.lambda = shared_zero_table(ZeroKind::AiZero, n)->value(n);
            else if (parity == Parity::Even)
                s.lambda = shared_zero_table(ZeroKind::AiPrimeZero, n)->value(n);
            else
                throw std::invalid_argument("make_state: symmetric linear states need a parity");
            break;
        case SystemId::Bouncer:
            if (n < 1) throw std::invalid_argument("make_state: linear families are 1-based");
            s.parity = Parity::None;
            s.lambda = shared_zero_table(ZeroKind::AiZero, n)->value(n);
            break;
        case SystemId::HalfSHO:
            if (n < 0) throw std::invalid_argument("make_state: oscillator families are 0-based");
            s.parity = Parity::None;
            s.lambda = 4.0 * n + 3.0;
            break;
        case SystemId::FullSHO:
            if (n < 0) throw std::invalid_argument("make_state: oscillator families are 0-based");
            s.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
            s.lambda = 2.0 * n + 1.0;
            break;
    }
    return s;
}

double energy(const SpectralPoint& state) { return state.lambda; }

double boundary_value(const SpectralPoint& state) {
    switch (state.system) {
        case SystemId::SymmetricLinear:
            if (state.parity == Parity::Odd) return 0.0;
            return 1.0 / std::sqrt(2.0 * state.lambda);
        case SystemId::Bouncer:
            return 0.0;
        case SystemId::HalfSHO: {
            // psi~_n'(0), signed by the (-1)^n of H'_{2n+1}(0).
            const double dn = d_coefficient(state.n).value;
            const double mag = std::sqrt(dn / kSqrtPi);
            return (state.n % 2 == 0) ? mag : -mag;
        }
        case SystemId::FullSHO:
            break;
    }
    throw std::domain_error("boundary_value: unsupported system");
}

double turning_point(const SpectralPoint& state) {
    switch (state.system) {
        case SystemId::SymmetricLinear:
        case SystemId::Bouncer:
            return state.lambda;
        case SystemId::HalfSHO:
        case SystemId::FullSHO:
            return std::sqrt(state.lambda);
    }
    throw std::domain_error("turning_point: unsupported system");
}

std::string to_string(SystemId system) {
    switch (system) {
        case SystemId::SymmetricLinear: return "linear";
        case SystemId::Bouncer: return "bouncer";
        case SystemId::HalfSHO: return "halfsho";
        case SystemId::FullSHO: return "fullsho";
    }
    return "?";
}

std::string to_string(Parity parity) {
    switch (parity) {
        case Parity::Even: return "even";
        case Parity::Odd: return "odd";
        case Parity::None: return "none";
    }
    return "?";
}

}  // namespace airysum
