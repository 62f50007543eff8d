#include "airysum/moments.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace airysum {

double rational_to_double(const Rational& r) {
    using Float50 = boost::multiprecision::cpp_bin_float_50;
    return static_cast<double>(Float50(boost::multiprecision::numerator(r)) /
                               Float50(boost::multiprecision::denominator(r)));
}

double MomentExpression::eval(double lambda) const {
    double sum = 0.0;
    for (const auto& t : terms) sum += rational_to_double(t.coeff) * std::pow(lambda, t.exponent);
    return sum;
}

std::string MomentExpression::to_pretty() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        os << t.coeff;
        if (t.exponent != 0) os << " l^" << t.exponent;
    }
    return os.str();
}

namespace {

// Sparse polynomial in lambda with exact rational coefficients.
using Poly = std::map<int, Rational>;

Poly shift_up(const Poly& p) {
    Poly out;
    for (const auto& [e, c] : p) out[e + 1] = c;
    return out;
}

void add_scaled(Poly& dst, const Poly& src, const Rational& s) {
    for (const auto& [e, c] : src) {
        dst[e] += c * s;
        if (dst[e] == 0) dst.erase(e);
    }
}

}  // namespace

std::vector<MomentExpression> moment_recursion_airy(Parity parity, int max_p) {
    if (parity == Parity::None)
        throw std::invalid_argument("moment_recursion_airy: parity must be even or odd");
    if (max_p < 1) throw std::invalid_argument("moment_recursion_airy: max_p must be >= 1");

    std::vector<Poly> M(static_cast<size_t>(max_p) + 1);
    M[0] = Poly{{0, Rational(1)}};

    for (int p = 1; p <= max_p; ++p) {
        const int q = p + 1;  // recursion index producing M_{q-1}
        Poly rhs = shift_up(M[static_cast<size_t>(p - 1)]);
        Poly acc;
        add_scaled(acc, rhs, Rational(4LL * q * (q - 1)));
        if (p >= 3) {
            const long long c4 = 1LL * q * (q - 1) * (q - 2) * (q - 3);
            add_scaled(acc, M[static_cast<size_t>(p - 3)], Rational(c4));
        }
        if (parity == Parity::Even && q == 3) {
            // -s(3) = +6/lambda
            Poly s{{-1, Rational(6)}};
            add_scaled(acc, s, Rational(1));
        }
        Poly result;
        const Rational den(2LL * q * (2 * q - 1));
        for (const auto& [e, c] : acc) result[e] = c / den;
        M[static_cast<size_t>(p)] = std::move(result);
    }

    std::vector<MomentExpression> out;
    out.reserve(static_cast<size_t>(max_p));
    for (int p = 1; p <= max_p; ++p) {
        MomentExpression e;
        e.parity = parity;
        e.power = p;
        for (auto it = M[static_cast<size_t>(p)].rbegin(); it != M[static_cast<size_t>(p)].rend(); ++it)
            e.terms.push_back({it->second, it->first});
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace airysum
