#pragma once

#include <cmath>

namespace airysum {

// Double-double value: the unevaluated sum hi + lo with |lo| <= ulp(hi)/2,
// giving ~31 significant decimal digits.  Built from the classic error-free
// transformations (Dekker 1971, Knuth TAOCP vol. 2).  This is enough headroom
// to absorb the worst cancellation met in this library: the Airy Maclaurin
// series near |x| ~ 9.5 loses ~16 digits to alternating-term cancellation.
//
// Do not compile with -ffast-math; the transformations rely on IEEE rounding.
struct DD {
    double hi = 0.0;
    double lo = 0.0;

    constexpr DD() = default;
    constexpr DD(double h) : hi(h) {}
    constexpr DD(double h, double l) : hi(h), lo(l) {}

    double value() const { return hi + lo; }
};

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

// Requires |a| >= |b| (or a == 0).
inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }

inline DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD operator+(DD a, double b) {
    DD s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD operator+(double a, DD b) { return b + a; }
inline DD operator-(DD a, DD b) { return a + (-b); }
inline DD operator-(DD a, double b) { return a + (-b); }
inline DD operator-(double a, DD b) { return DD(a) + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD operator*(DD a, double b) {
    DD p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD operator*(double a, DD b) { return b * a; }

inline DD operator/(DD a, DD b) {
    const double q1 = a.hi / b.hi;
    DD r = a - b * q1;
    const double q2 = r.hi / b.hi;
    r = r - b * q2;
    const double q3 = r.hi / b.hi;
    return quick_two_sum(q1, q2) + q3;
}

inline DD operator/(DD a, double b) { return a / DD(b); }
inline DD operator/(double a, DD b) { return DD(a) / b; }

inline bool operator<(DD a, DD b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(DD a, DD b) { return b < a; }

inline DD abs(DD a) { return a.hi < 0.0 ? -a : a; }

inline DD sqrt(DD a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    const double s = std::sqrt(a.hi);
    // One Newton step in double-double recovers full precision.
    DD t = a / DD(s);
    DD r = t + s;
    return {r.hi * 0.5, r.lo * 0.5};
}

namespace dd_const {
inline constexpr DD two_pi{6.283185307179586, 2.4492935982947064e-16};
inline constexpr DD pi_over_4{0.7853981633974483, 3.061616997868383e-17};
inline constexpr DD inv_sqrt_pi{0.5641895835477563, 7.66772980658294e-18};
}  // namespace dd_const

// sin/cos of a double-double angle, reduced modulo 2*pi in double-double.
// The outputs are plain doubles accurate to ~1 ulp even when |theta| ~ 1e5,
// which plain std::sin cannot deliver because the reduction error scales
// with |theta|.
inline void dd_sincos(DD theta, double& s, double& c) {
    const double n = std::nearbyint(theta.value() / dd_const::two_pi.value());
    DD r = theta - dd_const::two_pi * n;
    const double sh = std::sin(r.hi);
    const double ch = std::cos(r.hi);
    s = sh + r.lo * ch;
    c = ch - r.lo * sh;
}

}  // namespace airysum
