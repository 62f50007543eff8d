#include "airysum/zeros.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "airysum/airy.hpp"
#include "airysum/errors.hpp"

namespace airysum {

namespace {

constexpr double kPi = 3.14159265358979323846;

// A&S 10.4.105: zeros of Ai at -T(t), t = 3*pi*(4k-1)/8.
// A&S 10.4.106: zeros of Ai' at -U(t), t = 3*pi*(4k-3)/8.
// The two expansions have different coefficients; using the T coefficients
// for eta_k would be off by ~0.25/t^2 and fail the refined/asymptotic
// boundary-consistency requirement by four orders of magnitude.
double zero_expansion(ZeroKind kind, double t) {
    static const double cT[] = {5.0 / 48.0, -5.0 / 36.0, 77125.0 / 82944.0};
    static const double cU[] = {-7.0 / 48.0, 35.0 / 288.0, -181223.0 / 207360.0};
    const double* c = (kind == ZeroKind::AiZero) ? cT : cU;

    const double it2 = 1.0 / (t * t);
    double sum = 1.0;
    double pw = 1.0;
    double prev = 1.0;
    for (int i = 0; i < 3; ++i) {
        pw *= it2;
        const double term = c[i] * pw;
        if (std::fabs(term) >= prev) break;  // truncate where the expansion turns
        sum += term;
        prev = std::fabs(term);
    }
    return std::cbrt(t * t) * sum;
}

double seed_argument(ZeroKind kind, int n) {
    const double q = (kind == ZeroKind::AiZero) ? (4.0 * n - 1.0) : (4.0 * n - 3.0);
    return 3.0 * kPi * q / 8.0;
}

double newton_refine(ZeroKind kind, double seed) {
    double w = seed;
    for (int i = 0; i < 50; ++i) {
        const AiryPair v = airy_ai_both(-w);
        double step;
        if (kind == ZeroKind::AiZero) {
            // g(w) = Ai(-w), g'(w) = -Ai'(-w)
            step = v.ai / v.aip;
        } else {
            // h(w) = Ai'(-w), h'(w) = w*Ai(-w)
            step = -v.aip / (w * v.ai);
        }
        if (std::fabs(step) > 0.5) step = std::copysign(0.5, step);
        w += step;
        if (std::fabs(step) < 1e-15 * w) return w;
    }
    throw AccuracyError("airy_zero: Newton iteration failed to converge", 1.0, 1e-15);
}

}  // namespace

double airy_zero_seed(ZeroKind kind, int n) {
    if (n < 1) throw std::invalid_argument("airy_zero: index must be >= 1");
    return zero_expansion(kind, seed_argument(kind, n));
}

double airy_zero(ZeroKind kind, int n) {
    return newton_refine(kind, airy_zero_seed(kind, n));
}

ZeroTable::ZeroTable(ZeroKind kind, int count, int refine_upto)
    : kind_(kind), refined_upto_(refine_upto) {
    if (count < 1 || refine_upto < 1 || refine_upto > count)
        throw std::invalid_argument("ZeroTable: need count >= refine_upto >= 1");
    values_.reserve(static_cast<size_t>(count));
    for (int k = 1; k <= refine_upto; ++k)
        values_.push_back(newton_refine(kind_, airy_zero_seed(kind_, k)));
    for (int k = refine_upto + 1; k <= count; ++k)
        values_.push_back(zero_expansion(kind_, seed_argument(kind_, k)));
    for (size_t i = 1; i < values_.size(); ++i)
        if (values_[i] <= values_[i - 1])
            throw std::logic_error("ZeroTable: monotonicity violated");
}

ZeroTable zero_table(ZeroKind kind, int count, int refine_upto) {
    return ZeroTable(kind, count, refine_upto);
}

std::shared_ptr<const ZeroTable> shared_zero_table(ZeroKind kind, int min_count,
                                                   int refine_upto) {
    static std::mutex mu;
    static std::map<ZeroKind, std::shared_ptr<const ZeroTable>> cache;

    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[kind];
    if (!slot || slot->count() < min_count || slot->refined_upto() < refine_upto) {
        int count = min_count;
        int refined = refine_upto;
        if (slot) {
            count = std::max(count, slot->count());
            refined = std::max(refined, slot->refined_upto());
        }
        count = std::max(count, refined);
        // Grow generously so repeated slightly-larger requests don't rebuild.
        count = count + count / 2;
        slot = std::make_shared<const ZeroTable>(kind, count, refined);
    }
    return slot;
}

}  // namespace airysum
