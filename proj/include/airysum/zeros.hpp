#pragma once

#include <memory>
#include <vector>

namespace airysum {

enum class ZeroKind { AiZero, AiPrimeZero };

// Table of zero magnitudes: values[k-1] is zeta_k (|k-th zero of Ai|) or
// eta_k (|k-th zero of Ai'|), strictly increasing.  Entries up to
// refined_upto are Newton-refined; beyond that they come from the handbook
// asymptotic expansion (A&S 10.4.105/10.4.106), which is already accurate to
// well below 1e-9 for k > ~20.
class ZeroTable {
  public:
    ZeroTable(ZeroKind kind, int count, int refine_upto);

    ZeroKind kind() const { return kind_; }
    int count() const { return static_cast<int>(values_.size()); }
    int refined_upto() const { return refined_upto_; }

    // 1-based, matching the usual labelling zeta_1 < zeta_2 < ...
    double value(int k) const { return values_[static_cast<size_t>(k) - 1]; }
    bool refined(int k) const { return k <= refined_upto_; }

    const std::vector<double>& values() const { return values_; }

  private:
    ZeroKind kind_;
    int refined_upto_;
    std::vector<double> values_;
};

// The n-th zero magnitude, Newton-refined; absolute error <= 1e-12 for
// n <= 1e4.  Throws std::invalid_argument for n < 1.
double airy_zero(ZeroKind kind, int n);

// Asymptotic seed for the n-th zero (adaptively truncated expansion).
double airy_zero_seed(ZeroKind kind, int n);

ZeroTable zero_table(ZeroKind kind, int count, int refine_upto);

// Process-wide cache.  Returned tables are immutable; the shared_ptr keeps a
// snapshot alive for the caller even if the cache later grows.
std::shared_ptr<const ZeroTable> shared_zero_table(ZeroKind kind, int min_count,
                                                   int refine_upto = 200);

}  // namespace airysum
