#pragma once

#include <stdexcept>
#include <string>

namespace airysum {

// Thrown when a requested infinite sum does not converge (inverse power below
// the convergence threshold of its family).
class DivergentSumError : public std::domain_error {
  public:
    explicit DivergentSumError(const std::string& what) : std::domain_error(what) {}
};

// Thrown when an adaptive numerical routine cannot reach its requested
// tolerance; carries the best error estimate actually achieved.
class AccuracyError : public std::runtime_error {
  public:
    AccuracyError(const std::string& what, double achieved, double requested)
        : std::runtime_error(what), achieved_(achieved), requested_(requested) {}

    double achieved() const { return achieved_; }
    double requested() const { return requested_; }

  private:
    double achieved_;
    double requested_;
};

}  // namespace airysum
