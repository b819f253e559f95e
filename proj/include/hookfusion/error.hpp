#ifndef HOOKFUSION_ERROR_HPP
#define HOOKFUSION_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hookfusion {

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Thrown when a rational function is evaluated at a root of its
// (cancelled) denominator.  Chapter-5 pole detection relies on this.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& where)
      : std::domain_error("pole at " + where) {}
};

// A fusion factor whose denominator vanishes identically on the chosen
// parameter subspace: the pair sits on one diagonal inside one z-group.
struct HardSingularity : std::domain_error {
  HardSingularity(int p, int q)
      : std::domain_error("hard singularity at pair (" + std::to_string(p) +
                          "," + std::to_string(q) + ")"),
        p(p), q(q) {}
  int p, q;
};

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hookfusion

#endif
