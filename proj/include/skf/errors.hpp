#ifndef SKF_ERRORS_HPP
#define SKF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace skf {

/// Thrown when a linear-algebra step cannot be completed (indefinite
/// innovation covariance, non-positive spectrum, ...). `step` is the
/// 1-based time-step index when the failure occurred inside a recursion,
/// or -1 for free-standing calls.
class numerical_error : public std::runtime_error {
public:
  numerical_error(const std::string& what, int step = -1)
      : std::runtime_error(step >= 0 ? what + " (step " + std::to_string(step) + ")" : what),
        step_(step) {}

  int step() const { return step_; }

private:
  int step_;
};

}

#endif
