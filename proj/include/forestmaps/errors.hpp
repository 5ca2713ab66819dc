#pragma once

#include <stdexcept>
#include <string>

namespace fm {

/// Iteration or root bracketing failed; the CLI maps this to exit status 4.
class NumericFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Work estimate above a hard-coded guard; exit status 3.
class ScaleGuard : public std::runtime_error {
 public:
  ScaleGuard(const std::string& what, double estimate) : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const { return estimate_; }

 private:
  double estimate_;
};

}  // namespace fm
