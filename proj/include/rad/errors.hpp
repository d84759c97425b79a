#ifndef RAD_ERRORS_HPP
#define RAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rad {

// Malformed input files or config values.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative solver hit its iteration budget before reaching tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, long iterations, double residual)
      : std::runtime_error(what), iterations(iterations), residual(residual) {}

  long iterations;
  double residual;
};

// All discretized spectrum weights vanished (e.g. every level below CVaR's alpha).
class DegenerateSpectrumError : public std::runtime_error {
 public:
  explicit DegenerateSpectrumError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace rad

#endif
