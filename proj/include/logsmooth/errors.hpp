#ifndef LOGSMOOTH_ERRORS_HPP
#define LOGSMOOTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace logsmooth {

// Parameter outside its admissible range (p <= 1, tau < 1, mismatched
// dimensions, non-monotone coefficient input, ...).
class param_error : public std::invalid_argument {
public:
  explicit param_error(const std::string& what) : std::invalid_argument(what) {}
};

// A grid-based computation was asked to run below the resolution its
// precondition demands, or above the configured memory cap.
class resolution_error : public std::runtime_error {
public:
  explicit resolution_error(const std::string& what) : std::runtime_error(what) {}
};

// A construction would materialize more coefficients (or a higher frequency)
// than the implementation supports.
class size_error : public std::runtime_error {
public:
  explicit size_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace logsmooth

#endif
