#pragma once

#include <stdexcept>
#include <string>

namespace mergegram {

/// Raised for every contract violation in the library: bad inputs, malformed
/// files, invalid dendrograms.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the experiment harnesses when a checked bound fails.
class ExperimentError : public Error {
 public:
  using Error::Error;
};

}  // namespace mergegram
