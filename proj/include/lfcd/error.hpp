#pragma once

#include <stdexcept>

namespace lfcd {

// Malformed input, invalid parameter, or infeasible request.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric routine failed to converge or produced an unusable result.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace lfcd
