#pragma once

#include <stdexcept>
#include <string>

namespace morphdet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input data (bad file, unknown label, wrong shape).
class InputError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition does not hold (non-closed H, infinite algebra,
// decomposable object where an indecomposable is required, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A post-condition the algorithms guarantee has failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace morphdet
