#pragma once

#include <stdexcept>
#include <string>

namespace sheaf1d {

// Input that fails schema or shape validation. The CLI maps it to exit 2.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A bar endpoint is missing from the requested stratification.
class RefinementError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Proper pushforward is undefined for the requested convolution.
class PropernessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A truncated computation changed when the box was doubled.
class UnstableTruncation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A sample point lies on a stratum boundary whose germ is not adjudicated.
class BoundaryPoint : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace sheaf1d
