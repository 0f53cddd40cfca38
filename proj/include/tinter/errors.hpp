#pragma once

#include <stdexcept>
#include <string>

namespace tinter {

// Bad arguments: wrong lengths, out-of-range values, unmet operation preconditions.
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An enumeration or search would exceed its configured cap.
class InstanceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lemma checker was handed inputs that do not meet the lemma's hypotheses.
// This is distinct from the lemma's conclusion failing.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptyFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NoWalk : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tinter
