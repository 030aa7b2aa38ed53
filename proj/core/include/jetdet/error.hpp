#pragma once

#include <stdexcept>
#include <string>

namespace jetdet {

/// Precondition violated by the caller: bad shapes, mismatched rings, bad flags.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured resource cap was hit. `partial_state` describes how far the
/// computation got so callers can report it instead of a verdict.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& what, std::string partial_state)
      : std::runtime_error(what), partial_state_(std::move(partial_state)) {}

  const std::string& partial_state() const noexcept { return partial_state_; }

 private:
  std::string partial_state_;
};

/// A mathematical guarantee failed to hold; always indicates a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jetdet
