#pragma once

#include <stdexcept>
#include <string>

namespace cremona {

/// Raised for rejected inputs: violated preconditions, malformed text, unknown names.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction or lifting hypothesis fails. `hypothesis()` names
/// the failed condition in a stable, machine-readable form.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, const std::string& message)
      : Error(message), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

}  // namespace cremona
