#pragma once

#include <stdexcept>
#include <string>

namespace hetnet {

/// Configuration rejected before any computation; the message starts with the
/// offending field path, e.g. "tiers[0].pathloss: ...".
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A fixed-size table or exact-arithmetic routine was asked for more than it holds.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A probability came out of a series outside [-1e-9, 1 + 1e-9].
class NumericalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No tier has a base station to associate with.
class NoCandidateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hetnet
