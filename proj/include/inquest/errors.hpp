#pragma once

#include <stdexcept>
#include <string>

namespace inquest {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input violates a documented type invariant (bad probability vector,
// malformed partition, out-of-range sensor parameter, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Relevance is requested against a distribution with zero entropy; the
// normalizing ratio has no defined value there.
class UndefinedRelevanceError : public Error {
 public:
  using Error::Error;
};

// An argument exceeds a configured bound.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An observation has zero likelihood under every hypothesis, so the
// posterior update is impossible.
class ContradictionError : public Error {
 public:
  using Error::Error;
};

// Configuration text could not be parsed or validated.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace inquest
