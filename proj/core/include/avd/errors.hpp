#pragma once

#include <stdexcept>
#include <string>

namespace avd {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Visual angle queried from a segment endpoint, where it is undefined.
class EndpointQuery : public Error {
 public:
  using Error::Error;
};

class IdenticalSegments : public Error {
 public:
  using Error::Error;
};

class ZeroPolynomial : public Error {
 public:
  using Error::Error;
};

/// An edge polynomial came out with effective degree <= 1. Edges of two
/// distinct segments never do, so this signals bad input or a bug.
class DegreeOneAnomaly : public Error {
 public:
  using Error::Error;
};

/// All second partials vanish at a singular point (triple point or worse).
class DegenerateJet : public Error {
 public:
  using Error::Error;
};

class NotFromEdge : public Error {
 public:
  using Error::Error;
};

class EmptyResult : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace avd
