#pragma once

#include <stdexcept>
#include <string>

namespace cuboid {

// Root of the library's exception hierarchy. Every precondition or
// certification failure surfaces as one of the types below.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidSeed : public Error {
 public:
  using Error::Error;
};

class HypothesisNotMet : public Error {
 public:
  using Error::Error;
};

class NegativeInput : public Error {
 public:
  using Error::Error;
};

class EndpointIsRoot : public Error {
 public:
  using Error::Error;
};

class NotSquarefree : public Error {
 public:
  using Error::Error;
};

class OddTermPresent : public Error {
 public:
  using Error::Error;
};

class ZeroAtEndpoint : public Error {
 public:
  using Error::Error;
};

class ContainmentFailure : public Error {
 public:
  using Error::Error;
};

class DegenerateDenominator : public Error {
 public:
  using Error::Error;
};

class NotARoot : public Error {
 public:
  using Error::Error;
};

class CheckpointMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace cuboid
