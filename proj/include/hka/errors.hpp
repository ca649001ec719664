#pragma once

#include <stdexcept>
#include <string>

namespace hka {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error {
  using Error::Error;
};
struct IndexError : Error {
  using Error::Error;
};
struct NotBooleanError : Error {
  using Error::Error;
};
struct NotProvidedError : Error {
  using Error::Error;
};
struct TruncationError : Error {
  using Error::Error;
};
struct ChainError : Error {
  using Error::Error;
};
struct SphereError : Error {
  using Error::Error;
};
struct NotInvertibleError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
struct BoundRequiredError : Error {
  using Error::Error;
};
struct FuelExhaustedError : Error {
  using Error::Error;
};

// Internal-consistency failure: two routes that a theorem forces to agree
// disagreed. Always a bug, never a property of the input.
struct OracleMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct NotAFillerError : Error {
  using Error::Error;
};
struct HypothesisFailedError : Error {
  explicit HypothesisFailedError(const std::string& hypothesis)
      : Error("hypothesis failed: " + hypothesis), hypothesis(hypothesis) {}
  std::string hypothesis;
};
struct MissingFillerError : Error {
  explicit MissingFillerError(const std::string& branching)
      : Error("no filler for branching " + branching), branching(branching) {}
  std::string branching;
};
struct NotTerminatingError : Error {
  using Error::Error;
};

}  // namespace hka
