#pragma once

#include <stdexcept>
#include <string>

namespace ichannel {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric field is outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// One of the four transmissivity sums exceeds unity.
class PassivityError : public Error {
 public:
  using Error::Error;
};

/// sqrt(eta11*eta12) differs from sqrt(eta21*eta22) beyond tolerance.
class UnitarityError : public Error {
 public:
  using Error::Error;
};

/// A detection strategy does not support the requested quantity.
class StrategyError : public Error {
 public:
  using Error::Error;
};

/// A scalar function was evaluated outside its domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The channel is not in the interference regime the region formula needs.
class RegimeError : public Error {
 public:
  using Error::Error;
};

/// A flavor assignment violates the one-von-Neumann-per-receiver structure.
class FlavorError : public Error {
 public:
  using Error::Error;
};

/// The constraint set does not bound the region on some axis.
class UnboundedError : public Error {
 public:
  using Error::Error;
};

/// A hull was requested over an empty family of regions.
class EmptyFamilyError : public Error {
 public:
  using Error::Error;
};

/// Malformed configuration input (CLI or JSON).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace ichannel
