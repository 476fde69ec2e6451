#pragma once

#include <stdexcept>
#include <string>

namespace diracbound {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported family/rank, unknown catalog id, malformed fixture.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Precondition violated by an argument (non-dominant weight, mu outside (0,1], ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Branching subtraction went negative: the Cartan embedding does not match the algebras.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

/// An exact identity that must hold by construction failed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A floating eigenvalue could not be snapped onto the weight lattice.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Requested operation is outside the supported scope (e.g. odd rank difference).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// A bounded search ran out of budget or failed to find a witness.
class SearchError : public Error {
 public:
  using Error::Error;
};

}  // namespace diracbound
