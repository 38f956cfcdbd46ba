#pragma once

#include <stdexcept>
#include <string>

namespace ffd {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live on different numbers of sites.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Requested dense realization exceeds the configured size cap.
class SizeError : public Error {
 public:
  using Error::Error;
};

/// Unsupported (kind, m) combination or malformed construction input.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input fails a precondition that is checked numerically (e.g. unitarity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An angle recursion left its real domain (|sin| > 1 or a vanishing cosine).
class DomainError : public Error {
 public:
  DomainError(const std::string& what, int index, std::string species = {})
      : Error(what), index_(index), species_(std::move(species)) {}

  int index() const noexcept { return index_; }
  const std::string& species() const noexcept { return species_; }

 private:
  int index_;
  std::string species_;
};

/// Characteristic-polynomial roots are complex, non-positive or degenerate.
class ConditioningError : public Error {
 public:
  using Error::Error;
};

/// Degenerate quasi-energies leave the fermionic operators gauge-ambiguous.
class GaugeError : public Error {
 public:
  using Error::Error;
};

/// A spectrum does not admit the requested free-fermion decomposition.
class ExtractionError : public Error {
 public:
  using Error::Error;
};

}  // namespace ffd
