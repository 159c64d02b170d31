#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvl {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truth value outside the lattice carrier, or an off-grid decimal.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Sizes of A-sets / A-relations do not agree.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidLattice : public Error {
 public:
  using Error::Error;
};

class NotReflexive : public Error {
 public:
  using Error::Error;
};

/// A concept-like pair that is not Galois-stable where stability is required.
class NotStable : public Error {
 public:
  using Error::Error;
};

/// Enriched context or heterogeneous frame that fails its compatibility check.
class Incompatible : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

class UnknownAtom : public Error {
 public:
  using Error::Error;
};

class UnknownState : public Error {
 public:
  using Error::Error;
};

/// State belongs to the opposite side from the one the formula is evaluated on.
class SideMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed formula text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : Error("at " + std::to_string(position + 1) + ": " + message), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Well-formed formula text violating the SD/PP sort discipline.
class TypeError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Malformed or inconsistent input document (lattice/context/frame/model files).
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvl
