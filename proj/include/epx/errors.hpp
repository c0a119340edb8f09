#pragma once

#include <stdexcept>
#include <string>

namespace epx {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A distance matrix breaks one of the ep-metric axioms.
class AxiomViolation : public Error {
 public:
  AxiomViolation(std::string axiom, std::string witness)
      : Error("axiom violation (" + axiom + "): " + witness),
        axiom_(std::move(axiom)),
        witness_(std::move(witness)) {}

  const std::string& axiom() const noexcept { return axiom_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string axiom_;
  std::string witness_;
};

class UnknownPoint : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class IdentityViolation : public Error {
 public:
  using Error::Error;
};

class UnknownVertex : public Error {
 public:
  using Error::Error;
};

class UnknownSimplex : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class CapTooLow : public Error {
 public:
  using Error::Error;
};

class BadDegree : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownSuite : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace epx
