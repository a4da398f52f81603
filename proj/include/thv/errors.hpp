#pragma once

#include <stdexcept>
#include <string>

namespace thv {

/// Text that does not parse as a rational, polynomial, generator, or vector.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation of a polynomial with a parameter missing from the assignment.
class UnboundParameter : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A generator whose kind or index is not valid for the chosen algebra.
class MalformedGenerator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A PBW monomial or module vector that breaks its ordering or bound rules.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A mode index off the lattice required by its field.
class LatticeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A truncation window too small to leave an exact interior.
class WindowError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation that needs concrete rational parameters received symbolic ones.
class RequiresConcreteParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace thv
