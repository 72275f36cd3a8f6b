#pragma once

#include <stdexcept>
#include <string>

namespace qmlab {

/// Malformed text or an out-of-range generator.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was applied outside its domain (e.g. a non-pure braid handed to the
/// P3 splitting, or mismatched ranks).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A checked hypothesis of an identity or construction does not hold.
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A certificate cannot be produced because some required evidence is missing.
class RefusalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qmlab
