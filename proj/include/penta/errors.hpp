#pragma once

#include <stdexcept>
#include <string>

namespace penta {

// Argument outside the mathematical domain of an operation (negative sqrt, n0 at r <= 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A configured cap (chain length, precision, scan budget) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A series operation would read coefficients beyond the truncation order.
class TruncationError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A rational map was evaluated on its base locus.
class IndeterminacyError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An exact identity that should hold by construction did not; carries the witness text.
class VerificationFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace penta
