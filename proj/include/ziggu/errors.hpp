#pragma once

#include <stdexcept>
#include <string>

namespace ziggu {

// Malformed text (bad characters, empty input).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Well-formed input outside an operation's domain: an invalid state,
// a state not on the requested listing, a size beyond a supported range.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class MoveViolation {
  BadIndex,    // index outside 1..n or delta not +-1
  OutOfRange,  // digit would leave 0..3
  Validity,    // result breaks the "only 3s after a 3" rule
  MazeTurn,    // the maze is not at the column where that row change is possible
};

const char* to_string(MoveViolation v);

class IllegalMove : public DomainError {
 public:
  IllegalMove(MoveViolation reason, const std::string& what)
      : DomainError(what), reason_(reason) {}
  MoveViolation reason() const { return reason_; }

 private:
  MoveViolation reason_;
};

}  // namespace ziggu
