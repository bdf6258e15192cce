#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace balanced {

// Base of everything thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed word text. Position is the 0-based index of the offending byte.
class InvalidCharacter : public Error {
 public:
  InvalidCharacter(std::size_t position, char c)
      : Error("invalid character '" + std::string(1, c) + "' at position " +
              std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A breadth-first search grew past its configured bound.
class LimitExceeded : public Error {
 public:
  explicit LimitExceeded(std::size_t limit)
      : Error("limit exceeded: more than " + std::to_string(limit) + " words"),
        limit_(limit) {}

  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

// Input outside an operation's mathematical domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

#define BALANCED_DOMAIN_ERROR(Name)          \
  class Name : public DomainError {          \
   public:                                   \
    using DomainError::DomainError;          \
  };

BALANCED_DOMAIN_ERROR(NotBalanced)
BALANCED_DOMAIN_ERROR(EmptyWord)
BALANCED_DOMAIN_ERROR(NotPrime)
BALANCED_DOMAIN_ERROR(NotUpperPrime)
BALANCED_DOMAIN_ERROR(NotReduced)
BALANCED_DOMAIN_ERROR(PreconditionViolated)
BALANCED_DOMAIN_ERROR(DimensionOutOfRange)
BALANCED_DOMAIN_ERROR(MalformedEdgeList)
BALANCED_DOMAIN_ERROR(Disconnected)
BALANCED_DOMAIN_ERROR(SelfLoop)
BALANCED_DOMAIN_ERROR(DuplicateEdge)
BALANCED_DOMAIN_ERROR(UnknownBaseVertex)

#undef BALANCED_DOMAIN_ERROR

}  // namespace balanced
