#pragma once

#include <stdexcept>
#include <string>

namespace whitefact {

// Raised when an operation's precondition is violated by well-formed input
// (cross-factor product, non-finite oracle request, non-stabiliser, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when serialized input cannot be decoded.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace whitefact
