#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace paintbucket {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A structurally well-formed document that breaks a position invariant
/// (self-loop, same-color edge, disconnected board, unknown endpoint...).
class InvalidPosition : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  explicit IllegalMove(const std::string& what, std::optional<std::size_t> ply = std::nullopt)
      : Error(ply ? "ply " + std::to_string(*ply) + ": " + what : what), ply_(ply) {}

  /// Index of the offending ply when raised from replay().
  std::optional<std::size_t> ply() const noexcept { return ply_; }

 private:
  std::optional<std::size_t> ply_;
};

/// An operation was called outside its domain (e.g. winner of a live game,
/// a property checked on an instance that violates its hypothesis).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The solver ran out of its node or time budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace paintbucket
