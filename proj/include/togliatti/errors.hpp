#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace togliatti {

/// Bad argument to a library call (e.g. n < 1, malformed partition).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed system text; carries the 1-based line number of the offence.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called on an input outside its domain
/// (non-artinian ideal, degenerate parametrization, not a Togliatti system).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A sublattice basis vector does not lie in the claimed superlattice.
class ContainmentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// G_P' has a component that is not a complete graph.
class StructureFailure : public std::runtime_error {
 public:
  StructureFailure(const std::string& what, int i, int j, int k)
      : std::runtime_error(what), witness_{i, j, k} {}
  /// (i, j), (j, k) are edges of G_P' but (i, k) is not; -1 when not applicable.
  const std::array<int, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<int, 3> witness_;
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace togliatti
