#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mar {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
 public:
  explicit ContractError(const std::string& what) : Error(what) {}
};

/// A family constructor rejected its input: malformed data or a violated
/// family precondition (connectivity, required cycles, size caps, ...).
class FamilyError : public Error {
 public:
  explicit FamilyError(const std::string& what) : Error(what) {}
};

/// An explicit basis list failed axiom validation at construction.
class AxiomError : public FamilyError {
 public:
  explicit AxiomError(const std::string& what) : FamilyError(what) {}
};

/// An enumeration or search exceeded its node budget. Carries the number of
/// nodes visited before giving up; the caller learns "unknown", never a
/// wrong verdict.
class BudgetError : public Error {
 public:
  BudgetError(const std::string& what, std::size_t nodes)
      : Error(what + " (visited " + std::to_string(nodes) + " nodes)"),
        nodes_(nodes) {}
  std::size_t nodes() const noexcept { return nodes_; }

 private:
  std::size_t nodes_;
};

/// A spec or coloring document failed to parse. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace mar
