#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mpreg {

/// DSL or config syntax problem. position is a 0-based byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, Arity, Dimension };

  ParseError(Kind kind, std::size_t position, const std::string& what)
      : std::runtime_error(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

/// A theorem or operation was invoked outside its hypotheses (rank, Reg, factor bounds).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Atom kinds the decomposable model cannot represent after an operation (e.g. restricting
/// a twisted cotangent bundle to a hyperplane).
class UnsupportedAtomError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An internal consistency check on computed data failed; carried as a finding.
class FindingError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mpreg
