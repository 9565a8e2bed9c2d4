#ifndef LGORB_ERROR_HPP
#define LGORB_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lgorb {

class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZeroError : public Error {
public:
  DivisionByZeroError() : Error("division by zero") {}
};

class UnsupportedOrderError : public Error {
public:
  explicit UnsupportedOrderError(int order)
      : Error("root-of-unity order " + std::to_string(order) +
              " does not divide 12") {}
};

/// Exact division failed; carries a printed form of the remainder so the
/// caller can see which construction produced it.
class NonExactDivisionError : public Error {
public:
  explicit NonExactDivisionError(const std::string& remainder)
      : Error("non-exact division, remainder: " + remainder),
        remainder_(remainder) {}
  const std::string& remainder() const { return remainder_; }

private:
  std::string remainder_;
};

class RingMismatchError : public Error {
public:
  explicit RingMismatchError(const std::string& what) : Error(what) {}
};

class NonIsolatedSingularityError : public Error {
public:
  explicit NonIsolatedSingularityError(int degree_bound)
      : Error("standard monomials do not terminate below degree " +
              std::to_string(degree_bound) +
              "; singularity is not isolated (or raise "
              "LG_ORBIFOLD_MAX_DEGREE)") {}
};

class UnsupportedSingularityError : public Error {
public:
  explicit UnsupportedSingularityError(const std::string& what)
      : Error(what) {}
};

class ParseError : public Error {
public:
  ParseError(int pos, const std::string& what)
      : Error("parse error at position " + std::to_string(pos) + ": " + what),
        pos_(pos) {}
  int position() const { return pos_; }

private:
  int pos_;
};

class InternalConsistencyError : public Error {
public:
  explicit InternalConsistencyError(const std::string& what) : Error(what) {}
};

}  // namespace lgorb

#endif
