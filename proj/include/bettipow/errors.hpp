#ifndef BETTIPOW_ERRORS_HPP
#define BETTIPOW_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace bettipow {

/// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Monomial operands or generators have mismatched ring dimensions.
class DimensionError : public Error {
public:
  explicit DimensionError(const std::string& what) : Error(what) {}
};

/// Exponent or counting arithmetic would leave the representable range.
class OverflowError : public Error {
public:
  explicit OverflowError(const std::string& what) : Error(what) {}
};

/// An empty generating set was passed where a nonzero ideal is required.
class ZeroIdealError : public Error {
public:
  explicit ZeroIdealError(const std::string& what) : Error(what) {}
};

/// The unit monomial appeared among generators.
class UnitIdealError : public Error {
public:
  explicit UnitIdealError(const std::string& what) : Error(what) {}
};

/// Raised when an operation requires an equigenerated ideal; carries the
/// multiset of generator degrees that was actually found.
class NotEquigeneratedError : public Error {
public:
  NotEquigeneratedError(const std::string& what, std::vector<long long> degrees)
      : Error(what), degreesFound(std::move(degrees)) {}
  std::vector<long long> degreesFound;
};

/// Input violates a documented operation precondition.
class PreconditionError : public Error {
public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

/// Text input failed to parse; carries 1-based line and column.
class ParseError : public Error {
public:
  ParseError(const std::string& what, int line, int col)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(col) + ")"),
        line(line), col(col) {}
  int line;
  int col;
};

}  // namespace bettipow

#endif
