#ifndef BETTIPOW_IDEAL_FORMAT_HPP
#define BETTIPOW_IDEAL_FORMAT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "bettipow/monomial_ideal.hpp"
#include "bettipow/rees_bound.hpp"

namespace bettipow {

/// Result of parsing an ideal document: the canonical ideal plus a warning
/// when the listed generators were redundant and got minimalized away.
struct ParsedIdeal {
  MonomialIdeal ideal;
  bool hadRedundancy = false;
  std::vector<std::string> warnings;
};

/// Ideal file grammar (one directive per line, `#` starts a comment):
///
///   ring x y z          ordered variable list, required first directive
///   x*y^2               one generator per line: `*`-separated variable powers
///   1                   the unit monomial (rejected as a unit ideal)
///
/// Undeclared variables, malformed tokens and zero/unit ideals raise
/// ParseError with 1-based line/column positions.
ParsedIdeal parseIdeal(std::istream& in);
ParsedIdeal parseIdeal(const std::string& text);
ParsedIdeal parseIdealFile(const std::string& path);

/// Rees Betti file grammar: a header line `k=<int> r=<int>`, then one line
/// `i j m beta` per nonzero rank (whitespace-separated nonnegative
/// integers, beta > 0, duplicate keys rejected). `#` comments allowed.
ReesBettiData parseReesBetti(std::istream& in);
ReesBettiData parseReesBetti(const std::string& text);
ReesBettiData parseReesBettiFile(const std::string& path);

/// Serializes an ideal in the same grammar parseIdeal accepts.
std::string writeIdeal(const MonomialIdeal& I);

}  // namespace bettipow

#endif
