#include "bettipow/ideal_format.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace bettipow {

namespace {

bool isIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

struct Cursor {
  const std::string& text;
  int line;
  std::size_t pos = 0;

  int col() const { return static_cast<int>(pos) + 1; }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skipSpace() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
};

/// Strips a trailing comment and surrounding whitespace.
std::string stripLine(const std::string& raw) {
  const std::size_t hash = raw.find('#');
  std::string s = hash == std::string::npos ? raw : raw.substr(0, hash);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.pop_back();
  return s;
}

Monomial parseGeneratorLine(const std::string& line, int lineNo,
                            const std::map<std::string, int>& varIndex,
                            int ringDim) {
  Cursor c{line, lineNo};
  std::vector<Exponent> exps(static_cast<std::size_t>(ringDim), 0);
  bool first = true;
  for (;;) {
    c.skipSpace();
    if (c.done()) {
      if (first) throw ParseError("empty generator", lineNo, c.col());
      break;
    }
    if (!first) {
      if (c.peek() != '*')
        throw ParseError("expected '*' between factors", lineNo, c.col());
      ++c.pos;
      c.skipSpace();
    }
    first = false;

    const int tokenCol = c.col();
    if (c.done() || !isIdentChar(c.peek()))
      throw ParseError("expected a variable or 1", lineNo, tokenCol);
    std::string ident;
    while (!c.done() && isIdentChar(c.peek())) ident += c.text[c.pos++];

    if (ident == "1") continue;  // unit factor; a lone "1" yields the unit monomial

    const auto it = varIndex.find(ident);
    if (it == varIndex.end())
      throw ParseError("undeclared variable '" + ident + "'", lineNo, tokenCol);

    Exponent powerVal = 1;
    c.skipSpace();
    if (!c.done() && c.peek() == '^') {
      ++c.pos;
      c.skipSpace();
      const int numCol = c.col();
      std::string digits;
      while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())))
        digits += c.text[c.pos++];
      if (digits.empty())
        throw ParseError("expected an exponent after '^'", lineNo, numCol);
      try {
        const long long v = std::stoll(digits);
        if (v < 0 || v > std::numeric_limits<Exponent>::max()) throw std::out_of_range("");
        powerVal = static_cast<Exponent>(v);
      } catch (const std::exception&) {
        throw ParseError("exponent out of range", lineNo, numCol);
      }
    }
    const std::size_t idx = static_cast<std::size_t>(it->second);
    const std::int64_t sum = static_cast<std::int64_t>(exps[idx]) + powerVal;
    if (sum > std::numeric_limits<Exponent>::max())
      throw ParseError("exponent overflow for '" + ident + "'", lineNo, tokenCol);
    exps[idx] = static_cast<Exponent>(sum);
  }
  return Monomial(std::move(exps));
}

}  // namespace

ParsedIdeal parseIdeal(std::istream& in) {
  std::string raw;
  int lineNo = 0;
  std::vector<std::string> varNames;
  std::map<std::string, int> varIndex;
  std::vector<Monomial> gens;
  int unitLine = 0;

  while (std::getline(in, raw)) {
    ++lineNo;
    const std::string line = stripLine(raw);
    if (line.empty()) continue;

    if (varNames.empty()) {
      std::istringstream words(line);
      std::string word;
      words >> word;
      if (word != "ring")
        throw ParseError("expected a 'ring' directive before generators",
                         lineNo, 1);
      while (words >> word) {
        if (!varIndex.emplace(word, static_cast<int>(varNames.size())).second)
          throw ParseError("duplicate variable '" + word + "'", lineNo, 1);
        varNames.push_back(word);
      }
      if (varNames.empty())
        throw ParseError("ring directive declares no variables", lineNo, 1);
      continue;
    }

    Monomial g = parseGeneratorLine(line, lineNo, varIndex,
                                    static_cast<int>(varNames.size()));
    if (g.isUnit() && unitLine == 0) unitLine = lineNo;
    gens.push_back(std::move(g));
  }

  if (varNames.empty())
    throw ParseError("no ring directive found", std::max(lineNo, 1), 1);
  if (unitLine != 0)
    throw ParseError("unit ideal: generator 1", unitLine, 1);
  if (gens.empty())
    throw ParseError("zero ideal: no generators", lineNo, 1);

  const bool redundant = hasRedundantGenerators(gens);
  ParsedIdeal out{
      minimalize(gens, static_cast<int>(varNames.size()), varNames), redundant, {}};
  if (redundant)
    out.warnings.push_back(
        "generator list was redundant; " +
        std::to_string(gens.size() - out.ideal.generators().size()) +
        " generator(s) removed by minimalization");
  return out;
}

ParsedIdeal parseIdeal(const std::string& text) {
  std::istringstream in(text);
  return parseIdeal(in);
}

ParsedIdeal parseIdealFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open ideal file '" + path + "'");
  return parseIdeal(in);
}

ReesBettiData parseReesBetti(std::istream& in) {
  std::string raw;
  int lineNo = 0;
  bool haveHeader = false;
  ReesBettiData data;

  while (std::getline(in, raw)) {
    ++lineNo;
    const std::string line = stripLine(raw);
    if (line.empty()) continue;

    if (!haveHeader) {
      long long k = -1, r = -1;
      std::istringstream words(line);
      std::string word;
      while (words >> word) {
        if (word.rfind("k=", 0) == 0)
          k = std::stoll(word.substr(2));
        else if (word.rfind("r=", 0) == 0)
          r = std::stoll(word.substr(2));
        else
          throw ParseError("expected header 'k=<int> r=<int>'", lineNo, 1);
      }
      if (k < 0 || r < 1)
        throw ParseError("header must declare k>=0 and r>=1", lineNo, 1);
      data.k = k;
      data.r = r;
      haveHeader = true;
      continue;
    }

    std::istringstream nums(line);
    long long i, j, m, beta;
    if (!(nums >> i >> j >> m >> beta))
      throw ParseError("expected 'i j m beta'", lineNo, 1);
    std::string trailing;
    if (nums >> trailing)
      throw ParseError("trailing content '" + trailing + "'", lineNo, 1);
    if (i < 0 || j < 0 || m < 0)
      throw ParseError("indices must be nonnegative", lineNo, 1);
    if (beta <= 0) throw ParseError("beta must be positive", lineNo, 1);
    const auto key = std::make_tuple(static_cast<int>(i), j, m);
    if (!data.beta.emplace(key, beta).second)
      throw ParseError("duplicate key (" + std::to_string(i) + ", " +
                           std::to_string(j) + ", " + std::to_string(m) + ")",
                       lineNo, 1);
  }
  if (!haveHeader)
    throw ParseError("missing 'k=<int> r=<int>' header", std::max(lineNo, 1), 1);
  data.validate();
  return data;
}

ReesBettiData parseReesBetti(const std::string& text) {
  std::istringstream in(text);
  return parseReesBetti(in);
}

ReesBettiData parseReesBettiFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open Rees Betti file '" + path + "'");
  return parseReesBetti(in);
}

std::string writeIdeal(const MonomialIdeal& I) {
  std::string out = "ring";
  for (const auto& v : I.varNames()) out += " " + v;
  out += "\n";
  for (const auto& g : I.generators())
    out += toString(g, I.varNames()) + "\n";
  return out;
}

}  // namespace bettipow
