#include "bettipow/monomial.hpp"

namespace bettipow {

std::string toString(const Monomial& m, const std::vector<std::string>& varNames) {
  if (static_cast<int>(varNames.size()) != m.ringDim())
    throw DimensionError("toString: variable name list has wrong length");
  std::string out;
  for (int i = 0; i < m.ringDim(); ++i) {
    const Exponent e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += varNames[static_cast<std::size_t>(i)];
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

}  // namespace bettipow
