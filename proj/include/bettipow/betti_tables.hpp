#ifndef BETTIPOW_BETTI_TABLES_HPP
#define BETTIPOW_BETTI_TABLES_HPP

#include <cstdint>
#include <map>
#include <utility>

#include "bettipow/monomial.hpp"
#include "bettipow/prime_field.hpp"

namespace bettipow {

/// beta_{i,b} ranks of an ideal, keyed by (homological index, multidegree).
/// Only nonzero entries are stored; homological index 0 carries exactly the
/// minimal generators, each with rank 1.
struct MultigradedBettiTable {
  int ringDim = 0;
  std::int64_t characteristic = 0;
  std::map<std::pair<int, Monomial>, std::int64_t> entries;

  std::int64_t at(int i, const Monomial& b) const {
    const auto it = entries.find({i, b});
    return it == entries.end() ? 0 : it->second;
  }

  bool operator==(const MultigradedBettiTable& o) const {
    return ringDim == o.ringDim && entries == o.entries;
  }
};

/// beta_{i,j} ranks keyed by (homological index, total degree), in the
/// ideal-as-module convention (index 0 = generators).
struct GradedBettiTable {
  int ringDim = 0;
  std::int64_t characteristic = 0;
  std::map<std::pair<int, std::int64_t>, std::int64_t> entries;

  std::int64_t at(int i, std::int64_t j) const {
    const auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  bool empty() const { return entries.empty(); }

  int maxHomologicalIndex() const {
    int m = 0;
    for (const auto& [key, rank] : entries) m = std::max(m, key.first);
    return m;
  }

  /// Column total: sum_j beta_{i,j}.
  std::int64_t totalAt(int i) const {
    std::int64_t t = 0;
    for (const auto& [key, rank] : entries)
      if (key.first == i) t += rank;
    return t;
  }

  std::int64_t minGeneratorDegree() const {
    std::int64_t m = 0;
    bool seen = false;
    for (const auto& [key, rank] : entries)
      if (key.first == 0 && (!seen || key.second < m)) {
        m = key.second;
        seen = true;
      }
    return m;
  }

  bool operator==(const GradedBettiTable& o) const {
    return ringDim == o.ringDim && entries == o.entries;
  }
};

/// Sums multigraded entries over multidegrees of equal total degree.
GradedBettiTable gradedFromMultigraded(const MultigradedBettiTable& T);

/// Castelnuovo-Mumford regularity in the module convention:
/// max (j - i) over nonzero entries. Throws on an empty table.
std::int64_t regularity(const GradedBettiTable& T);

}  // namespace bettipow

#endif
