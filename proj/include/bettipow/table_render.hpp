#ifndef BETTIPOW_TABLE_RENDER_HPP
#define BETTIPOW_TABLE_RENDER_HPP

#include <string>

#include "bettipow/betti_tables.hpp"
#include "bettipow/stabilization.hpp"

namespace bettipow {

/// Pretty Betti table in the quotient-ring display convention: data
/// column c holds homological degree c of R/I (ideal index c-1), row
/// labels are j - i, zeros print as '.'. Columns run from 1 (the unit
/// column of R/I is implied, not printed), rows from the first to the last
/// nonzero label. Cells are right-aligned per column, single space
/// separated, with a '-' corner and a 'total:' row:
///
///      - 1  2 3 4
/// total: 5 10 9 3
///     2: 5  . . .
///     3: .  6 . .
///     4: .  4 9 3
std::string renderTable(const GradedBettiTable& T);

/// Same layout, but columns are ideal homological indices starting at 0 and
/// rows are j - i in the ideal's own grading.
std::string renderTableModuleConvention(const GradedBettiTable& T);

/// Inverse of renderTable. The text does not carry the ring dimension or
/// field, so callers supply them (0 leaves them unset); entry data round-
/// trips exactly.
GradedBettiTable parseRenderedTable(const std::string& text, int ringDim = 0,
                                    std::int64_t characteristic = 0);

/// Machine formats. Entries are always in the ideal-module indexing with
/// exact integers; the JSON carries a versioned "schema" field.
std::string tableToJson(const GradedBettiTable& T);
GradedBettiTable tableFromJson(const std::string& json);
std::string tableToCsv(const GradedBettiTable& T);

/// Full scan report as JSON (schema bettipow.report.v1), embedding per-power
/// tables, shapes, regularity data and unimodality findings.
std::string reportToJson(const StabilizationReport& report);

}  // namespace bettipow

#endif
