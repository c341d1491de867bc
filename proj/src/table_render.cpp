#include "bettipow/table_render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <vector>

#include "bettipow/errors.hpp"

namespace bettipow {

namespace {

using Json = nlohmann::json;

/// Common grid renderer. Cell (c, row) for c in [colBegin, colEnd] and row
/// labels [rowBegin, rowEnd]; `entry` maps display coordinates to the rank.
template <typename EntryFn>
std::string renderGrid(int colBegin, int colEnd, std::int64_t rowBegin,
                       std::int64_t rowEnd, EntryFn entry) {
  const int cols = colEnd - colBegin + 1;
  std::vector<std::vector<std::string>> cells;  // per display row
  std::vector<std::string> labels;

  labels.push_back("-");
  cells.push_back({});
  for (int c = colBegin; c <= colEnd; ++c)
    cells.back().push_back(std::to_string(c));

  labels.push_back("total:");
  cells.push_back({});
  std::vector<std::int64_t> totals(static_cast<std::size_t>(cols), 0);
  for (std::int64_t row = rowBegin; row <= rowEnd; ++row)
    for (int c = colBegin; c <= colEnd; ++c)
      totals[static_cast<std::size_t>(c - colBegin)] += entry(c, row);
  for (std::int64_t t : totals) cells.back().push_back(std::to_string(t));

  for (std::int64_t row = rowBegin; row <= rowEnd; ++row) {
    labels.push_back(std::to_string(row) + ":");
    cells.push_back({});
    for (int c = colBegin; c <= colEnd; ++c) {
      const std::int64_t v = entry(c, row);
      cells.back().push_back(v == 0 ? "." : std::to_string(v));
    }
  }

  std::size_t labelWidth = 0;
  for (const auto& l : labels) labelWidth = std::max(labelWidth, l.size());
  std::vector<std::size_t> width(static_cast<std::size_t>(cols), 0);
  for (const auto& rowCells : cells)
    for (std::size_t c = 0; c < rowCells.size(); ++c)
      width[c] = std::max(width[c], rowCells[c].size());

  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string line(labelWidth - labels[r].size(), ' ');
    line += labels[r];
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      line += ' ';
      line += std::string(width[c] - cells[r][c].size(), ' ');
      line += cells[r][c];
    }
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace

std::string renderTable(const GradedBettiTable& T) {
  if (T.entries.empty())
    throw PreconditionError("renderTable: empty Betti table");
  // Display cell (c, row) = beta_{c-1, c+row} of the ideal.
  int colEnd = 1;
  std::int64_t rowBegin = std::numeric_limits<std::int64_t>::max();
  std::int64_t rowEnd = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, rank] : T.entries) {
    colEnd = std::max(colEnd, key.first + 1);
    rowBegin = std::min(rowBegin, key.second - key.first - 1);
    rowEnd = std::max(rowEnd, key.second - key.first - 1);
  }
  return renderGrid(1, colEnd, rowBegin, rowEnd,
                    [&](int c, std::int64_t row) {
                      return T.at(c - 1, row + c);
                    });
}

std::string renderTableModuleConvention(const GradedBettiTable& T) {
  if (T.entries.empty())
    throw PreconditionError("renderTable: empty Betti table");
  int colEnd = 0;
  std::int64_t rowBegin = std::numeric_limits<std::int64_t>::max();
  std::int64_t rowEnd = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, rank] : T.entries) {
    colEnd = std::max(colEnd, key.first);
    rowBegin = std::min(rowBegin, key.second - key.first);
    rowEnd = std::max(rowEnd, key.second - key.first);
  }
  return renderGrid(0, colEnd, rowBegin, rowEnd,
                    [&](int c, std::int64_t row) { return T.at(c, row + c); });
}

GradedBettiTable parseRenderedTable(const std::string& text, int ringDim,
                                    std::int64_t characteristic) {
  std::istringstream in(text);
  std::string line;
  int lineNo = 0;
  std::vector<int> columns;
  GradedBettiTable T;
  T.ringDim = ringDim;
  T.characteristic = characteristic;
  std::vector<std::int64_t> totals;
  bool haveHeader = false, haveTotals = false;

  while (std::getline(in, line)) {
    ++lineNo;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    std::string w;
    while (words >> w) tokens.push_back(w);
    if (tokens.empty()) continue;

    if (!haveHeader) {
      if (tokens.front() != "-")
        throw ParseError("expected '-' header row", lineNo, 1);
      for (std::size_t t = 1; t < tokens.size(); ++t)
        columns.push_back(std::stoi(tokens[t]));
      if (columns.empty())
        throw ParseError("header declares no columns", lineNo, 1);
      for (std::size_t t = 1; t < columns.size(); ++t)
        if (columns[t] != columns[t - 1] + 1)
          throw ParseError("column numbers must be consecutive", lineNo, 1);
      haveHeader = true;
      continue;
    }
    if (!haveTotals) {
      if (tokens.front() != "total:")
        throw ParseError("expected 'total:' row", lineNo, 1);
      if (tokens.size() != columns.size() + 1)
        throw ParseError("totals row has wrong cell count", lineNo, 1);
      for (std::size_t t = 1; t < tokens.size(); ++t)
        totals.push_back(tokens[t] == "." ? 0 : std::stoll(tokens[t]));
      haveTotals = true;
      continue;
    }

    if (tokens.front().empty() || tokens.front().back() != ':')
      throw ParseError("expected a '<row>:' label", lineNo, 1);
    std::int64_t row;
    try {
      row = std::stoll(tokens.front().substr(0, tokens.front().size() - 1));
    } catch (const std::exception&) {
      throw ParseError("bad row label '" + tokens.front() + "'", lineNo, 1);
    }
    if (tokens.size() != columns.size() + 1)
      throw ParseError("row has wrong cell count", lineNo, 1);
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      if (tokens[t] == ".") continue;
      std::int64_t v;
      try {
        v = std::stoll(tokens[t]);
      } catch (const std::exception&) {
        throw ParseError("bad cell '" + tokens[t] + "'", lineNo, 1);
      }
      if (v <= 0) throw ParseError("cells must be positive or '.'", lineNo, 1);
      const int c = columns[t - 1];
      if (c < 1)
        throw ParseError("quotient display columns start at 1", lineNo, 1);
      T.entries[{c - 1, row + c}] += v;
    }
  }

  if (!haveHeader || !haveTotals)
    throw ParseError("incomplete table text", std::max(lineNo, 1), 1);
  for (std::size_t t = 0; t < columns.size(); ++t) {
    const std::int64_t got = T.totalAt(columns[static_cast<std::size_t>(t)] - 1);
    if (got != totals[t])
      throw ParseError("total mismatch in column " +
                           std::to_string(columns[t]) + ": declared " +
                           std::to_string(totals[t]) + ", cells sum to " +
                           std::to_string(got),
                       1, 1);
  }
  return T;
}

std::string tableToJson(const GradedBettiTable& T) {
  Json j;
  j["schema"] = "bettipow.table.v1";
  j["ringDim"] = T.ringDim;
  j["characteristic"] = T.characteristic;
  j["entries"] = Json::array();
  for (const auto& [key, rank] : T.entries)
    j["entries"].push_back({{"i", key.first}, {"j", key.second}, {"beta", rank}});
  return j.dump(2) + "\n";
}

GradedBettiTable tableFromJson(const std::string& text) {
  Json j = Json::parse(text);
  if (j.value("schema", "") != "bettipow.table.v1")
    throw Error("unexpected table schema '" + j.value("schema", "") + "'");
  GradedBettiTable T;
  T.ringDim = j.value("ringDim", 0);
  T.characteristic = j.value("characteristic", std::int64_t{0});
  for (const auto& e : j.at("entries")) {
    const std::int64_t beta = e.at("beta").get<std::int64_t>();
    if (beta <= 0) throw Error("table entries must be positive");
    T.entries[{e.at("i").get<int>(), e.at("j").get<std::int64_t>()}] = beta;
  }
  return T;
}

std::string tableToCsv(const GradedBettiTable& T) {
  std::string out = "i,j,beta\n";
  for (const auto& [key, rank] : T.entries)
    out += std::to_string(key.first) + "," + std::to_string(key.second) + "," +
           std::to_string(rank) + "\n";
  return out;
}

namespace {

Json tableJsonObject(const GradedBettiTable& T) {
  return Json::parse(tableToJson(T));
}

}  // namespace

std::string reportToJson(const StabilizationReport& report) {
  Json j;
  j["schema"] = "bettipow.report.v1";
  j["ideal"] = report.idealId;
  j["r"] = report.r;
  j["horizon"] = report.horizon;
  j["lastCompletedPower"] = report.lastCompletedPower;
  j["partial"] = report.partial;
  j["certainty"] = report.certainty;
  if (report.empiricalStab)
    j["empiricalStab"] = *report.empiricalStab;
  else
    j["empiricalStab"] = nullptr;
  j["regularity"] = report.regularitySequence;
  if (report.regularityFit) {
    j["regularityFit"] = {{"slope", report.regularityFit->slope},
                          {"intercept", report.regularityFit->intercept},
                          {"onset", report.regularityFit->onset}};
  } else {
    j["regularityFit"] = nullptr;
  }
  j["shapes"] = Json::array();
  for (std::size_t k = 0; k < report.shapes.size(); ++k) {
    Json s;
    s["d"] = static_cast<int>(k) + 1;
    s["positions"] = Json::array();
    for (const auto& [i, jn] : report.shapes[k].positions)
      s["positions"].push_back({i, jn});
    j["shapes"].push_back(s);
  }
  j["unimodality"] = Json::array();
  for (const auto& f : report.unimodality) {
    Json u;
    u["i"] = f.i;
    u["jNorm"] = f.jNorm;
    u["firstPower"] = f.firstPower;
    u["lastPower"] = f.lastPower;
    u["contiguous"] = f.contiguous;
    u["openAtHorizon"] = f.openAtHorizon;
    if (f.gapWitness)
      u["gapWitness"] = *f.gapWitness;
    else
      u["gapWitness"] = nullptr;
    j["unimodality"].push_back(u);
  }
  j["tables"] = Json::array();
  for (std::size_t k = 0; k < report.tables.size(); ++k) {
    Json t;
    t["d"] = static_cast<int>(k) + 1;
    t["table"] = tableJsonObject(report.tables[k]);
    j["tables"].push_back(t);
  }
  return j.dump(2) + "\n";
}

}  // namespace bettipow
