#include "bettipow/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "bettipow/hilbert.hpp"
#include "bettipow/ideal_format.hpp"
#include "bettipow/koszul.hpp"
#include "bettipow/lcm_lattice.hpp"
#include "bettipow/random_ideals.hpp"
#include "bettipow/rees_bound.hpp"
#include "bettipow/square_cover.hpp"
#include "bettipow/stabilization.hpp"
#include "bettipow/table_render.hpp"

namespace bettipow {

namespace {

namespace fs = std::filesystem;

void writeFileAtomic(const fs::path& path, const std::string& content) {
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    f << content;
    f.flush();
    if (!f) throw Error("cannot write '" + tmp.string() + "'");
  }
  fs::rename(tmp, path);
}

MonomialIdeal loadIdeal(const std::string& path, std::ostream& err) {
  ParsedIdeal parsed = parseIdealFile(path);
  for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
  return parsed.ideal;
}

struct CommonOptions {
  std::int64_t characteristic = FieldConfig::kDefaultCharacteristic;
  int threads = 0;
};

void addCommonOptions(CLI::App* cmd, CommonOptions* opts) {
  cmd->add_option("--char", opts->characteristic,
                  "prime field characteristic (default 32003)");
  cmd->add_option("--threads", opts->threads,
                  "worker threads (default: hardware)");
}

int cmdBetti(const std::string& idealPath, int powerArg,
             const CommonOptions& common, const std::string& format,
             bool moduleConvention, std::ostream& out, std::ostream& err) {
  const MonomialIdeal I = loadIdeal(idealPath, err);
  const FieldConfig F(common.characteristic);
  const MonomialIdeal Id = powerArg == 1 ? I : power(I, powerArg);
  const GradedBettiTable T = gradedBetti(Id, F, common.threads);
  if (format == "pretty")
    out << (moduleConvention ? renderTableModuleConvention(T) : renderTable(T));
  else if (format == "json")
    out << tableToJson(T);
  else if (format == "csv")
    out << tableToCsv(T);
  else
    throw Error("unknown format '" + format + "'");
  return 0;
}

int cmdScan(const std::string& idealPath, int maxPower,
            const CommonOptions& common, const std::string& outDir,
            std::size_t maxLattice, std::ostream& out, std::ostream& err) {
  const MonomialIdeal I = loadIdeal(idealPath, err);
  const FieldConfig F(common.characteristic);
  ScanOptions options;
  options.threads = common.threads;
  options.maxLatticePoints = maxLattice;
  const StabilizationReport report = stabilizationScan(I, maxPower, F, options);

  out << "ideal: " << report.idealId << "\n";
  out << "r=" << report.r << " horizon=" << report.horizon;
  if (report.partial)
    out << " (partial: completed through d=" << report.lastCompletedPower << ")";
  out << "\n";
  for (int d = 1; d <= report.lastCompletedPower; ++d) {
    const auto& T = report.tables[static_cast<std::size_t>(d - 1)];
    out << "d=" << d << ": generators=" << T.totalAt(0)
        << " reg=" << report.regularitySequence[static_cast<std::size_t>(d - 1)]
        << " shapePositions="
        << report.shapes[static_cast<std::size_t>(d - 1)].positions.size()
        << "\n";
  }
  if (report.empiricalStab)
    out << "empirical stabilization index: " << *report.empiricalStab << " ("
        << report.certainty << ")\n";
  else
    out << "empirical stabilization index: not stabilized within horizon\n";
  if (report.regularityFit)
    out << "regularity fit: reg = " << report.regularityFit->slope << "*d + "
        << report.regularityFit->intercept << " from d="
        << report.regularityFit->onset << "\n";
  else
    out << "regularity fit: no trailing linear window (>= 3 points)\n";
  std::size_t violations = 0;
  for (const auto& f : report.unimodality)
    if (!f.contiguous) ++violations;
  out << "unimodality: " << violations << " violation(s) across "
      << report.unimodality.size() << " position(s)\n";

  if (!outDir.empty()) {
    fs::create_directories(outDir);
    for (int d = 1; d <= report.lastCompletedPower; ++d)
      writeFileAtomic(fs::path(outDir) / ("power_" + std::to_string(d) + ".txt"),
                      renderTable(report.tables[static_cast<std::size_t>(d - 1)]));
    writeFileAtomic(fs::path(outDir) / "report.json", reportToJson(report));
    out << "wrote " << report.lastCompletedPower << " table file(s) and report.json to "
        << outDir << "\n";
  }
  return 0;
}

int cmdConjecture(const std::string& idealPath, int maxPower, int nMax,
                  const CommonOptions& common, std::ostream& out,
                  std::ostream& err) {
  const MonomialIdeal I = loadIdeal(idealPath, err);
  const FieldConfig F(common.characteristic);

  const std::optional<int> cover = squareCoverIndex(I, nMax);
  int dMax = maxPower;
  if (dMax == 0) {
    // Default horizon: the formula value itself, clamped to [2, 8].
    dMax = cover ? std::min(std::max(*cover, 2), 8) : 2;
  }
  const StabComparisonRecord rec = conjectureStabCompare(I, dMax, F, nMax);

  if (rec.squareCover)
    out << "squareCoverIndex: " << *rec.squareCover << " (nMax=" << rec.nMaxUsed
        << ")\n";
  else
    out << "squareCoverIndex: none <= " << rec.nMaxUsed << "\n";
  if (rec.empiricalStab)
    out << "empiricalStab: " << *rec.empiricalStab << " (horizon "
        << rec.horizon << ", " << rec.scan.certainty << ")\n";
  else
    out << "empiricalStab: not stabilized within horizon " << rec.horizon << "\n";
  out << "verdict: " << toString(rec.verdict) << "\n";
  return 0;
}

int cmdReesBound(const std::string& idealPath, const std::string& reesPath,
                 int powerArg, const CommonOptions& common, std::ostream& out,
                 std::ostream& err) {
  const MonomialIdeal I = loadIdeal(idealPath, err);
  const ReesBettiData data = parseReesBettiFile(reesPath);
  const FieldConfig F(common.characteristic);
  const BoundCheckResult result = reesBoundCheck(I, powerArg, data, F);

  out << "power d=" << result.d << ", k=" << data.k << ", r=" << data.r << "\n";
  for (const auto& e : result.entries)
    out << "  (i=" << e.i << ", j=" << e.j << "): actual=" << e.actual
        << " bound=" << e.bound << " slack=" << e.slack
        << (e.slack < 0 ? "  VIOLATION" : "") << "\n";
  if (result.passed())
    out << "all " << result.entries.size() << " position(s) satisfy the bound\n";
  else
    out << result.violations.size()
        << " violation(s): the ingested resolution data is inconsistent with "
           "this ideal\n";
  return 0;
}

int cmdSelftest(int trials, std::uint64_t seed, const CommonOptions& common,
                std::ostream& out, std::ostream& err) {
  const FieldConfig F(common.characteristic);
  std::mt19937_64 rng(seed);
  int failures = 0;
  for (int t = 1; t <= trials; ++t) {
    const int vars = 2 + static_cast<int>(rng() % 5);      // 2..6
    const int gens = 2 + static_cast<int>(rng() % 7);      // 2..8
    const int maxDeg = 2 + static_cast<int>(rng() % 3);    // 2..4
    const MonomialIdeal I = randomMonomialIdeal(vars, gens, maxDeg, rng());

    const MultigradedBettiTable viaKoszul = multigradedBetti(I, F, common.threads);
    const MultigradedBettiTable viaLattice = lcmLatticeBetti(I, F);
    const bool dualOk = viaKoszul == viaLattice;

    const HilbertNumerator hn = hilbertNumerator(I);
    const bool conservationOk =
        hn.independent &&
        hn.poly == numeratorFromBettiTable(gradedFromMultigraded(viaKoszul));

    if (!dualOk || !conservationOk) {
      ++failures;
      err << "trial " << t << ": FAILED"
          << (dualOk ? "" : " [dual-method mismatch]")
          << (conservationOk ? "" : " [conservation mismatch]") << " on "
          << I.describe() << "\n";
    } else {
      out << "trial " << t << ": ok (vars=" << vars
          << " gens=" << I.generatorCount() << ")\n";
    }
  }
  out << (trials - failures) << "/" << trials
      << " equivalence and conservation checks passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"exact Betti tables of monomial ideals and their powers"};
  app.name("bettipow");
  app.require_subcommand(1);

  // betti
  std::string bettiIdeal, bettiFormat = "pretty";
  int bettiPower = 1;
  bool moduleConvention = false;
  CommonOptions bettiCommon;
  CLI::App* betti = app.add_subcommand(
      "betti", "Betti table of an ideal or one of its powers");
  betti->add_option("ideal", bettiIdeal, "ideal file")->required();
  betti->add_option("--power", bettiPower, "power d >= 1 (default 1)")
      ->check(CLI::PositiveNumber);
  betti->add_option("--format", bettiFormat, "pretty|json|csv")
      ->check(CLI::IsMember({"pretty", "json", "csv"}));
  betti->add_flag("--module-convention", moduleConvention,
                  "display with ideal homological indices (pretty only)");
  addCommonOptions(betti, &bettiCommon);

  // scan
  std::string scanIdeal, scanOut;
  int scanMaxPower = 0;
  std::size_t scanMaxLattice = 0;
  CommonOptions scanCommon;
  CLI::App* scan = app.add_subcommand(
      "scan", "scan powers 1..D: tables, shapes, stabilization, regularity");
  scan->add_option("ideal", scanIdeal, "ideal file")->required();
  scan->add_option("--max-power", scanMaxPower, "horizon D >= 2")
      ->required()
      ->check(CLI::Range(2, 1000000));
  scan->add_option("--out", scanOut, "directory for per-power tables and report.json");
  scan->add_option("--max-lattice", scanMaxLattice,
                   "abort (partial report) past this many lcm-lattice points");
  addCommonOptions(scan, &scanCommon);

  // conjecture
  std::string conjIdeal;
  int conjMaxPower = 0, conjNMax = 0;
  CommonOptions conjCommon;
  CLI::App* conj = app.add_subcommand(
      "conjecture",
      "square-covering index vs. empirical stabilization index");
  conj->add_option("ideal", conjIdeal, "ideal file")->required();
  conj->add_option("--max-power", conjMaxPower,
                   "scan horizon (default: formula value, clamped to [2,8])")
      ->check(CLI::Range(2, 1000000));
  conj->add_option("--nmax", conjNMax,
                   "search bound for the covering index (default 2N)");
  addCommonOptions(conj, &conjCommon);

  // rees-bound
  std::string reesIdeal, reesFile;
  int reesPower = 0;
  CommonOptions reesCommon;
  CLI::App* rees = app.add_subcommand(
      "rees-bound",
      "check engine-computed Betti numbers against the Rees strand bound");
  rees->add_option("ideal", reesIdeal, "ideal file")->required();
  rees->add_option("--rees", reesFile, "Rees Betti data file")->required();
  rees->add_option("--power", reesPower, "power d >= 1")
      ->required()
      ->check(CLI::PositiveNumber);
  addCommonOptions(rees, &reesCommon);

  // selftest
  int trials = 20;
  std::uint64_t seed = 1;
  CommonOptions selfCommon;
  CLI::App* self = app.add_subcommand(
      "selftest", "dual-method and conservation checks on random ideals");
  self->add_option("--trials", trials, "number of random ideals (default 20)")
      ->check(CLI::PositiveNumber);
  self->add_option("--seed", seed, "RNG seed (default 1)");
  addCommonOptions(self, &selfCommon);

  std::vector<const char*> argv;
  argv.push_back("bettipow");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help and version requests exit 0; real usage errors exit 2.
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (betti->parsed())
      return cmdBetti(bettiIdeal, bettiPower, bettiCommon, bettiFormat,
                      moduleConvention, out, err);
    if (scan->parsed())
      return cmdScan(scanIdeal, scanMaxPower, scanCommon, scanOut,
                     scanMaxLattice, out, err);
    if (conj->parsed())
      return cmdConjecture(conjIdeal, conjMaxPower, conjNMax, conjCommon, out, err);
    if (rees->parsed())
      return cmdReesBound(reesIdeal, reesFile, reesPower, reesCommon, out, err);
    if (self->parsed())
      return cmdSelftest(trials, seed, selfCommon, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bettipow
