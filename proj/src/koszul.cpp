#include "bettipow/koszul.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <unordered_set>

namespace bettipow {

std::vector<Monomial> lcmClosure(const MonomialIdeal& I) {
  std::unordered_set<Monomial, MonomialHash> seen(I.generators().begin(),
                                                  I.generators().end());
  std::vector<Monomial> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const Monomial& m : frontier)
      for (const Monomial& g : I.generators()) {
        Monomial j = lcmOf(m, g);
        if (seen.insert(j).second) next.push_back(std::move(j));
      }
    frontier.swap(next);
  }
  std::vector<Monomial> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex upperKoszulComplex(const MonomialIdeal& I, const Monomial& b) {
  if (b.ringDim() != I.ringDim())
    throw DimensionError("upperKoszulComplex: multidegree has wrong dimension");
  // sigma is a face iff some generator g divides b - sigma, i.e. g | b and
  // sigma stays within {v : g_v < b_v}. Collect those vertex sets.
  std::vector<SimplicialComplex::Face> tops;
  for (const Monomial& g : I.generators()) {
    if (!divides(g, b)) continue;
    SimplicialComplex::Face vs;
    for (int v = 0; v < I.ringDim(); ++v)
      if (g.exponent(v) < b.exponent(v)) vs.push_back(v);
    tops.push_back(std::move(vs));
  }
  if (tops.empty()) return SimplicialComplex::voidComplex(I.ringDim());
  // Keep only inclusion-maximal vertex sets before expanding subsets.
  std::vector<SimplicialComplex::Face> maximal;
  for (std::size_t a = 0; a < tops.size(); ++a) {
    bool dominated = false;
    for (std::size_t c = 0; c < tops.size() && !dominated; ++c)
      if (c != a &&
          std::includes(tops[c].begin(), tops[c].end(), tops[a].begin(),
                        tops[a].end()) &&
          (tops[c].size() > tops[a].size() || c < a))
        dominated = true;
    if (!dominated) maximal.push_back(tops[a]);
  }
  return SimplicialComplex::fromMaximalFaces(I.ringDim(), maximal);
}

MultigradedBettiTable multigradedBetti(const MonomialIdeal& I,
                                       const FieldConfig& F, int threads) {
  const std::vector<Monomial> closure = lcmClosure(I);
  if (threads <= 0) {
    threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads <= 0) threads = 1;
  }
  threads = std::min<int>(threads, static_cast<int>(closure.size()));
  threads = std::max(threads, 1);

  using Entry = std::pair<std::pair<int, std::size_t>, std::int64_t>;
  std::vector<std::vector<Entry>> partial(static_cast<std::size_t>(threads));
  std::atomic<std::size_t> cursor{0};

  auto worker = [&](int tid) {
    auto& local = partial[static_cast<std::size_t>(tid)];
    for (;;) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= closure.size()) break;
      const auto ranks = reducedHomologyRanks(upperKoszulComplex(I, closure[idx]), F);
      for (const auto& [q, rank] : ranks)
        if (q + 1 >= 0) local.push_back({{q + 1, idx}, rank});
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }

  MultigradedBettiTable T;
  T.ringDim = I.ringDim();
  T.characteristic = F.characteristic();
  std::vector<Entry> all;
  for (auto& v : partial) all.insert(all.end(), v.begin(), v.end());
  std::sort(all.begin(), all.end());
  for (const auto& [key, rank] : all)
    T.entries.emplace(std::make_pair(key.first, closure[key.second]), rank);
  return T;
}

GradedBettiTable gradedFromMultigraded(const MultigradedBettiTable& T) {
  GradedBettiTable G;
  G.ringDim = T.ringDim;
  G.characteristic = T.characteristic;
  for (const auto& [key, rank] : T.entries)
    G.entries[{key.first, key.second.totalDegree()}] += rank;
  return G;
}

GradedBettiTable gradedBetti(const MonomialIdeal& I, const FieldConfig& F,
                             int threads) {
  return gradedFromMultigraded(multigradedBetti(I, F, threads));
}

std::int64_t regularity(const GradedBettiTable& T) {
  if (T.entries.empty())
    throw PreconditionError("regularity of an empty Betti table");
  std::int64_t reg = std::numeric_limits<std::int64_t>::min();
  for (const auto& [key, rank] : T.entries)
    reg = std::max(reg, key.second - key.first);
  return reg;
}

}  // namespace bettipow
