#include "bettipow/simplicial_complex.hpp"

#include <algorithm>

namespace bettipow {

SimplicialComplex SimplicialComplex::fromMaximalFaces(
    int vertexCount, const std::vector<Face>& maximal) {
  SimplicialComplex c(vertexCount);
  for (const Face& f : maximal) {
    Face sorted = f;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted)
      if (v < 0 || v >= vertexCount)
        throw DimensionError("face vertex out of range");
    // Enumerate all subsets of the (small) face.
    const int n = static_cast<int>(sorted.size());
    if (n > 30) throw PreconditionError("face too large to expand");
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Face sub;
      for (int t = 0; t < n; ++t)
        if (mask & (1u << t)) sub.push_back(sorted[static_cast<std::size_t>(t)]);
      c.faces_.insert(std::move(sub));
    }
  }
  return c;
}

SimplicialComplex SimplicialComplex::fromClosedFaceSet(int vertexCount,
                                                       std::set<Face> faces) {
  SimplicialComplex c(vertexCount);
  c.faces_ = std::move(faces);
  for (const Face& f : c.faces_) {
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end())
      throw PreconditionError("face vertex lists must be sorted and distinct");
    for (int v : f)
      if (v < 0 || v >= vertexCount)
        throw DimensionError("face vertex out of range");
  }
  if (!c.isSubsetClosed())
    throw PreconditionError("face family is not closed under subsets");
  return c;
}

int SimplicialComplex::dimension() const {
  if (faces_.empty()) return -2;
  std::size_t best = 0;
  for (const Face& f : faces_) best = std::max(best, f.size());
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::isSubsetClosed() const {
  for (const Face& f : faces_) {
    if (f.empty()) continue;
    for (std::size_t t = 0; t < f.size(); ++t) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
      if (!faces_.count(sub)) return false;
    }
  }
  return faces_.empty() || faces_.count(Face{}) > 0;
}

int rankOverField(std::vector<SparseColumn> columns, const FieldConfig& F) {
  // pivot row -> index into `pivots`; pivot columns are scaled to leading 1.
  std::map<int, std::size_t> pivotOfRow;
  std::vector<SparseColumn> pivots;
  int rank = 0;
  SparseColumn merged;
  for (SparseColumn& col : columns) {
    while (!col.empty()) {
      const int r = col.front().first;
      auto it = pivotOfRow.find(r);
      if (it == pivotOfRow.end()) {
        // New pivot: normalize to leading coefficient 1.
        const std::int64_t scale = F.inv(col.front().second);
        for (auto& e : col) e.second = F.mul(e.second, scale);
        pivotOfRow.emplace(r, pivots.size());
        pivots.push_back(std::move(col));
        ++rank;
        break;
      }
      const SparseColumn& piv = pivots[it->second];
      const std::int64_t c = col.front().second;  // eliminate: col -= c*piv
      merged.clear();
      merged.reserve(col.size() + piv.size());
      std::size_t a = 0, b = 0;
      while (a < col.size() || b < piv.size()) {
        if (b == piv.size() || (a < col.size() && col[a].first > piv[b].first)) {
          merged.push_back(col[a++]);
        } else if (a == col.size() || piv[b].first > col[a].first) {
          merged.emplace_back(piv[b].first, F.mul(F.neg(c), piv[b].second));
          ++b;
        } else {
          const std::int64_t v = F.sub(col[a].second, F.mul(c, piv[b].second));
          if (v != 0) merged.emplace_back(col[a].first, v);
          ++a;
          ++b;
        }
      }
      col.swap(merged);
    }
  }
  return rank;
}

std::map<int, std::int64_t> reducedHomologyRanks(const SimplicialComplex& C,
                                                 const FieldConfig& F) {
  std::map<int, std::int64_t> out;
  if (C.isVoid()) return out;

  // Faces per dimension, in canonical (lexicographic) order. std::set
  // already sorts lexicographically, so per-dimension order is inherited.
  const int maxDim = C.dimension();
  std::vector<std::vector<SimplicialComplex::Face>> byDim(
      static_cast<std::size_t>(maxDim + 2));
  for (const auto& f : C.faces())
    byDim[f.size()].push_back(f);

  // rank of d_q : C_q -> C_{q-1} for q in [0, maxDim]; d_{-1} = 0.
  std::vector<int> boundaryRank(static_cast<std::size_t>(maxDim + 2), 0);
  for (int q = 0; q <= maxDim; ++q) {
    const auto& rows = byDim[static_cast<std::size_t>(q)];      // (q-1)-faces
    const auto& cols = byDim[static_cast<std::size_t>(q + 1)];  // q-faces
    if (cols.empty() || rows.empty()) continue;
    std::vector<SparseColumn> matrix;
    matrix.reserve(cols.size());
    for (const auto& f : cols) {
      SparseColumn col;
      col.reserve(f.size());
      for (std::size_t t = 0; t < f.size(); ++t) {
        SimplicialComplex::Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(t));
        const auto it = std::lower_bound(rows.begin(), rows.end(), sub);
        const int row = static_cast<int>(it - rows.begin());
        col.emplace_back(row, t % 2 == 0 ? 1 : F.characteristic() - 1);
      }
      std::sort(col.begin(), col.end(),
                [](const auto& x, const auto& y) { return x.first > y.first; });
      matrix.push_back(std::move(col));
    }
    boundaryRank[static_cast<std::size_t>(q + 1)] = rankOverField(std::move(matrix), F);
  }

  for (int q = -1; q <= maxDim; ++q) {
    const std::int64_t dimCq =
        static_cast<std::int64_t>(byDim[static_cast<std::size_t>(q + 1)].size());
    const std::int64_t kernel = dimCq - boundaryRank[static_cast<std::size_t>(q + 1)];
    const std::int64_t h =
        kernel - (q + 2 <= maxDim + 1 ? boundaryRank[static_cast<std::size_t>(q + 2)] : 0);
    if (h != 0) out[q] = h;
  }
  return out;
}

}  // namespace bettipow
