#ifndef BETTIPOW_SIMPLICIAL_COMPLEX_HPP
#define BETTIPOW_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "bettipow/errors.hpp"
#include "bettipow/prime_field.hpp"

namespace bettipow {

/// An abstract simplicial complex on vertices 0..vertexCount-1, stored as
/// the full set of faces (sorted vertex lists) closed under taking subsets.
/// The empty face is stored explicitly, which is what separates the
/// irrelevant complex {{}} from the void complex with no faces at all.
class SimplicialComplex {
public:
  using Face = std::vector<int>;

  static SimplicialComplex voidComplex(int vertexCount) {
    return SimplicialComplex(vertexCount);
  }

  static SimplicialComplex irrelevantComplex(int vertexCount) {
    SimplicialComplex c(vertexCount);
    c.faces_.insert(Face{});
    return c;
  }

  /// Closes the given faces under subsets. Passing at least one face
  /// (even the empty one) yields a complex containing the empty face.
  static SimplicialComplex fromMaximalFaces(int vertexCount,
                                            const std::vector<Face>& maximal);

  /// Adopts a face family that is already closed under subsets (each face
  /// a sorted vertex list). Throws if the closure property fails.
  static SimplicialComplex fromClosedFaceSet(int vertexCount, std::set<Face> faces);

  int vertexCount() const { return vertexCount_; }
  const std::set<Face>& faces() const { return faces_; }

  bool isVoid() const { return faces_.empty(); }
  bool isIrrelevant() const {
    return faces_.size() == 1 && faces_.begin()->empty();
  }

  bool containsFace(const Face& f) const { return faces_.count(f) > 0; }

  /// Largest face dimension (|face| - 1); -1 for irrelevant, -2 for void.
  int dimension() const;

  /// Sanity check used by tests: every subset of a face is a face.
  bool isSubsetClosed() const;

private:
  explicit SimplicialComplex(int vertexCount) : vertexCount_(vertexCount) {
    if (vertexCount < 0)
      throw DimensionError("vertex count must be nonnegative");
  }

  int vertexCount_;
  std::set<Face> faces_;
};

/// Ranks of reduced simplicial homology over F_p, keyed by degree q >= -1.
/// Only nonzero ranks are present. Ranks come from exact boundary-matrix
/// ranks: dim ker d_q - rank d_{q+1}, with the empty face spanning C_{-1}.
std::map<int, std::int64_t> reducedHomologyRanks(const SimplicialComplex& C,
                                                 const FieldConfig& F);

/// Sparse column of a matrix over F_p: (row, coefficient) pairs sorted by
/// descending row index, coefficients in [1, p).
using SparseColumn = std::vector<std::pair<int, std::int64_t>>;

/// Exact rank over F_p by left-to-right sparse Gaussian elimination;
/// columns are consumed in the order given, which callers keep canonical.
int rankOverField(std::vector<SparseColumn> columns, const FieldConfig& F);

}  // namespace bettipow

#endif
