#pragma once

// Simplicial sets truncated at a dimension cap, stored through their
// non-degenerate simplices. Every simplex is an Eilenberg-Zilber pair
// (non-degenerate base, surjective degeneracy).

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "epx/ordinal.hpp"

namespace epx {

struct SimplexRef {
  int dim = 0;
  int index = 0;

  friend bool operator==(const SimplexRef&, const SimplexRef&) = default;
  friend auto operator<=>(const SimplexRef&, const SimplexRef&) = default;
};

/// The simplex degeneracy^*(base). `degeneracy` is a surjection [n] -> [base.dim].
struct EzPair {
  SimplexRef base;
  OrdinalMap degeneracy;

  static EzPair of(SimplexRef ref) { return {ref, OrdinalMap::identity(ref.dim)}; }

  int dim() const noexcept { return degeneracy.domain_dim(); }
  bool is_nondegenerate() const noexcept { return degeneracy.is_identity(); }

  friend bool operator==(const EzPair&, const EzPair&) = default;
  friend auto operator<=>(const EzPair&, const EzPair&) = default;
};

struct Simplex {
  std::string name;
  /// faces[i] is d_i of this simplex, in normal form.
  std::vector<EzPair> faces;
  /// Vertex sequence, derived from the faces on construction.
  std::vector<int> vertices;
};

class TruncatedSSet {
 public:
  explicit TruncatedSSet(int cap = 0);
  /// levels[n] holds the non-degenerate n-simplices. Vertex sequences are derived
  /// from the face tables; the simplicial identities are not checked here (see
  /// validate_sset). Throws UnknownSimplex on a dangling face reference.
  TruncatedSSet(int cap, std::vector<std::vector<Simplex>> levels);

  int cap() const noexcept { return cap_; }
  std::size_t count(int n) const;
  std::vector<std::size_t> counts() const;
  std::size_t total_count() const;
  bool empty() const noexcept { return count(0) == 0; }

  const std::vector<Simplex>& level(int n) const;
  const Simplex& simplex(SimplexRef ref) const;
  bool contains(SimplexRef ref) const noexcept;
  const EzPair& face(SimplexRef ref, int i) const { return simplex(ref).faces.at(static_cast<std::size_t>(i)); }
  const std::string& vertex_name(int v) const { return simplex({0, v}).name; }

  /// Simplices of dimension <= k; the cap becomes min(cap, k).
  TruncatedSSet skeleton(int k) const;

 private:
  int cap_ = 0;
  std::vector<std::vector<Simplex>> levels_;
};

/// theta^*(sigma) in normal form. Throws DimensionMismatch if theta's codomain is
/// not sigma's dimension.
EzPair apply_ordinal(const TruncatedSSet& z, const EzPair& sigma, const OrdinalMap& theta);
EzPair face_of(const TruncatedSSet& z, const EzPair& sigma, int i);

struct SSetValidation {
  bool ok = true;
  std::string witness;
  explicit operator bool() const noexcept { return ok; }
};

/// Checks normal forms of stored faces and d_i d_j = d_{j-1} d_i for i < j.
SSetValidation validate_sset(const TruncatedSSet& z);

/// Simplicial set whose simplices are vertex tuples: faces delete an entry and
/// collapse consecutive repeats. Every vertex name is a 0-simplex; tuples[n]
/// lists the n-simplices for n >= 1 (tuples[0] is ignored). Throws
/// IdentityViolation if some face is missing.
TruncatedSSet tuple_complex(std::vector<std::string> vertex_names,
                            const std::vector<std::vector<std::vector<int>>>& tuples, int cap);

/// Oriented simplicial complex: strictly increasing tuples inside some facet.
/// Vertex order is the order of `vertex_names`. Throws UnknownVertex.
TruncatedSSet from_ordered_complex(const std::vector<std::string>& vertex_names,
                                   const std::vector<std::vector<std::string>>& facets, int cap);
TruncatedSSet from_ordered_complex(const std::vector<std::string>& vertex_names,
                                   const std::vector<std::vector<int>>& facets, int cap);

/// Standard simplex Delta^n on vertices "0".."n".
TruncatedSSet standard_simplex(int n, int cap);

/// Lookup from vertex sequence to simplex. Only meaningful when simplices are
/// determined by their vertices (tuple complexes); duplicates keep the first.
class VertexTupleIndex {
 public:
  explicit VertexTupleIndex(const TruncatedSSet& z);
  std::optional<SimplexRef> find(const std::vector<int>& vertices) const;
  bool faithful() const noexcept { return faithful_; }

 private:
  std::vector<std::map<std::vector<int>, int>> by_dim_;
  bool faithful_ = true;
};

/// Simplicial map given by the images of the non-degenerate source simplices.
struct SSetMap {
  std::shared_ptr<const TruncatedSSet> source;
  std::shared_ptr<const TruncatedSSet> target;
  std::vector<std::vector<EzPair>> images;

  /// Image of an arbitrary source simplex in normal form.
  EzPair operator()(const EzPair& sigma) const;
  const EzPair& image(SimplexRef ref) const {
    return images.at(static_cast<std::size_t>(ref.dim)).at(static_cast<std::size_t>(ref.index));
  }
};

/// Checks that images are well-formed and commute with all face operators.
SSetValidation validate_map(const SSetMap& f);

/// Partition of the vertex indices by connected components of the 1-skeleton.
std::vector<std::vector<int>> path_components(const TruncatedSSet& z);

/// The simplices of <sigma>: base simplices of theta^*(sigma) over every ordinal
/// map theta with domain dimension <= cap. Sorted.
std::vector<SimplexRef> generated_simplices(const TruncatedSSet& z, SimplexRef sigma);
/// Subcomplex generated by sigma. Throws UnknownSimplex.
TruncatedSSet generated_subcomplex(const TruncatedSSet& z, SimplexRef sigma);

/// Subcomplex on a face-closed set of simplices. Throws IdentityViolation if the
/// set is not closed under faces.
TruncatedSSet restrict_to(const TruncatedSSet& z, const std::vector<SimplexRef>& members);

}  // namespace epx
