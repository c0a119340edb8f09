#pragma once

// Extended pseudo-metric spaces, non-expanding maps and finite colimits.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "epx/ext_dist.hpp"

namespace epx {

/// Maps point i of a source space to point map[i] of a target space.
using PointMap = std::vector<std::size_t>;

/// Finite set of labelled points with a symmetric [0, inf] distance that
/// satisfies the triangle inequality. Distinct points may be at distance 0.
class EpMetricSpace {
 public:
  /// The empty space (initial object).
  EpMetricSpace() = default;

  /// Builds a space without checking the axioms. `matrix` is row-major n*n.
  static EpMetricSpace unchecked(std::vector<std::string> labels, std::vector<ExtDist> matrix);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  ExtDist d(std::size_t i, std::size_t j) const { return matrix_[i * size() + j]; }
  const std::vector<ExtDist>& matrix() const noexcept { return matrix_; }
  std::vector<std::vector<ExtDist>> rows() const;

  /// Sorted distinct finite off-diagonal distances.
  std::vector<ExtDist> distinct_distances() const;
  bool has_infinite_distance() const;

  friend bool operator==(const EpMetricSpace&, const EpMetricSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<ExtDist> matrix_;
};

/// Checks the three axioms; the triangle inequality is tested up to `tolerance`.
/// Throws AxiomViolation naming the axiom and witness labels on failure.
EpMetricSpace validate_ep_metric(std::vector<std::string> labels,
                                 const std::vector<std::vector<ExtDist>>& matrix,
                                 double tolerance = 0.0);

/// Re-runs the axiom checks on an existing space.
void check_ep_metric(const EpMetricSpace& space, double tolerance = 0.0);

/// Euclidean distances between coordinate vectors. Labels default to "0", "1", ...
EpMetricSpace euclidean_space(const std::vector<std::vector<double>>& points,
                              std::vector<std::string> labels = {});

/// Matrix exact equality (labels included).
bool same_space(const EpMetricSpace& a, const EpMetricSpace& b);
/// Distances agree within `tol`; labels must match.
bool approx_same_space(const EpMetricSpace& a, const EpMetricSpace& b, double tol);

struct EpMorphism {
  EpMetricSpace source;
  EpMetricSpace target;
  PointMap map;
};

/// True iff d_Y(f x, f y) <= d_X(x, y) for every pair. Throws UnknownPoint
/// when f is not total on X or sends a point outside Y.
bool is_nonexpanding(const PointMap& f, const EpMetricSpace& x, const EpMetricSpace& y);
bool is_nonexpanding(const std::map<std::string, std::string>& f, const EpMetricSpace& x,
                     const EpMetricSpace& y);

/// Checks that `f` is a morphism (total and non-expanding) and bundles it.
EpMorphism make_morphism(EpMetricSpace source, EpMetricSpace target, PointMap map);

/// The space {0..n} with all off-diagonal distances s.
EpMetricSpace standard_space(std::size_t n, ExtDist s);

/// A colimit object together with one leg per diagram object.
struct Cocone {
  EpMetricSpace apex;
  std::vector<PointMap> legs;
};

struct Quotient {
  EpMetricSpace space;
  PointMap projection;
};

/// Disjoint union with infinite distance across summands. Labels become "i/label".
Cocone coproduct(std::span<const EpMetricSpace> spaces);

/// Quotient metric along a surjection p onto {0..m-1}, where m = target_labels.size().
/// Throws NotSurjective.
EpMetricSpace quotient_metric(const EpMetricSpace& x, const PointMap& p,
                              std::vector<std::string> target_labels);

/// Quotient by the equivalence relation generated by `pairs`. Classes are ordered by
/// their least member and labelled by their sorted member labels.
Quotient quotient_by_relation(const EpMetricSpace& x,
                              std::span<const std::pair<std::size_t, std::size_t>> pairs);

Quotient coequalizer(const EpMorphism& f, const EpMorphism& g);

/// Pushout of X <-f- A -g-> Y. Legs are {X -> P, Y -> P}.
Cocone pushout(const EpMorphism& f, const EpMorphism& g);

/// Pushout of two subspaces of `ambient` along their intersection, labelled and
/// ordered as in `ambient` (the union X u Y with the path metric d_m).
EpMetricSpace subspace_pushout(const EpMetricSpace& ambient, std::span<const std::size_t> xs,
                               std::span<const std::size_t> ys);

/// Collapses points at distance zero.
Quotient metric_identification(const EpMetricSpace& x);

EpMetricSpace induced_subspace(const EpMetricSpace& x, std::span<const std::size_t> subset);
EpMetricSpace induced_subspace(const EpMetricSpace& x, const std::vector<std::string>& subset);

struct DiagramArrow {
  std::size_t from;
  std::size_t to;
  PointMap map;
};

/// Colimit of a finite diagram of spaces: a coequalizer over the coproduct.
Cocone colimit(std::span<const EpMetricSpace> objects, std::span<const DiagramArrow> arrows);

/// All-pairs shortest paths with saturating arithmetic, in place on a row-major n*n matrix.
void floyd_warshall(std::vector<ExtDist>& weights, std::size_t n);

/// Label for an equivalence class: the sole member, or "{a,b,...}" sorted.
std::string class_label(std::vector<std::string> members);

}  // namespace epx
