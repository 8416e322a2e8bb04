#pragma once

// Exact convex geometry in ambient dimension <= 6: hulls, faces, Minkowski
// sums, lower facets, volumes and normalized mixed volumes. No tolerances;
// every incidence is decided by exact rational arithmetic.

#include "fewroots/linalg.hpp"

#include <span>
#include <vector>

namespace fewroots {

inline constexpr std::size_t kMaxDimension = 6;

using Point = std::vector<Rational>;

class Polytope {
 public:
  /// A facet relative to the affine hull of the polytope. `inner_normal` lies
  /// in the direction space of the polytope, min over P of inner_normal·x is
  /// `offset`, and that minimum is attained exactly on `vertices`.
  struct Facet {
    std::vector<std::size_t> vertices;
    Point inner_normal;
    Rational offset;
  };

  static Polytope empty(std::size_t ambient_dim);

  /// Extreme points, lexicographically sorted.
  const std::vector<Point>& vertices() const { return vertices_; }
  std::size_t ambient_dim() const { return ambient_dim_; }
  /// -1 for the empty polytope.
  int affine_dim() const { return affine_dim_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// Basis of the linear span of P - P.
  const std::vector<Point>& directions() const { return directions_; }

  bool contains(const Point& x) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.ambient_dim_ == b.ambient_dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope convex_hull(std::span<const Point> points);
  std::vector<Point> vertices_;
  std::size_t ambient_dim_ = 0;
  int affine_dim_ = -1;
  std::vector<Facet> facets_;
  std::vector<Point> directions_;
};

Polytope convex_hull(std::span<const Point> points);
inline Polytope convex_hull(const std::vector<Point>& points) {
  return convex_hull(std::span<const Point>(points));
}

/// Minimizers of w·x over P.
Polytope face(const Polytope& p, const Point& w);
Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope scale(const Polytope& p, const Rational& factor);
Polytope translate(const Polytope& p, const Point& shift);

struct FacetNormal {
  Point normal;  ///< (r, 1) for lower faces
  bool is_lower = true;
};

struct LowerFace {
  FacetNormal normal;
  Polytope face;
};

/// Lower facets of a polytope in R^{n+1}, normals scaled to last coordinate 1,
/// sorted by normal. For a lower-dimensional P, the maximal lower faces.
std::vector<LowerFace> lower_facets(const Polytope& p);

/// Forgets the last coordinate.
Polytope project_pi(const Polytope& p);

std::size_t edge_count(const Polytope& p);

/// Euclidean volume in the ambient dimension; 0 when not full-dimensional.
Rational volume(const Polytope& p);

/// Mixed volume normalized so that the tuple of standard simplices gives 1.
Rational mixed_volume(std::span<const Polytope> polytopes);
inline Rational mixed_volume(const std::vector<Polytope>& polytopes) {
  return mixed_volume(std::span<const Polytope>(polytopes));
}

}  // namespace fewroots
