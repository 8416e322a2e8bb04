#include "fewroots/polyhedra.hpp"

#include "fewroots/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace fewroots {

namespace {

struct Simplex {
  std::vector<std::size_t> verts;  // sorted point indices
  IntegerVector normal;            // outward: interior satisfies normal·x < offset
  Integer offset;
};

struct FullHull {
  std::vector<Simplex> boundary;  // triangulated boundary
  std::vector<std::size_t> extreme;
  std::vector<std::pair<IntegerVector, Integer>> planes;  // primitive facet hyperplanes
  IntegerVector interior_sum;  // sum of the initial simplex vertices
  std::size_t interior_weight = 0;
};

// Normal of the hyperplane through the given points (k points in Z^k), by cofactors.
IntegerVector hyperplane_normal(const std::vector<IntegerVector>& pts,
                                const std::vector<std::size_t>& idx) {
  std::size_t k = pts[idx[0]].size();
  IntegerMatrix diff;
  diff.reserve(k - 1);
  for (std::size_t i = 1; i < idx.size(); ++i) {
    IntegerVector row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = pts[idx[i]][j] - pts[idx[0]][j];
    diff.push_back(std::move(row));
  }
  IntegerVector normal(k);
  for (std::size_t col = 0; col < k; ++col) {
    IntegerMatrix minor(k - 1, IntegerVector());
    for (std::size_t r = 0; r + 1 < k; ++r) {
      for (std::size_t j = 0; j < k; ++j)
        if (j != col) minor[r].push_back(diff[r][j]);
    }
    Integer d = determinant(std::move(minor));
    normal[col] = (col % 2 == 0) ? d : Integer(-d);
  }
  return normal;
}

Simplex oriented_simplex(const std::vector<IntegerVector>& pts, std::vector<std::size_t> verts,
                         const IntegerVector& interior_sum, std::size_t weight) {
  std::sort(verts.begin(), verts.end());
  IntegerVector normal = hyperplane_normal(pts, verts);
  Integer offset = dot(normal, pts[verts[0]]);
  Integer side = dot(normal, interior_sum) - Integer(static_cast<unsigned long>(weight)) * offset;
  if (side == 0) throw InternalError("degenerate boundary simplex in hull construction");
  if (side > 0) {
    for (auto& a : normal) a = -a;
    offset = -offset;
  }
  return Simplex{std::move(verts), std::move(normal), std::move(offset)};
}

RationalVector to_rational(const IntegerVector& v) {
  RationalVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

// Beneath-beyond hull of full-dimensional integer points in Z^k, k >= 2.
FullHull hull_full(const std::vector<IntegerVector>& pts) {
  std::size_t k = pts[0].size();
  std::vector<std::size_t> init{0};
  RationalMatrix diffs;
  for (std::size_t i = 1; i < pts.size() && init.size() < k + 1; ++i) {
    RationalVector d(k);
    for (std::size_t j = 0; j < k; ++j) d[j] = Rational(pts[i][j] - pts[0][j]);
    diffs.push_back(d);
    if (rank(diffs) == diffs.size()) {
      init.push_back(i);
    } else {
      diffs.pop_back();
    }
  }
  if (init.size() != k + 1) throw InternalError("hull_full called on lower-dimensional input");

  FullHull h;
  h.interior_sum.assign(k, Integer(0));
  for (auto i : init)
    for (std::size_t j = 0; j < k; ++j) h.interior_sum[j] += pts[i][j];
  h.interior_weight = k + 1;

  std::vector<Simplex> facets;
  for (std::size_t omit = 0; omit < init.size(); ++omit) {
    std::vector<std::size_t> verts;
    for (std::size_t j = 0; j < init.size(); ++j)
      if (j != omit) verts.push_back(init[j]);
    facets.push_back(oriented_simplex(pts, verts, h.interior_sum, h.interior_weight));
  }

  std::vector<bool> in_init(pts.size(), false);
  for (auto i : init) in_init[i] = true;

  for (std::size_t x = 0; x < pts.size(); ++x) {
    if (in_init[x]) continue;
    std::vector<bool> visible(facets.size(), false);
    bool any = false;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (dot(facets[f].normal, pts[x]) > facets[f].offset) {
        visible[f] = true;
        any = true;
      }
    }
    if (!any) continue;
    std::map<std::vector<std::size_t>, int> ridges;
    for (std::size_t f = 0; f < facets.size(); ++f) {
      if (!visible[f]) continue;
      const auto& v = facets[f].verts;
      for (std::size_t drop = 0; drop < v.size(); ++drop) {
        std::vector<std::size_t> ridge;
        ridge.reserve(v.size() - 1);
        for (std::size_t j = 0; j < v.size(); ++j)
          if (j != drop) ridge.push_back(v[j]);
        ++ridges[ridge];
      }
    }
    std::vector<Simplex> next;
    next.reserve(facets.size() + ridges.size());
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (!visible[f]) next.push_back(std::move(facets[f]));
    for (auto& [ridge, count] : ridges) {
      if (count != 1) continue;
      std::vector<std::size_t> verts = ridge;
      verts.push_back(x);
      next.push_back(oriented_simplex(pts, std::move(verts), h.interior_sum, h.interior_weight));
    }
    facets = std::move(next);
  }

  std::map<std::pair<IntegerVector, Integer>, bool> planes;
  for (const auto& f : facets) {
    Integer g = abs(f.offset);
    for (const auto& a : f.normal) g = gcd(g, a);
    IntegerVector a = f.normal;
    Integer b = f.offset;
    if (g > 1) {
      for (auto& x : a) x /= g;
      b /= g;
    }
    planes[{a, b}] = true;
  }
  for (auto& [plane, unused] : planes) h.planes.push_back(plane);

  std::vector<bool> on_boundary(pts.size(), false);
  for (const auto& f : facets)
    for (auto v : f.verts) on_boundary[v] = true;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!on_boundary[i]) continue;
    RationalMatrix active;
    for (const auto& [a, b] : h.planes)
      if (dot(a, pts[i]) == b) active.push_back(to_rational(a));
    if (rank(active) == k) h.extreme.push_back(i);
  }
  h.boundary = std::move(facets);
  return h;
}

Integer common_denominator(const std::vector<Point>& pts) {
  Integer l = 1;
  for (const auto& p : pts)
    for (const auto& x : p) l = lcm(l, Integer(x.get_den()));
  return l;
}

IntegerVector scaled(const Point& p, const Integer& factor, const std::vector<std::size_t>& coords) {
  IntegerVector out;
  out.reserve(coords.size());
  for (auto c : coords) {
    Rational v = p[c] * factor;
    out.push_back(v.get_num());
  }
  return out;
}

Point difference(const Point& a, const Point& b) {
  Point d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return d;
}

// Scales a rational vector to a primitive integer vector with the same direction.
Point primitive(Point v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, Integer(x.get_den()));
  Integer g = 0;
  for (auto& x : v) {
    x *= l;
    g = gcd(g, Integer(x.get_num()));
  }
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// k columns of the direction matrix whose square minor is nonsingular.
std::vector<std::size_t> independent_coordinates(const std::vector<Point>& dirs, std::size_t ambient) {
  std::size_t k = dirs.size();
  std::vector<std::size_t> chosen;
  RationalMatrix cols;  // transposed: one row per chosen coordinate
  for (std::size_t c = 0; c < ambient && chosen.size() < k; ++c) {
    RationalVector col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = dirs[i][c];
    cols.push_back(col);
    if (rank(cols) == cols.size()) {
      chosen.push_back(c);
    } else {
      cols.pop_back();
    }
  }
  if (chosen.size() != k) throw InternalError("failed to find independent coordinates");
  return chosen;
}

void check_dimension(std::size_t dim) {
  if (dim == 0) throw InvalidParameter("points must have positive dimension");
  if (dim > kMaxDimension)
    throw CapExceeded("ambient dimension " + std::to_string(dim) + " exceeds cap " +
                      std::to_string(kMaxDimension));
}

}  // namespace

Polytope Polytope::empty(std::size_t ambient_dim) {
  Polytope p;
  p.ambient_dim_ = ambient_dim;
  return p;
}

Polytope convex_hull(std::span<const Point> input) {
  if (input.empty()) throw InvalidParameter("convex_hull of an empty point list");
  std::size_t ambient = input[0].size();
  check_dimension(ambient);
  std::vector<Point> pts(input.begin(), input.end());
  for (const auto& p : pts)
    if (p.size() != ambient) throw InvalidParameter("points of mixed dimension");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope result;
  result.ambient_dim_ = ambient;
  const Point& base = pts[0];
  std::vector<std::size_t> basis_index{0};
  RationalMatrix dirs;
  for (std::size_t i = 1; i < pts.size() && dirs.size() < ambient; ++i) {
    dirs.push_back(difference(pts[i], base));
    if (rank(dirs) == dirs.size()) {
      basis_index.push_back(i);
    } else {
      dirs.pop_back();
    }
  }
  std::size_t k = dirs.size();
  result.affine_dim_ = static_cast<int>(k);
  for (auto& d : dirs) result.directions_.push_back(primitive(d));

  if (k == 0) {
    result.vertices_ = {base};
    return result;
  }
  if (k == 1) {
    const Point& d = result.directions_[0];
    std::size_t lo = 0, hi = 0;
    Rational tlo = dot(d, pts[0]), thi = tlo;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      Rational t = dot(d, pts[i]);
      if (t < tlo) { tlo = t; lo = i; }
      if (t > thi) { thi = t; hi = i; }
    }
    Point neg(d.size());
    for (std::size_t j = 0; j < d.size(); ++j) neg[j] = -d[j];
    bool lo_first = pts[lo] < pts[hi];
    result.vertices_ = lo_first ? std::vector<Point>{pts[lo], pts[hi]} : std::vector<Point>{pts[hi], pts[lo]};
    std::size_t lo_id = lo_first ? 0 : 1;
    result.facets_.push_back(Polytope::Facet{{lo_id}, d, tlo});
    result.facets_.push_back(Polytope::Facet{{1 - lo_id}, neg, -thi});
    std::sort(result.facets_.begin(), result.facets_.end(),
              [](const auto& a, const auto& b) { return a.vertices < b.vertices; });
    return result;
  }

  std::vector<std::size_t> coords = independent_coordinates(result.directions_, ambient);
  Integer factor = common_denominator(pts);
  std::vector<IntegerVector> ipts;
  ipts.reserve(pts.size());
  for (const auto& p : pts) ipts.push_back(scaled(p, factor, coords));
  FullHull h = hull_full(ipts);

  // h.extreme is increasing and pts is sorted, so vertices stay sorted.
  std::vector<std::size_t> vid(pts.size(), static_cast<std::size_t>(-1));
  for (auto i : h.extreme) {
    vid[i] = result.vertices_.size();
    result.vertices_.push_back(pts[i]);
  }

  Point centroid(ambient, Rational(0));
  for (const auto& v : result.vertices_)
    for (std::size_t j = 0; j < ambient; ++j) centroid[j] += v[j];
  for (auto& c : centroid) c /= static_cast<long>(result.vertices_.size());

  for (const auto& [a, b] : h.planes) {
    Polytope::Facet facet;
    for (auto i : h.extreme)
      if (dot(a, ipts[i]) == b) facet.vertices.push_back(vid[i]);
    // Relative normal: nu = sum alpha_j dir_j orthogonal to the facet's directions.
    const Point& f0 = result.vertices_[facet.vertices[0]];
    RationalMatrix sys;
    for (std::size_t t = 1; t < facet.vertices.size(); ++t) {
      Point g = difference(result.vertices_[facet.vertices[t]], f0);
      RationalVector row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = dot(result.directions_[j], g);
      sys.push_back(std::move(row));
    }
    auto ns = nullspace(sys, k);
    if (ns.size() != 1) throw InternalError("facet normal is not unique");
    Point nu(ambient, Rational(0));
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t c = 0; c < ambient; ++c) nu[c] += ns[0][j] * result.directions_[j][c];
    nu = primitive(nu);
    if (dot(nu, difference(centroid, f0)) < 0)
      for (auto& x : nu) x = -x;
    facet.offset = dot(nu, f0);
    facet.inner_normal = std::move(nu);
    result.facets_.push_back(std::move(facet));
  }
  std::sort(result.facets_.begin(), result.facets_.end(),
            [](const auto& x, const auto& y) { return x.vertices < y.vertices; });
  return result;
}

bool Polytope::contains(const Point& x) const {
  if (affine_dim_ < 0 || x.size() != ambient_dim_) return false;
  Point d = difference(x, vertices_[0]);
  RationalMatrix m(directions_.begin(), directions_.end());
  m.push_back(d);
  if (rank(m) != directions_.size()) return false;
  for (const auto& f : facets_)
    if (dot(f.inner_normal, x) < f.offset) return false;
  return true;
}

Polytope face(const Polytope& p, const Point& w) {
  if (w.size() != p.ambient_dim()) throw InvalidParameter("face: functional has wrong dimension");
  if (p.affine_dim() < 0) return p;
  Rational best = dot(w, p.vertices()[0]);
  for (const auto& v : p.vertices()) best = std::min(best, dot(w, v));
  std::vector<Point> sel;
  for (const auto& v : p.vertices())
    if (dot(w, v) == best) sel.push_back(v);
  return convex_hull(sel);
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw InvalidParameter("minkowski_sum: dimension mismatch");
  if (p.affine_dim() < 0 || q.affine_dim() < 0) return Polytope::empty(p.ambient_dim());
  std::vector<Point> sums;
  sums.reserve(p.vertices().size() * q.vertices().size());
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sums.push_back(std::move(s));
    }
  }
  return convex_hull(sums);
}

Polytope scale(const Polytope& p, const Rational& factor) {
  if (p.affine_dim() < 0) return p;
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (auto& x : v) x *= factor;
  return convex_hull(pts);
}

Polytope translate(const Polytope& p, const Point& shift) {
  if (p.affine_dim() < 0) return p;
  std::vector<Point> pts = p.vertices();
  for (auto& v : pts)
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += shift.at(i);
  return convex_hull(pts);
}

std::vector<LowerFace> lower_facets(const Polytope& p) {
  std::vector<LowerFace> out;
  if (p.affine_dim() < 0) return out;
  std::size_t n1 = p.ambient_dim();
  Point last(n1, Rational(0));
  last[n1 - 1] = 1;
  const auto& dirs = p.directions();
  RationalMatrix with_last(dirs.begin(), dirs.end());
  with_last.push_back(last);
  if (rank(with_last) > dirs.size()) {
    // The affine hull is not vertical: P itself is the unique maximal lower face.
    Point u = last;
    if (!dirs.empty()) {
      std::size_t k = dirs.size();
      RationalMatrix gram(k, RationalVector(k));
      RationalVector rhs(k);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) gram[i][j] = dot(dirs[i], dirs[j]);
        rhs[i] = dirs[i][n1 - 1];
      }
      auto alpha = solve(gram, rhs);
      if (!alpha) throw InternalError("singular Gram matrix");
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t c = 0; c < n1; ++c) u[c] -= (*alpha)[i] * dirs[i][c];
    }
    Rational un = u[n1 - 1];
    for (auto& x : u) x /= un;
    out.push_back(LowerFace{FacetNormal{u, true}, p});
    return out;
  }
  for (const auto& f : p.facets()) {
    Rational nn = f.inner_normal[n1 - 1];
    if (nn <= 0) continue;
    Point normal = f.inner_normal;
    for (auto& x : normal) x /= nn;
    std::vector<Point> verts;
    for (auto i : f.vertices) verts.push_back(p.vertices()[i]);
    out.push_back(LowerFace{FacetNormal{std::move(normal), true}, convex_hull(verts)});
  }
  std::sort(out.begin(), out.end(),
            [](const LowerFace& a, const LowerFace& b) { return a.normal.normal < b.normal.normal; });
  return out;
}

Polytope project_pi(const Polytope& p) {
  if (p.ambient_dim() < 2) throw InvalidParameter("project_pi needs ambient dimension >= 2");
  if (p.affine_dim() < 0) return Polytope::empty(p.ambient_dim() - 1);
  std::vector<Point> pts;
  for (const auto& v : p.vertices()) pts.emplace_back(v.begin(), v.end() - 1);
  return convex_hull(pts);
}

std::size_t edge_count(const Polytope& p) {
  int k = p.affine_dim();
  if (k <= 0) return 0;
  if (k == 1) return 1;
  std::size_t nv = p.vertices().size();
  std::vector<std::vector<std::size_t>> incident(nv);
  for (std::size_t f = 0; f < p.facets().size(); ++f)
    for (auto v : p.facets()[f].vertices) incident[v].push_back(f);
  std::size_t edges = 0;
  for (std::size_t u = 0; u < nv; ++u) {
    for (std::size_t v = u + 1; v < nv; ++v) {
      RationalMatrix normals;
      std::vector<std::size_t> common;
      std::set_intersection(incident[u].begin(), incident[u].end(), incident[v].begin(),
                            incident[v].end(), std::back_inserter(common));
      for (auto f : common) normals.push_back(p.facets()[f].inner_normal);
      if (rank(normals) == static_cast<std::size_t>(k - 1)) ++edges;
    }
  }
  return edges;
}

Rational volume(const Polytope& p) {
  std::size_t n = p.ambient_dim();
  if (p.affine_dim() < static_cast<int>(n)) return 0;
  if (n == 1) return p.vertices()[1][0] - p.vertices()[0][0];
  std::vector<std::size_t> coords(n);
  std::iota(coords.begin(), coords.end(), 0);
  Integer factor = common_denominator(p.vertices());
  std::vector<IntegerVector> ipts;
  for (const auto& v : p.vertices()) ipts.push_back(scaled(v, factor, coords));
  FullHull h = hull_full(ipts);
  Integer w(static_cast<unsigned long>(h.interior_weight));
  Integer total = 0;
  for (const auto& s : h.boundary) {
    IntegerMatrix m;
    for (auto i : s.verts) {
      IntegerVector row(n);
      for (std::size_t j = 0; j < n; ++j) row[j] = w * ipts[i][j] - h.interior_sum[j];
      m.push_back(std::move(row));
    }
    total += abs(determinant(std::move(m)));
  }
  Integer denom = factorial(static_cast<long>(n));
  Integer scale_pow, w_pow;
  mpz_pow_ui(scale_pow.get_mpz_t(), factor.get_mpz_t(), n);
  mpz_pow_ui(w_pow.get_mpz_t(), w.get_mpz_t(), n);
  Rational vol(total, denom * scale_pow * w_pow);
  vol.canonicalize();
  return vol;
}

Rational mixed_volume(std::span<const Polytope> polytopes) {
  std::size_t n = polytopes.size();
  if (n == 0) throw InvalidParameter("mixed_volume of an empty tuple");
  check_dimension(n);
  for (const auto& p : polytopes)
    if (p.ambient_dim() != n) throw InvalidParameter("mixed_volume: need n polytopes in R^n");
  for (const auto& p : polytopes)
    if (p.affine_dim() < 0) return 0;
  std::size_t full = std::size_t{1} << n;
  std::vector<Polytope> sums(full);
  Rational total = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    std::size_t low = static_cast<std::size_t>(__builtin_ctzll(mask));
    std::size_t rest = mask & (mask - 1);
    sums[mask] = rest == 0 ? polytopes[low] : minkowski_sum(sums[rest], polytopes[low]);
    int size = __builtin_popcountll(mask);
    Rational v = volume(sums[mask]);
    if ((static_cast<int>(n) - size) % 2 == 0) {
      total += v;
    } else {
      total -= v;
    }
  }
  if (total < 0) throw InternalError("negative mixed volume");
  return total;
}

}  // namespace fewroots
