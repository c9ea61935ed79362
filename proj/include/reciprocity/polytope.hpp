#pragma once

// Rational polytopes from a V-description: affine hull, facet inequalities,
// and exact lattice-point scanning of integer dilates.

#include "reciprocity/linalg.hpp"
#include "reciprocity/number.hpp"
#include "reciprocity/parallel.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reciprocity {

using Point = Vector;

/// normal . x <= offset, with a primitive integer normal.
struct Facet {
  std::vector<Integer> normal;
  Rational offset;
  std::vector<std::size_t> vertices;  // indices of vertices on the facet
};

/// normal . x == offset, with a primitive integer normal.
struct Equation {
  std::vector<Integer> normal;
  Rational offset;
};

namespace detail {

inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline Rational dot(const std::vector<Integer>& a, const Vector& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) s += Rational(a[i]) * x[i];
  return s;
}

}  // namespace detail

class Polytope {
 public:
  /// Convex hull of a nonempty point list. Works in any dimension of the
  /// affine hull; redundant points are dropped. Facets are found by brute
  /// force over dim-subsets, adequate for roughly a dozen points.
  static Polytope hull(std::vector<Point> points) {
    if (points.empty()) throw std::invalid_argument("hull of an empty point set");
    const std::size_t n = points.front().size();
    if (n == 0) throw std::invalid_argument("polytopes need ambient dimension >= 1");
    for (const auto& p : points)
      if (p.size() != n) throw std::invalid_argument("points have inconsistent dimensions");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());

    Polytope P;
    P.ambient_ = n;
    P.origin_ = points.front();
    Matrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - P.origin_);
    const RowEchelon e = rref(diffs, n);
    P.pivots_ = e.pivots;
    P.dim_ = e.rows.size();
    for (const auto& a : nullspace(diffs, n)) {
      Rational s;
      auto normal = primitive_integer(a, &s);
      P.equations_.push_back({normal, detail::dot(normal, P.origin_)});
    }

    const std::size_t k = P.dim_;
    std::vector<Vector> local;
    local.reserve(points.size());
    for (const auto& p : points) local.push_back(P.local(p));

    // Facets in local coordinates, keyed by primitive normal + offset.
    std::map<std::pair<std::vector<Integer>, Rational>, std::vector<std::size_t>> found;
    if (k >= 1) {
      for (const auto& subset : detail::k_subsets(points.size(), k)) {
        Matrix m;
        for (std::size_t i = 1; i < subset.size(); ++i) m.push_back(local[subset[i]] - local[subset[0]]);
        const auto null = nullspace(m, k);
        if (null.size() != 1) continue;
        auto alpha = primitive_integer(null.front());
        Rational beta = detail::dot(alpha, local[subset[0]]);
        int lo = 0, hi = 0;
        for (const auto& y : local) {
          const int s = sign(detail::dot(alpha, y) - beta);
          lo = std::min(lo, s);
          hi = std::max(hi, s);
        }
        if (lo < 0 && hi > 0) continue;
        if (hi > 0) {
          for (auto& c : alpha) c = -c;
          beta = -beta;
        }
        found.try_emplace({alpha, beta});
      }
    }
    // Lift local facets to ambient coordinates.
    std::vector<std::pair<std::vector<Integer>, Rational>> local_facets;
    for (const auto& [key, _] : found) local_facets.push_back(key);

    // Vertices: points whose tight local facets have full rank k.
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (k == 0) {
        keep.push_back(i);
        continue;
      }
      Matrix tight;
      for (const auto& [alpha, beta] : local_facets)
        if (detail::dot(alpha, local[i]) == beta) {
          Vector row;
          for (const auto& c : alpha) row.emplace_back(c);
          tight.push_back(std::move(row));
        }
      if (rank(tight, k) == k) keep.push_back(i);
    }
    for (auto i : keep) P.vertices_.push_back(points[i]);

    for (const auto& [alpha, beta] : local_facets) {
      Vector amb(n, Rational(0));
      Rational off = beta;
      for (std::size_t i = 0; i < k; ++i) {
        amb[P.pivots_[i]] = Rational(alpha[i]);
        off += Rational(alpha[i]) * P.origin_[P.pivots_[i]];
      }
      Rational scale;
      Facet f;
      f.normal = primitive_integer(amb, &scale);
      f.offset = off * scale;
      for (std::size_t v = 0; v < P.vertices_.size(); ++v)
        if (detail::dot(f.normal, P.vertices_[v]) == f.offset) f.vertices.push_back(v);
      P.facets_.push_back(std::move(f));
    }
    return P;
  }

  /// [0,1]^n, built directly from its known vertices and facets.
  static Polytope unit_cube(std::size_t n) {
    if (n == 0 || n > 16) throw std::invalid_argument("unit cube dimension must be in 1..16");
    Polytope P;
    P.ambient_ = n;
    P.dim_ = n;
    P.origin_ = Point(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) P.pivots_.push_back(i);
    // Lexicographic order: coordinate 0 is the most significant bit.
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      Point v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (m >> (n - 1 - i)) & 1u;
      P.vertices_.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < n; ++i)
      for (int s : {-1, 1}) {
        Facet f;
        f.normal.assign(n, Integer(0));
        f.normal[i] = s;
        f.offset = s > 0 ? 1 : 0;
        for (std::size_t v = 0; v < P.vertices_.size(); ++v)
          if (P.vertices_[v][i] == (s > 0 ? 1 : 0)) f.vertices.push_back(v);
        P.facets_.push_back(std::move(f));
      }
    return P;
  }

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Equation>& equations() const { return equations_; }
  bool is_simplex() const { return vertices_.size() == dim_ + 1; }
  bool full_dimensional() const { return dim_ == ambient_; }

  /// Coordinates of a point of the affine hull in the hull's own chart
  /// (pivot coordinates relative to the first input point).
  Vector local(const Point& x) const {
    Vector y(dim_);
    for (std::size_t i = 0; i < dim_; ++i) y[i] = x[pivots_[i]] - origin_[pivots_[i]];
    return y;
  }

  /// lcm of all vertex-coordinate denominators.
  Integer denominator() const {
    Integer q = 1;
    for (const auto& v : vertices_)
      for (const auto& c : v) q = lcm(q, denominator_of(c));
    return q;
  }
  bool is_lattice() const { return denominator() == 1; }

  /// Membership of a rational point; `relative_interior` makes facet
  /// inequalities strict.
  bool contains(const Point& x, bool relative_interior = false) const {
    for (const auto& e : equations_)
      if (detail::dot(e.normal, x) != e.offset) return false;
    for (const auto& f : facets_) {
      const Rational lhs = detail::dot(f.normal, x);
      if (relative_interior ? lhs >= f.offset : lhs > f.offset) return false;
    }
    return true;
  }

  /// Vertex subset on the relative boundary: some facet is tight on all.
  bool on_boundary(const std::vector<std::size_t>& vertex_ids) const {
    for (const auto& f : facets_)
      if (std::includes(f.vertices.begin(), f.vertices.end(), vertex_ids.begin(), vertex_ids.end())) return true;
    return false;
  }

  Polytope face(const std::vector<std::size_t>& vertex_ids) const {
    std::vector<Point> pts;
    for (auto i : vertex_ids) pts.push_back(vertices_[i]);
    return hull(std::move(pts));
  }

 private:
  std::size_t ambient_ = 0;
  std::size_t dim_ = 0;
  Point origin_;
  std::vector<std::size_t> pivots_;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<Equation> equations_;
};

inline Polytope hull(std::vector<Point> points) { return Polytope::hull(std::move(points)); }

inline Point make_point(std::initializer_list<long> coords) {
  Point p;
  for (long c : coords) p.emplace_back(c);
  return p;
}

namespace detail {

inline std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}
inline std::int64_t ceil_div64(std::int64_t a, std::int64_t b) { return -floor_div64(-a, b); }
inline Integer floor_div_any(const Integer& a, const Integer& b) { return b > 0 ? floor_div(a, b) : floor_div(-a, -b); }
inline Integer ceil_div_any(const Integer& a, const Integer& b) { return b > 0 ? ceil_div(a, b) : ceil_div(-a, -b); }
inline std::int64_t floor_div_any(std::int64_t a, std::int64_t b) { return floor_div64(a, b); }
inline std::int64_t ceil_div_any(std::int64_t a, std::int64_t b) { return ceil_div64(a, b); }

/// a . x <= rhs over the integers.
template <typename Int>
struct IntConstraint {
  std::vector<Int> a;
  Int rhs;
};

/// Integer system describing t*P (or its relative interior): constraints plus
/// a bounding box. `empty` is set when an equation has no integer solution.
struct DilateSystem {
  std::vector<IntConstraint<Integer>> cs;
  std::vector<Integer> lo, hi;
  bool empty = false;
};

inline DilateSystem dilate_system(const Polytope& p, const Integer& t, bool interior) {
  DilateSystem sys;
  const std::size_t n = p.ambient_dimension();
  const Rational tr(t);
  for (const auto& e : p.equations()) {
    const Rational r = tr * e.offset;
    if (!is_integral(r)) {
      sys.empty = true;
      return sys;
    }
    sys.cs.push_back({e.normal, numerator_of(r)});
    std::vector<Integer> neg(e.normal);
    for (auto& c : neg) c = -c;
    sys.cs.push_back({std::move(neg), -numerator_of(r)});
  }
  for (const auto& f : p.facets()) {
    const Rational r = tr * f.offset;
    sys.cs.push_back({f.normal, interior ? ceil(r) - 1 : floor(r)});
  }
  sys.lo.resize(n);
  sys.hi.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices().front()[i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    sys.lo[i] = ceil(tr * mn);
    sys.hi[i] = floor(tr * mx);
  }
  return sys;
}

/// Whether every partial sum during the scan fits comfortably in int64.
inline bool fits_int64(const DilateSystem& sys) {
  Integer box = 0;
  for (std::size_t i = 0; i < sys.lo.size(); ++i) box = std::max({box, abs(sys.lo[i]), abs(sys.hi[i])});
  const Integer limit = Integer(1) << 60;
  for (const auto& c : sys.cs) {
    Integer s = abs(c.rhs);
    for (const auto& a : c.a) s += abs(a) * box;
    if (s >= limit) return false;
  }
  return box < limit;
}

template <typename Int>
struct TypedSystem {
  std::vector<IntConstraint<Int>> cs;
  std::vector<Int> lo, hi;
};

template <typename Int>
TypedSystem<Int> typed(const DilateSystem& s) {
  auto cv = [](const Integer& z) {
    if constexpr (std::is_same_v<Int, Integer>)
      return z;
    else
      return z.convert_to<Int>();
  };
  TypedSystem<Int> out;
  for (const auto& c : s.cs) {
    IntConstraint<Int> ic;
    for (const auto& a : c.a) ic.a.push_back(cv(a));
    ic.rhs = cv(c.rhs);
    out.cs.push_back(std::move(ic));
  }
  for (const auto& v : s.lo) out.lo.push_back(cv(v));
  for (const auto& v : s.hi) out.hi.push_back(cv(v));
  return out;
}

/// Counts integer points by recursing over coordinates 0..n-2 and solving
/// the last coordinate as an interval.
template <typename Int>
class LineScanner {
 public:
  explicit LineScanner(const TypedSystem<Int>& sys) : sys_(sys), n_(sys.lo.size()) {}

  /// Points with x_0 fixed to `first`.
  Integer count_with_first(Int first) const {
    std::vector<Int> partial(sys_.cs.size(), Int(0));
    if (n_ == 1) return interval(partial);
    for (std::size_t c = 0; c < sys_.cs.size(); ++c) partial[c] = sys_.cs[c].a[0] * first;
    return recurse(1, partial);
  }

  Integer count() const {
    if (n_ == 1) {
      std::vector<Int> partial(sys_.cs.size(), Int(0));
      return interval(partial);
    }
    return parallel_sum<Integer>(static_cast<std::int64_t>(sys_.lo[0]), static_cast<std::int64_t>(sys_.hi[0]),
                                 [&](std::int64_t x0) { return count_with_first(Int(x0)); });
  }

 private:
  Integer recurse(std::size_t coord, std::vector<Int>& partial) const {
    if (coord + 1 == n_) return interval(partial);
    Integer total = 0;
    std::vector<Int> next(partial.size());
    for (Int x = sys_.lo[coord]; x <= sys_.hi[coord]; ++x) {
      for (std::size_t c = 0; c < partial.size(); ++c) next[c] = partial[c] + sys_.cs[c].a[coord] * x;
      total += recurse(coord + 1, next);
    }
    return total;
  }

  Integer interval(const std::vector<Int>& partial) const {
    const std::size_t last = n_ - 1;
    Int lo = sys_.lo[last], hi = sys_.hi[last];
    for (std::size_t c = 0; c < partial.size(); ++c) {
      const Int& a = sys_.cs[c].a[last];
      const Int r = sys_.cs[c].rhs - partial[c];
      if (a == 0) {
        if (r < 0) return 0;
      } else if (a > 0) {
        hi = std::min(hi, floor_div_any(r, a));
      } else {
        lo = std::max(lo, ceil_div_any(r, a));
      }
      if (lo > hi) return 0;
    }
    return Integer(hi - lo + 1);
  }

  const TypedSystem<Int>& sys_;
  std::size_t n_;
};

}  // namespace detail

/// #(tP cap Z^n), or the relative-interior count when `interior` is set.
/// For lower-dimensional P, membership also requires lying in the affine hull.
inline Integer lattice_count(const Polytope& p, const Integer& t, bool interior = false) {
  if (t < 1) throw std::invalid_argument("lattice_count needs a positive dilation factor");
  const detail::DilateSystem sys = detail::dilate_system(p, t, interior);
  if (sys.empty) return 0;
  for (std::size_t i = 0; i < sys.lo.size(); ++i)
    if (sys.lo[i] > sys.hi[i]) return 0;
  if (detail::fits_int64(sys)) {
    const auto typed = detail::typed<std::int64_t>(sys);
    return detail::LineScanner<std::int64_t>(typed).count();
  }
  const auto typed = detail::typed<Integer>(sys);
  return detail::LineScanner<Integer>(typed).count();
}

/// Visits every integer point of tP (or its relative interior). Intended for
/// desk-scale enumeration; coordinates must fit in int64.
inline void for_each_lattice_point(const Polytope& p, const Integer& t, bool interior,
                                   const std::function<void(const std::vector<std::int64_t>&)>& visit) {
  const detail::DilateSystem sys = detail::dilate_system(p, t, interior);
  if (sys.empty) return;
  if (!detail::fits_int64(sys)) throw std::overflow_error("lattice enumeration range exceeds int64");
  const auto ts = detail::typed<std::int64_t>(sys);
  const std::size_t n = ts.lo.size();
  std::vector<std::int64_t> x(n);
  std::function<void(std::size_t)> rec = [&](std::size_t coord) {
    if (coord == n) {
      for (const auto& c : ts.cs) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) s += c.a[i] * x[i];
        if (s > c.rhs) return;
      }
      visit(x);
      return;
    }
    for (x[coord] = ts.lo[coord]; x[coord] <= ts.hi[coord]; ++x[coord]) rec(coord + 1);
  };
  rec(0);
}

}  // namespace reciprocity
