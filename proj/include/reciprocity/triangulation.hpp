#pragma once

// Regular triangulations by random lifting, the face poset of a
// triangulation with an artificial top, and checks on both.

#include "reciprocity/check.hpp"
#include "reciprocity/poset.hpp"
#include "reciprocity/polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace reciprocity {

using VertexMask = std::uint64_t;

inline std::vector<std::size_t> mask_to_ids(VertexMask m) {
  std::vector<std::size_t> ids;
  for (std::size_t i = 0; i < 64; ++i)
    if (m >> i & 1u) ids.push_back(i);
  return ids;
}

inline VertexMask ids_to_mask(const std::vector<std::size_t>& ids) {
  VertexMask m = 0;
  for (auto i : ids) m |= VertexMask{1} << i;
  return m;
}

struct Triangulation {
  Polytope polytope;
  std::vector<std::vector<std::size_t>> simplices;  // sorted vertex indices into polytope.vertices()
  std::vector<Integer> lifting;                     // heights that produced it
  unsigned attempts = 1;

  /// All faces of all simplices, including the empty face, as vertex masks
  /// (sorted). The artificial top element is not included.
  std::vector<VertexMask> faces() const {
    std::set<VertexMask> out;
    for (const auto& s : simplices) {
      const VertexMask full = ids_to_mask(s);
      for (VertexMask sub = full;; sub = (sub - 1) & full) {
        out.insert(sub);
        if (sub == 0) break;
      }
    }
    return {out.begin(), out.end()};
  }

  Polytope simplex(std::size_t i) const { return polytope.face(simplices[i]); }
};

/// |det| of the edge vectors of a simplex in the polytope's chart: the
/// normalized volume (dim! times Euclidean volume for full-dimensional P).
inline Integer normalized_volume(const Polytope& chart, const std::vector<std::size_t>& simplex) {
  const auto& vs = chart.vertices();
  Matrix m;
  const Vector base = chart.local(vs[simplex.front()]);
  for (std::size_t i = 1; i < simplex.size(); ++i) m.push_back(chart.local(vs[simplex[i]]) - base);
  if (m.empty()) return 1;
  const Rational d = determinant(m);
  return numerator_of(d < 0 ? -d : d);
}

inline constexpr unsigned kLiftingRedrawBudget = 100;

/// Regular triangulation: lift vertex i to height r_i (random integers in
/// [1, 1000 n^2] from a generator seeded by `seed`), keep the lower facets of
/// the lifted hull and project them back. A lower facet that is not a simplex
/// triggers a redraw. Works in the affine hull's chart, so lower-dimensional
/// polytopes are triangulated too.
inline Triangulation regular_triangulation(const Polytope& p, std::uint64_t seed) {
  const auto& vs = p.vertices();
  const std::size_t m = vs.size();
  const std::size_t k = p.dim();
  if (m > 64) throw std::invalid_argument("triangulation limited to 64 vertices");
  std::vector<Vector> local;
  for (const auto& v : vs) local.push_back(p.local(v));

  Triangulation tri{p, {}, {}, 0};
  if (k == 0 || p.is_simplex()) {
    std::vector<std::size_t> all(m);
    for (std::size_t i = 0; i < m; ++i) all[i] = i;
    tri.simplices.push_back(all);
    tri.attempts = 1;
    return tri;
  }

  std::mt19937_64 rng(seed);
  const std::uint64_t range = 1000ull * m * m;
  const auto subsets = detail::k_subsets(m, k + 1);
  for (unsigned attempt = 1; attempt <= kLiftingRedrawBudget; ++attempt) {
    std::vector<Integer> r(m);
    for (auto& h : r) h = Integer(1 + rng() % range);
    std::vector<std::vector<std::size_t>> lower;
    bool degenerate = false;
    for (const auto& s : subsets) {
      // Affine function l(y) = c . y + c0 through the lifted points of s.
      Matrix a;
      Vector b;
      for (auto i : s) {
        Vector row = local[i];
        row.push_back(1);
        a.push_back(std::move(row));
        b.push_back(Rational(r[i]));
      }
      const auto coef = solve_unique(a, b);
      if (!coef) continue;
      std::size_t on = 0;
      bool below = false;
      for (std::size_t i = 0; i < m && !below; ++i) {
        Rational l = coef->back();
        for (std::size_t j = 0; j < k; ++j) l += (*coef)[j] * local[i][j];
        const Rational gap = Rational(r[i]) - l;
        if (gap < 0) below = true;
        if (gap == 0) ++on;
      }
      if (below) continue;
      if (on > k + 1) {
        degenerate = true;
        break;
      }
      lower.push_back(s);
    }
    if (!degenerate) {
      tri.simplices = std::move(lower);
      tri.lifting = std::move(r);
      tri.attempts = attempt;
      return tri;
    }
  }
  throw std::runtime_error("regular triangulation: redraw budget exhausted");
}

/// Moebius function of the face poset of the triangulation with an
/// artificial top of dimension d+1, against the closed form
///   mu(G, 1) = 0 if G is empty or on the boundary, else (-1)^{dim F - dim G}.
inline CheckResult triangulation_mobius_check(const Triangulation& tri) {
  const auto faces = tri.faces();
  const std::size_t n = faces.size() + 1;
  const std::size_t top = faces.size();
  const long d = static_cast<long>(tri.polytope.dim());
  const Poset phi = Poset::from_order(n, [&](std::size_t x, std::size_t y) {
    if (y == top) return true;
    if (x == top) return false;
    return (faces[x] & ~faces[y]) == 0;
  });
  const MobiusTable mu = mobius(phi);
  auto dim_of = [&](std::size_t x) -> long {
    return x == top ? d + 1 : static_cast<long>(__builtin_popcountll(faces[x])) - 1;
  };
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (!phi.leq(g, f)) continue;
      Integer expected = sign_power(dim_of(f) - dim_of(g));
      if (f == top && g != top && (faces[g] == 0 || tri.polytope.on_boundary(mask_to_ids(faces[g])))) expected = 0;
      if (mu(g, f) != expected) {
        const std::string gs = g == top ? "top" : std::to_string(faces[g]);
        const std::string fs = f == top ? "top" : std::to_string(faces[f]);
        return CheckResult::fail("mu(" + gs + ", " + fs + ") = " + mu(g, f).str() + ", expected " + expected.str());
      }
    }
  return CheckResult::ok();
}

}  // namespace reciprocity
