#pragma once

// Ehrhart quasipolynomials, Ehrhart-Macdonald reciprocity, fundamental
// parallelepipeds of simplex cones, and Ehrhart series.

#include "reciprocity/algebra.hpp"
#include "reciprocity/check.hpp"
#include "reciprocity/polytope.hpp"
#include "reciprocity/triangulation.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reciprocity {

/// Ehrhart quasipolynomial of a rational polytope. The period is the lcm of
/// the vertex denominators (not minimized). Constituent r is interpolated
/// from the counts at t = r + j*period, j = 1..dim+1, then confirmed against
/// direct counts for every t up to 2*(dim+1)*period.
inline Quasipolynomial ehrhart(const Polytope& p, bool interior = false) {
  const Integer period = p.denominator();
  const auto q = period.convert_to<std::size_t>();
  const std::size_t d = p.dim();
  std::vector<Polynomial> constituents;
  for (std::size_t r = 0; r < q; ++r) {
    std::vector<std::pair<Integer, Rational>> nodes;
    for (std::size_t j = 1; j <= d + 1; ++j) {
      const Integer t = Integer(r) + Integer(j) * period;
      nodes.emplace_back(t, Rational(lattice_count(p, t, interior)));
    }
    constituents.push_back(interpolate(nodes));
  }
  Quasipolynomial ehr(std::move(constituents));
  const Integer horizon = Integer(2 * (d + 1)) * period;
  for (Integer t = 1; t <= horizon; ++t)
    if (ehr(t) != Rational(lattice_count(p, t, interior)))
      throw std::logic_error("Ehrhart interpolant disagrees with the lattice count at t = " + t.str());
  return ehr;
}

/// ehr_P(-t) == (-1)^dim ehr_{P interior}(t) for 1 <= t <= horizon.
inline CheckResult ehrhart_reciprocity_check(const Polytope& p, unsigned horizon) {
  const Quasipolynomial ehr = ehrhart(p);
  const int s = sign_power(static_cast<long>(p.dim()));
  for (unsigned t = 1; t <= horizon; ++t) {
    const Rational lhs = ehr(Integer(-static_cast<long>(t)));
    const Integer interior = lattice_count(p, t, true);
    if (lhs != Rational(s * interior))
      return CheckResult::fail("t = " + std::to_string(t) + ": ehr(-t) = " + to_string(lhs) +
                               ", (-1)^d * interior count = " + (s * interior).str());
  }
  return CheckResult::ok();
}

struct HVectors {
  Polynomial h;        // lattice points of the half-open parallelepiped [0,1) by height
  Polynomial h_tilde;  // lattice points of (0,1] by height
};

/// Lattice points of the fundamental parallelepipeds of cone(S) for a lattice
/// simplex S, graded by height. Each candidate point is written in the basis
/// of lifted vertices (v, 1) via the integer adjugate of an invertible
/// maximal minor, and kept when every coefficient lies in the half-open range.
inline HVectors simplex_h_vectors(const Polytope& s) {
  if (!s.is_simplex()) throw std::invalid_argument("simplex_h_vectors needs a simplex");
  if (!s.is_lattice()) throw std::invalid_argument("simplex_h_vectors needs a lattice simplex");
  const std::size_t n = s.ambient_dimension();
  const std::size_t d = s.dim();
  const std::size_t g = d + 1;  // number of generators

  // Generator matrix G: (n+1) x g, column i = (v_i, 1).
  std::vector<std::vector<std::int64_t>> G(n + 1, std::vector<std::int64_t>(g));
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t r = 0; r < n; ++r) G[r][i] = numerator_of(s.vertices()[i][r]).convert_to<std::int64_t>();
    G[n][i] = 1;
  }
  // Independent rows of G = pivot columns of G^T.
  Matrix gt(g, Vector(n + 1));
  for (std::size_t i = 0; i < g; ++i)
    for (std::size_t r = 0; r <= n; ++r) gt[i][r] = G[r][i];
  const auto rows = rref(gt, n + 1).pivots;

  // Square minor S and its integer adjugate: S^{-1} = adj / det.
  Matrix sq(g, Vector(g));
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b) sq[a][b] = G[rows[a]][b];
  const Rational det_r = determinant(sq);
  std::int64_t det = numerator_of(det_r).convert_to<std::int64_t>();
  std::vector<std::vector<std::int64_t>> adj(g, std::vector<std::int64_t>(g));
  for (std::size_t b = 0; b < g; ++b) {
    Vector e(g, Rational(0));
    e[b] = 1;
    const auto col = solve_unique(sq, e);
    for (std::size_t a = 0; a < g; ++a) adj[a][b] = numerator_of((*col)[a] * det_r).convert_to<std::int64_t>();
  }
  if (det < 0) {  // make det positive; lambda = adj x / det is unchanged
    det = -det;
    for (auto& row : adj)
      for (auto& v : row) v = -v;
  }

  // Box of the parallelepiped in the selected rows.
  std::vector<std::int64_t> lo(g, 0), hi(g, 0);
  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t i = 0; i < g; ++i) {
      const auto v = G[rows[a]][i];
      (v < 0 ? lo[a] : hi[a]) += v;
    }

  std::vector<Integer> h(g + 1, Integer(0)), ht(g + 1, Integer(0));
  std::vector<std::int64_t> x(g), lam(g);
  std::function<void(std::size_t)> rec = [&](std::size_t a) {
    if (a < g) {
      for (x[a] = lo[a]; x[a] <= hi[a]; ++x[a]) rec(a + 1);
      return;
    }
    bool half0 = true, half1 = true;  // [0,1) and (0,1]
    for (std::size_t i = 0; i < g; ++i) {
      std::int64_t v = 0;
      for (std::size_t b = 0; b < g; ++b) v += adj[i][b] * x[b];
      lam[i] = v;
      if (!(v >= 0 && v < det)) half0 = false;
      if (!(v > 0 && v <= det)) half1 = false;
      if (!half0 && !half1) return;
    }
    // The full point G * lam / det must be integral (automatic on the minor rows).
    for (std::size_t r = 0; r <= n; ++r) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < g; ++i) v += G[r][i] * lam[i];
      if (v % det != 0) return;
    }
    std::int64_t height = 0;
    for (auto v : lam) height += v;
    height /= det;
    if (half0) ++h[static_cast<std::size_t>(height)];
    if (half1) ++ht[static_cast<std::size_t>(height)];
  };
  rec(0);

  auto to_poly = [](const std::vector<Integer>& c) {
    std::vector<Rational> cs(c.begin(), c.end());
    return Polynomial(std::move(cs));
  };
  return {to_poly(h), to_poly(ht)};
}

/// Ehrhart series from the Ehrhart polynomial: (1-z)^{d+1} sum_{t<=d} ehr(t) z^t.
inline RationalGF ehrhart_series_by_interpolation(const Polytope& p) {
  if (!p.is_lattice()) throw std::invalid_argument("Ehrhart series needs a lattice polytope");
  const Polynomial ehr = ehrhart(p).constituents().front();
  const std::size_t d = p.dim();
  std::vector<Rational> prefix;
  for (std::size_t t = 0; t <= d; ++t) prefix.push_back(ehr(Rational(static_cast<long>(t))));
  Polynomial num(prefix);
  for (std::size_t i = 0; i <= d; ++i) num = num * RationalGF::one_minus_z_pow(1);
  std::vector<Rational> cs(num.coefficients().begin(),
                           num.coefficients().begin() + static_cast<long>(std::min<std::size_t>(
                                                            d + 1, num.coefficients().size())));
  return RationalGF(Polynomial(std::move(cs)), std::vector<unsigned>(d + 1, 1u));
}

/// Ehrhart series from a triangulation: sum over interior faces F of
/// (-1)^{d - dim F} h_F(z) / (1-z)^{dim F + 1}.
inline RationalGF ehrhart_series_by_triangulation(const Triangulation& tri) {
  const long d = static_cast<long>(tri.polytope.dim());
  RationalGF sum(Polynomial{}, {});
  for (auto mask : tri.faces()) {
    if (mask == 0) continue;
    const auto ids = mask_to_ids(mask);
    if (tri.polytope.on_boundary(ids)) continue;
    const Polytope face = tri.polytope.face(ids);
    const long k = static_cast<long>(face.dim());
    const HVectors hv = simplex_h_vectors(face);
    const RationalGF term(Polynomial::constant(sign_power(d - k)) * hv.h,
                          std::vector<unsigned>(static_cast<std::size_t>(k + 1), 1u));
    sum = sum + term;
  }
  return sum;
}

/// Ehrhart series of a lattice polytope. Simplices use h(z)/(1-z)^{d+1}
/// directly; other polytopes are computed through a regular triangulation
/// and through the interpolated polynomial, which must agree.
inline RationalGF ehrhart_series(const Polytope& p, std::uint64_t seed = 0) {
  if (!p.is_lattice()) throw std::invalid_argument("Ehrhart series needs a lattice polytope");
  if (p.is_simplex())
    return RationalGF(simplex_h_vectors(p).h, std::vector<unsigned>(p.dim() + 1, 1u));
  const RationalGF by_poly = ehrhart_series_by_interpolation(p);
  const RationalGF by_tri = ehrhart_series_by_triangulation(regular_triangulation(p, seed));
  if (!gf_equal(by_poly, by_tri))
    throw std::logic_error("Ehrhart series by triangulation " + by_tri.to_string() +
                           " disagrees with interpolation " + by_poly.to_string());
  return by_poly;
}

/// Normalized volume of a full-dimensional polytope from the leading Ehrhart
/// coefficient: dim! * vol.
inline Integer normalized_volume(const Polytope& p) {
  if (!p.full_dimensional()) throw std::invalid_argument("normalized volume needs a full-dimensional polytope");
  const Rational v = ehrhart(p).constituents().front().leading() * Rational(factorial(static_cast<long>(p.dim())));
  if (!is_integral(v)) throw std::logic_error("normalized volume is not an integer");
  return numerator_of(v);
}

/// Triangulation against independent counts: the simplices' normalized
/// volumes add up to the polytope's (full-dimensional case), every lattice
/// point of tP lies in some simplex, and inclusion-exclusion over interior
/// faces reproduces the lattice count, for 1 <= t <= t_max.
inline CheckResult triangulation_partition_check(const Triangulation& tri, unsigned t_max) {
  const Polytope& p = tri.polytope;
  if (p.full_dimensional()) {
    Integer sum = 0;
    for (const auto& s : tri.simplices) sum += normalized_volume(p, s);
    const Integer vol = normalized_volume(p);
    if (sum != vol)
      return CheckResult::fail("simplex volumes sum to " + sum.str() + ", polytope volume is " + vol.str());
  }
  std::vector<Polytope> simplices;
  for (std::size_t i = 0; i < tri.simplices.size(); ++i) simplices.push_back(tri.simplex(i));
  std::vector<std::pair<long, Polytope>> interior_faces;
  for (auto mask : tri.faces()) {
    const auto ids = mask_to_ids(mask);
    if (ids.empty() || p.on_boundary(ids)) continue;
    Polytope f = p.face(ids);
    interior_faces.emplace_back(static_cast<long>(f.dim()), std::move(f));
  }
  const long d = static_cast<long>(p.dim());
  for (unsigned t = 1; t <= t_max; ++t) {
    std::string uncovered;
    for_each_lattice_point(p, t, false, [&](const std::vector<std::int64_t>& x) {
      if (!uncovered.empty()) return;
      Point pt;
      for (auto c : x) pt.emplace_back(Rational(Integer(c), Integer(t)));
      for (const auto& s : simplices)
        if (s.contains(pt)) return;
      uncovered = "t = " + std::to_string(t) + ": lattice point (";
      for (std::size_t i = 0; i < x.size(); ++i) uncovered += (i ? "," : "") + std::to_string(x[i]);
      uncovered += ") lies in no simplex";
    });
    if (!uncovered.empty()) return CheckResult::fail(uncovered);
    Integer ie = 0;
    for (const auto& [k, f] : interior_faces) ie += sign_power(d - k) * lattice_count(f, t);
    const Integer direct = lattice_count(p, t);
    if (ie != direct)
      return CheckResult::fail("t = " + std::to_string(t) + ": inclusion-exclusion gives " + ie.str() +
                               ", direct count " + direct.str());
  }
  return CheckResult::ok();
}

}  // namespace reciprocity
