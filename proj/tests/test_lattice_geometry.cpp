#include "oracles.hpp"
#include "reciprocity/ehrhart.hpp"
#include "reciprocity/face_lattice.hpp"
#include "reciprocity/generators.hpp"
#include "reciprocity/triangulation.hpp"

#include <gtest/gtest.h>

using namespace reciprocity;

namespace {

Polytope triangle() { return hull({make_point({0, 0}), make_point({1, 0}), make_point({0, 1})}); }
Polytope square() { return hull({make_point({0, 0}), make_point({1, 0}), make_point({0, 1}), make_point({1, 1})}); }

Point Q(std::initializer_list<Rational> c) { return Point(c); }

Polynomial P(std::initializer_list<long> cs) {
  std::vector<Rational> v;
  for (auto c : cs) v.emplace_back(c);
  return Polynomial(v);
}

}  // namespace

TEST(Hull, DropsInteriorPointsAndFindsFacets) {
  const Polytope p = hull({make_point({0, 0}), make_point({2, 0}), make_point({0, 2}), make_point({2, 2}),
                           make_point({1, 1}), make_point({1, 0})});
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_EQ(p.facets().size(), 4u);
  EXPECT_EQ(p.dim(), 2u);
  EXPECT_TRUE(p.contains(make_point({1, 1}), true));
  EXPECT_FALSE(p.contains(make_point({1, 0}), true));
  EXPECT_TRUE(p.contains(make_point({1, 0})));
}

TEST(Hull, LowerDimensionalInHigherSpace) {
  const Polytope seg = hull({make_point({0, 0, 0}), make_point({2, 2, 2})});
  EXPECT_EQ(seg.dim(), 1u);
  EXPECT_EQ(seg.equations().size(), 2u);
  EXPECT_EQ(lattice_count(seg, 1), 3);
  EXPECT_EQ(lattice_count(seg, 1, true), 1);
  EXPECT_THROW(hull({}), std::invalid_argument);
}

TEST(Hull, UnitCubeFactoryMatchesHull) {
  for (std::size_t n = 1; n <= 3; ++n) {
    const Polytope direct = Polytope::unit_cube(n);
    std::vector<Point> pts;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
      Point v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = (m >> i) & 1u;
      pts.push_back(v);
    }
    const Polytope h = hull(pts);
    EXPECT_EQ(direct.vertices(), h.vertices());
    EXPECT_EQ(direct.facets().size(), h.facets().size());
    for (long t = 1; t <= 3; ++t) EXPECT_EQ(lattice_count(direct, t), lattice_count(h, t));
  }
}

TEST(LatticeCount, MatchesBoxScanOracle) {
  Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Polytope p = random_lattice_polytope(rng, 1 + rng() % 3);
    for (long t = 1; t <= 3; ++t) {
      EXPECT_EQ(lattice_count(p, t), oracle::lattice_count(p, t));
      EXPECT_EQ(lattice_count(p, t, true), oracle::lattice_count(p, t, true));
    }
  }
}

TEST(LatticeCount, RationalPolytopes) {
  const Polytope p = hull({Q({0, 0}), Q({Rational(3, 2), 0}), Q({0, Rational(2, 3)})});
  for (long t = 1; t <= 7; ++t) {
    EXPECT_EQ(lattice_count(p, t), oracle::lattice_count(p, t));
    EXPECT_EQ(lattice_count(p, t, true), oracle::lattice_count(p, t, true));
  }
  EXPECT_THROW(lattice_count(p, 0), std::invalid_argument);
}

TEST(Ehrhart, StandardTriangle) {
  const Quasipolynomial e = ehrhart(triangle());
  ASSERT_TRUE(e.is_polynomial());
  // (t+1)(t+2)/2
  EXPECT_EQ(e.constituents()[0], Polynomial({Rational(1), Rational(3, 2), Rational(1, 2)}));
  for (long t = 1; t <= 10; ++t) EXPECT_EQ(lattice_count(triangle(), t, true), binomial(t - 1, 2));
  EXPECT_TRUE(ehrhart_reciprocity_check(triangle(), 10));
}

TEST(Ehrhart, PointIsConstantOne) {
  const Quasipolynomial e = ehrhart(hull({make_point({3})}));
  EXPECT_EQ(e.constituents()[0], P({1}));
}

TEST(Ehrhart, HalfIntegralSegmentHasPeriodTwo) {
  const Quasipolynomial e = ehrhart(hull({Q({0}), Q({Rational(1, 2)})}));
  ASSERT_EQ(e.period(), 2u);
  EXPECT_FALSE(e.is_polynomial());
  for (long t = 1; t <= 12; ++t) EXPECT_EQ(e(Integer(t)), Rational(t / 2 + 1));
  EXPECT_TRUE(ehrhart_reciprocity_check(hull({Q({0}), Q({Rational(1, 2)})}), 8));
}

TEST(Ehrhart, ReciprocityOnRandomPolytopes) {
  Rng rng(1);
  for (int trial = 0; trial < 15; ++trial) {
    const Polytope p = random_lattice_polytope(rng, 1 + rng() % 3);
    EXPECT_TRUE(ehrhart_reciprocity_check(p, 6));
  }
}

TEST(Ehrhart, ReciprocityOnRationalPolytopes) {
  const Polytope p = hull({Q({0, 0}), Q({Rational(1, 2), 0}), Q({0, Rational(1, 3)}), Q({1, 1})});
  const CheckResult r = ehrhart_reciprocity_check(p, 8);
  EXPECT_TRUE(r) << r.witness;
}

TEST(Ehrhart, NormalizedVolume) {
  EXPECT_EQ(normalized_volume(square()), 2);
  EXPECT_EQ(normalized_volume(Polytope::unit_cube(3)), 6);
  EXPECT_THROW(normalized_volume(hull({make_point({0, 0}), make_point({1, 1})})), std::invalid_argument);
}

TEST(SimplexH, SegmentMinusOneToTwo) {
  const Polytope seg = hull({make_point({-1}), make_point({2})});
  const HVectors hv = simplex_h_vectors(seg);
  EXPECT_EQ(hv.h, P({1, 2}));
  EXPECT_EQ(hv.h_tilde, P({0, 2, 1}));
  EXPECT_TRUE(gf_equal(ehrhart_series(seg), RationalGF(P({1, 2}), {1, 1})));
}

TEST(SimplexH, MatchesSolveOracleAndMirrorIdentity) {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const Polytope s = random_lattice_simplex(rng, d);
    const HVectors hv = simplex_h_vectors(s);
    const auto h = oracle::simplex_h(s, false);
    const auto ht = oracle::simplex_h(s, true);
    for (std::size_t k = 0; k <= d + 1; ++k) {
      EXPECT_EQ(hv.h[k], Rational(h[k]));
      EXPECT_EQ(hv.h_tilde[k], Rational(ht[k]));
      EXPECT_EQ(hv.h_tilde[k], hv.h[d + 1 - k]);
    }
    EXPECT_EQ(numerator_of(hv.h(Rational(1))), normalized_volume(s));
  }
}

TEST(SimplexH, RejectsNonLatticeAndNonSimplex) {
  EXPECT_THROW(simplex_h_vectors(square()), std::invalid_argument);
  EXPECT_THROW(simplex_h_vectors(hull({Q({0}), Q({Rational(1, 2)})})), std::invalid_argument);
}

TEST(Series, SimplexSeriesPrefixMatchesCounts) {
  Rng rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Polytope s = random_lattice_simplex(rng, 1 + rng() % 3);
    const auto prefix = gf_series_prefix(ehrhart_series(s), 6);
    EXPECT_EQ(prefix[0], 1);
    for (long t = 1; t <= 6; ++t) EXPECT_EQ(prefix[static_cast<std::size_t>(t)], oracle::lattice_count(s, t));
  }
}

TEST(Series, UnitSquareAndCube) {
  EXPECT_TRUE(gf_equal(ehrhart_series(square()), RationalGF(P({1, 1}), {1, 1, 1})));
  EXPECT_TRUE(gf_equal(ehrhart_series(Polytope::unit_cube(3)), RationalGF(P({1, 4, 1}), {1, 1, 1, 1})));
}

TEST(Series, TriangulationRouteMatchesInterpolation) {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    const Polytope p = random_lattice_polytope(rng, 1 + rng() % 3);
    const Triangulation t = regular_triangulation(p, rng());
    EXPECT_TRUE(gf_equal(ehrhart_series_by_triangulation(t), ehrhart_series_by_interpolation(p)));
  }
}

TEST(Triangulation, UnitSquareHasTwoSimplices) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Triangulation t = regular_triangulation(square(), seed);
    EXPECT_EQ(t.simplices.size(), 2u);
    EXPECT_TRUE(triangulation_mobius_check(t));
    EXPECT_TRUE(triangulation_partition_check(t, 4));
  }
}

TEST(Triangulation, DeterministicInSeed) {
  const Triangulation a = regular_triangulation(Polytope::unit_cube(3), 77);
  const Triangulation b = regular_triangulation(Polytope::unit_cube(3), 77);
  EXPECT_EQ(a.simplices, b.simplices);
  EXPECT_EQ(a.lifting, b.lifting);
}

TEST(Triangulation, RandomPolytopesVolumesAndMobius) {
  Rng rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const Polytope p = random_lattice_polytope(rng, 1 + rng() % 3);
    const Triangulation t = regular_triangulation(p, rng());
    Integer sum = 0;
    for (const auto& s : t.simplices) sum += normalized_volume(p, s);
    EXPECT_EQ(sum, normalized_volume(p));
    const CheckResult mu = triangulation_mobius_check(t);
    EXPECT_TRUE(mu) << mu.witness;
    const CheckResult part = triangulation_partition_check(t, 3);
    EXPECT_TRUE(part) << part.witness;
  }
}

TEST(Triangulation, LowerDimensionalPolytope) {
  const Polytope p = hull({make_point({0, 0, 1}), make_point({2, 0, 1}), make_point({0, 2, 1}), make_point({2, 2, 1})});
  const Triangulation t = regular_triangulation(p, 3);
  EXPECT_EQ(t.simplices.size(), 2u);
  EXPECT_TRUE(triangulation_mobius_check(t));
}

TEST(FaceLattice, CubeFaceNumbers) {
  const FaceLattice fl = face_lattice(Polytope::unit_cube(3));
  EXPECT_EQ(fl.f_polynomial(), P({8, 12, 6, 1}));
  EXPECT_EQ(fl.faces.front().dim, -1);
  EXPECT_TRUE(face_lattice_mobius_check(fl));
}

TEST(FaceLattice, EulerCharacteristicOnRandomPolytopes) {
  Rng rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const Polytope p = random_lattice_polytope(rng, 1 + rng() % 3);
    EXPECT_EQ(euler_characteristic(p), 1);
    EXPECT_TRUE(face_lattice_mobius_check(face_lattice(p)));
  }
  EXPECT_EQ(euler_characteristic(hull({make_point({5, 5})})), 1);
}
