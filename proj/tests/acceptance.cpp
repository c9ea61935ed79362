// Acceptance gate: one line per criterion, nonzero exit if any fails.
// All comparisons are exact; the only tolerances are the wall-clock budgets.

#include "oracles.hpp"
#include "reciprocity/arrangement.hpp"
#include "reciprocity/ehrhart.hpp"
#include "reciprocity/face_lattice.hpp"
#include "reciprocity/generators.hpp"
#include "reciprocity/graph_coloring.hpp"
#include "reciprocity/ppartition.hpp"
#include "reciprocity/triangulation.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace reciprocity;

namespace {

constexpr std::uint64_t kSeed = 20240601;

// Wall-clock budgets in seconds, per criterion.
constexpr double kBudgetZaslavsky = 5.0;
constexpr double kBudgetEhrhart = 60.0;
constexpr double kBudgetSimplex = 30.0;
constexpr double kBudgetTriangulation = 30.0;
constexpr double kBudgetEuler = 10.0;
constexpr double kBudgetColoring = 60.0;
constexpr double kBudgetInsideOut = 60.0;
constexpr double kBudgetPPartition = 30.0;
constexpr double kBudgetCrossOracle = 120.0;

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

void require(const CheckResult& r, const std::string& what) {
  if (!r.passed) throw Failure{what + ": " + r.witness};
}

Polynomial power_of_linear(const Rational& root, std::size_t d) {
  Polynomial p = Polynomial::constant(1);
  for (std::size_t k = 0; k < d; ++k) p = p * Polynomial::linear_root(root);
  return p;
}

// ---- criteria ----

void zaslavsky() {
  for (std::size_t d = 2; d <= 5; ++d) {
    Polynomial falling = Polynomial::constant(1);
    for (std::size_t k = 0; k < d; ++k) falling = falling * Polynomial::linear_root(Rational(k));
    const Arrangement b = Arrangement::braid(d);
    const Polynomial h = characteristic_polynomial(b);
    require(h == falling, "braid d=" + std::to_string(d) + ": h = " + h.to_string());
    const Integer fact = factorial(static_cast<long>(d));
    require(regions_zaslavsky(b) == fact, "braid Moebius region count");
    require(regions_deletion_restriction(b) == fact, "braid deletion-restriction region count");

    const Arrangement bo = Arrangement::boolean(d);
    require(characteristic_polynomial(bo) == power_of_linear(1, d), "boolean h");
    const Integer two = pow(Integer(2), static_cast<unsigned>(d));
    require(regions_zaslavsky(bo) == two && regions_deletion_restriction(bo) == two, "boolean regions");
  }
}

std::vector<Polytope> polytope_suite(std::size_t count, std::uint64_t salt) {
  Rng rng(kSeed + salt);
  std::vector<Polytope> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_lattice_polytope(rng, 1 + rng() % 3, -3, 3));
  return out;
}

void ehrhart_macdonald() {
  const Polytope tri = hull({make_point({0, 0}), make_point({1, 0}), make_point({0, 1})});
  const Quasipolynomial e = ehrhart(tri);
  require(e.is_polynomial(), "triangle period");
  require(e.constituents()[0] == Polynomial({Rational(1), Rational(3, 2), Rational(1, 2)}),
          "triangle ehr = " + e.to_string());
  for (long t = 1; t <= 10; ++t) {
    require(lattice_count(tri, t, true) == binomial(t - 1, 2), "triangle interior at t=" + std::to_string(t));
    require(e(Integer(-t)) == Rational(binomial(t - 1, 2)), "triangle ehr(-t) at t=" + std::to_string(t));
  }
  const auto suite = polytope_suite(50, 1);
  for (std::size_t i = 0; i < suite.size(); ++i)
    require(ehrhart_reciprocity_check(suite[i], 8), "random polytope #" + std::to_string(i));
}

void simplex_machinery() {
  Rng rng(kSeed + 2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 1 + rng() % 4;
    const Polytope s = random_lattice_simplex(rng, d);
    const HVectors hv = simplex_h_vectors(s);
    for (std::size_t k = 0; k <= d + 1; ++k)
      require(hv.h_tilde[k] == hv.h[d + 1 - k], "simplex #" + std::to_string(i) + ": h = " +
                                                   hv.h.to_string("z") + ", h~ = " + hv.h_tilde.to_string("z"));
  }
  const Polytope seg = hull({make_point({-1}), make_point({2})});
  const RationalGF want(Polynomial({Rational(1), Rational(2)}), {1, 1});
  const RationalGF got = ehrhart_series(seg);
  require(gf_equal(got, want) && got == want, "segment [-1,2] series " + got.to_string());
}

void triangulation() {
  const Polytope sq = hull({make_point({0, 0}), make_point({1, 0}), make_point({0, 1}), make_point({1, 1})});
  const Triangulation t = regular_triangulation(sq, kSeed);
  require(t.simplices.size() == 2, "unit square: " + std::to_string(t.simplices.size()) + " simplices");
  const auto suite = polytope_suite(20, 3);
  Rng rng(kSeed + 4);
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const Triangulation tr = regular_triangulation(suite[i], rng());
    Integer sum = 0;
    for (const auto& s : tr.simplices) sum += normalized_volume(suite[i], s);
    require(sum == normalized_volume(suite[i]), "volume sum on polytope #" + std::to_string(i));
    require(triangulation_mobius_check(tr), "moebius on polytope #" + std::to_string(i));
  }
}

void euler_poincare() {
  std::vector<Polytope> suite = polytope_suite(50, 1);
  for (auto& p : polytope_suite(20, 3)) suite.push_back(std::move(p));
  suite.push_back(Polytope::unit_cube(3));
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const FaceLattice fl = face_lattice(suite[i]);
    require(fl.f_polynomial()(Rational(-1)) == 1, "f(-1) on polytope #" + std::to_string(i));
    require(face_lattice_mobius_check(fl), "face lattice moebius on polytope #" + std::to_string(i));
  }
}

std::vector<Graph> graph_suite() {
  Rng rng(kSeed + 5);
  std::vector<Graph> out;
  for (int i = 0; i < 30; ++i) out.push_back(random_graph(rng, 1 + rng() % 5));
  return out;
}

void coloring_reciprocity() {
  const Graph k3 = Graph::complete(3);
  require(chromatic_polynomial(k3)(Rational(-1)) == -6, "K3 c(-1)");
  require(acyclic_orientations(k3).size() == 6, "K3 acyclic orientations");
  const auto suite = graph_suite();
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const Graph& g = suite[i];
    const Polynomial c = chromatic_polynomial(g);
    const int s = sign_power(static_cast<long>(g.size()));
    for (unsigned t = 1; t <= 4; ++t)
      require(Rational(compatible_pairs(g, t)) == Rational(s) * c(Rational(-static_cast<long>(t))),
              "graph #" + std::to_string(i) + " at t=" + std::to_string(t));
    const auto ao = acyclic_orientations(g).size();
    const Arrangement a = graphical_arrangement(g);
    require(regions_zaslavsky(a) == ao && regions_deletion_restriction(a) == ao,
            "graph #" + std::to_string(i) + ": graphical regions vs acyclic orientations");
  }
}

void inside_out() {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 4; ++n) {
    graphs.push_back(Graph(n));
    graphs.push_back(Graph::complete(n));
    graphs.push_back(Graph::path(n));
  }
  graphs.push_back(Graph::cycle(4));
  Rng rng(kSeed + 6);
  for (int i = 0; i < 8; ++i) graphs.push_back(random_graph(rng, 2 + rng() % 3));
  for (std::size_t i = 0; i < graphs.size(); ++i)
    require(inside_out_reciprocity_check(coloring_inside_out(graphs[i]), 4), "graph #" + std::to_string(i));
}

void ppartition_reciprocity() {
  auto over = [](Polynomial num, std::vector<unsigned> den) { return RationalGF(std::move(num), std::move(den)); };
  for (unsigned d = 1; d <= 5; ++d) {
    std::vector<unsigned> den;
    for (unsigned k = 1; k <= d; ++k) den.push_back(k);
    require(gf_equal(ppartition_gf(PPartitionSpec(Poset::chain(d), false)), over(Polynomial::constant(1), den)),
            "chain weak d=" + std::to_string(d));
    require(gf_equal(ppartition_gf(PPartitionSpec(Poset::chain(d), true)),
                     over(Polynomial::monomial(d * (d - 1) / 2), den)),
            "chain strict d=" + std::to_string(d));
    const RationalGF power(Polynomial::constant(1), std::vector<unsigned>(d, 1u));
    require(gf_equal(ppartition_gf(PPartitionSpec(Poset::antichain(d), false)), power) &&
                gf_equal(ppartition_gf(PPartitionSpec(Poset::antichain(d), true)), power),
            "antichain d=" + std::to_string(d));
  }
  require(gf_equal(ppartition_gf(PPartitionSpec(Poset::lambda(), false)), over(Polynomial::constant(1), {1, 1, 3})),
          "lambda weak");
  require(gf_equal(ppartition_gf(PPartitionSpec(Poset::lambda(), true)), over(Polynomial::monomial(2), {1, 1, 3})),
          "lambda strict");
  Rng rng(kSeed + 7);
  for (int i = 0; i < 20; ++i) {
    const Poset p = random_natural_poset(rng, 1 + rng() % 6);
    require(stanley_reciprocity_check(p), "random poset #" + std::to_string(i));
    for (bool strict : {false, true})
      require(cell_decomposition_check(PPartitionSpec(p, strict), 6), "cells of random poset #" + std::to_string(i));
  }
  for (const Poset& p : {Poset::lambda(), Poset::chain(4), Poset::antichain(3)})
    for (bool strict : {false, true}) require(cell_decomposition_check(PPartitionSpec(p, strict), 6), "named cells");
}

void cross_module_oracles() {
  const auto polys = polytope_suite(50, 1);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const Quasipolynomial e = ehrhart(polys[i]);
    const Quasipolynomial eo = ehrhart(polys[i], true);
    for (long t = 1; t <= 4; ++t) {
      require(e(Integer(t)) == Rational(oracle::lattice_count(polys[i], t)),
              "ehrhart vs box scan, polytope #" + std::to_string(i) + " t=" + std::to_string(t));
      require(eo(Integer(t)) == Rational(oracle::lattice_count(polys[i], t, true)),
              "interior ehrhart vs box scan, polytope #" + std::to_string(i));
    }
    const RationalGF s = ehrhart_series(polys[i], kSeed);
    const auto prefix = gf_series_prefix(s, 6);
    for (long t = 1; t <= 6; ++t)
      require(prefix[static_cast<std::size_t>(t)] == numerator_of(e(Integer(t))),
              "series vs ehrhart, polytope #" + std::to_string(i));
  }
  Rng rng(kSeed + 2);
  for (int i = 0; i < 50; ++i) {
    const std::size_t d = 1 + rng() % 4;
    const Polytope s = random_lattice_simplex(rng, d);
    if (d <= 3) {
      const HVectors hv = simplex_h_vectors(s);
      const auto h = oracle::simplex_h(s, false);
      for (std::size_t k = 0; k <= d + 1; ++k) require(hv.h[k] == Rational(h[k]), "h-vector vs solve oracle");
    }
  }
  for (const auto& g : graph_suite()) {
    const Polynomial c = chromatic_polynomial(g);
    for (long t = 1; t <= 5; ++t)
      require(c(Rational(t)) == Rational(oracle::colorings(g.size(), g.edges(), t)), "chromatic vs brute force");
    require(acyclic_orientations(g).size() == oracle::acyclic_orientations(g.size(), g.edges()),
            "acyclic orientations vs DFS oracle");
  }
  Rng prng(kSeed + 7);
  for (int i = 0; i < 20; ++i) {
    const Poset p = random_natural_poset(prng, 1 + prng() % 6);
    for (bool strict : {false, true}) {
      const PPartitionSpec spec(p, strict);
      const auto prefix = gf_series_prefix(ppartition_gf(spec), 12);
      for (long t = 0; t <= 12; ++t)
        require(prefix[static_cast<std::size_t>(t)] == ppartition_count(spec, static_cast<unsigned long>(t)),
                "P-partition series vs enumeration");
      for (long t = 0; t <= (p.size() <= 4 ? 6 : 3); ++t)
        require(ppartition_count(spec, static_cast<unsigned long>(t)) == oracle::ppartitions(p, strict, t),
                "P-partition enumeration vs box scan");
    }
    require(linear_extensions(p).size() == oracle::linear_extension_count(p), "linear extensions vs filter");
  }
  for (std::size_t d = 2; d <= 4; ++d) {
    const FlatPoset fp = flats(Arrangement::braid(d));
    const auto inv = oracle::mobius_by_inversion(fp.order);
    for (std::size_t j = 0; j < fp.flats.size(); ++j) require(Rational(fp.mu[j]) == inv[0][j], "flat moebius");
  }
}

struct Criterion {
  const char* name;
  double budget;
  std::function<void()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"1 arrangement regions: braid and boolean, both routes", kBudgetZaslavsky, zaslavsky},
      {"2 ehrhart reciprocity: triangle and 50 random polytopes", kBudgetEhrhart, ehrhart_macdonald},
      {"3 simplex h-vectors: mirror identity and [-1,2] series", kBudgetSimplex, simplex_machinery},
      {"4 regular triangulation: square, volumes, moebius", kBudgetTriangulation, triangulation},
      {"5 euler characteristic and face lattice moebius", kBudgetEuler, euler_poincare},
      {"6 coloring reciprocity and graphical regions", kBudgetColoring, coloring_reciprocity},
      {"7 inside-out reciprocity for unit cube colorings", kBudgetInsideOut, inside_out},
      {"8 P-partition generating functions and reciprocity", kBudgetPPartition, ppartition_reciprocity},
      {"9 closed forms agree with brute-force oracles", kBudgetCrossOracle, cross_module_oracles},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string why;
    try {
      c.run();
    } catch (const Failure& f) {
      why = f.why;
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (why.empty() && secs > c.budget) why = "over budget";
    std::printf("%s  %-58s %7.2fs / %5.0fs%s%s\n", why.empty() ? "PASS" : "FAIL", c.name, secs, c.budget,
                why.empty() ? "" : "  ", why.c_str());
    std::fflush(stdout);
    if (!why.empty()) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
