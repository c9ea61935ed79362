#pragma once

// Chromatic polynomials, acyclic orientations, compatible pairs, graphical
// arrangements, and inside-out polytope counts.

#include "reciprocity/algebra.hpp"
#include "reciprocity/arrangement.hpp"
#include "reciprocity/check.hpp"
#include "reciprocity/parallel.hpp"
#include "reciprocity/polytope.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reciprocity {

using Edge = std::pair<std::size_t, std::size_t>;  // 0-based, first < second

/// Finite graph on nodes 1..n (stored 0-based). Parallel edges collapse on
/// insertion; a loop is recorded as a flag.
class Graph {
 public:
  explicit Graph(std::size_t n = 0) : n_(n) {}

  /// Adds edge {i, j} with 1-based endpoints.
  void add_edge(std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > n_ || j > n_)
      throw std::invalid_argument("edge {" + std::to_string(i) + "," + std::to_string(j) + "} outside nodes 1.." +
                                  std::to_string(n_));
    if (i == j) {
      has_loop_ = true;
      return;
    }
    Edge e{std::min(i, j) - 1, std::max(i, j) - 1};
    if (std::find(edges_.begin(), edges_.end(), e) == edges_.end()) edges_.push_back(e);
  }

  std::size_t size() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_loop() const { return has_loop_; }

  static Graph complete(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
  }
  static Graph cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
    return g;
  }
  static Graph path(std::size_t n) {
    Graph g(n);
    for (std::size_t i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  bool has_loop_ = false;
};

namespace detail {

using EdgeList = std::vector<Edge>;

inline EdgeList contract(const EdgeList& edges, std::size_t keep, std::size_t drop) {
  std::set<Edge> out;
  for (auto [a, b] : edges) {
    auto relabel = [&](std::size_t v) {
      if (v == drop) v = keep;
      return v > drop ? v - 1 : v;
    };
    a = relabel(a);
    b = relabel(b);
    if (a == b) continue;
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return {out.begin(), out.end()};
}

inline Polynomial chromatic_rec(std::size_t n, const EdgeList& edges, std::map<std::pair<std::size_t, EdgeList>, Polynomial>& memo) {
  if (edges.empty()) return Polynomial::monomial(n);
  const auto key = std::make_pair(n, edges);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  const Edge e = edges.back();
  const EdgeList deleted(edges.begin(), edges.end() - 1);
  const Polynomial p = chromatic_rec(n, deleted, memo) - chromatic_rec(n - 1, contract(deleted, e.first, e.second), memo);
  memo.emplace(key, p);
  return p;
}

}  // namespace detail

/// c_G(t) by memoized deletion-contraction. A loop gives the zero polynomial.
inline Polynomial chromatic_polynomial(const Graph& g) {
  if (g.has_loop()) return {};
  std::map<std::pair<std::size_t, detail::EdgeList>, Polynomial> memo;
  detail::EdgeList edges = g.edges();
  std::sort(edges.begin(), edges.end());
  return detail::chromatic_rec(g.size(), edges, memo);
}

/// Number of x in [t]^V with x_i != x_j on every edge.
inline Integer proper_colorings_brute(const Graph& g, unsigned t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  if (g.has_loop()) return 0;
  const std::size_t n = g.size();
  std::vector<unsigned> x(n, 0);
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t v) {
    if (v == n) {
      ++count;
      return;
    }
    for (x[v] = 0; x[v] < t; ++x[v]) {
      bool ok = true;
      for (const auto& [a, b] : g.edges())
        if (b == v && x[a] == x[v]) {
          ok = false;
          break;
        }
      if (ok) rec(v + 1);
    }
  };
  rec(0);
  return count;
}

/// Bit k set means edge k = {a, b} (a < b) is directed a -> b; clear means b -> a.
struct Orientation {
  std::uint64_t forward = 0;

  bool a_to_b(std::size_t k) const { return forward >> k & 1u; }
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

inline std::pair<std::size_t, std::size_t> directed(const Graph& g, const Orientation& o, std::size_t k) {
  const auto [a, b] = g.edges()[k];
  return o.a_to_b(k) ? std::make_pair(a, b) : std::make_pair(b, a);
}

inline bool is_acyclic(const Graph& g, const Orientation& o) {
  const std::size_t n = g.size();
  std::vector<std::size_t> indeg(n, 0);
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto [from, to] = directed(g, o, k);
    out[from].push_back(to);
    ++indeg[to];
  }
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::size_t seen = 0;
  while (!ready.empty()) {
    const std::size_t v = ready.back();
    ready.pop_back();
    ++seen;
    for (auto w : out[v])
      if (--indeg[w] == 0) ready.push_back(w);
  }
  return seen == n;
}

inline constexpr std::size_t kMaxOrientationEdges = 24;

/// All 2^|E| orientations filtered by cycle detection. A loop yields none.
inline std::vector<Orientation> acyclic_orientations(const Graph& g) {
  if (g.has_loop()) return {};
  const std::size_t m = g.edges().size();
  if (m > kMaxOrientationEdges)
    throw std::invalid_argument("orientation enumeration is limited to " + std::to_string(kMaxOrientationEdges) +
                                " edges");
  std::vector<Orientation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
    if (is_acyclic(g, Orientation{mask})) out.push_back(Orientation{mask});
  return out;
}

/// x_to >= x_from along every directed edge.
template <typename Coloring>
bool compatible(const Graph& g, const Orientation& o, const Coloring& x) {
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto [from, to] = directed(g, o, k);
    if (x[to] < x[from]) return false;
  }
  return true;
}

/// Number of (x in [t]^V, acyclic orientation compatible with x) pairs,
/// sharded over orientations.
inline Integer compatible_pairs(const Graph& g, unsigned t) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const auto orientations = acyclic_orientations(g);
  const std::size_t n = g.size();
  return parallel_sum<Integer>(0, static_cast<std::int64_t>(orientations.size()) - 1, [&](std::int64_t i) {
    const Orientation& o = orientations[static_cast<std::size_t>(i)];
    std::vector<unsigned> x(n, 0);
    Integer count = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
      if (v == n) {
        if (compatible(g, o, x)) ++count;
        return;
      }
      for (x[v] = 0; x[v] < t; ++x[v]) rec(v + 1);
    };
    rec(0);
    return count;
  });
}

/// Number of acyclic orientations compatible with x.
template <typename Coloring>
std::size_t greene_multiplicity(const Graph& g, const std::vector<Orientation>& acyclic, const Coloring& x) {
  return static_cast<std::size_t>(
      std::count_if(acyclic.begin(), acyclic.end(), [&](const Orientation& o) { return compatible(g, o, x); }));
}

/// Hyperplanes x_i = x_j, one per edge, in edge order.
inline Arrangement graphical_arrangement(const Graph& g) {
  if (g.has_loop()) throw std::invalid_argument("a loop has no graphical hyperplane");
  Arrangement a(g.size());
  for (const auto& [i, j] : g.edges()) {
    Vector n(g.size(), Rational(0));
    n[i] = 1;
    n[j] = -1;
    a.add(Hyperplane(std::move(n), 0));
  }
  return a;
}

struct InsideOutPolytope {
  Polytope polytope;
  Arrangement arrangement;

  InsideOutPolytope(Polytope p, Arrangement a) : polytope(std::move(p)), arrangement(std::move(a)) {
    if (polytope.ambient_dimension() != arrangement.dimension())
      throw std::invalid_argument("polytope and arrangement live in different spaces");
  }
};

/// Unit cube [0,1]^V with the graphical arrangement.
inline InsideOutPolytope coloring_inside_out(const Graph& g) {
  return {Polytope::unit_cube(g.size()), graphical_arrangement(g)};
}

using SignVector = std::vector<int>;  // +-1 per hyperplane

inline constexpr std::size_t kMaxRegionHyperplanes = 20;

/// Sign vectors of the connected components of P° minus the arrangement, for
/// full-dimensional P. A sign vector is realized iff the centroid of the
/// candidate vertices (intersections of d facet/arrangement hyperplanes lying
/// in P) weakly on its side is strictly on its side and inside P°.
inline std::vector<SignVector> realized_regions(const InsideOutPolytope& iop) {
  const Polytope& p = iop.polytope;
  const Arrangement& a = iop.arrangement;
  const std::size_t d = p.ambient_dimension();
  const std::size_t m = a.size();
  if (!p.full_dimensional()) throw std::invalid_argument("region realization needs a full-dimensional polytope");
  if (m > kMaxRegionHyperplanes)
    throw std::invalid_argument("region realization is limited to " + std::to_string(kMaxRegionHyperplanes) +
                                " hyperplanes");

  std::vector<std::pair<Vector, Rational>> walls;
  for (const auto& f : p.facets()) walls.emplace_back(Vector(f.normal.begin(), f.normal.end()), f.offset);
  for (const auto& h : a.hyperplanes()) walls.emplace_back(h.normal(), h.offset());
  std::set<Point> candidates;
  for (const auto& subset : detail::k_subsets(walls.size(), d)) {
    Matrix lhs;
    Vector rhs;
    for (auto i : subset) {
      lhs.push_back(walls[i].first);
      rhs.push_back(walls[i].second);
    }
    if (auto x = solve_unique(lhs, rhs); x && p.contains(*x)) candidates.insert(*x);
  }
  std::vector<Point> pts(candidates.begin(), candidates.end());
  std::vector<std::vector<int>> sides(pts.size(), std::vector<int>(m));
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t h = 0; h < m; ++h) sides[i][h] = a[h].side(pts[i]);

  std::vector<SignVector> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    SignVector s(m);
    for (std::size_t h = 0; h < m; ++h) s[h] = (mask >> h & 1u) ? 1 : -1;
    Point centroid(d, Rational(0));
    std::size_t count = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      bool ok = true;
      for (std::size_t h = 0; h < m && ok; ++h) ok = sides[i][h] * s[h] >= 0;
      if (!ok) continue;
      centroid = centroid + pts[i];
      ++count;
    }
    if (count == 0) continue;
    centroid = Rational(1, count) * centroid;
    bool strict = p.contains(centroid, true);
    for (std::size_t h = 0; h < m && strict; ++h) strict = a[h].side(centroid) == s[h];
    if (strict) out.push_back(std::move(s));
  }
  return out;
}

struct InsideOutCounts {
  Integer closed_off;   // points of P off the arrangement
  Integer open_off;     // points of P° off the arrangement
  Integer with_mult;    // points of P weighted by the number of closed regions containing them
};

/// Counts over (1/t)Z^d, given the realized regions of the inside-out polytope.
inline InsideOutCounts inside_out_counts(const InsideOutPolytope& iop, unsigned t,
                                         const std::vector<SignVector>& regions) {
  if (t < 1) throw std::invalid_argument("t must be positive");
  const Arrangement& a = iop.arrangement;
  const std::size_t m = a.size();
  auto sides = [&](const std::vector<std::int64_t>& x) {
    std::vector<int> s(m);
    for (std::size_t h = 0; h < m; ++h) {
      Rational v = -a[h].offset() * Rational(t);
      for (std::size_t i = 0; i < x.size(); ++i) v += a[h].normal()[i] * Rational(x[i]);
      s[h] = sign(v);
    }
    return s;
  };
  auto off = [](const std::vector<int>& s) { return std::find(s.begin(), s.end(), 0) == s.end(); };
  InsideOutCounts c;
  for_each_lattice_point(iop.polytope, t, false, [&](const std::vector<std::int64_t>& x) {
    const auto s = sides(x);
    if (off(s)) ++c.closed_off;
    for (const auto& r : regions) {
      bool in = true;
      for (std::size_t h = 0; h < m && in; ++h) in = s[h] * r[h] >= 0;
      if (in) ++c.with_mult;
    }
  });
  for_each_lattice_point(iop.polytope, t, true, [&](const std::vector<std::int64_t>& x) {
    if (off(sides(x))) ++c.open_off;
  });
  return c;
}

inline InsideOutCounts inside_out_counts(const InsideOutPolytope& iop, unsigned t) {
  return inside_out_counts(iop, t, realized_regions(iop));
}

/// I_{P°,H}(-t) == (-1)^d O_{P,H}(t) as polynomials, each interpolated from
/// d+1 values and confirmed against direct counts for 1 <= t <= horizon.
/// Assumes polynomial (period one) counting functions, which holds for a
/// lattice polytope with an integral arrangement.
inline CheckResult inside_out_reciprocity_check(const InsideOutPolytope& iop, unsigned horizon) {
  const auto regions = realized_regions(iop);
  const std::size_t d = iop.polytope.dim();
  const unsigned last = std::max<unsigned>(horizon, static_cast<unsigned>(d + 1));
  std::vector<std::pair<Integer, Rational>> open_pts, mult_pts;
  std::vector<InsideOutCounts> counts;
  for (unsigned t = 1; t <= last; ++t) {
    counts.push_back(inside_out_counts(iop, t, regions));
    if (t <= d + 1) {
      open_pts.emplace_back(t, Rational(counts.back().open_off));
      mult_pts.emplace_back(t, Rational(counts.back().with_mult));
    }
  }
  const Polynomial open_poly = interpolate(open_pts);
  const Polynomial mult_poly = interpolate(mult_pts);
  for (unsigned t = 1; t <= last; ++t) {
    const auto& c = counts[t - 1];
    if (open_poly(Rational(t)) != Rational(c.open_off) || mult_poly(Rational(t)) != Rational(c.with_mult))
      return CheckResult::fail("t = " + std::to_string(t) + ": interior or weighted count is not polynomial");
  }
  const Polynomial lhs = open_poly.reflect();
  const Polynomial rhs = Polynomial::constant(sign_power(static_cast<long>(d))) * mult_poly;
  if (lhs != rhs)
    return CheckResult::fail("I(-t) = " + lhs.to_string() + " but (-1)^d O(t) = " + rhs.to_string());
  return CheckResult::ok();
}

/// Regions of the graphical arrangement inside the open unit cube, each
/// mapped to the orientation with i -> j iff x_i < x_j. The map must hit
/// every acyclic orientation exactly once.
inline CheckResult region_orientation_bijection_check(const Graph& g) {
  const auto regions = realized_regions(coloring_inside_out(g));
  const auto acyclic = acyclic_orientations(g);
  std::set<std::uint64_t> hit;
  for (const auto& r : regions) {
    Orientation o;
    // Hyperplane k has normal e_a - e_b, so side -1 means x_a < x_b.
    for (std::size_t k = 0; k < r.size(); ++k)
      if (r[k] < 0) o.forward |= std::uint64_t{1} << k;
    if (!is_acyclic(g, o)) return CheckResult::fail("region maps to a cyclic orientation");
    if (!hit.insert(o.forward).second) return CheckResult::fail("two regions map to one orientation");
  }
  if (hit.size() != acyclic.size())
    return CheckResult::fail(std::to_string(hit.size()) + " regions but " + std::to_string(acyclic.size()) +
                             " acyclic orientations");
  return CheckResult::ok();
}

inline constexpr std::size_t kMaxReciprocityNodes = 5;
inline constexpr unsigned kMaxReciprocityHorizon = 4;

/// For 1 <= t <= horizon:
///  (a) brute-force t-colorings == lattice points of (t+1)(0,1)^V off H_G;
///  (b) (-1)^n c_G(-t) == compatible pairs;
///  (c) compatible pairs == O(t-1) with region multiplicities (t >= 2), and
///      the number of realized regions at t = 1.
inline CheckResult coloring_reciprocity_check(const Graph& g, unsigned horizon) {
  if (g.has_loop()) throw std::invalid_argument("coloring reciprocity check needs a loopless graph");
  if (g.size() > kMaxReciprocityNodes || horizon > kMaxReciprocityHorizon)
    throw std::invalid_argument("coloring reciprocity check is limited to |V| <= " +
                                std::to_string(kMaxReciprocityNodes) + " and horizon <= " +
                                std::to_string(kMaxReciprocityHorizon));
  if (g.size() == 0) return CheckResult::ok();
  const Polynomial c = chromatic_polynomial(g);
  const InsideOutPolytope iop = coloring_inside_out(g);
  const auto regions = realized_regions(iop);
  const int s = sign_power(static_cast<long>(g.size()));
  for (unsigned t = 1; t <= horizon; ++t) {
    const std::string at = "t = " + std::to_string(t) + ": ";
    const Integer brute = proper_colorings_brute(g, t);
    const Integer open = inside_out_counts(iop, t + 1, regions).open_off;
    if (brute != open)
      return CheckResult::fail(at + brute.str() + " colorings but " + open.str() + " points in (t+1)P° off H");
    const Rational reflected = Rational(s) * c(Rational(-static_cast<long>(t)));
    const Integer pairs = compatible_pairs(g, t);
    if (reflected != Rational(pairs))
      return CheckResult::fail(at + "(-1)^n c(-t) = " + to_string(reflected) + " but " + pairs.str() +
                               " compatible pairs");
    const Integer weighted = t == 1 ? Integer(regions.size()) : inside_out_counts(iop, t - 1, regions).with_mult;
    if (weighted != pairs)
      return CheckResult::fail(at + pairs.str() + " compatible pairs but O(t-1) = " + weighted.str());
  }
  return CheckResult::ok();
}

/// Graphviz rendering of an oriented graph with 1-based node names.
inline std::string to_dot(const Graph& g, const Orientation& o) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (std::size_t v = 0; v < g.size(); ++v) os << "  " << v + 1 << ";\n";
  for (std::size_t k = 0; k < g.edges().size(); ++k) {
    const auto [from, to] = directed(g, o, k);
    os << "  " << from + 1 << " -> " << to + 1 << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace reciprocity
