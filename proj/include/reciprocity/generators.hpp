#pragma once

// Seeded random instances: lattice polytopes and simplices, graphs, and
// naturally labeled posets.

#include "reciprocity/graph_coloring.hpp"
#include "reciprocity/linalg.hpp"
#include "reciprocity/polytope.hpp"
#include "reciprocity/poset.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace reciprocity {

using Rng = std::mt19937_64;

namespace detail {

inline long uniform(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Point random_point(Rng& rng, std::size_t dim, long lo, long hi) {
  Point p(dim);
  for (auto& c : p) c = uniform(rng, lo, hi);
  return p;
}

}  // namespace detail

/// Full-dimensional hull of dim+1..dim+4 random points of [lo,hi]^dim.
inline Polytope random_lattice_polytope(Rng& rng, std::size_t dim, long lo = -3, long hi = 3) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("random lattice polytopes have dimension 1..3");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    const std::size_t count = dim + 1 + static_cast<std::size_t>(detail::uniform(rng, 0, 3));
    std::vector<Point> pts;
    for (std::size_t i = 0; i < count; ++i) pts.push_back(detail::random_point(rng, dim, lo, hi));
    Polytope p = hull(std::move(pts));
    if (p.full_dimensional()) return p;
  }
  throw std::runtime_error("could not draw a full-dimensional polytope");
}

/// Full-dimensional lattice simplex with vertices in [lo,hi]^dim.
inline Polytope random_lattice_simplex(Rng& rng, std::size_t dim, long lo = -2, long hi = 2) {
  if (dim < 1 || dim > 4) throw std::invalid_argument("random lattice simplices have dimension 1..4");
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i <= dim; ++i) pts.push_back(detail::random_point(rng, dim, lo, hi));
    Matrix edges;
    for (std::size_t i = 1; i <= dim; ++i) edges.push_back(pts[i] - pts[0]);
    if (rank(edges, dim) == dim) return hull(std::move(pts));
  }
  throw std::runtime_error("could not draw a full-dimensional simplex");
}

/// G(n, 1/2) on n nodes.
inline Graph random_graph(Rng& rng, std::size_t n) {
  Graph g(n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j)
      if (rng() & 1u) g.add_edge(i, j);
  return g;
}

/// Each pair i < j becomes a relation i < j with probability 1/3, then the
/// transitive closure is taken. Labels are natural by construction.
inline Poset random_natural_poset(Rng& rng, std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j)
      if (rng() % 3 == 0) rel.emplace_back(i, j);
  return Poset::from_relations(d, rel);
}

}  // namespace reciprocity
