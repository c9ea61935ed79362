#pragma once

// Independent reference computations used by the tests. None of these share
// code paths with the library routines they check: plain box enumeration,
// matrix inversion, exhaustive permutation search, and textbook formulas.

#include "reciprocity/linalg.hpp"
#include "reciprocity/number.hpp"
#include "reciprocity/polytope.hpp"
#include "reciprocity/poset.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

namespace oracle {

using namespace reciprocity;

/// Lattice points of tP by scanning the vertex bounding box and testing
/// membership of x/t with exact rationals.
inline Integer lattice_count(const Polytope& p, long t, bool interior = false) {
  const std::size_t n = p.ambient_dimension();
  std::vector<long> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational mn = p.vertices()[0][i], mx = mn;
    for (const auto& v : p.vertices()) {
      mn = std::min(mn, v[i]);
      mx = std::max(mx, v[i]);
    }
    lo[i] = reciprocity::ceil(mn * t).convert_to<long>();
    hi[i] = reciprocity::floor(mx * t).convert_to<long>();
  }
  Integer count = 0;
  Point x(n);
  std::vector<long> c(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (std::size_t k = 0; k < n; ++k) x[k] = Rational(c[k], t);
      if (p.contains(x, interior)) ++count;
      return;
    }
    for (c[i] = lo[i]; c[i] <= hi[i]; ++c[i]) rec(i + 1);
  };
  rec(0);
  return count;
}

/// Moebius function as the inverse of the zeta matrix (Gauss-Jordan).
inline std::vector<std::vector<Rational>> mobius_by_inversion(const Poset& p) {
  const std::size_t n = p.size();
  Matrix aug(n, Vector(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i][j] = p.leq(i, j) ? 1 : 0;
    aug[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (aug[piv][c] == 0) ++piv;
    std::swap(aug[piv], aug[c]);
    const Rational inv = 1 / aug[c][c];
    for (auto& v : aug[c]) v *= inv;
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && aug[r][c] != 0) {
        const Rational f = aug[r][c];
        for (std::size_t k = 0; k < 2 * n; ++k) aug[r][k] -= f * aug[c][k];
      }
  }
  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mu[i][j] = aug[i][n + j];
  return mu;
}

/// Linear extensions by filtering all d! permutations.
inline std::size_t linear_extension_count(const Poset& p) {
  std::vector<std::size_t> w(p.size());
  std::iota(w.begin(), w.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < w.size() && ok; ++a)
      for (std::size_t b = a + 1; b < w.size() && ok; ++b)
        if (p.less(w[b], w[a])) ok = false;
    if (ok) ++count;
  } while (std::next_permutation(w.begin(), w.end()));
  return count;
}

/// (Strict) P-partitions of t by scanning the whole box [0,t]^d.
inline Integer ppartitions(const Poset& p, bool strict, long t) {
  const std::size_t d = p.size();
  std::vector<long> x(d, 0);
  Integer count = 0;
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long sum) {
    if (i == d) {
      if (sum != t) return;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          if (p.less(a, b) && (strict ? x[a] <= x[b] : x[a] < x[b])) return;
      ++count;
      return;
    }
    for (x[i] = 0; x[i] <= t; ++x[i]) rec(i + 1, sum + x[i]);
  };
  rec(0, 0);
  return count;
}

/// h-vector coefficients of a full-dimensional lattice simplex in R^d: scan
/// a box of integer points (y, h) with h <= d, solve for the cone
/// coordinates exactly and keep those in [0,1) (or (0,1]).
inline std::vector<Integer> simplex_h(const Polytope& s, bool open_top) {
  const std::size_t d = s.ambient_dimension();
  Matrix g(d + 1, Vector(d + 1));  // columns (v, 1)
  for (std::size_t i = 0; i <= d; ++i) {
    for (std::size_t r = 0; r < d; ++r) g[r][i] = s.vertices()[i][r];
    g[d][i] = 1;
  }
  std::vector<long> lo(d, 0), hi(d, 0);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t i = 0; i <= d; ++i) {
      const long v = numerator_of(g[r][i]).convert_to<long>();
      (v < 0 ? lo[r] : hi[r]) += v;
    }
  std::vector<Integer> h(d + 2, Integer(0));
  Vector y(d + 1);
  std::vector<long> c(d);
  for (long height = 0; height <= static_cast<long>(d) + 1; ++height) {
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
      if (r == d) {
        for (std::size_t k = 0; k < d; ++k) y[k] = c[k];
        y[d] = height;
        const auto lam = solve_unique(g, y);
        for (const auto& l : *lam)
          if (open_top ? (l <= 0 || l > 1) : (l < 0 || l >= 1)) return;
        ++h[static_cast<std::size_t>(height)];
        return;
      }
      for (c[r] = lo[r]; c[r] <= hi[r]; ++c[r]) rec(r + 1);
    };
    rec(0);
  }
  return h;
}

/// Proper colorings by scanning [t]^n with an adjacency matrix.
inline Integer colorings(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges, long t) {
  std::vector<long> x(n, 0);
  Integer count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      for (auto [a, b] : edges)
        if (x[a] == x[b]) return;
      ++count;
      return;
    }
    for (x[i] = 0; x[i] < t; ++x[i]) rec(i + 1);
  };
  rec(0);
  return count;
}

/// Acyclic orientations by depth-first cycle search over all 2^m choices.
inline std::size_t acyclic_orientations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << edges.size()); ++mask) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t k = 0; k < edges.size(); ++k) {
      auto [a, b] = edges[k];
      if (mask >> k & 1u) std::swap(a, b);
      adj[a].push_back(b);
    }
    std::vector<int> state(n, 0);  // 0 new, 1 on stack, 2 done
    bool cyclic = false;
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
      state[v] = 1;
      for (auto w : adj[v]) {
        if (state[w] == 1) cyclic = true;
        if (state[w] == 0) dfs(w);
      }
      state[v] = 2;
    };
    for (std::size_t v = 0; v < n && !cyclic; ++v)
      if (state[v] == 0) dfs(v);
    if (!cyclic) ++count;
  }
  return count;
}

/// Regions of n affine hyperplanes in general position in R^d.
inline Integer general_position_regions(long n, long d) {
  Integer s = 0;
  for (long k = 0; k <= d; ++k) s += binomial(n, k);
  return s;
}

}  // namespace oracle
