#pragma once

// Finite posets, Moebius functions and inversion, linear extensions, and the
// permutation statistics Des / maj / Asc / amaj.
//
// Elements are indexed 0..n-1 in the C++ API. Text formats and permutations in
// one-line notation use the 1-based labels 1..n.

#include "reciprocity/number.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reciprocity {

/// Raised when a relation fails to be a partial order. `axiom` names the
/// violated property.
class PosetError : public std::invalid_argument {
 public:
  PosetError(std::string axiom, const std::string& detail)
      : std::invalid_argument(axiom + " violated: " + detail), axiom_(std::move(axiom)) {}
  const std::string& axiom() const { return axiom_; }

 private:
  std::string axiom_;
};

class Poset {
 public:
  Poset() = default;

  /// Builds the reflexive-transitive closure of the given strict relations
  /// (pairs (j, k) meaning a_j < a_k, 0-based).
  static Poset from_relations(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& less) {
    Poset p(n);
    for (auto [j, k] : less) {
      if (j >= n || k >= n)
        throw std::out_of_range("relation " + std::to_string(j + 1) + " < " + std::to_string(k + 1) +
                                " refers to an element outside 1.." + std::to_string(n));
      if (j == k) throw PosetError("irreflexivity", "element " + std::to_string(j + 1) + " is declared below itself");
      p.set(j, k);
    }
    p.close();
    return p;
  }

  /// Builds a poset from an order predicate leq(x, y) that is already a partial
  /// order (validated).
  static Poset from_order(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& leq) {
    Poset p(n);
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (x != y && leq(x, y)) p.set(x, y);
    p.close();
    return p;
  }

  static Poset chain(std::size_t d) {
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (std::size_t i = 0; i + 1 < d; ++i) rel.emplace_back(i, i + 1);
    return from_relations(d, rel);
  }

  static Poset antichain(std::size_t d) { return from_relations(d, {}); }

  /// The three-element poset with two minimal elements below one maximum,
  /// naturally labeled so the maximum is element 3.
  static Poset lambda() { return from_relations(3, {{0, 2}, {1, 2}}); }

  /// Subsets of {1..r} under inclusion, labeled by (size, bitmask) order so
  /// the labeling is natural.
  static Poset boolean_lattice(unsigned r) {
    std::vector<unsigned> masks(1u << r);
    std::iota(masks.begin(), masks.end(), 0u);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });
    return from_order(masks.size(), [&](std::size_t x, std::size_t y) { return (masks[x] & ~masks[y]) == 0; });
  }

  std::size_t size() const { return n_; }
  bool leq(std::size_t x, std::size_t y) const { return rel_[x * n_ + y]; }
  bool less(std::size_t x, std::size_t y) const { return x != y && leq(x, y); }

  /// True when a_j <= a_k implies j <= k.
  bool naturally_labeled() const { return natural_; }

  /// Cover relations x < y with nothing strictly between.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y) {
        if (!less(x, y)) continue;
        bool cover = true;
        for (std::size_t z = 0; z < n_ && cover; ++z)
          if (less(x, z) && less(z, y)) cover = false;
        if (cover) out.emplace_back(x, y);
      }
    return out;
  }

  /// A natural relabeling: topological sort, ties broken by original label.
  /// Returns the relabeled poset and `original[new_index] = old_index`.
  std::pair<Poset, std::vector<std::size_t>> natural_relabeling() const {
    std::vector<std::size_t> indeg(n_, 0);
    for (std::size_t x = 0; x < n_; ++x)
      for (std::size_t y = 0; y < n_; ++y)
        if (less(x, y)) ++indeg[y];
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t x = 0; x < n_; ++x)
      if (indeg[x] == 0) ready.push(x);
    std::vector<std::size_t> original;
    while (!ready.empty()) {
      const std::size_t x = ready.top();
      ready.pop();
      original.push_back(x);
      for (std::size_t y = 0; y < n_; ++y)
        if (less(x, y) && --indeg[y] == 0) ready.push(y);
    }
    std::vector<std::size_t> position(n_);
    for (std::size_t i = 0; i < n_; ++i) position[original[i]] = i;
    Poset relabeled = from_order(n_, [&](std::size_t a, std::size_t b) { return leq(original[a], original[b]); });
    return {std::move(relabeled), std::move(original)};
  }

  friend bool operator==(const Poset& a, const Poset& b) { return a.n_ == b.n_ && a.rel_ == b.rel_; }

 private:
  explicit Poset(std::size_t n) : n_(n), rel_(n * n, false) {
    for (std::size_t i = 0; i < n; ++i) rel_[i * n + i] = true;
  }

  void set(std::size_t x, std::size_t y) { rel_[x * n_ + y] = true; }

  void close() {
    for (std::size_t k = 0; k < n_; ++k)
      for (std::size_t i = 0; i < n_; ++i)
        if (rel_[i * n_ + k])
          for (std::size_t j = 0; j < n_; ++j)
            if (rel_[k * n_ + j]) rel_[i * n_ + j] = true;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (rel_[i * n_ + j] && rel_[j * n_ + i])
          throw PosetError("antisymmetry", "elements " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                               " lie on a cycle of relations");
    natural_ = true;
    for (std::size_t i = 0; i < n_ && natural_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (rel_[i * n_ + j]) {
          natural_ = false;
          break;
        }
  }

  std::size_t n_ = 0;
  std::vector<bool> rel_;
  bool natural_ = true;
};

/// mu(x, y) for all pairs; zero for incomparable pairs.
class MobiusTable {
 public:
  explicit MobiusTable(std::size_t n) : n_(n), mu_(n * n, Integer(0)) {}
  const Integer& operator()(std::size_t x, std::size_t y) const { return mu_[x * n_ + y]; }
  Integer& at(std::size_t x, std::size_t y) { return mu_[x * n_ + y]; }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Integer> mu_;
};

/// Moebius function from its defining recursion: mu(x,x) = 1 and
/// mu(x,y) = -sum_{x <= z < y} mu(x,z). Memoized per x, filling each row in an
/// order where every z < y is done before y.
inline MobiusTable mobius(const Poset& p) {
  const std::size_t n = p.size();
  MobiusTable table(n);
  // Elements sorted by number of elements below them form a linear extension.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> below(n, 0);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t z = 0; z < n; ++z)
      if (p.less(z, y)) ++below[y];
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return below[a] < below[b]; });

  for (std::size_t x = 0; x < n; ++x) {
    table.at(x, x) = 1;
    for (std::size_t y : order) {
      if (!p.less(x, y)) continue;
      Integer s = 0;
      for (std::size_t z = 0; z < n; ++z)
        if (p.leq(x, z) && p.less(z, y)) s += table(x, z);
      table.at(x, y) = -s;
    }
  }
  return table;
}

/// Defines g(x) = sum_{y >= x} mu(x,y) f(y), re-sums f'(x) = sum_{y >= x} g(y)
/// and reports whether f' == f everywhere.
inline bool mobius_inversion_check(const Poset& p, const std::vector<Rational>& f) {
  if (f.size() != p.size()) throw std::invalid_argument("function must have one value per element");
  const MobiusTable mu = mobius(p);
  const std::size_t n = p.size();
  std::vector<Rational> g(n, Rational(0));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) g[x] += Rational(mu(x, y)) * f[y];
  for (std::size_t x = 0; x < n; ++x) {
    Rational back = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (p.leq(x, y)) back += g[y];
    if (back != f[x]) return false;
  }
  return true;
}

/// A permutation of [d] in one-line notation, values 1..d.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<unsigned> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size() + 1, false);
    for (auto v : w_) {
      if (v < 1 || v > w_.size() || seen[v])
        throw std::invalid_argument("not a permutation of 1.." + std::to_string(w_.size()));
      seen[v] = true;
    }
  }
  static Permutation identity(std::size_t d) {
    std::vector<unsigned> w(d);
    std::iota(w.begin(), w.end(), 1u);
    return Permutation(std::move(w));
  }

  std::size_t size() const { return w_.size(); }
  /// sigma(j) for 1-based j.
  unsigned operator()(std::size_t j) const { return w_[j - 1]; }
  const std::vector<unsigned>& one_line() const { return w_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.w_ <=> b.w_; }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (i && w_.size() >= 10) s += ' ';
      s += std::to_string(w_[i]);
    }
    return s + "]";
  }

 private:
  std::vector<unsigned> w_;
};

/// All sigma with a_j <= a_k  =>  sigma^{-1}(j) < sigma^{-1}(k), in
/// lexicographic order. Requires a naturally labeled poset.
inline std::vector<Permutation> linear_extensions(const Poset& p) {
  if (!p.naturally_labeled())
    throw std::invalid_argument("poset is not naturally labeled; relabel it with natural_relabeling() first");
  const std::size_t n = p.size();
  std::vector<std::size_t> missing(n, 0);  // number of unplaced elements strictly below
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t x = 0; x < n; ++x)
      if (p.less(x, y)) ++missing[y];
  std::vector<bool> placed(n, false);
  std::vector<unsigned> word;
  std::vector<Permutation> out;
  std::function<void()> extend = [&] {
    if (word.size() == n) {
      out.emplace_back(word);
      return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (placed[x] || missing[x] != 0) continue;
      placed[x] = true;
      word.push_back(static_cast<unsigned>(x + 1));
      for (std::size_t y = 0; y < n; ++y)
        if (p.less(x, y)) --missing[y];
      extend();
      for (std::size_t y = 0; y < n; ++y)
        if (p.less(x, y)) ++missing[y];
      word.pop_back();
      placed[x] = false;
    }
  };
  extend();
  return out;
}

struct DescentStats {
  std::vector<unsigned> des;
  unsigned long maj = 0;
  std::vector<unsigned> asc;
  unsigned long amaj = 0;
};

inline DescentStats descent_stats(const Permutation& s) {
  DescentStats st;
  for (std::size_t j = 1; j < s.size(); ++j) {
    if (s(j) > s(j + 1)) {
      st.des.push_back(static_cast<unsigned>(j));
      st.maj += j;
    } else {
      st.asc.push_back(static_cast<unsigned>(j));
      st.amaj += j;
    }
  }
  return st;
}

}  // namespace reciprocity
