#pragma once

// Weak and strict P-partitions: brute-force counts, generating functions
// over linear extensions, the half-open chain-cell decomposition, and the
// reciprocity between weak and strict generating functions.

#include "reciprocity/algebra.hpp"
#include "reciprocity/check.hpp"
#include "reciprocity/poset.hpp"

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace reciprocity {

/// A naturally labeled poset plus the weak/strict flag. Non-natural input is
/// relabeled; original[new] gives the input index of each element.
class PPartitionSpec {
 public:
  PPartitionSpec(const Poset& p, bool strict) : strict_(strict) {
    if (p.naturally_labeled()) {
      poset_ = p;
      original_.resize(p.size());
      for (std::size_t i = 0; i < p.size(); ++i) original_[i] = i;
    } else {
      auto [q, original] = p.natural_relabeling();
      poset_ = std::move(q);
      original_ = std::move(original);
    }
  }

  const Poset& poset() const { return poset_; }
  bool strict() const { return strict_; }
  const std::vector<std::size_t>& original() const { return original_; }
  bool relabeled() const {
    for (std::size_t i = 0; i < original_.size(); ++i)
      if (original_[i] != i) return true;
    return false;
  }

 private:
  Poset poset_;
  bool strict_;
  std::vector<std::size_t> original_;
};

/// Visits every (strict) P-partition x with sum exactly t. Elements are
/// assigned in label order, so all elements below the current one are set;
/// the running sum prunes the search.
inline void for_each_ppartition(const PPartitionSpec& spec, unsigned long t,
                                const std::function<void(const std::vector<unsigned long>&)>& visit) {
  const Poset& p = spec.poset();
  const std::size_t d = p.size();
  std::vector<unsigned long> x(d, 0);
  std::function<void(std::size_t, unsigned long)> rec = [&](std::size_t k, unsigned long used) {
    if (k == d) {
      if (used == t) visit(x);
      return;
    }
    // Order-reversing: x_k <= x_j (or < for strict) for every j below k.
    unsigned long cap = t - used;
    for (std::size_t j = 0; j < k; ++j)
      if (p.less(j, k)) {
        if (spec.strict()) {
          if (x[j] == 0) return;
          cap = std::min(cap, x[j] - 1);
        } else {
          cap = std::min(cap, x[j]);
        }
      }
    if (k + 1 == d) {
      if (t - used <= cap) {
        x[k] = t - used;
        visit(x);
      }
      return;
    }
    for (x[k] = 0; x[k] <= cap; ++x[k]) rec(k + 1, used + x[k]);
  };
  if (d == 0) {
    if (t == 0) visit(x);
    return;
  }
  rec(0, 0);
}

inline Integer ppartition_count(const PPartitionSpec& spec, unsigned long t) {
  Integer count = 0;
  for_each_ppartition(spec, t, [&](const std::vector<unsigned long>&) { ++count; });
  return count;
}

/// sum over linear extensions of z^{maj} (weak) or z^{amaj} (strict), over
/// (1-z)(1-z^2)...(1-z^d).
inline RationalGF ppartition_gf(const PPartitionSpec& spec) {
  const std::size_t d = spec.poset().size();
  Polynomial num;
  for (const auto& s : linear_extensions(spec.poset())) {
    const DescentStats st = descent_stats(s);
    num += Polynomial::monomial(spec.strict() ? st.amaj : st.maj);
  }
  std::vector<unsigned> den;
  for (unsigned k = 1; k <= d; ++k) den.push_back(k);
  return RationalGF(num, den);
}

/// x_{s(1)} >= x_{s(2)} >= ... >= x_{s(d)} >= 0, strict at positions in
/// `strict_at` (Des s for weak cells, Asc s for strict cells).
struct HalfOpenChainCell {
  Permutation sigma;
  std::vector<bool> strict_at;  // index j-1 for position j in 1..d-1

  static HalfOpenChainCell weak(const Permutation& s) { return make(s, false); }
  static HalfOpenChainCell strict(const Permutation& s) { return make(s, true); }

  bool contains(const std::vector<unsigned long>& x) const {
    for (std::size_t j = 1; j < sigma.size(); ++j) {
      const auto a = x[sigma(j) - 1], b = x[sigma(j + 1) - 1];
      if (strict_at[j - 1] ? a <= b : a < b) return false;
    }
    return true;
  }

  unsigned long shift() const {
    unsigned long s = 0;
    for (std::size_t j = 1; j <= strict_at.size(); ++j)
      if (strict_at[j - 1]) s += j;
    return s;
  }

 private:
  static HalfOpenChainCell make(const Permutation& s, bool strict_kind) {
    HalfOpenChainCell c{s, std::vector<bool>(s.size() > 0 ? s.size() - 1 : 0, false)};
    for (std::size_t j = 1; j < s.size(); ++j) c.strict_at[j - 1] = (s(j) > s(j + 1)) != strict_kind;
    return c;
  }
};

/// z^{sum of strict positions} / prod_{k=1}^d (1-z^k).
inline RationalGF cell_gf(const HalfOpenChainCell& cell) {
  std::vector<unsigned> den;
  for (unsigned k = 1; k <= cell.sigma.size(); ++k) den.push_back(k);
  return RationalGF(Polynomial::monomial(cell.shift()), den);
}

/// Points of the cell with coordinate sum t, by enumeration.
inline Integer cell_count(const HalfOpenChainCell& cell, unsigned long t) {
  const std::size_t d = cell.sigma.size();
  if (d == 0) return t == 0 ? 1 : 0;
  // Walk the chain from the top: y_j = x_{sigma(j)}.
  Integer count = 0;
  std::function<void(std::size_t, unsigned long, unsigned long)> rec = [&](std::size_t j, unsigned long prev,
                                                                          unsigned long left) {
    if (j == d) {
      if (left == 0) ++count;
      return;
    }
    unsigned long cap = left;
    if (j > 0) {
      if (cell.strict_at[j - 1]) {
        if (prev == 0) return;
        cap = std::min(cap, prev - 1);
      } else {
        cap = std::min(cap, prev);
      }
    }
    for (unsigned long y = 0; y <= cap; ++y) rec(j + 1, y, left - y);
  };
  rec(0, 0, t);
  return count;
}

/// Every P-partition of each t <= t_max lies in exactly one cell among the
/// linear extensions, and every cell point is a P-partition.
inline CheckResult cell_decomposition_check(const PPartitionSpec& spec, unsigned long t_max) {
  std::vector<HalfOpenChainCell> cells;
  for (const auto& s : linear_extensions(spec.poset()))
    cells.push_back(spec.strict() ? HalfOpenChainCell::strict(s) : HalfOpenChainCell::weak(s));
  auto show = [](const std::vector<unsigned long>& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
    return s + ")";
  };
  for (unsigned long t = 0; t <= t_max; ++t) {
    std::string witness;
    for_each_ppartition(spec, t, [&](const std::vector<unsigned long>& x) {
      if (!witness.empty()) return;
      std::size_t hits = 0;
      for (const auto& c : cells) hits += c.contains(x) ? 1 : 0;
      if (hits != 1) witness = show(x) + " lies in " + std::to_string(hits) + " cells";
    });
    if (!witness.empty()) return CheckResult::fail(witness);
    Integer cell_total = 0;
    for (const auto& c : cells) cell_total += cell_count(c, t);
    const Integer direct = ppartition_count(spec, t);
    if (cell_total != direct)
      return CheckResult::fail("t = " + std::to_string(t) + ": cells hold " + cell_total.str() + " points, " +
                               direct.str() + " P-partitions");
  }
  return CheckResult::ok();
}

/// P(1/z) == (-z)^d P°(z), by two routes: the rational-function identity on
/// the computed generating functions, and the numerator identity
/// sum z^{amaj} == z^{C(d,2)} sum z^{-maj} from maj + amaj = C(d,2).
inline CheckResult stanley_reciprocity_check(const Poset& p) {
  const PPartitionSpec weak(p, false), strict(p, true);
  const std::size_t d = weak.poset().size();
  const RationalGF w = ppartition_gf(weak);
  const RationalGF s = ppartition_gf(strict);
  const RationalGF twisted = s.times(Polynomial::monomial(d, sign_power(static_cast<long>(d))));
  const RationalGF reflected = gf_reciprocal(w);
  if (!gf_equal(reflected, twisted))
    return CheckResult::fail("P(1/z) = " + reflected.to_string() + " but (-z)^d P°(z) = " + twisted.to_string());

  const auto total = static_cast<unsigned long>(binomial(static_cast<long>(d), 2).convert_to<long>());
  Polynomial complemented, amaj_sum;
  for (const auto& sigma : linear_extensions(weak.poset())) {
    const DescentStats st = descent_stats(sigma);
    if (st.maj + st.amaj != total)
      return CheckResult::fail(sigma.to_string() + ": maj + amaj = " + std::to_string(st.maj + st.amaj));
    complemented += Polynomial::monomial(total - st.maj);
    amaj_sum += Polynomial::monomial(st.amaj);
  }
  if (complemented != amaj_sum)
    return CheckResult::fail("complemented maj numerator " + complemented.to_string("z") + " differs from " +
                             amaj_sum.to_string("z"));
  return CheckResult::ok();
}

/// Series prefix of the generating function equals brute-force counts for
/// t = 0..t_max.
inline CheckResult series_agreement_check(const PPartitionSpec& spec, std::size_t t_max) {
  const auto prefix = gf_series_prefix(ppartition_gf(spec), t_max);
  for (std::size_t t = 0; t <= t_max; ++t) {
    const Integer direct = ppartition_count(spec, t);
    if (prefix[t] != direct)
      return CheckResult::fail("t = " + std::to_string(t) + ": series gives " + prefix[t].str() + ", count " +
                               direct.str());
  }
  return CheckResult::ok();
}

}  // namespace reciprocity
