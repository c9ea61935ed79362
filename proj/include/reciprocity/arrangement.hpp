#pragma once

// Rational affine hyperplane arrangements: flats, the intersection poset,
// characteristic polynomial, and region counts by two independent routes.

#include "reciprocity/algebra.hpp"
#include "reciprocity/linalg.hpp"
#include "reciprocity/poset.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace reciprocity {

/// {x : normal . x = offset}, scaled so the first nonzero normal entry is 1.
class Hyperplane {
 public:
  Hyperplane(Vector normal, Rational offset) : normal_(std::move(normal)), offset_(std::move(offset)) {
    auto lead = std::find_if(normal_.begin(), normal_.end(), [](const Rational& c) { return c != 0; });
    if (lead == normal_.end()) throw std::invalid_argument("hyperplane normal must be nonzero");
    const Rational s = 1 / *lead;
    for (auto& c : normal_) c *= s;
    offset_ *= s;
  }

  const Vector& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }
  std::size_t dimension() const { return normal_.size(); }

  /// Sign of normal . x - offset.
  int side(const Vector& x) const { return sign(dot(normal_, x) - offset_); }

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;

 private:
  Vector normal_;
  Rational offset_;
};

class Arrangement {
 public:
  explicit Arrangement(std::size_t dim, std::vector<Hyperplane> hs = {}) : dim_(dim) {
    for (auto& h : hs) add(std::move(h));
  }

  void add(Hyperplane h) {
    if (h.dimension() != dim_)
      throw std::invalid_argument("hyperplane lives in R^" + std::to_string(h.dimension()) + ", arrangement in R^" +
                                  std::to_string(dim_));
    if (std::find(hs_.begin(), hs_.end(), h) == hs_.end()) hs_.push_back(std::move(h));
  }

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return hs_.size(); }
  bool empty() const { return hs_.empty(); }
  const std::vector<Hyperplane>& hyperplanes() const { return hs_; }
  const Hyperplane& operator[](std::size_t i) const { return hs_[i]; }

  Arrangement without(std::size_t i) const {
    Arrangement a(dim_);
    for (std::size_t j = 0; j < hs_.size(); ++j)
      if (j != i) a.hs_.push_back(hs_[j]);
    return a;
  }

  static Arrangement boolean(std::size_t d) {
    Arrangement a(d);
    for (std::size_t j = 0; j < d; ++j) {
      Vector n(d, Rational(0));
      n[j] = 1;
      a.add(Hyperplane(n, 0));
    }
    return a;
  }

  static Arrangement braid(std::size_t d) {
    Arrangement a(d);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = j + 1; k < d; ++k) {
        Vector n(d, Rational(0));
        n[j] = 1;
        n[k] = -1;
        a.add(Hyperplane(n, 0));
      }
    return a;
  }

 private:
  std::size_t dim_;
  std::vector<Hyperplane> hs_;
};

/// A nonempty intersection of hyperplanes, stored as the reduced row-echelon
/// form of its augmented system (A | b). R^d is the empty system.
class Flat {
 public:
  Flat(std::size_t ambient, Matrix augmented_rref) : ambient_(ambient), sys_(std::move(augmented_rref)) {}

  static Flat whole_space(std::size_t d) { return Flat(d, {}); }

  /// Intersection of the given hyperplanes, or nullopt when empty.
  static std::optional<Flat> intersect(std::size_t d, const std::vector<const Hyperplane*>& hs) {
    Matrix aug;
    aug.reserve(hs.size());
    for (const auto* h : hs) {
      Vector row = h->normal();
      row.push_back(h->offset());
      aug.push_back(std::move(row));
    }
    RowEchelon e = rref(std::move(aug), d + 1);
    if (!e.pivots.empty() && e.pivots.back() == d) return std::nullopt;
    return Flat(d, std::move(e.rows));
  }

  std::size_t ambient_dimension() const { return ambient_; }
  std::size_t dim() const { return ambient_ - sys_.size(); }
  const Matrix& system() const { return sys_; }

  bool contains(const Vector& x) const {
    for (const auto& row : sys_) {
      Rational s = -row.back();
      for (std::size_t i = 0; i < ambient_; ++i) s += row[i] * x[i];
      if (s != 0) return false;
    }
    return true;
  }

  /// True when this flat is a subset of `h`.
  bool inside(const Hyperplane& h) const {
    Matrix aug = sys_;
    Vector row = h.normal();
    row.push_back(h.offset());
    aug.push_back(std::move(row));
    return rank(aug, ambient_ + 1) == sys_.size();
  }

  /// True when this flat is a subset of `other`.
  bool subset_of(const Flat& other) const {
    Matrix aug = sys_;
    aug.insert(aug.end(), other.sys_.begin(), other.sys_.end());
    return rank(aug, ambient_ + 1) == sys_.size();
  }

  /// Affine parameterization x = base + sum_i y_i directions[i].
  AffineSolution parameterization() const {
    Matrix a;
    Vector b;
    for (const auto& row : sys_) {
      a.emplace_back(row.begin(), row.end() - 1);
      b.push_back(row.back());
    }
    auto s = solve_affine(a, b, ambient_);
    if (!s) {  // empty system: R^d
      s = AffineSolution{Vector(ambient_, Rational(0)), nullspace({}, ambient_)};
    }
    return *s;
  }

  friend bool operator==(const Flat& a, const Flat& b) { return a.ambient_ == b.ambient_ && a.sys_ == b.sys_; }
  friend bool operator<(const Flat& a, const Flat& b) {
    if (a.sys_.size() != b.sys_.size()) return a.sys_.size() < b.sys_.size();
    return a.sys_ < b.sys_;
  }

 private:
  std::size_t ambient_;
  Matrix sys_;
};

/// Flats ordered by reverse inclusion, with mu(F) := mu(R^d, F).
struct FlatPoset {
  std::vector<Flat> flats;  // flats[0] is R^d; sorted by decreasing dimension
  Poset order;              // F <= G iff F contains G
  std::vector<Integer> mu;
};

inline constexpr std::size_t kMaxSubsetHyperplanes = 24;

/// Every nonempty intersection of a subset of hyperplanes, deduplicated via
/// canonical form.
inline FlatPoset flats(const Arrangement& a) {
  const std::size_t n = a.size();
  if (n > kMaxSubsetHyperplanes)
    throw std::invalid_argument("flat enumeration by subsets is limited to " +
                                std::to_string(kMaxSubsetHyperplanes) + " hyperplanes");
  std::map<Flat, int> seen;
  std::vector<const Hyperplane*> chosen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    chosen.clear();
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) chosen.push_back(&a[i]);
    if (auto f = Flat::intersect(a.dimension(), chosen)) seen.emplace(std::move(*f), 0);
  }
  FlatPoset fp;
  for (auto& [f, _] : seen) fp.flats.push_back(f);  // map order: fewest equations first
  const auto& fl = fp.flats;
  fp.order = Poset::from_order(fl.size(), [&](std::size_t x, std::size_t y) { return fl[y].subset_of(fl[x]); });
  const MobiusTable mu = mobius(fp.order);
  for (std::size_t i = 0; i < fl.size(); ++i) fp.mu.push_back(mu(0, i));
  return fp;
}

/// sum over flats of mu(F) t^{dim F}.
inline Polynomial characteristic_polynomial(const Arrangement& a) {
  const FlatPoset fp = flats(a);
  Polynomial h;
  for (std::size_t i = 0; i < fp.flats.size(); ++i)
    h += Polynomial::monomial(fp.flats[i].dim(), Rational(fp.mu[i]));
  return h;
}

/// (-1)^d h(-1).
inline Integer regions_zaslavsky(const Arrangement& a) {
  const Rational v = characteristic_polynomial(a)(Rational(-1)) * sign_power(static_cast<long>(a.dimension()));
  if (!is_integral(v) || v <= 0)
    throw std::logic_error("(-1)^d h(-1) = " + to_string(v) + " is not a positive integer");
  return numerator_of(v);
}

/// The arrangement induced on a flat F, in coordinates y of F's affine
/// parameterization. Hyperplanes containing F or missing it are dropped.
inline Arrangement induced_arrangement(const Arrangement& a, const Flat& f) {
  const AffineSolution param = f.parameterization();
  const std::size_t k = param.directions.size();
  Arrangement out(k);
  for (const auto& h : a.hyperplanes()) {
    Vector normal(k);
    for (std::size_t i = 0; i < k; ++i) normal[i] = dot(h.normal(), param.directions[i]);
    const Rational offset = h.offset() - dot(h.normal(), param.particular);
    if (is_zero(normal)) continue;  // contains F (offset 0) or is parallel to it
    out.add(Hyperplane(std::move(normal), offset));
  }
  return out;
}

/// r(H) = r(H minus H0) + r(H restricted to H0), r(empty) = 1. No Moebius
/// function involved.
inline Integer regions_deletion_restriction(const Arrangement& a) {
  if (a.empty()) return 1;
  const std::size_t last = a.size() - 1;
  const Hyperplane& h = a[last];
  const auto on_h = Flat::intersect(a.dimension(), {&h});
  const Arrangement deleted = a.without(last);
  return regions_deletion_restriction(deleted) + regions_deletion_restriction(induced_arrangement(deleted, *on_h));
}

/// n hyperplanes in R^d in general position, with small random integer
/// coefficients in [-range, range]. Candidates where some k <= d normals are
/// dependent or some d+1 hyperplanes meet are rejected and redrawn.
template <typename Rng>
Arrangement generic_arrangement(std::size_t n, std::size_t d, Rng& rng, int range = 5) {
  auto draw = [&] { return static_cast<int>(rng() % static_cast<unsigned>(2 * range + 1)) - range; };
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Hyperplane> hs;
    while (hs.size() < n) {
      Vector normal(d);
      for (auto& c : normal) c = draw();
      if (is_zero(normal)) continue;
      hs.emplace_back(std::move(normal), Rational(draw()));
    }
    bool ok = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && ok; ++mask) {
      const auto k = static_cast<std::size_t>(__builtin_popcountll(mask));
      if (k > d + 1) continue;
      Matrix normals;
      std::vector<const Hyperplane*> chosen;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1u) {
          normals.push_back(hs[i].normal());
          chosen.push_back(&hs[i]);
        }
      if (k <= d)
        ok = rank(normals, d) == k;
      else
        ok = !Flat::intersect(d, chosen).has_value();
    }
    if (ok) return Arrangement(d, std::move(hs));
  }
  throw std::runtime_error("could not draw a generic arrangement");
}

}  // namespace reciprocity
