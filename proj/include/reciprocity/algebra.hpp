#pragma once

// Univariate exact algebra: polynomials over Q, quasipolynomials, and rational
// generating functions with denominators of the form prod_i (1 - z^{e_i}).

#include "reciprocity/number.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace reciprocity {

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rational> cs) : coeffs_(cs) { normalize(); }
  explicit Polynomial(std::vector<Rational> cs) : coeffs_(std::move(cs)) { normalize(); }

  static Polynomial constant(const Rational& c) { return Polynomial({c}); }
  static Polynomial monomial(std::size_t degree, const Rational& c = 1) {
    std::vector<Rational> cs(degree + 1, Rational(0));
    cs[degree] = c;
    return Polynomial(std::move(cs));
  }
  /// The linear polynomial t - root.
  static Polynomial linear_root(const Rational& root) { return Polynomial({-root, Rational(1)}); }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  bool has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return is_integral(c); });
  }

  Rational operator()(const Rational& t) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Rational& s, const Polynomial& p) { return Polynomial::constant(s) * p; }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  /// Quotient and remainder of division by a nonzero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> rem = coeffs_;
    const long dd = divisor.degree();
    if (degree() < dd) return {Polynomial{}, *this};
    std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd + 1), Rational(0));
    const Rational lead = divisor.leading();
    for (long i = degree(); i >= dd; --i) {
      const Rational f = rem[static_cast<std::size_t>(i)] / lead;
      if (f == 0) continue;
      quot[static_cast<std::size_t>(i - dd)] = f;
      for (long j = 0; j <= dd; ++j)
        rem[static_cast<std::size_t>(i - dd + j)] -= f * divisor.coeffs_[static_cast<std::size_t>(j)];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  /// p(-t).
  Polynomial reflect() const {
    Polynomial r = *this;
    for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
    return r;
  }

  /// p(t + s).
  Polynomial shift(const Rational& s) const {
    Polynomial acc;
    const Polynomial step{s, Rational(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * step + constant(*it);
    return acc;
  }

  /// Human-readable form in the variable `var`, highest degree first.
  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      Rational c = coeffs_[static_cast<std::size_t>(i)];
      if (c == 0) continue;
      const bool neg = c < 0;
      if (neg) c = -c;
      if (first)
        os << (neg ? "-" : "");
      else
        os << (neg ? " - " : " + ");
      first = false;
      const bool unit = (c == 1);
      if (!unit || i == 0) os << reciprocity::to_string(c);
      if (i > 0) {
        if (!unit) os << "*";
        os << var;
        if (i > 1) os << "^" << i;
      }
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through the given nodes.
/// Throws std::invalid_argument on empty input or repeated abscissas.
inline Polynomial interpolate(const std::vector<std::pair<Integer, Rational>>& points) {
  if (points.empty()) throw std::invalid_argument("interpolation needs at least one point");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i].first == points[j].first)
        throw std::invalid_argument("duplicate abscissa " + points[i].first.str() + " in interpolation");
  // Newton divided differences.
  const std::size_t n = points.size();
  std::vector<Rational> dd(n);
  for (std::size_t i = 0; i < n; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / Rational(points[i].first - points[i - level].first);
  Polynomial result = Polynomial::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;)
    result = result * Polynomial::linear_root(Rational(points[k].first)) + Polynomial::constant(dd[k]);
  return result;
}

/// Function of the form t -> constituent[t mod period](t).
class Quasipolynomial {
 public:
  Quasipolynomial() : constituents_{Polynomial{}} {}
  explicit Quasipolynomial(Polynomial p) : constituents_{std::move(p)} {}
  explicit Quasipolynomial(std::vector<Polynomial> constituents) : constituents_(std::move(constituents)) {
    if (constituents_.empty()) throw std::invalid_argument("quasipolynomial needs a positive period");
  }

  std::size_t period() const { return constituents_.size(); }
  const std::vector<Polynomial>& constituents() const { return constituents_; }
  const Polynomial& constituent(const Integer& t) const {
    Integer r = t % static_cast<long>(period());
    if (r < 0) r += static_cast<long>(period());
    return constituents_[r.convert_to<std::size_t>()];
  }
  bool is_polynomial() const {
    return std::all_of(constituents_.begin(), constituents_.end(),
                       [&](const Polynomial& p) { return p == constituents_.front(); });
  }
  long degree() const {
    long d = -1;
    for (const auto& c : constituents_) d = std::max(d, c.degree());
    return d;
  }

  Rational operator()(const Integer& t) const { return constituent(t)(Rational(t)); }

  friend bool operator==(const Quasipolynomial& a, const Quasipolynomial& b) {
    return a.constituents_ == b.constituents_;
  }

  std::string to_string(const std::string& var = "t") const {
    if (period() == 1) return constituents_.front().to_string(var);
    std::ostringstream os;
    for (std::size_t k = 0; k < period(); ++k) {
      if (k) os << "; ";
      os << "[" << var << " = " << k << " mod " << period() << "] " << constituents_[k].to_string(var);
    }
    return os.str();
  }

 private:
  std::vector<Polynomial> constituents_;
};

/// numerator(z) / prod_i (1 - z^{e_i}), kept in canonical form: exponents
/// sorted ascending, and no factor (1 - z^e) of the denominator divides the
/// numerator exactly.
class RationalGF {
 public:
  RationalGF() : RationalGF(Polynomial::constant(1), {}) {}
  RationalGF(Polynomial numerator, std::vector<unsigned> denominator_exponents)
      : num_(std::move(numerator)), den_(std::move(denominator_exponents)) {
    if (!num_.has_integer_coefficients())
      throw std::invalid_argument("generating function numerator must have integer coefficients");
    for (auto e : den_)
      if (e == 0) throw std::invalid_argument("denominator exponents must be positive");
    canonicalize();
  }

  const Polynomial& numerator() const { return num_; }
  const std::vector<unsigned>& denominator_exponents() const { return den_; }

  static Polynomial one_minus_z_pow(unsigned e) {
    Polynomial p = Polynomial::monomial(e, Rational(-1));
    return p + Polynomial::constant(1);
  }

  Polynomial denominator() const {
    Polynomial d = Polynomial::constant(1);
    for (auto e : den_) d *= one_minus_z_pow(e);
    return d;
  }

  /// Multiplies by a polynomial (e.g. a monomial twist (-z)^n).
  RationalGF times(const Polynomial& p) const { return RationalGF(num_ * p, den_); }

  friend RationalGF operator*(const RationalGF& a, const RationalGF& b) {
    std::vector<unsigned> den = a.den_;
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    return RationalGF(a.num_ * b.num_, std::move(den));
  }

  friend RationalGF operator+(const RationalGF& a, const RationalGF& b) {
    std::vector<unsigned> den = a.den_;
    den.insert(den.end(), b.den_.begin(), b.den_.end());
    return RationalGF(a.num_ * b.denominator() + b.num_ * a.denominator(), std::move(den));
  }

  friend RationalGF operator-(const RationalGF& a) { return a.times(Polynomial::constant(-1)); }
  friend RationalGF operator-(const RationalGF& a, const RationalGF& b) { return a + (-b); }

  /// Syntactic equality of canonical forms.
  friend bool operator==(const RationalGF& a, const RationalGF& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  std::string to_string(const std::string& var = "z") const {
    std::ostringstream os;
    os << "(" << num_.to_string(var) << ")";
    if (den_.empty()) return os.str();
    os << " / (";
    for (std::size_t i = 0; i < den_.size(); ++i) {
      if (i) os << "*";
      os << "(1 - " << var;
      if (den_[i] > 1) os << "^" << den_[i];
      os << ")";
    }
    os << ")";
    return os.str();
  }

 private:
  void canonicalize() {
    std::sort(den_.begin(), den_.end());
    if (num_.is_zero()) {
      den_.clear();
      return;
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = den_.size(); i-- > 0;) {
        auto [q, r] = num_.divmod(one_minus_z_pow(den_[i]));
        if (r.is_zero()) {
          num_ = std::move(q);
          den_.erase(den_.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
  }

  Polynomial num_;
  std::vector<unsigned> den_;
};

/// Coefficients of z^0..z^n of the Maclaurin expansion, by power-series long
/// division of the numerator by the expanded denominator.
inline std::vector<Integer> gf_series_prefix(const RationalGF& g, std::size_t n) {
  const Polynomial den = g.denominator();  // constant term is 1
  std::vector<Rational> c(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    Rational acc = g.numerator()[k];
    const std::size_t top = std::min<std::size_t>(k, static_cast<std::size_t>(std::max(0L, den.degree())));
    for (std::size_t i = 1; i <= top; ++i) {
      const Rational di = den[i];
      if (di != 0) acc -= di * c[k - i];
    }
    c[k] = acc;  // divided by den[0] == 1
  }
  std::vector<Integer> out;
  out.reserve(n + 1);
  for (const auto& x : c) {
    if (!is_integral(x)) throw std::logic_error("generating function has a non-integral coefficient");
    out.push_back(numerator_of(x));
  }
  return out;
}

/// g(1/z), rewritten over the same kind of denominator. Requires
/// deg(numerator) <= sum of exponents so the result is again a polynomial over
/// prod (1 - z^e); every generating function in this library qualifies.
inline RationalGF gf_reciprocal(const RationalGF& g) {
  const Polynomial& num = g.numerator();
  if (num.is_zero()) return g;
  long total = 0;
  for (auto e : g.denominator_exponents()) total += e;
  const long shift = total - num.degree();
  if (shift < 0)
    throw std::domain_error("g(1/z) has a pole at z = 0 and no polynomial-numerator form");
  std::vector<Rational> rev(num.coefficients().rbegin(), num.coefficients().rend());
  Polynomial reversed(std::move(rev));
  const Rational sign = (g.denominator_exponents().size() % 2 == 0) ? 1 : -1;
  return RationalGF(Polynomial::monomial(static_cast<std::size_t>(shift), sign) * reversed,
                    g.denominator_exponents());
}

/// Equality as rational functions (cross-multiplication).
inline bool gf_equal(const RationalGF& a, const RationalGF& b) {
  return a.numerator() * b.denominator() == b.numerator() * a.denominator();
}

// ---- JSON serialization: coefficients as lowest-terms "p/q" strings.

inline nlohmann::json to_json(const Polynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
  return arr;
}

inline Polynomial polynomial_from_json(const nlohmann::json& j) {
  std::vector<Rational> cs;
  for (const auto& c : j) cs.push_back(parse_rational(c.get<std::string>()));
  return Polynomial(std::move(cs));
}

inline nlohmann::json to_json(const Quasipolynomial& q) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : q.constituents()) cs.push_back(to_json(c));
  return {{"period", q.period()}, {"constituents", cs}};
}

inline nlohmann::json to_json(const RationalGF& g) {
  return {{"num", to_json(g.numerator())}, {"den", g.denominator_exponents()}};
}

inline RationalGF gf_from_json(const nlohmann::json& j) {
  return RationalGF(polynomial_from_json(j.at("num")), j.at("den").get<std::vector<unsigned>>());
}

}  // namespace reciprocity
