#ifndef CRMAPS_POLY_HPP
#define CRMAPS_POLY_HPP

#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crmaps/common.hpp"
#include "crmaps/exponent.hpp"

namespace crmaps {

inline Rational rational_pow(const Rational& base, std::uint32_t e) {
  Rational r = 1;
  Rational b = base;
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}

/// Sparse multivariate polynomial over arbitrary-precision rationals.
///
/// Invariants: no stored coefficient is zero, every exponent has the
/// declared arity, and terms iterate in strictly decreasing grlex order.
/// Values are immutable in spirit: every operation returns a new Poly and
/// never mutates shared state, so Polys may be freely shared across threads.
class Poly {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexGreater>;

  explicit Poly(int arity = 3) : arity_(arity) {
    if (arity < 1 || arity > Exponent::kMaxArity)
      throw std::invalid_argument("Poly: arity must be 1..3");
  }

  static Poly constant(int arity, const Rational& c) {
    Poly p(arity);
    p.add_term(Exponent(arity), c);
    return p;
  }

  static Poly monomial(const Exponent& e, const Rational& c) {
    Poly p(e.arity());
    p.add_term(e, c);
    return p;
  }

  static Poly variable(int arity, int var) {
    return monomial(Exponent::unit(arity, var), 1);
  }

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  /// Number of linearly independent monomials. Distinct monomials are
  /// independent, so this is the stored term count; a nonzero constant has
  /// rank 1 and the zero polynomial has rank 0.
  long long rank() const { return static_cast<long long>(terms_.size()); }

  bool contains(const Exponent& e) const { return terms_.count(e) != 0; }

  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  std::uint32_t total_degree() const {
    // first term is grlex-max, which has maximal total degree
    return terms_.empty() ? 0 : terms_.begin()->first.degree();
  }

  /// Accumulates c onto the coefficient of e, dropping the term if the sum
  /// is zero. The one mutation primitive; everything else builds on it.
  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    if (e.arity() != arity_)
      throw std::invalid_argument("Poly::add_term: arity mismatch");
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    require_same_arity(o, "Poly::operator+=");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    require_same_arity(o, "Poly::operator-=");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    a.require_same_arity(b, "Poly::operator*");
    Poly r(a.arity_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
  }

  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  Poly operator-() const {
    Poly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }

  friend Poly operator*(const Rational& s, const Poly& p) {
    Poly r(p.arity_);
    if (s == 0) return r;
    for (const auto& [e, c] : p.terms_) r.terms_.emplace(e, s * c);
    return r;
  }

  Poly pow(std::uint32_t n) const {
    Poly r = constant(arity_, 1);
    for (std::uint32_t i = 0; i < n; ++i) r *= *this;
    return r;
  }

  bool operator==(const Poly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }

  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Replaces every occurrence of x_var^e by value^e, fully expanded.
  /// `value` must live in the same ring (same arity); the variable index is
  /// zero-based.
  Poly substitute(int var, const Poly& value) const {
    if (var < 0 || var >= arity_)
      throw std::invalid_argument("Poly::substitute: variable index " +
                                  std::to_string(var) + " out of range");
    value.require_same_arity(*this, "Poly::substitute");
    // bucket terms by the exponent of x_var, then multiply each bucket by
    // the matching power of `value`, computed incrementally
    std::map<std::uint32_t, Poly> buckets;
    for (const auto& [e, c] : terms_) {
      Exponent rest = e;
      std::uint32_t k = rest[var];
      rest[var] = 0;
      auto [it, inserted] = buckets.try_emplace(k, arity_);
      it->second.add_term(rest, c);
    }
    Poly result(arity_);
    Poly power = constant(arity_, 1);
    std::uint32_t at = 0;
    for (const auto& [k, part] : buckets) {
      for (; at < k; ++at) power *= value;
      result += part * power;
    }
    return result;
  }

  /// Exact value at a rational point; the point length must equal the arity.
  Rational eval(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != arity_)
      throw std::invalid_argument("Poly::eval: point length != arity");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (int i = 0; i < arity_; ++i) t *= rational_pow(point[i], e[i]);
      total += t;
    }
    return total;
  }

  double eval_double(std::span<const double> point) const {
    if (static_cast<int>(point.size()) != arity_)
      throw std::invalid_argument("Poly::eval_double: point length != arity");
    double total = 0;
    for (const auto& [e, c] : terms_) {
      double t = static_cast<double>(c);
      for (int i = 0; i < arity_; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k) t *= point[i];
      total += t;
    }
    return total;
  }

  /// Human-readable form in canonical order, e.g. "x1^7 + 7 x1^5 x2 + ...".
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      Rational a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool has_vars = e.degree() > 0;
      if (a != 1 || !has_vars) {
        os << a;
        if (has_vars) os << " ";
      }
      for (int i = 0; i < arity_; ++i) {
        if (e[i] == 0) continue;
        os << "x" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
        if (i + 1 < arity_ && has_trailing_var(e, i)) os << " ";
      }
    }
    return os.str();
  }

  void require_same_arity(const Poly& o, const char* where) const {
    if (arity_ != o.arity_)
      throw std::invalid_argument(std::string(where) + ": arity mismatch (" +
                                  std::to_string(arity_) + " vs " +
                                  std::to_string(o.arity_) + ")");
  }

 private:
  static bool has_trailing_var(const Exponent& e, int i) {
    for (int j = i + 1; j < e.arity(); ++j)
      if (e[j] != 0) return true;
    return false;
  }

  int arity_;
  TermMap terms_;
};

inline long long rank(const Poly& p) { return p.rank(); }

}  // namespace crmaps

#endif  // CRMAPS_POLY_HPP
