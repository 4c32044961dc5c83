#ifndef CRMAPS_CYCLOTOMIC_HPP
#define CRMAPS_CYCLOTOMIC_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "crmaps/common.hpp"
#include "crmaps/exponent.hpp"

namespace crmaps {

namespace detail {

/// Exact division of integer polynomials (coefficients ascending, divisor
/// monic). Throws internal_error if the division leaves a remainder.
inline std::vector<Integer> poly_div_exact(std::vector<Integer> num,
                                           const std::vector<Integer>& den) {
  if (den.empty() || den.back() != 1)
    throw internal_error("poly_div_exact: divisor must be monic");
  if (num.size() < den.size())
    throw internal_error("poly_div_exact: degree(num) < degree(den)");
  std::vector<Integer> quot(num.size() - den.size() + 1);
  for (std::size_t i = quot.size(); i-- > 0;) {
    Integer q = num[i + den.size() - 1];
    quot[i] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= q * den[j];
  }
  for (const Integer& c : num)
    if (c != 0) throw internal_error("poly_div_exact: nonzero remainder");
  return quot;
}

}  // namespace detail

/// The p-th cyclotomic polynomial, coefficients ascending, computed by
/// dividing t^p - 1 by the cyclotomic polynomials of the proper divisors
/// of p. Monic with integer coefficients.
inline std::vector<Integer> cyclotomic_poly(int p) {
  if (p < 1) throw std::invalid_argument("cyclotomic_poly: p must be >= 1");
  std::vector<Integer> num(p + 1);
  num[0] = -1;
  num[p] = 1;
  for (int d = 1; d < p; ++d)
    if (p % d == 0) num = detail::poly_div_exact(std::move(num),
                                                 cyclotomic_poly(d));
  return num;
}

/// Element of the ring of integers extended by a primitive p-th root of
/// unity, as a coefficient vector of length deg(Phi_p) reduced mod the p-th
/// cyclotomic polynomial. All operations preserve the reduction; an element
/// equal to a rational integer has every coordinate zero except the
/// constant one.
struct CycElem {
  std::vector<Integer> c;

  bool is_zero() const {
    for (const Integer& v : c)
      if (v != 0) return false;
    return true;
  }

  bool operator==(const CycElem& o) const { return c == o.c; }
};

/// Arithmetic context for Z[w], w a primitive p-th root of unity. Holds
/// Phi_p and a table of the powers t^e mod Phi_p for e in [0, p); the
/// table makes multiplication by a root-of-unity power a small linear
/// combination (t^p reduces to 1 because Phi_p divides t^p - 1).
class CyclotomicRing {
 public:
  explicit CyclotomicRing(int p) : p_(p), modulus_(cyclotomic_poly(p)) {
    degree_ = static_cast<int>(modulus_.size()) - 1;
    omega_pow_.resize(p_);
    std::vector<Integer> cur(degree_);
    cur[0] = 1;
    omega_pow_[0] = cur;
    for (int e = 1; e < p_; ++e) {
      cur = times_t(cur);
      omega_pow_[e] = cur;
    }
  }

  int p() const { return p_; }
  int degree() const { return degree_; }

  CycElem zero() const { return CycElem{std::vector<Integer>(degree_)}; }

  CycElem from_integer(const Integer& n) const {
    CycElem e = zero();
    e.c[0] = n;
    return e;
  }

  CycElem one() const { return from_integer(1); }

  void add_in_place(CycElem& a, const CycElem& b) const {
    for (int i = 0; i < degree_; ++i) a.c[i] += b.c[i];
  }

  void sub_in_place(CycElem& a, const CycElem& b) const {
    for (int i = 0; i < degree_; ++i) a.c[i] -= b.c[i];
  }

  /// a * w^e, with e taken mod p.
  CycElem mul_omega(const CycElem& a, int e) const {
    e %= p_;
    if (e < 0) e += p_;
    CycElem r = zero();
    for (int i = 0; i < degree_; ++i) {
      if (a.c[i] == 0) continue;
      const std::vector<Integer>& t = omega_pow_[(i + e) % p_];
      for (int j = 0; j < degree_; ++j)
        if (t[j] != 0) r.c[j] += a.c[i] * t[j];
    }
    return r;
  }

  /// The rational integer this element equals, if it equals one.
  std::optional<Integer> as_integer(const CycElem& a) const {
    for (int i = 1; i < degree_; ++i)
      if (a.c[i] != 0) return std::nullopt;
    return a.c[0];
  }

 private:
  // multiply by t and reduce mod the (monic) modulus
  std::vector<Integer> times_t(const std::vector<Integer>& v) const {
    std::vector<Integer> r(degree_);
    const Integer& lead = v[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) r[i] = v[i - 1];
    if (lead != 0)
      for (int i = 0; i < degree_; ++i) r[i] -= lead * modulus_[i];
    return r;
  }

  int p_;
  std::vector<Integer> modulus_;
  int degree_;
  std::vector<std::vector<Integer>> omega_pow_;
};

}  // namespace crmaps

#endif  // CRMAPS_CYCLOTOMIC_HPP
