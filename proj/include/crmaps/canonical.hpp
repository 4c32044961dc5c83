#ifndef CRMAPS_CANONICAL_HPP
#define CRMAPS_CANONICAL_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "crmaps/cyclotomic.hpp"
#include "crmaps/group.hpp"
#include "crmaps/poly.hpp"

namespace crmaps {

/// Expands 1 - prod_{s=0}^{p-1} (1 - sum_j w^(s*w_j) x_j) exactly in Z[w]
/// and returns it as an integer-coefficient Poly. Every coefficient of the
/// full group product must reduce to a rational integer; anything else
/// signals an arithmetic bug and aborts with internal_error.
inline Poly cyclotomic_group_product(int p, std::span<const int> weights,
                                     int arity) {
  if (static_cast<int>(weights.size()) != arity)
    throw std::invalid_argument(
        "cyclotomic_group_product: weight count != arity");
  CyclotomicRing ring(p);
  using CMap = std::map<Exponent, CycElem, GrlexGreater>;

  auto accumulate = [&](CMap& m, const Exponent& e, const CycElem& v) {
    if (v.is_zero()) return;
    auto [it, inserted] = m.emplace(e, v);
    if (!inserted) {
      ring.add_in_place(it->second, v);
      if (it->second.is_zero()) m.erase(it);
    }
  };

  const Exponent zero(arity);
  CMap prod;
  prod.emplace(zero, ring.one());
  for (int s = 0; s < p; ++s) {
    CMap next;
    for (const auto& [e, c] : prod) {
      accumulate(next, e, c);
      for (int j = 0; j < arity; ++j) {
        CycElem shifted = ring.mul_omega(c, s * weights[j]);
        for (Integer& v : shifted.c) v = -v;
        accumulate(next, e + Exponent::unit(arity, j), shifted);
      }
    }
    prod = std::move(next);
  }

  Poly f(arity);
  for (const auto& [e, c] : prod) {
    auto n = ring.as_integer(c);
    if (!n)
      throw internal_error(
          "cyclotomic_group_product: non-integer coefficient at monomial " +
          to_string(e));
    if (e == zero)
      f.add_term(zero, Rational(1 - *n));
    else
      f.add_term(e, Rational(-*n));
  }
  // the product of the (1 - ...) factors has constant term exactly 1
  if (f.contains(zero))
    throw internal_error("cyclotomic_group_product: constant term survived");
  return f;
}

/// The group-product construction of the canonical invariant polynomial,
/// the independent oracle against the closed forms.
inline Poly group_product_polynomial(const GroupSpec& g) {
  return cyclotomic_group_product(g.p(), g.weights(), 3);
}

/// The bivariate invariant polynomial of <diag(w, w^2)> <= U(2):
///   x^p + sum_{j=1}^{(p-1)/2} c_j x^(p-2j) y^j + y^p,
/// built by the same cyclotomic product with weight vector (1,2). The c_j
/// are whatever the expansion produces; they are never hardcoded.
inline Poly canonical_bivariate(int p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("canonical_bivariate: p must be odd >= 3");
  static constexpr int kWeights[2] = {1, 2};
  return cyclotomic_group_product(p, kWeights, 2);
}

namespace detail {

/// sum c_ab * u^a * v^b over the terms of the bivariate f2.
inline Poly compose_bivariate(const Poly& f2, const Poly& u, const Poly& v) {
  u.require_same_arity(v, "compose_bivariate");
  std::uint32_t max_a = 0, max_b = 0;
  for (const auto& [e, c] : f2.terms()) {
    max_a = std::max(max_a, e[0]);
    max_b = std::max(max_b, e[1]);
  }
  std::vector<Poly> upow{Poly::constant(u.arity(), 1)};
  std::vector<Poly> vpow{Poly::constant(u.arity(), 1)};
  for (std::uint32_t a = 1; a <= max_a; ++a) upow.push_back(upow.back() * u);
  for (std::uint32_t b = 1; b <= max_b; ++b) vpow.push_back(vpow.back() * v);
  Poly r(u.arity());
  for (const auto& [e, c] : f2.terms()) r += c * (upow[e[0]] * vpow[e[1]]);
  return r;
}

inline Poly seven_literal() {
  // the canonical invariant polynomial of <diag(w, w^2, w^4)>, w^7 = 1
  struct T {
    std::uint32_t a, b, c;
    int coeff;
  };
  static constexpr T kTerms[] = {
      {7, 0, 0, 1},  {5, 1, 0, 7},  {3, 2, 0, 14}, {1, 3, 0, 7},
      {3, 0, 1, 7},  {1, 1, 1, 14}, {0, 7, 0, 1},  {2, 4, 1, 7},
      {0, 5, 1, 7},  {4, 1, 2, 7},  {2, 2, 2, 7},  {0, 3, 2, 14},
      {2, 0, 3, 14}, {0, 1, 3, 7},  {1, 2, 4, 7},  {1, 0, 5, 7},
      {0, 0, 7, 1},
  };
  Poly f(3);
  for (const T& t : kTerms) f.add_term(Exponent{t.a, t.b, t.c}, t.coeff);
  return f;
}

}  // namespace detail

/// Closed-form construction of the canonical invariant polynomial f. This
/// is the normative source of f's coefficients; the cyclotomic product is
/// the cross-check.
///   g1      f_{p,2}(x1 + x2, x3)
///   g2      f_{p,2}(x1, x2 + x3)
///   scalar  (x1 + x2 + x3)^p
///   seven   the 17-term weighted-homogeneous polynomial
inline Poly canonical_polynomial(const GroupSpec& g) {
  const Poly x1 = Poly::variable(3, 0);
  const Poly x2 = Poly::variable(3, 1);
  const Poly x3 = Poly::variable(3, 2);
  switch (g.kind()) {
    case GroupKind::G1:
      return detail::compose_bivariate(canonical_bivariate(g.p()), x1 + x2,
                                       x3);
    case GroupKind::G2:
      return detail::compose_bivariate(canonical_bivariate(g.p()), x1,
                                       x2 + x3);
    case GroupKind::Scalar:
      return (x1 + x2 + x3).pow(static_cast<std::uint32_t>(g.p()));
    case GroupKind::Seven:
      return detail::seven_literal();
  }
  throw std::invalid_argument("canonical_polynomial: unknown group kind");
}

/// Cross-check of the two constructions of f, plus coefficient positivity
/// and the closed-form rank.
struct CanonicalReport {
  long long expected_rank = 0;
  long long closed_rank = 0;
  long long product_rank = 0;
  bool equal = false;
  bool positive = false;
  bool rank_ok = false;
  std::vector<Exponent> mismatches;  // monomials whose coefficients differ

  bool ok() const { return equal && positive && rank_ok; }
};

inline CanonicalReport verify_canonical(const GroupSpec& g) {
  CanonicalReport r;
  const Poly closed = canonical_polynomial(g);
  const Poly product = group_product_polynomial(g);
  r.expected_rank = g.canonical_rank();
  r.closed_rank = closed.rank();
  r.product_rank = product.rank();
  r.equal = (closed == product);
  if (!r.equal) {
    const Poly diff = closed - product;
    for (const auto& [e, c] : diff.terms()) r.mismatches.push_back(e);
  }
  r.positive = true;
  for (const auto& [e, c] : product.terms())
    if (c <= 0) r.positive = false;
  r.rank_ok = (r.closed_rank == r.expected_rank) &&
              (r.product_rank == r.expected_rank);
  return r;
}

}  // namespace crmaps

#endif  // CRMAPS_CANONICAL_HPP
