#ifndef CRMAPS_GROUP_HPP
#define CRMAPS_GROUP_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

#include "crmaps/exponent.hpp"

namespace crmaps {

/// The four admissible cyclic subgroups of U(3), fixed to their diagonal
/// representatives diag(w^w1, w^w2, w^w3) with w a primitive p-th root of
/// unity:
///   G1     weights (1,1,2), p odd >= 3
///   G2     weights (1,2,2), p odd >= 3
///   Scalar weights (1,1,1), p >= 2
///   Seven  weights (1,2,4), p = 7
enum class GroupKind { G1, G2, Scalar, Seven };

inline const char* to_string(GroupKind k) {
  switch (k) {
    case GroupKind::G1: return "g1";
    case GroupKind::G2: return "g2";
    case GroupKind::Scalar: return "scalar";
    case GroupKind::Seven: return "seven";
  }
  return "?";
}

inline std::optional<GroupKind> parse_group_kind(const std::string& s) {
  if (s == "g1") return GroupKind::G1;
  if (s == "g2") return GroupKind::G2;
  if (s == "scalar") return GroupKind::Scalar;
  if (s == "seven") return GroupKind::Seven;
  return std::nullopt;
}

/// Validated admissible group descriptor. Immutable plain data; weight
/// vectors are stored reduced mod p so invariance tests are pure modular
/// arithmetic.
class GroupSpec {
 public:
  static GroupSpec make(GroupKind kind, int p) {
    switch (kind) {
      case GroupKind::G1:
      case GroupKind::G2:
        if (p < 3 || p % 2 == 0)
          throw std::invalid_argument(
              std::string(to_string(kind)) +
              " requires an odd group order p >= 3, got p = " +
              std::to_string(p));
        break;
      case GroupKind::Scalar:
        if (p < 2)
          throw std::invalid_argument(
              "scalar requires group order p >= 2, got p = " +
              std::to_string(p));
        break;
      case GroupKind::Seven:
        if (p != 7)
          throw std::invalid_argument("seven requires p = 7, got p = " +
                                      std::to_string(p));
        break;
    }
    return GroupSpec(kind, p);
  }

  GroupKind kind() const { return kind_; }
  int p() const { return p_; }
  const std::array<int, 3>& weights() const { return weights_; }

  bool is_two_weight() const {
    return kind_ == GroupKind::G1 || kind_ == GroupKind::G2;
  }

  /// k = (p-1)/2, defined for the two-weight groups only.
  int k() const {
    if (!is_two_weight())
      throw std::invalid_argument("k is defined only for g1/g2");
    return (p_ - 1) / 2;
  }

  /// N: the rank of the canonical invariant polynomial, in closed form:
  ///   g1      (p^2 + 4p + 7) / 4
  ///   g2      (p^2 + 12p + 11) / 8
  ///   scalar  binom(p+2, 2)
  ///   seven   17
  long long canonical_rank() const {
    long long p = p_;
    switch (kind_) {
      case GroupKind::G1: return (p * p + 4 * p + 7) / 4;
      case GroupKind::G2: return (p * p + 12 * p + 11) / 8;
      case GroupKind::Scalar: return (p + 2) * (p + 1) / 2;
      case GroupKind::Seven: return 17;
    }
    return 0;
  }

  /// n: the gap threshold. Every target dimension >= n is realized as the
  /// minimal embedding dimension of an invariant sphere map.
  ///   g1/g2   2N - 1 + k^2 - 1
  ///   scalar  2N - 1 + (p-2)p
  ///   seven   2N - 1 + 3*7 + 2 = 56
  long long gap_bound() const {
    long long N = canonical_rank();
    switch (kind_) {
      case GroupKind::G1:
      case GroupKind::G2: {
        long long kk = k();
        return 2 * N - 1 + kk * kk - 1;
      }
      case GroupKind::Scalar: {
        long long p = p_;
        return 2 * N - 1 + (p - 2) * p;
      }
      case GroupKind::Seven: return 2 * 17 - 1 + 3 * 7 + 2;
    }
    return 0;
  }

  /// The general bound N^2 - 2N + 2 that gap_bound() sharpens.
  long long general_gap_bound() const {
    long long N = canonical_rank();
    return N * N - 2 * N + 2;
  }

  /// Weighted degree of a monomial mod p; zero residue characterizes
  /// invariant monomials.
  int weight_residue(const Exponent& e) const {
    if (e.arity() != 3)
      throw std::invalid_argument("weight_residue: arity must be 3");
    long long r = 0;
    for (int i = 0; i < 3; ++i)
      r += static_cast<long long>(weights_[i]) * e[i];
    return static_cast<int>(r % p_);
  }

  bool operator==(const GroupSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }

  std::string name() const {
    return std::string(to_string(kind_)) + "(p=" + std::to_string(p_) + ")";
  }

 private:
  GroupSpec(GroupKind kind, int p) : kind_(kind), p_(p) {
    switch (kind) {
      case GroupKind::G1: weights_ = {1, 1, 2}; break;
      case GroupKind::G2: weights_ = {1, 2, 2}; break;
      case GroupKind::Scalar: weights_ = {1, 1, 1}; break;
      case GroupKind::Seven: weights_ = {1, 2, 4}; break;
    }
    for (int& w : weights_) w %= p;
  }

  GroupKind kind_;
  int p_;
  std::array<int, 3> weights_;
};

}  // namespace crmaps

#endif  // CRMAPS_GROUP_HPP
