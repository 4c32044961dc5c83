#ifndef CRMAPS_EXPONENT_HPP
#define CRMAPS_EXPONENT_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>

namespace crmaps {

/// Exponent vector of a monomial: 2 entries for the bivariate helper ring,
/// 3 for the main ring. Entries are nonnegative and small (total degree is
/// bounded by roughly 3p <= 100 for the inputs this library handles), so a
/// fixed-size array of machine integers suffices.
class Exponent {
 public:
  static constexpr int kMaxArity = 3;

  Exponent() : arity_(0), e_{0, 0, 0} {}

  explicit Exponent(int arity) : arity_(arity), e_{0, 0, 0} {
    check_arity(arity);
  }

  Exponent(std::initializer_list<std::uint32_t> entries)
      : arity_(static_cast<int>(entries.size())), e_{0, 0, 0} {
    check_arity(arity_);
    int i = 0;
    for (std::uint32_t v : entries) e_[i++] = v;
  }

  static Exponent unit(int arity, int var) {
    Exponent e(arity);
    if (var < 0 || var >= arity)
      throw std::invalid_argument("Exponent::unit: variable index " +
                                  std::to_string(var) + " out of range");
    e.e_[var] = 1;
    return e;
  }

  int arity() const { return arity_; }

  std::uint32_t operator[](int i) const { return e_[i]; }

  std::uint32_t& operator[](int i) { return e_[i]; }

  std::uint32_t degree() const {
    std::uint32_t d = 0;
    for (int i = 0; i < arity_; ++i) d += e_[i];
    return d;
  }

  /// Componentwise sum; the exponent of a product of monomials.
  Exponent operator+(const Exponent& o) const {
    require_same_arity(o, "Exponent::operator+");
    Exponent r(arity_);
    for (int i = 0; i < arity_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }

  bool operator==(const Exponent& o) const {
    if (arity_ != o.arity_) return false;
    for (int i = 0; i < arity_; ++i)
      if (e_[i] != o.e_[i]) return false;
    return true;
  }

  bool operator!=(const Exponent& o) const { return !(*this == o); }

  void require_same_arity(const Exponent& o, const char* where) const {
    if (arity_ != o.arity_)
      throw std::invalid_argument(std::string(where) + ": arity mismatch (" +
                                  std::to_string(arity_) + " vs " +
                                  std::to_string(o.arity_) + ")");
  }

 private:
  static void check_arity(int arity) {
    if (arity < 1 || arity > kMaxArity)
      throw std::invalid_argument("Exponent: arity must be 1.." +
                                  std::to_string(kMaxArity) + ", got " +
                                  std::to_string(arity));
  }

  int arity_;
  std::array<std::uint32_t, kMaxArity> e_;
};

/// Graded lexicographic order: total degree first, lexicographic tie-break.
/// This is the single normative order of the library; serialization and
/// top-term selection both use it.
inline std::strong_ordering compare_grlex(const Exponent& a,
                                          const Exponent& b) {
  a.require_same_arity(b, "compare_grlex");
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (int i = 0; i < a.arity(); ++i)
    if (auto c = a[i] <=> b[i]; c != 0) return c;
  return std::strong_ordering::equal;
}

/// Comparator placing the grlex-largest exponent first; map iteration order
/// is then the canonical (strictly decreasing) serialization order.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const {
    return compare_grlex(a, b) == std::strong_ordering::greater;
  }
};

inline std::string to_string(const Exponent& e) {
  std::string s = "(";
  for (int i = 0; i < e.arity(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  s += ")";
  return s;
}

}  // namespace crmaps

#endif  // CRMAPS_EXPONENT_HPP
