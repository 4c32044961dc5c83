#ifndef CRMAPS_COMMON_HPP
#define CRMAPS_COMMON_HPP

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace crmaps {

/// Arbitrary-precision signed integer. All exact arithmetic in the library
/// bottoms out here; machine integers are used only for exponents, ranks and
/// loop indices.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored canonically (den > 0,
/// gcd(num, den) = 1). Coefficients are never floats: rank computations
/// require exact zero/nonzero discrimination.
using Rational = boost::multiprecision::cpp_rational;

/// A broken internal invariant (e.g. a cyclotomic expansion producing a
/// non-integer coefficient). Callers must not continue; the CLI maps this to
/// exit code 3.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// A polynomial failed the membership test where a member was required.
/// The CLI maps this to exit code 1 (verification failure).
class membership_error : public std::runtime_error {
 public:
  explicit membership_error(const std::string& what)
      : std::runtime_error(what) {}
};

inline Integer int_pow10(int digits) {
  Integer r = 1;
  for (int i = 0; i < digits; ++i) r *= 10;
  return r;
}

}  // namespace crmaps

#endif  // CRMAPS_COMMON_HPP
