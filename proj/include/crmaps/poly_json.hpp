#ifndef CRMAPS_POLY_JSON_HPP
#define CRMAPS_POLY_JSON_HPP

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "crmaps/iterate.hpp"
#include "crmaps/poly.hpp"

namespace crmaps {

using Json = nlohmann::ordered_json;

/// Canonical interchange format:
///   {"arity":3,"terms":[{"exp":[a,b,c],"num":"<int>","den":"<int>"},...]}
/// with terms in strictly decreasing grlex order, den > 0 and
/// gcd(num,den) = 1. Serialization always emits this form; parsing accepts
/// any term order and unreduced fractions but rejects duplicates, zero
/// coefficients and zero denominators.
inline Json poly_to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (int i = 0; i < e.arity(); ++i) exp.push_back(e[i]);
    terms.push_back(Json{{"exp", std::move(exp)},
                         {"num", numerator(c).str()},
                         {"den", denominator(c).str()}});
  }
  return Json{{"arity", p.arity()}, {"terms", std::move(terms)}};
}

namespace detail {

inline Exponent exponent_from_json(const Json& j, int arity,
                                   const char* where) {
  if (!j.is_array() || static_cast<int>(j.size()) != arity)
    throw std::invalid_argument(std::string(where) +
                                ": \"exp\" must be an array of length " +
                                std::to_string(arity));
  Exponent e(arity);
  for (int i = 0; i < arity; ++i) {
    if (!j[i].is_number_unsigned() || j[i].get<std::uint64_t>() > 1000000u)
      throw std::invalid_argument(std::string(where) +
                                  ": exponent entries must be small "
                                  "nonnegative integers");
    e[i] = j[i].get<std::uint32_t>();
  }
  return e;
}

inline Integer integer_from_string(const std::string& s, const char* where) {
  try {
    return Integer(s);
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(where) + ": bad integer \"" + s +
                                "\"");
  }
}

}  // namespace detail

inline Poly poly_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms"))
    throw std::invalid_argument(
        "polynomial JSON must have \"arity\" and \"terms\"");
  if (!j["arity"].is_number_integer())
    throw std::invalid_argument("\"arity\" must be an integer");
  const int arity = j["arity"].get<int>();
  if (arity < 2 || arity > 3)
    throw std::invalid_argument("\"arity\" must be 2 or 3");
  if (!j["terms"].is_array())
    throw std::invalid_argument("\"terms\" must be an array");
  Poly p(arity);
  for (const Json& t : j["terms"]) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("num") ||
        !t.contains("den"))
      throw std::invalid_argument(
          "each term needs \"exp\", \"num\" and \"den\"");
    Exponent e = detail::exponent_from_json(t["exp"], arity, "term");
    if (p.contains(e))
      throw std::invalid_argument("duplicate exponent " + to_string(e));
    if (!t["num"].is_string() || !t["den"].is_string())
      throw std::invalid_argument(
          "\"num\" and \"den\" must be decimal strings");
    Integer num = detail::integer_from_string(t["num"].get<std::string>(),
                                              "num");
    Integer den = detail::integer_from_string(t["den"].get<std::string>(),
                                              "den");
    if (den <= 0) throw std::invalid_argument("\"den\" must be positive");
    if (num == 0) throw std::invalid_argument("zero coefficient stored");
    p.add_term(e, Rational(num, den));
  }
  return p;
}

/// Move list format: [{"exp":[a,b,c],"mode":"F"|"G"},...]
inline Json moves_to_json(const std::vector<Move>& moves) {
  Json arr = Json::array();
  for (const Move& m : moves) {
    Json exp = Json::array();
    for (int i = 0; i < m.mu.arity(); ++i) exp.push_back(m.mu[i]);
    arr.push_back(
        Json{{"exp", std::move(exp)}, {"mode", mode_letter(m.mode)}});
  }
  return arr;
}

inline std::vector<Move> moves_from_json(const Json& j, int arity) {
  if (!j.is_array())
    throw std::invalid_argument("moves JSON must be an array");
  std::vector<Move> moves;
  for (const Json& t : j) {
    if (!t.is_object() || !t.contains("exp") || !t.contains("mode"))
      throw std::invalid_argument("each move needs \"exp\" and \"mode\"");
    Exponent e = detail::exponent_from_json(t["exp"], arity, "move");
    const std::string mode = t["mode"].get<std::string>();
    if (mode == "F")
      moves.push_back({e, IterationMode::FullReplace});
    else if (mode == "G")
      moves.push_back({e, IterationMode::HalfSplit});
    else
      throw std::invalid_argument("move mode must be \"F\" or \"G\", got \"" +
                                  mode + "\"");
  }
  return moves;
}

/// Schedule file format: {"monomials":[[a,b,c],...]}
inline std::vector<Exponent> schedule_monomials_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("monomials") ||
      !j["monomials"].is_array())
    throw std::invalid_argument(
        "schedule JSON must be {\"monomials\":[[a,b,c],...]}");
  std::vector<Exponent> mus;
  for (const Json& t : j["monomials"])
    mus.push_back(detail::exponent_from_json(t, 3, "schedule"));
  return mus;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open \"" + path + "\" for reading");
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("cannot parse \"" + path +
                                "\": " + e.what());
  }
  return j;
}

inline void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out)
    throw std::invalid_argument("cannot open \"" + path + "\" for writing");
  out << j.dump(2) << "\n";
}

}  // namespace crmaps

#endif  // CRMAPS_POLY_JSON_HPP
