#ifndef CRMAPS_VERIFY_HPP
#define CRMAPS_VERIFY_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crmaps/canonical.hpp"
#include "crmaps/group.hpp"
#include "crmaps/iterate.hpp"
#include "crmaps/poly.hpp"

namespace crmaps {

/// Called with every polynomial a verification routine constructs; used to
/// pipe the whole test matrix through the membership check.
using PolyHook = std::function<void(const Poly&, const GroupSpec&)>;

// ---------------------------------------------------------------------------
// membership
// ---------------------------------------------------------------------------

/// Restriction of an arity-3 polynomial to the hyperplane x1+x2+x3 = 1,
/// i.e. the full expansion of P(x1, x2, 1-x1-x2) as an arity-2 polynomial.
/// Membership requires the result to be the constant 1.
inline Poly hyperplane_restriction(const Poly& P) {
  if (P.arity() != 3)
    throw std::invalid_argument("hyperplane_restriction: arity must be 3");
  Poly s(2);  // 1 - x1 - x2
  s.add_term(Exponent{0, 0}, 1);
  s.add_term(Exponent{1, 0}, -1);
  s.add_term(Exponent{0, 1}, -1);
  std::map<std::uint32_t, Poly> buckets;  // x3-exponent -> arity-2 part
  for (const auto& [e, c] : P.terms()) {
    auto [it, inserted] = buckets.try_emplace(e[2], 2);
    it->second.add_term(Exponent{e[0], e[1]}, c);
  }
  Poly result(2);
  Poly power = Poly::constant(2, 1);
  std::uint32_t at = 0;
  for (const auto& [k, part] : buckets) {
    for (; at < k; ++at) power *= s;
    result += part * power;
  }
  return result;
}

namespace detail {

/// Exact hyperplane check over denominator-cleared integers; equivalent to
/// hyperplane_restriction(P) == 1 but avoids per-step rational
/// normalization on the hot path.
inline bool restricts_to_one(const Poly& P) {
  if (P.arity() != 3)
    throw std::invalid_argument("restricts_to_one: arity must be 3");
  Integer lcm_den = 1;
  for (const auto& [e, c] : P.terms())
    lcm_den = boost::multiprecision::lcm(lcm_den, denominator(c));
  using Key = std::pair<std::uint32_t, std::uint32_t>;
  using IMap = std::map<Key, Integer>;
  auto accumulate = [](IMap& m, Key k, const Integer& v) {
    if (v == 0) return;
    auto [it, inserted] = m.emplace(k, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) m.erase(it);
    }
  };
  std::map<std::uint32_t, std::vector<std::pair<Key, Integer>>> buckets;
  for (const auto& [e, c] : P.terms()) {
    Rational scaled = c * lcm_den;
    buckets[e[2]].push_back({{e[0], e[1]}, numerator(scaled)});
  }
  IMap s{{{0, 0}, 1}, {{1, 0}, -1}, {{0, 1}, -1}};  // 1 - x1 - x2
  IMap power{{{0, 0}, 1}};
  IMap acc;
  std::uint32_t at = 0;
  for (const auto& [k, terms] : buckets) {
    for (; at < k; ++at) {
      IMap next;
      for (const auto& [ke, ve] : power)
        for (const auto& [ks, vs] : s)
          accumulate(next, {ke.first + ks.first, ke.second + ks.second},
                     ve * vs);
      power = std::move(next);
    }
    for (const auto& [ke, ve] : terms)
      for (const auto& [kp, vp] : power)
        accumulate(acc, {ke.first + kp.first, ke.second + kp.second},
                   ve * vp);
  }
  return acc.size() == 1 && acc.begin()->first == Key{0, 0} &&
         acc.begin()->second == lcm_den;
}

}  // namespace detail

/// The three membership flags: nonnegative coefficients, restriction to the
/// hyperplane x1+x2+x3 = 1 identically 1, and every monomial invariant
/// (weight residue 0). The verdict is their conjunction.
struct MembershipReport {
  bool nonneg_ok = false;
  bool hyperplane_ok = false;
  bool weights_ok = false;
  std::vector<Exponent> offending_terms;

  bool ok() const { return nonneg_ok && hyperplane_ok && weights_ok; }
};

inline MembershipReport check_membership(const Poly& P, const GroupSpec& g) {
  MembershipReport r;
  r.nonneg_ok = true;
  r.weights_ok = true;
  for (const auto& [e, c] : P.terms()) {
    bool bad = false;
    if (c < 0) {
      r.nonneg_ok = false;
      bad = true;
    }
    if (g.weight_residue(e) != 0) {
      r.weights_ok = false;
      bad = true;
    }
    if (bad) r.offending_terms.push_back(e);
  }
  r.hyperplane_ok = detail::restricts_to_one(P);
  return r;
}

// ---------------------------------------------------------------------------
// rank laws
// ---------------------------------------------------------------------------

/// The four rank laws the verifier can machine-check, identified by the
/// CLI ids "1", "c1", "2", "3":
///   Chain       (g1/g2)   rank f_{-1,m} = 2N - 1 + m(k+1), steps of k+1
///   MixedChain  (g1/g2)   rank f_{m0,m} = 2N + m0 + m(k+1)
///   ScalarMixed (scalar)  rank f_{m0,m} = 2N + m0 + m*p
///   ScalarH     (scalar)  rank H(f_{m0,m}) = rank f_{m0,m} + N - 2 - m
enum class RankLaw { Chain, MixedChain, ScalarMixed, ScalarH };

inline const char* law_id(RankLaw law) {
  switch (law) {
    case RankLaw::Chain: return "1";
    case RankLaw::MixedChain: return "c1";
    case RankLaw::ScalarMixed: return "2";
    case RankLaw::ScalarH: return "3";
  }
  return "?";
}

inline std::optional<RankLaw> parse_law_id(const std::string& s) {
  if (s == "1") return RankLaw::Chain;
  if (s == "c1") return RankLaw::MixedChain;
  if (s == "2") return RankLaw::ScalarMixed;
  if (s == "3") return RankLaw::ScalarH;
  return std::nullopt;
}

struct LawInstance {
  int p = 0;
  int m0 = -1;
  int m = 0;
  long long expected = 0;
  long long computed = 0;
  bool ok = false;
};

struct RankLawReport {
  RankLaw law = RankLaw::Chain;
  GroupKind kind = GroupKind::G1;
  int p_min = 0, p_max = 0;
  std::vector<LawInstance> instances;
  bool ok = true;
  std::string schedule_note;  // set for g2 (default schedule is a choice)
};

namespace detail {

/// Walks every family member f_{m0,m} with -1 <= m0 <= m <= max_m,
/// recomputing each G-prefix once and extending with F-steps, and invokes
/// fn(m0, m, P) on each member.
template <typename Fn>
void scan_family(const Schedule& sch, const Poly& f_gamma, int max_m,
                 Fn&& fn) {
  for (int m0 = -1; m0 <= max_m; ++m0) {
    Poly P = f_gamma;
    for (int j = 0; j <= m0; ++j)
      P = substitute_mode(P, sch.monomials[j], IterationMode::HalfSplit,
                          f_gamma);
    if (m0 >= 0) fn(m0, m0, P);
    for (int m = m0 + 1; m <= max_m; ++m) {
      P = substitute_mode(P, sch.monomials[m], IterationMode::FullReplace,
                          f_gamma);
      fn(m0, m, P);
    }
  }
}

inline void note_g2(RankLawReport& r) {
  if (r.kind == GroupKind::G2)
    r.schedule_note =
        "g2 uses the default schedule x2^(p-j) x3^j; pass --schedule to "
        "test alternatives";
}

}  // namespace detail

/// Machine-checks one rank law over a group-order range. `kind` must be
/// g1/g2 for the chain laws and scalar for the scalar laws; group orders
/// incompatible with the kind (even p for g1/g2) are skipped. Every
/// constructed polynomial is also passed to `hook` when provided.
inline RankLawReport check_rank_law(RankLaw law, GroupKind kind, int p_min,
                                    int p_max, const PolyHook& hook = {},
                                    const Schedule* custom = nullptr) {
  const bool scalar_law =
      law == RankLaw::ScalarMixed || law == RankLaw::ScalarH;
  if (scalar_law && kind != GroupKind::Scalar)
    throw std::invalid_argument(std::string("law ") + law_id(law) +
                                " applies to the scalar group only");
  if (!scalar_law && kind != GroupKind::G1 && kind != GroupKind::G2)
    throw std::invalid_argument(std::string("law ") + law_id(law) +
                                " applies to g1/g2 only");
  if (kind == GroupKind::Seven)
    throw std::invalid_argument("no closed-form rank law for seven");
  if (p_min > p_max)
    throw std::invalid_argument("check_rank_law: empty p range");

  RankLawReport rep;
  rep.law = law;
  rep.kind = kind;
  rep.p_min = p_min;
  rep.p_max = p_max;
  if (custom)
    rep.schedule_note = "user-supplied schedule";
  else
    detail::note_g2(rep);

  for (int p = p_min; p <= p_max; ++p) {
    if (kind != GroupKind::Scalar && p % 2 == 0) continue;
    if (p < (kind == GroupKind::Scalar ? 2 : 3)) continue;
    const GroupSpec g = GroupSpec::make(kind, p);
    const Poly f = canonical_polynomial(g);
    Schedule sch = custom ? *custom : schedule_for(g);
    if (custom) {
      validate_schedule(sch, f);
      if (sch.max_index() < p)
        throw std::invalid_argument(
            "schedule has " + std::to_string(sch.max_index() + 1) +
            " entries; the law over p = " + std::to_string(p) +
            " walks entries 0.." + std::to_string(p));
    }
    const long long N = g.canonical_rank();
    const long long step = scalar_law ? p : g.k() + 1;

    auto record = [&](int m0, int m, long long expected, long long computed) {
      rep.instances.push_back(
          {p, m0, m, expected, computed, expected == computed});
      rep.ok = rep.ok && expected == computed;
    };

    switch (law) {
      case RankLaw::Chain: {
        // f_{-1,m} only, plus the increment claim between consecutive m
        Poly P = f;
        long long prev = 0;
        for (int m = 0; m <= p; ++m) {
          P = substitute_mode(P, sch.monomials[m], IterationMode::FullReplace,
                              f);
          if (hook) hook(P, g);
          long long r = P.rank();
          record(-1, m, 2 * N - 1 + m * step, r);
          if (m > 0 && r - prev != step) rep.ok = false;
          prev = r;
        }
        break;
      }
      case RankLaw::MixedChain:
      case RankLaw::ScalarMixed:
        detail::scan_family(sch, f, p, [&](int m0, int m, const Poly& P) {
          if (hook) hook(P, g);
          long long expected = 2 * N + m0 + m * step;
          record(m0, m, expected, P.rank());
        });
        break;
      case RankLaw::ScalarH:
        detail::scan_family(sch, f, p, [&](int m0, int m, const Poly& P) {
          if (m < 2) return;
          Poly HP = apply_h(P, f, p);
          if (hook) hook(HP, g);
          record(m0, m, P.rank() + N - 2 - m, HP.rank());
        });
        break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// coverage
// ---------------------------------------------------------------------------

/// How a witness polynomial was built: the family member f_{m0,m},
/// optionally followed by the x3^p replacement, optionally followed by
/// top_multiply steps.
struct Witness {
  int m0 = -1;
  int m = 0;
  bool h_applied = false;
  int top_steps = 0;

  std::string describe() const {
    std::string s =
        "f[m0=" + std::to_string(m0) + ",m=" + std::to_string(m) + "]";
    if (h_applied) s = "H(" + s + ")";
    if (top_steps > 0)
      s = "top^" + std::to_string(top_steps) + "(" + s + ")";
    return s;
  }
};

struct CoverageEntry {
  long long rank = 0;
  Witness witness;
  Poly poly{3};  // retained only when requested
};

/// Achieved-rank certificate: the window [gap_bound, gap_bound + N - 2]
/// must be covered by the witness set, and (for scans) every integer up to
/// max_rank must be achieved with top_multiply increments of exactly N - 1.
struct CoverageReport {
  GroupKind kind = GroupKind::G1;
  int p = 0;
  long long canonical_rank = 0;
  long long gap_bound = 0;
  long long general_bound = 0;
  long long window_lo = 0, window_hi = 0;
  long long max_rank = 0;  // scan ceiling; window_hi for plain window checks
  std::vector<CoverageEntry> achieved;       // sorted by rank, one per rank
  std::vector<long long> gaps;               // missing ranks up to max_rank
  std::vector<long long> increments;         // every top_multiply step size
  std::vector<long long> anomaly_ranks;      // steps whose increment != N-1
  std::string schedule_note;
  bool ok = false;
};

namespace detail {

struct CoverageBuilder {
  const GroupSpec& g;
  Poly f_gamma;
  Schedule sch;
  std::map<long long, CoverageEntry> by_rank;
  const PolyHook& hook;

  CoverageBuilder(const GroupSpec& gg, const PolyHook& h)
      : g(gg), f_gamma(canonical_polynomial(gg)), sch(schedule_for(gg)),
        hook(h) {}

  void put(const Poly& P, Witness w) {
    if (hook) hook(P, g);
    long long r = P.rank();
    auto it = by_rank.find(r);
    if (it == by_rank.end()) by_rank.emplace(r, CoverageEntry{r, w, P});
  }

  Poly fam(int m0, int m) {
    return family_member(sch, f_gamma, FamilyIndex{m0, m});
  }

  /// The window witness set, group by group. Two-weight groups: family
  /// members for m = k-1..p-2 (all m0) plus m = p-1 (m0 <= k-1). Scalar:
  /// family members for m = p-2..p plus, for each still-missing window rank,
  /// a top_multiply or x3^p-replacement witness located by Euclidean
  /// division. Seven: family members for m = 3..6.
  void build_window() {
    const int p = g.p();
    switch (g.kind()) {
      case GroupKind::G1:
      case GroupKind::G2: {
        const int k = g.k();
        for (int m = std::max(0, k - 1); m <= p - 2; ++m)
          for (int m0 = -1; m0 <= m; ++m0)
            put(fam(m0, m), Witness{m0, m});
        for (int m0 = -1; m0 <= k - 1; ++m0)
          put(fam(m0, p - 1), Witness{m0, p - 1});
        break;
      }
      case GroupKind::Scalar: {
        const long long N = g.canonical_rank();
        for (int m = std::max(0, p - 2); m <= p; ++m)
          for (int m0 = -1; m0 <= m; ++m0)
            put(fam(m0, m), Witness{m0, m});
        // ranks past the three family rows: locate witnesses by writing
        // p^2 - 2p + l - N = q*p + r
        for (long long l = 3 * p + 2; l <= N - 2; ++l) {
          long long v = static_cast<long long>(p) * p - 2 * p + l - N;
          long long q = v / p, r = v % p;
          if (q < 1 || q + 1 > p) continue;  // outside family range; hole
          if (r <= q) {
            Poly W = top_multiply(fam(static_cast<int>(r),
                                      static_cast<int>(q)),
                                  f_gamma);
            put(W, Witness{static_cast<int>(r), static_cast<int>(q), false,
                           1});
          } else {
            long long m0 = q + 2 + r - p;
            if (m0 < -1 || m0 > q + 1) continue;
            Poly W = apply_h(fam(static_cast<int>(m0),
                                 static_cast<int>(q) + 1),
                             f_gamma, p);
            put(W, Witness{static_cast<int>(m0), static_cast<int>(q) + 1,
                           true, 0});
          }
        }
        break;
      }
      case GroupKind::Seven:
        for (int m = 3; m <= 6; ++m)
          for (int m0 = -1; m0 <= m; ++m0)
            put(fam(m0, m), Witness{m0, m});
        break;
    }
  }
};

}  // namespace detail

/// Builds the window witness set and certifies that every integer in
/// [gap_bound, gap_bound + N - 2] is an achieved rank.
inline CoverageReport check_window(const GroupSpec& g,
                                   const PolyHook& hook = {},
                                   bool retain_polys = true) {
  detail::CoverageBuilder b(g, hook);
  b.build_window();

  CoverageReport rep;
  rep.kind = g.kind();
  rep.p = g.p();
  rep.canonical_rank = g.canonical_rank();
  rep.gap_bound = g.gap_bound();
  rep.general_bound = g.general_gap_bound();
  rep.window_lo = rep.gap_bound;
  rep.window_hi = rep.gap_bound + rep.canonical_rank - 2;
  rep.max_rank = rep.window_hi;
  if (g.kind() == GroupKind::G2)
    rep.schedule_note = "g2 uses the default schedule x2^(p-j) x3^j";
  for (auto& [r, e] : b.by_rank) {
    if (!retain_polys) e.poly = Poly(3);
    rep.achieved.push_back(std::move(e));
  }
  for (long long r = rep.window_lo; r <= rep.window_hi; ++r)
    if (!b.by_rank.count(r)) rep.gaps.push_back(r);
  rep.ok = rep.gaps.empty();
  return rep;
}

/// Tiling scan: from every window witness, applies top_multiply while the
/// rank stays within max_rank, asserting each step adds exactly N - 1, and
/// certifies every integer in [gap_bound, max_rank] is achieved.
inline CoverageReport coverage_scan(const GroupSpec& g, long long max_rank,
                                    const PolyHook& hook = {},
                                    bool retain_polys = true) {
  if (max_rank < g.gap_bound())
    throw std::invalid_argument(
        "coverage_scan: max_rank must be >= the gap bound " +
        std::to_string(g.gap_bound()));
  detail::CoverageBuilder b(g, hook);
  b.build_window();

  CoverageReport rep;
  rep.kind = g.kind();
  rep.p = g.p();
  rep.canonical_rank = g.canonical_rank();
  rep.gap_bound = g.gap_bound();
  rep.general_bound = g.general_gap_bound();
  rep.window_lo = rep.gap_bound;
  rep.window_hi = rep.gap_bound + rep.canonical_rank - 2;
  rep.max_rank = max_rank;
  if (g.kind() == GroupKind::G2)
    rep.schedule_note = "g2 uses the default schedule x2^(p-j) x3^j";

  const long long N = rep.canonical_rank;
  std::map<long long, CoverageEntry> all = b.by_rank;
  for (const auto& [r0, entry] : b.by_rank) {
    if (r0 < rep.window_lo || r0 > rep.window_hi) continue;
    Poly P = entry.poly;
    Witness w = entry.witness;
    long long r = r0;
    while (r + (N - 1) <= max_rank) {
      P = top_multiply(P, b.f_gamma);
      if (hook) hook(P, g);
      w.top_steps += 1;
      long long r2 = P.rank();
      rep.increments.push_back(r2 - r);
      if (r2 - r != N - 1) rep.anomaly_ranks.push_back(r2);
      r = r2;
      if (!all.count(r)) all.emplace(r, CoverageEntry{r, w, P});
    }
  }
  for (auto& [r, e] : all) {
    if (r > max_rank) continue;
    if (!retain_polys) e.poly = Poly(3);
    rep.achieved.push_back(std::move(e));
  }
  std::set<long long> have;
  for (const auto& e : rep.achieved) have.insert(e.rank);
  for (long long r = rep.window_lo; r <= max_rank; ++r)
    if (!have.count(r)) rep.gaps.push_back(r);
  rep.ok = rep.gaps.empty() && rep.anomaly_ranks.empty();
  return rep;
}

// ---------------------------------------------------------------------------
// sphere map extraction
// ---------------------------------------------------------------------------

/// floor(sqrt(q) * 10^digits) rendered as a decimal string with `digits`
/// digits after the point.
inline std::string sqrt_decimal(const Rational& q, int digits) {
  if (q < 0) throw std::invalid_argument("sqrt_decimal: negative input");
  if (digits < 1) throw std::invalid_argument("sqrt_decimal: digits < 1");
  const Integer n = numerator(q), d = denominator(q);
  const Integer scale = int_pow10(digits);
  const Integer radicand = n * d * scale * scale;
  const Integer s = boost::multiprecision::sqrt(radicand);
  const Integer v = s / d;
  const Integer ip = v / scale, fp = v % scale;
  std::string frac = fp.str();
  frac.insert(frac.begin(), static_cast<std::size_t>(digits) - frac.size(),
              '0');
  return ip.str() + "." + frac;
}

struct MapComponent {
  Exponent exp;
  Rational coeff_sq;        // |c|^2, the polynomial coefficient
  std::string sqrt_coeff;   // decimal sqrt at the requested precision
};

/// A monomial sphere map z -> (..., sqrt(c_a) z^a, ...) induced by a
/// member polynomial of rank N; the target sphere lives in dimension N and
/// N is the map's minimal embedding dimension.
struct SphereMap {
  GroupKind kind = GroupKind::G1;
  int p = 0;
  long long target_dimension = 0;
  long long minimal_embedding_dimension = 0;
  std::vector<MapComponent> components;  // grlex-descending
};

inline SphereMap extract_sphere_map(const Poly& P, const GroupSpec& g,
                                    int precision_digits = 50) {
  MembershipReport m = check_membership(P, g);
  if (!m.ok()) {
    std::ostringstream os;
    os << "extract_sphere_map: polynomial is not a member (nonneg="
       << m.nonneg_ok << ", hyperplane=" << m.hyperplane_ok
       << ", weights=" << m.weights_ok << ")";
    throw membership_error(os.str());
  }
  SphereMap out;
  out.kind = g.kind();
  out.p = g.p();
  out.target_dimension = P.rank();
  out.minimal_embedding_dimension = P.rank();
  for (const auto& [e, c] : P.terms())
    out.components.push_back({e, c, sqrt_decimal(c, precision_digits)});
  return out;
}

// ---------------------------------------------------------------------------
// rank exploration below the gap bound
// ---------------------------------------------------------------------------

/// Bounded breadth-first search over single F/G moves on any present
/// monomial, deduplicating states by monomial support (rank depends only on
/// support, which collapses the half-split coefficient blowup). Records
/// every encountered rank with a first witness; `beam` caps the number of
/// states expanded per level. Results are observations only: nothing below
/// the gap bound is claimed impossible.
struct ExploreResult {
  GroupKind kind = GroupKind::G1;
  int p = 0;
  int depth = 0;
  int beam = 0;
  std::map<long long, std::vector<Move>> ranks;  // rank -> first witness
  std::size_t states_expanded = 0;
};

inline ExploreResult explore_ranks(const GroupSpec& g, int depth, int beam) {
  if (depth < 0) throw std::invalid_argument("explore_ranks: depth < 0");
  if (beam < 1) throw std::invalid_argument("explore_ranks: beam < 1");
  const Poly f = canonical_polynomial(g);

  auto support_key = [](const Poly& P) {
    std::string key;
    for (const auto& [e, c] : P.terms()) {
      for (int i = 0; i < e.arity(); ++i) {
        key += std::to_string(e[i]);
        key += ',';
      }
      key += ';';
    }
    return key;
  };

  struct State {
    Poly poly;
    std::vector<Move> moves;
  };

  ExploreResult out;
  out.kind = g.kind();
  out.p = g.p();
  out.depth = depth;
  out.beam = beam;
  std::set<std::string> seen{support_key(f)};
  std::vector<State> frontier{{f, {}}};
  out.ranks.emplace(f.rank(), std::vector<Move>{});

  for (int level = 0; level < depth; ++level) {
    std::vector<State> next;
    for (const State& st : frontier) {
      ++out.states_expanded;
      for (const auto& [mu, c] : st.poly.terms()) {
        for (IterationMode mode :
             {IterationMode::FullReplace, IterationMode::HalfSplit}) {
          Poly child = substitute_mode(st.poly, mu, mode, f);
          std::string key = support_key(child);
          if (!seen.insert(key).second) continue;
          std::vector<Move> moves = st.moves;
          moves.push_back({mu, mode});
          out.ranks.emplace(child.rank(), moves);
          if (static_cast<int>(next.size()) < beam)
            next.push_back({std::move(child), std::move(moves)});
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) break;
  }
  return out;
}

}  // namespace crmaps

#endif  // CRMAPS_VERIFY_HPP
