#ifndef CRMAPS_ACCEPTANCE_HPP
#define CRMAPS_ACCEPTANCE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "crmaps/parallel.hpp"
#include "crmaps/verify.hpp"

namespace crmaps {

/// One line of the verification matrix; `detail` is deterministic so the
/// rendered table is byte-stable across runs.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace acceptance_detail {

// instance grids; arithmetic is exact so every tolerance below is zero
// except the explicitly floating sphere-map smoke test
inline std::vector<std::pair<GroupKind, int>> canonical_grid() {
  std::vector<std::pair<GroupKind, int>> v;
  for (int p = 3; p <= 31; p += 2) v.push_back({GroupKind::G1, p});
  for (int p = 3; p <= 31; p += 2) v.push_back({GroupKind::G2, p});
  for (int p = 2; p <= 20; ++p) v.push_back({GroupKind::Scalar, p});
  v.push_back({GroupKind::Seven, 7});
  return v;
}

inline std::vector<std::pair<GroupKind, int>> law_grid_two_weight() {
  std::vector<std::pair<GroupKind, int>> v;
  for (int p = 3; p <= 19; p += 2) v.push_back({GroupKind::G1, p});
  for (int p = 3; p <= 19; p += 2) v.push_back({GroupKind::G2, p});
  return v;
}

inline std::vector<std::pair<GroupKind, int>> window_grid() {
  auto v = law_grid_two_weight();
  for (int p = 2; p <= 12; ++p) v.push_back({GroupKind::Scalar, p});
  v.push_back({GroupKind::Seven, 7});
  return v;
}

inline std::vector<std::pair<GroupKind, int>> scan_grid() { return window_grid(); }

/// Per-task membership tally, merged in task order (deterministic).
struct Tally {
  long long polys = 0;
  long long failures = 0;
  std::string first_failure;

  void merge(const Tally& o) {
    polys += o.polys;
    failures += o.failures;
    if (first_failure.empty()) first_failure = o.first_failure;
  }
};

inline PolyHook membership_hook(Tally& t) {
  return [&t](const Poly& P, const GroupSpec& g) {
    ++t.polys;
    MembershipReport m = check_membership(P, g);
    if (!m.ok()) {
      ++t.failures;
      if (t.first_failure.empty())
        t.first_failure = g.name() + " rank " + std::to_string(P.rank());
    }
  };
}

inline std::uint32_t expected_seven_rank_count(int m) { return m + 2; }

/// The published rank table for the seven-group schedule. For m <= 5 the
/// full m0 = -1..m row is pinned; for m = 6 only m0 = 2,3,4 are pinned
/// (other m0 values are computed, never asserted).
inline const std::vector<std::vector<long long>>& seven_rows() {
  static const std::vector<std::vector<long long>> rows = {
      {33, 34},
      {41, 42, 43},
      {49, 50, 51, 52},
      {56, 57, 58, 59, 60},
      {58, 59, 60, 61, 62, 63},
      {62, 63, 64, 65, 66, 67, 68},
  };
  return rows;
}

struct Seven17 {
  std::uint32_t a, b, c;
  int coeff;
};

/// Independent copy of the displayed 17-term seven-group polynomial; the
/// cyclotomic product must match it literally.
inline const std::vector<Seven17>& seven_literal_terms() {
  static const std::vector<Seven17> t = {
      {7, 0, 0, 1},  {5, 1, 0, 7},  {3, 2, 0, 14}, {1, 3, 0, 7},
      {3, 0, 1, 7},  {1, 1, 1, 14}, {0, 7, 0, 1},  {2, 4, 1, 7},
      {0, 5, 1, 7},  {4, 1, 2, 7},  {2, 2, 2, 7},  {0, 3, 2, 14},
      {2, 0, 3, 14}, {0, 1, 3, 7},  {1, 2, 4, 7},  {1, 0, 5, 7},
      {0, 0, 7, 1},
  };
  return t;
}

/// 100 pseudo-random points on the unit sphere of C^3 (hand-rolled
/// Box-Muller over mt19937_64 so the stream is identical everywhere).
inline std::vector<std::array<double, 3>> unit_sphere_moduli(int count,
                                                             std::uint64_t
                                                                 seed) {
  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() {
    return (rng() >> 11) * (1.0 / 9007199254740992.0);  // [0,1)
  };
  auto gaussian = [&]() {
    double u = 0;
    while (u == 0) u = uniform();
    double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) *
           std::cos(6.283185307179586476925286766559 * v);
  };
  std::vector<std::array<double, 3>> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    double re[3], im[3], norm2 = 0;
    for (int j = 0; j < 3; ++j) {
      re[j] = gaussian();
      im[j] = gaussian();
      norm2 += re[j] * re[j] + im[j] * im[j];
    }
    std::array<double, 3> x{};
    for (int j = 0; j < 3; ++j)
      x[j] = (re[j] * re[j] + im[j] * im[j]) / norm2;  // |z_j|^2
    pts.push_back(x);
  }
  return pts;
}

}  // namespace acceptance_detail

/// Runs the full verification matrix and returns one result per criterion.
/// `progress`, when given, receives one diagnostic line per criterion (it
/// is meant for stderr; the caller renders the deterministic table).
inline std::vector<CriterionResult> run_acceptance(
    std::ostream* progress = nullptr) {
  namespace ad = acceptance_detail;
  std::vector<CriterionResult> results;
  auto log = [&](const std::string& s) {
    if (progress) *progress << s << std::endl;
  };

  ad::Tally tally;  // criteria 3..9 feed this; criterion 11 reads it

  // 1. both constructions agree, with the closed-form rank
  {
    auto grid = ad::canonical_grid();
    std::vector<std::string> bad(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      GroupSpec g = GroupSpec::make(grid[i].first, grid[i].second);
      CanonicalReport r = verify_canonical(g);
      if (!r.ok())
        bad[i] = g.name() + " equal=" + std::to_string(r.equal) +
                 " positive=" + std::to_string(r.positive) +
                 " rank=" + std::to_string(r.closed_rank) + "/" +
                 std::to_string(r.expected_rank);
    });
    std::string detail;
    for (const std::string& s : bad)
      if (!s.empty()) detail += (detail.empty() ? "" : "; ") + s;
    bool pass = detail.empty();
    if (pass)
      detail = std::to_string(grid.size()) +
               " group instances: product = closed form, rank = N";
    results.push_back({1, "canonical constructions agree", pass, detail});
    log("criterion 1 done");
  }

  // 2. seven-group product reproduces the 17-term literal polynomial
  {
    Poly literal(3);
    for (const auto& t : ad::seven_literal_terms())
      literal.add_term(Exponent{t.a, t.b, t.c}, t.coeff);
    Poly prod =
        group_product_polynomial(GroupSpec::make(GroupKind::Seven, 7));
    bool pass = (prod == literal) && literal.term_count() == 17;
    results.push_back({2, "seven-group literal polynomial", pass,
                       pass ? "17 terms, coefficients {1,7,14}, exact match"
                            : "product differs from the displayed "
                              "polynomial"});
    log("criterion 2 done");
  }

  // 3. chain law: rank f_{-1,m} = 2N-1+m(k+1), steps of k+1
  // 4. mixed chain law: rank f_{m0,m} = 2N+m0+m(k+1)
  for (RankLaw law : {RankLaw::Chain, RankLaw::MixedChain}) {
    auto grid = ad::law_grid_two_weight();
    std::vector<ad::Tally> tallies(grid.size());
    std::vector<std::string> bad(grid.size());
    std::vector<long long> counts(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      RankLawReport r =
          check_rank_law(law, grid[i].first, grid[i].second, grid[i].second,
                         ad::membership_hook(tallies[i]));
      counts[i] = static_cast<long long>(r.instances.size());
      if (!r.ok)
        bad[i] = std::string(to_string(grid[i].first)) +
                 " p=" + std::to_string(grid[i].second);
    });
    long long total = 0;
    std::string detail;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      total += counts[i];
      tally.merge(tallies[i]);
      if (!bad[i].empty()) detail += (detail.empty() ? "" : "; ") + bad[i];
    }
    bool pass = detail.empty();
    if (pass)
      detail = std::to_string(total) + " instances exact over g1/g2, p in "
               "{3,...,19} odd";
    int id = (law == RankLaw::Chain) ? 3 : 4;
    results.push_back({id,
                       law == RankLaw::Chain
                           ? "two-weight chain rank law"
                           : "two-weight mixed chain rank law",
                       pass, detail});
    log("criterion " + std::to_string(id) + " done");
  }

  // 5. scalar law: rank f_{m0,m} = 2N+m0+m*p
  // 6. scalar x3^p law: rank H(f_{m0,m}) = rank f_{m0,m} + N-2-m
  for (RankLaw law : {RankLaw::ScalarMixed, RankLaw::ScalarH}) {
    std::vector<int> ps;
    for (int p = 2; p <= 12; ++p) ps.push_back(p);
    std::vector<ad::Tally> tallies(ps.size());
    std::vector<std::string> bad(ps.size());
    std::vector<long long> counts(ps.size());
    parallel_for(ps.size(), [&](std::size_t i) {
      RankLawReport r = check_rank_law(law, GroupKind::Scalar, ps[i], ps[i],
                                       ad::membership_hook(tallies[i]));
      counts[i] = static_cast<long long>(r.instances.size());
      if (!r.ok) bad[i] = "p=" + std::to_string(ps[i]);
    });
    long long total = 0;
    std::string detail;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      total += counts[i];
      tally.merge(tallies[i]);
      if (!bad[i].empty()) detail += (detail.empty() ? "" : "; ") + bad[i];
    }
    bool pass = detail.empty();
    if (pass)
      detail = std::to_string(total) +
               " instances exact over scalar, p in {2,...,12}";
    int id = (law == RankLaw::ScalarMixed) ? 5 : 6;
    results.push_back({id,
                       law == RankLaw::ScalarMixed
                           ? "scalar mixed rank law"
                           : "scalar x3^p replacement rank law",
                       pass, detail});
    log("criterion " + std::to_string(id) + " done");
  }

  // 7. the seven-group rank schedule, exactly as published
  {
    GroupSpec g = GroupSpec::make(GroupKind::Seven, 7);
    const Poly f = canonical_polynomial(g);
    const Schedule sch = schedule_for(g);
    std::map<std::pair<int, int>, long long> got;
    ad::Tally t;
    PolyHook hook = ad::membership_hook(t);
    detail::scan_family(sch, f, 6, [&](int m0, int m, const Poly& P) {
      hook(P, g);
      got[{m0, m}] = P.rank();
    });
    tally.merge(t);
    bool pass = true;
    std::string msg;
    const auto& rows = ad::seven_rows();
    for (int m = 0; m <= 5; ++m)
      for (int m0 = -1; m0 <= m; ++m0)
        if (got[{m0, m}] != rows[m][m0 + 1]) {
          pass = false;
          msg += " (m0=" + std::to_string(m0) + ",m=" + std::to_string(m) +
                 ")=" + std::to_string(got[{m0, m}]);
        }
    for (int m0 = 2; m0 <= 4; ++m0)
      if (got[{m0, 6}] != 67 + m0) {
        pass = false;
        msg += " (m0=" + std::to_string(m0) +
               ",m=6)=" + std::to_string(got[{m0, 6}]);
      }
    if (pass)
      msg = "33,34; 41-43; 49-52; 56-60; 58-63; 62-68; 69,70,71 all exact";
    results.push_back({7, "seven-group rank schedule", pass, msg});
    log("criterion 7 done");
  }

  // 8. window coverage [n, n+N-2] with persisted witnesses
  {
    auto grid = ad::window_grid();
    std::vector<ad::Tally> tallies(grid.size());
    std::vector<std::string> bad(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      GroupSpec g = GroupSpec::make(grid[i].first, grid[i].second);
      CoverageReport r =
          check_window(g, ad::membership_hook(tallies[i]), false);
      if (!r.ok || r.gap_bound != g.gap_bound())
        bad[i] = g.name() + " holes=" + std::to_string(r.gaps.size());
    });
    std::string detail;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      tally.merge(tallies[i]);
      if (!bad[i].empty()) detail += (detail.empty() ? "" : "; ") + bad[i];
    }
    bool pass = detail.empty();
    if (pass)
      detail = std::to_string(grid.size()) +
               " windows fully covered (seven: [56,71])";
    results.push_back({8, "gap-threshold windows covered", pass, detail});
    log("criterion 8 done");
  }

  // 9. tiling: every integer in [n, n+5(N-1)] achieved, all increments N-1
  {
    auto grid = ad::scan_grid();
    std::vector<ad::Tally> tallies(grid.size());
    std::vector<std::string> bad(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
      GroupSpec g = GroupSpec::make(grid[i].first, grid[i].second);
      long long R = g.gap_bound() + 5 * (g.canonical_rank() - 1);
      CoverageReport r =
          coverage_scan(g, R, ad::membership_hook(tallies[i]), false);
      if (!r.ok)
        bad[i] = g.name() + " holes=" + std::to_string(r.gaps.size()) +
                 " anomalies=" + std::to_string(r.anomaly_ranks.size());
    });
    std::string detail;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      tally.merge(tallies[i]);
      if (!bad[i].empty()) detail += (detail.empty() ? "" : "; ") + bad[i];
    }
    bool pass = detail.empty();
    if (pass)
      detail = std::to_string(grid.size()) +
               " scans to n+5(N-1), every step adds exactly N-1";
    results.push_back({9, "rank tiling beyond the window", pass, detail});
    log("criterion 9 done");
  }

  // 10. the gap bound sharpens the general bound on every instance
  {
    auto grid = ad::canonical_grid();
    std::string detail;
    for (auto [kind, p] : grid) {
      GroupSpec g = GroupSpec::make(kind, p);
      if (!(g.gap_bound() < g.general_gap_bound()))
        detail += (detail.empty() ? "" : "; ") + g.name();
    }
    bool pass = detail.empty();
    if (pass)
      detail = "n < N^2-2N+2 on all " + std::to_string(grid.size()) +
               " instances";
    results.push_back({10, "gap bound below the general bound", pass,
                       detail});
    log("criterion 10 done");
  }

  // 11. every polynomial generated by criteria 3-9 is a member
  {
    bool pass = tally.failures == 0 && tally.polys > 0;
    std::string detail =
        std::to_string(tally.polys) + " polynomials checked, " +
        std::to_string(tally.failures) + " membership failures";
    if (!tally.first_failure.empty())
      detail += " (first: " + tally.first_failure + ")";
    results.push_back({11, "membership across the whole matrix", pass,
                       detail});
    log("criterion 11 done");
  }

  // 12. extracted maps send the unit sphere to the unit sphere (1e-12)
  {
    GroupSpec g = GroupSpec::make(GroupKind::Seven, 7);
    const Poly f = canonical_polynomial(g);
    std::vector<Poly> polys{f, family_member(g, {-1, 3}),
                            family_member(g, {0, 4}),
                            family_member(g, {4, 6})};
    auto points = ad::unit_sphere_moduli(100, 0x5eedc0de2024ULL);
    double worst = 0;
    bool pass = true;
    for (const Poly& P : polys) {
      SphereMap m = extract_sphere_map(P, g, 50);
      for (const auto& x : points) {
        double sum = 0;
        for (const MapComponent& c : m.components) {
          double s = std::stod(c.sqrt_coeff);
          double term = s * s;
          for (int i = 0; i < 3; ++i)
            for (std::uint32_t k = 0; k < c.exp[i]; ++k) term *= x[i];
          sum += term;
        }
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
    pass = worst <= 1e-12;
    std::ostringstream os;
    os << "4 maps x 100 unit-sphere points, max |sum-1| = "
       << std::scientific << std::setprecision(2) << worst
       << (pass ? " <= 1e-12" : " EXCEEDS 1e-12");
    results.push_back({12, "sphere map smoke test", pass, os.str()});
    log("criterion 12 done");
  }

  return results;
}

/// Renders the deterministic pass/fail table (one line per criterion).
inline bool print_acceptance(std::ostream& os,
                             const std::vector<CriterionResult>& results) {
  bool all = true;
  for (const CriterionResult& r : results) {
    os << "[" << std::setw(2) << r.id << "] " << std::left << std::setw(42)
       << r.name << std::right << (r.pass ? "PASS" : "FAIL") << "  "
       << r.detail << "\n";
    all = all && r.pass;
  }
  os << (all ? "ALL CRITERIA PASSED" : "CRITERIA FAILED") << "\n";
  return all;
}

}  // namespace crmaps

#endif  // CRMAPS_ACCEPTANCE_HPP
