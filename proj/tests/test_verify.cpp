#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>
#include <vector>

#include "crmaps/report_io.hpp"
#include "crmaps/verify.hpp"

#include "brute.hpp"

using namespace crmaps;

TEST_CASE("hyperplane restriction") {
  Poly x1 = Poly::variable(3, 0), x2 = Poly::variable(3, 1),
       x3 = Poly::variable(3, 2);

  for (auto kindp : std::vector<std::pair<GroupKind, int>>{
           {GroupKind::G1, 5}, {GroupKind::Scalar, 4}, {GroupKind::Seven, 7}})
    CHECK(hyperplane_restriction(canonical_polynomial(
              GroupSpec::make(kindp.first, kindp.second))) ==
          Poly::constant(2, 1));

  // x1 + x2 is unchanged by the substitution and is not the constant 1
  Poly r = hyperplane_restriction(x1 + x2);
  CHECK(r == Poly::variable(2, 0) + Poly::variable(2, 1));

  CHECK(hyperplane_restriction((x1 + x2 + x3).pow(6)) ==
        Poly::constant(2, 1));
  CHECK_THROWS_AS(hyperplane_restriction(Poly::variable(2, 0)),
                  std::invalid_argument);
}

TEST_CASE("fast hyperplane check agrees with the rational restriction") {
  brute::Gen gen(0xfeed);
  for (int trial = 0; trial < 40; ++trial) {
    Poly P(3);
    int n = gen.uniform(0, 6);
    for (int t = 0; t < n; ++t)
      P.add_term(Exponent{static_cast<std::uint32_t>(gen.uniform(0, 3)),
                          static_cast<std::uint32_t>(gen.uniform(0, 3)),
                          static_cast<std::uint32_t>(gen.uniform(0, 3))},
                 Rational(gen.rational()));
    bool fast = detail::restricts_to_one(P);
    bool slow = hyperplane_restriction(P) == Poly::constant(2, 1);
    CHECK(fast == slow);
  }
  // and on a true member with 1/2 factors
  GroupSpec g = GroupSpec::make(GroupKind::Scalar, 3);
  Poly member = family_member(g, {2, 3});
  CHECK(detail::restricts_to_one(member));
}

TEST_CASE("membership flags") {
  GroupSpec seven = GroupSpec::make(GroupKind::Seven, 7);
  MembershipReport good =
      check_membership(family_member(seven, {2, 6}), seven);
  CHECK(good.nonneg_ok);
  CHECK(good.hyperplane_ok);
  CHECK(good.weights_ok);
  CHECK(good.ok());
  CHECK(good.offending_terms.empty());

  GroupSpec s2 = GroupSpec::make(GroupKind::Scalar, 2);
  MembershipReport bad = check_membership(Poly::variable(3, 0), s2);
  CHECK(!bad.hyperplane_ok);
  CHECK(!bad.weights_ok);
  CHECK(bad.nonneg_ok);
  CHECK(!bad.ok());

  // inject a negative coefficient: f - 2 x1^p + x1^p
  Poly f = canonical_polynomial(s2);
  Poly tampered = f;
  tampered.add_term(Exponent{2, 0, 0}, -2);
  MembershipReport neg = check_membership(tampered, s2);
  CHECK(!neg.nonneg_ok);
  CHECK(neg.offending_terms.size() == 1);
}

TEST_CASE("chain rank law spot checks") {
  RankLawReport r = check_rank_law(RankLaw::Chain, GroupKind::G1, 3, 3);
  REQUIRE(r.instances.size() == 4);
  std::vector<long long> got;
  for (const LawInstance& i : r.instances) got.push_back(i.computed);
  CHECK(got == std::vector<long long>{13, 15, 17, 19});
  CHECK(r.ok);

  RankLawReport g2 = check_rank_law(RankLaw::Chain, GroupKind::G2, 3, 3);
  std::vector<long long> got2;
  for (const LawInstance& i : g2.instances) got2.push_back(i.computed);
  CHECK(got2 == std::vector<long long>{13, 15, 17, 19});
  CHECK(!g2.schedule_note.empty());

  // p = 7, m = 0: 2N - 1 = 41
  RankLawReport r7 = check_rank_law(RankLaw::Chain, GroupKind::G1, 7, 7);
  CHECK(r7.instances.front().computed == 41);

  CHECK_THROWS_AS(check_rank_law(RankLaw::Chain, GroupKind::Scalar, 3, 3),
                  std::invalid_argument);
}

TEST_CASE("mixed chain rank law spot checks") {
  RankLawReport r = check_rank_law(RankLaw::MixedChain, GroupKind::G1, 3, 3);
  CHECK(r.ok);
  auto find = [&](int m0, int m) {
    for (const LawInstance& i : r.instances)
      if (i.m0 == m0 && i.m == m) return i.computed;
    return -1LL;
  };
  CHECK(find(0, 0) == 14);
  CHECK(find(1, 1) == 17);

  RankLawReport g2 = check_rank_law(RankLaw::MixedChain, GroupKind::G2, 5, 5);
  CHECK(g2.ok);
  for (const LawInstance& i : g2.instances)
    if (i.m0 == 2 && i.m == 4) CHECK(i.computed == 38);
}

TEST_CASE("scalar rank law spot checks") {
  RankLawReport r = check_rank_law(RankLaw::ScalarMixed, GroupKind::Scalar,
                                   2, 3);
  CHECK(r.ok);
  auto find = [&](int p, int m0, int m) {
    for (const LawInstance& i : r.instances)
      if (i.p == p && i.m0 == m0 && i.m == m) return i.computed;
    return -1LL;
  };
  CHECK(find(2, -1, 0) == 11);
  CHECK(find(2, -1, 1) == 13);
  CHECK(find(3, -1, 0) == 19);  // (p+2)(p+1) - 1
}

TEST_CASE("scalar x3^p rank law spot checks") {
  RankLawReport r =
      check_rank_law(RankLaw::ScalarH, GroupKind::Scalar, 3, 4);
  CHECK(r.ok);
  auto find = [&](int p, int m0, int m) {
    for (const LawInstance& i : r.instances)
      if (i.p == p && i.m0 == m0 && i.m == m) return i.computed;
    return -1LL;
  };
  CHECK(find(3, -1, 2) == 31);
  CHECK(find(3, 0, 2) == 32);
  CHECK(find(4, 1, 3) == 53);
  // the law starts at m = 2
  for (const LawInstance& i : r.instances) CHECK(i.m >= 2);
}

TEST_CASE("law checks pass every generated polynomial through the hook") {
  long long seen = 0;
  PolyHook hook = [&](const Poly& P, const GroupSpec& g) {
    ++seen;
    CHECK(check_membership(P, g).ok());
  };
  RankLawReport r =
      check_rank_law(RankLaw::ScalarMixed, GroupKind::Scalar, 2, 2, hook);
  CHECK(seen == static_cast<long long>(r.instances.size()));
}

TEST_CASE("window coverage") {
  CoverageReport seven =
      check_window(GroupSpec::make(GroupKind::Seven, 7));
  CHECK(seven.window_lo == 56);
  CHECK(seven.window_hi == 71);
  CHECK(seven.gaps.empty());
  CHECK(seven.ok);

  CoverageReport s2 = check_window(GroupSpec::make(GroupKind::Scalar, 2));
  CHECK(s2.window_lo == 11);
  CHECK(s2.window_hi == 15);
  CHECK(s2.ok);

  CoverageReport g13 = check_window(GroupSpec::make(GroupKind::G1, 3));
  CHECK(g13.window_lo == 13);
  CHECK(g13.window_hi == 18);
  CHECK(g13.ok);

  // scalar p = 5 exercises the Euclidean-division witnesses
  CoverageReport s5 = check_window(GroupSpec::make(GroupKind::Scalar, 5));
  CHECK(s5.window_lo == 56);
  CHECK(s5.window_hi == 75);
  CHECK(s5.ok);
  bool used_h = false, used_top = false;
  for (const CoverageEntry& e : s5.achieved) {
    used_h = used_h || e.witness.h_applied;
    used_top = used_top || e.witness.top_steps > 0;
  }
  CHECK(used_h);
  CHECK(used_top);
}

TEST_CASE("window witnesses are recomputable") {
  GroupSpec g = GroupSpec::make(GroupKind::Scalar, 5);
  Poly f = canonical_polynomial(g);
  Schedule sch = schedule_for(g);
  CoverageReport r = check_window(g);
  for (const CoverageEntry& e : r.achieved) {
    Poly P = family_member(sch, f, {e.witness.m0, e.witness.m});
    if (e.witness.h_applied) P = apply_h(P, f, g.p());
    for (int s = 0; s < e.witness.top_steps; ++s) P = top_multiply(P, f);
    CHECK(P.rank() == e.rank);
    CHECK(P == e.poly);
  }
}

TEST_CASE("coverage scan tiles every rank up to the ceiling") {
  CoverageReport seven =
      coverage_scan(GroupSpec::make(GroupKind::Seven, 7), 120);
  CHECK(seven.gaps.empty());
  CHECK(seven.anomaly_ranks.empty());
  for (long long inc : seven.increments) CHECK(inc == 16);
  std::set<long long> have;
  for (const CoverageEntry& e : seven.achieved) have.insert(e.rank);
  for (long long r = 56; r <= 120; ++r) CHECK(have.count(r) == 1);

  CoverageReport s2 = coverage_scan(GroupSpec::make(GroupKind::Scalar, 2),
                                    40);
  CHECK(s2.ok);
  for (long long inc : s2.increments) CHECK(inc == 5);

  GroupSpec g15 = GroupSpec::make(GroupKind::G1, 5);
  CoverageReport g = coverage_scan(g15, g15.gap_bound() +
                                            3 * (g15.canonical_rank() - 1));
  CHECK(g15.gap_bound() == 28);
  CHECK(g15.canonical_rank() == 13);
  CHECK(g.ok);

  CHECK_THROWS_AS(coverage_scan(g15, 10), std::invalid_argument);
}

TEST_CASE("sphere map extraction") {
  GroupSpec s2 = GroupSpec::make(GroupKind::Scalar, 2);
  SphereMap m = extract_sphere_map(canonical_polynomial(s2), s2, 30);
  REQUIRE(m.components.size() == 6);
  CHECK(m.target_dimension == 6);
  CHECK(m.minimal_embedding_dimension == 6);
  int sqrt2 = 0, ones = 0;
  for (const MapComponent& c : m.components) {
    if (c.coeff_sq == 2) {
      ++sqrt2;
      CHECK(c.sqrt_coeff.substr(0, 12) == "1.4142135623");
    }
    if (c.coeff_sq == 1) {
      ++ones;
      CHECK(c.sqrt_coeff.substr(0, 4) == "1.00");
    }
  }
  CHECK(sqrt2 == 3);
  CHECK(ones == 3);

  GroupSpec g13 = GroupSpec::make(GroupKind::G1, 3);
  SphereMap m7 = extract_sphere_map(canonical_polynomial(g13), g13, 20);
  REQUIRE(m7.components.size() == 7);
  int sqrt3 = 0;
  for (const MapComponent& c : m7.components)
    if (c.coeff_sq == 3) {
      ++sqrt3;
      CHECK(c.sqrt_coeff.substr(0, 6) == "1.7320");
    }
  CHECK(sqrt3 == 4);  // 3 x1^2 x2, 3 x1 x2^2, 3 x1 x3, 3 x2 x3

  GroupSpec seven = GroupSpec::make(GroupKind::Seven, 7);
  SphereMap ms = extract_sphere_map(canonical_polynomial(seven), seven, 15);
  std::set<Rational> coeffs;
  for (const MapComponent& c : ms.components) coeffs.insert(c.coeff_sq);
  CHECK(coeffs == std::set<Rational>{1, 7, 14});

  CHECK_THROWS_AS(extract_sphere_map(Poly::variable(3, 0), s2, 10),
                  membership_error);
}

TEST_CASE("sqrt decimals") {
  CHECK(sqrt_decimal(Rational(4), 5) == "2.00000");
  CHECK(sqrt_decimal(Rational(2), 10) == "1.4142135623");
  CHECK(sqrt_decimal(Rational(1, 4), 4) == "0.5000");
  CHECK(sqrt_decimal(Rational(7), 8) == "2.64575131");
}

TEST_CASE("explorer") {
  GroupSpec s2 = GroupSpec::make(GroupKind::Scalar, 2);
  ExploreResult depth0 = explore_ranks(s2, 0, 10);
  REQUIRE(depth0.ranks.size() == 1);
  CHECK(depth0.ranks.begin()->first == 6);

  ExploreResult depth1 = explore_ranks(s2, 1, 100);
  CHECK(depth1.ranks.count(11) == 1);
  CHECK(depth1.ranks.count(12) == 1);

  GroupSpec seven = GroupSpec::make(GroupKind::Seven, 7);
  ExploreResult sd1 = explore_ranks(seven, 1, 100);
  CHECK(sd1.ranks.count(33) == 1);
  CHECK(sd1.ranks.count(34) == 1);

  // witnesses replay to the recorded rank
  Poly f = canonical_polynomial(seven);
  for (const auto& [rank_value, moves] : sd1.ranks)
    CHECK(apply_moves(f, moves, f).rank() == rank_value);
}

TEST_CASE("report emitters") {
  GroupSpec g = GroupSpec::make(GroupKind::G2, 3);
  Json cj = to_json(verify_canonical(g));
  CHECK(cj["ok"] == true);
  CHECK(cj["expected_rank"] == 7);

  std::ostringstream member_text;
  print_text(member_text, check_membership(canonical_polynomial(g), g));
  CHECK(member_text.str().find("member                    yes") !=
        std::string::npos);

  CoverageReport w = check_window(g);
  std::ostringstream cov_csv;
  print_csv(cov_csv, w);
  CHECK(cov_csv.str().find("13,f[m0=-1,m=0]") != std::string::npos);
  Json wj = to_json(w, true);
  CHECK(wj["window"][0] == 13);
  CHECK(wj["achieved"][0]["polynomial"]["arity"] == 3);
  CHECK(!wj["schedule_note"].get<std::string>().empty());
}
