#include <catch2/catch_amalgamated.hpp>

#include "crmaps/group.hpp"

using namespace crmaps;

TEST_CASE("group construction and validation") {
  GroupSpec g1 = GroupSpec::make(GroupKind::G1, 3);
  CHECK(g1.weights() == std::array<int, 3>{1, 1, 2});
  CHECK(g1.k() == 1);

  GroupSpec seven = GroupSpec::make(GroupKind::Seven, 7);
  CHECK(seven.weights() == std::array<int, 3>{1, 2, 4});

  CHECK_THROWS_AS(GroupSpec::make(GroupKind::G1, 4), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(GroupKind::G2, 2), std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(GroupKind::Scalar, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(GroupSpec::make(GroupKind::Seven, 5),
                  std::invalid_argument);
}

TEST_CASE("canonical rank formulas") {
  CHECK(GroupSpec::make(GroupKind::Seven, 7).canonical_rank() == 17);
  CHECK(GroupSpec::make(GroupKind::Scalar, 2).canonical_rank() == 6);
  CHECK(GroupSpec::make(GroupKind::G2, 5).canonical_rank() == 12);
  CHECK(GroupSpec::make(GroupKind::G1, 3).canonical_rank() == 7);

  // the closed-form numerators are divisible for every admissible p
  for (int p = 3; p <= 41; p += 2) {
    CHECK((p * p + 4 * p + 7) % 4 == 0);
    CHECK((p * p + 12 * p + 11) % 8 == 0);
    CHECK(GroupSpec::make(GroupKind::G1, p).canonical_rank() > 0);
    CHECK(GroupSpec::make(GroupKind::G2, p).canonical_rank() > 0);
  }
}

TEST_CASE("gap bound formulas") {
  CHECK(GroupSpec::make(GroupKind::Seven, 7).gap_bound() == 56);
  CHECK(GroupSpec::make(GroupKind::Scalar, 2).gap_bound() == 11);
  CHECK(GroupSpec::make(GroupKind::G1, 3).gap_bound() == 13);
}

TEST_CASE("general bound and the headline inequality") {
  CHECK(GroupSpec::make(GroupKind::Seven, 7).general_gap_bound() == 257);
  CHECK(GroupSpec::make(GroupKind::G1, 3).general_gap_bound() == 37);
  CHECK(GroupSpec::make(GroupKind::Scalar, 2).general_gap_bound() == 26);

  for (int p = 3; p <= 31; p += 2) {
    GroupSpec a = GroupSpec::make(GroupKind::G1, p);
    GroupSpec b = GroupSpec::make(GroupKind::G2, p);
    CHECK(a.gap_bound() < a.general_gap_bound());
    CHECK(b.gap_bound() < b.general_gap_bound());
  }
  for (int p = 2; p <= 20; ++p) {
    GroupSpec s = GroupSpec::make(GroupKind::Scalar, p);
    CHECK(s.gap_bound() < s.general_gap_bound());
  }
}

TEST_CASE("weight residues") {
  GroupSpec seven = GroupSpec::make(GroupKind::Seven, 7);
  CHECK(seven.weight_residue(Exponent{1, 2, 0}) == 5);

  for (int p : {3, 5, 9}) {
    GroupSpec g1 = GroupSpec::make(GroupKind::G1, p);
    for (int j = 0; j <= p; ++j)
      CHECK(g1.weight_residue(Exponent{static_cast<std::uint32_t>(p - j),
                                       static_cast<std::uint32_t>(j), 0}) ==
            0);
  }

  GroupSpec s5 = GroupSpec::make(GroupKind::Scalar, 5);
  CHECK(s5.weight_residue(Exponent{2, 2, 1}) == 0);
  CHECK(s5.weight_residue(Exponent{2, 2, 2}) == 1);
}

TEST_CASE("weight residue is additive mod p") {
  for (GroupKind kind :
       {GroupKind::G1, GroupKind::G2, GroupKind::Scalar, GroupKind::Seven}) {
    int p = kind == GroupKind::Seven ? 7 : kind == GroupKind::Scalar ? 6 : 9;
    GroupSpec g = GroupSpec::make(kind, p);
    for (std::uint32_t a = 0; a < 3; ++a)
      for (std::uint32_t b = 0; b < 3; ++b)
        for (std::uint32_t c = 0; c < 3; ++c) {
          Exponent e1{a, b, c}, e2{c, a, b};
          CHECK(g.weight_residue(e1 + e2) ==
                (g.weight_residue(e1) + g.weight_residue(e2)) % g.p());
        }
  }
}

TEST_CASE("group kind names round-trip") {
  for (GroupKind kind :
       {GroupKind::G1, GroupKind::G2, GroupKind::Scalar, GroupKind::Seven})
    CHECK(parse_group_kind(to_string(kind)) == kind);
  CHECK(!parse_group_kind("g3"));
}
