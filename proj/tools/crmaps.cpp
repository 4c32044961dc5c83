// crmaps: exact constructions and machine checks for group-invariant
// sphere-map polynomials on the four admissible cyclic subgroups of U(3).

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "crmaps/acceptance.hpp"
#include "crmaps/report_io.hpp"

namespace {

using namespace crmaps;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct GroupFlags {
  std::string group;
  int p = 0;

  GroupSpec resolve() const {
    auto kind = parse_group_kind(group);
    if (!kind)
      throw std::invalid_argument(
          "unknown group \"" + group + "\" (expected g1|g2|scalar|seven)");
    return GroupSpec::make(*kind, p);
  }
};

void add_group_flags(CLI::App* cmd, GroupFlags& gf) {
  cmd->add_option("--group", gf.group, "group: g1|g2|scalar|seven")
      ->required();
  cmd->add_option("--p", gf.p, "group order p")->required();
}

/// Payload goes to --out when given, else to stdout.
void emit(const std::string& out_path, const Json& payload) {
  if (out_path.empty())
    std::cout << payload.dump(2) << "\n";
  else
    write_json_file(out_path, payload);
}

Schedule load_schedule(const std::string& path, const GroupSpec& g,
                       const Poly& f_gamma) {
  Schedule s{g, schedule_monomials_from_json(load_json_file(path))};
  validate_schedule(s, f_gamma);
  return s;
}

int cmd_canonical(const GroupFlags& gf, const std::string& method,
                  const std::string& out_path) {
  GroupSpec g = gf.resolve();
  if (method == "closed") {
    emit(out_path, poly_to_json(canonical_polynomial(g)));
    return kExitOk;
  }
  if (method == "product") {
    emit(out_path, poly_to_json(group_product_polynomial(g)));
    return kExitOk;
  }
  if (method != "both")
    throw std::invalid_argument("--method must be product|closed|both");
  CanonicalReport r = verify_canonical(g);
  std::cerr << "canonical check " << g.name() << ": "
            << (r.ok() ? "constructions agree" : "MISMATCH") << " (rank "
            << r.closed_rank << ", expected " << r.expected_rank << ")\n";
  emit(out_path, poly_to_json(canonical_polynomial(g)));
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_family(const GroupFlags& gf, int m0, int m,
               const std::string& schedule_path,
               const std::string& out_path) {
  GroupSpec g = gf.resolve();
  Poly f = canonical_polynomial(g);
  Schedule sch = schedule_path.empty() ? schedule_for(g)
                                       : load_schedule(schedule_path, g, f);
  Poly member = family_member(sch, f, FamilyIndex{m0, m});
  std::cerr << "family member (m0=" << m0 << ", m=" << m << ") of "
            << g.name() << " has rank " << member.rank() << "\n";
  emit(out_path, poly_to_json(member));
  return kExitOk;
}

int cmd_iterate(const GroupFlags& gf, const std::string& in_path,
                const std::string& moves_path, const std::string& out_path) {
  GroupSpec g = gf.resolve();
  Poly P = poly_from_json(load_json_file(in_path));
  if (P.arity() != 3)
    throw std::invalid_argument("iterate expects an arity-3 polynomial");
  std::vector<Move> moves = moves_from_json(load_json_file(moves_path), 3);
  Poly out = apply_moves(P, moves, canonical_polynomial(g));
  std::cerr << "applied " << moves.size() << " moves: rank " << P.rank()
            << " -> " << out.rank() << "\n";
  emit(out_path, poly_to_json(out));
  return kExitOk;
}

int cmd_rank(const std::string& in_path) {
  Poly P = poly_from_json(load_json_file(in_path));
  std::cout << P.rank() << "\n";
  return kExitOk;
}

int cmd_verify(const GroupFlags& gf, const std::string& in_path,
               const std::string& format) {
  GroupSpec g = gf.resolve();
  Poly P = poly_from_json(load_json_file(in_path));
  MembershipReport r = check_membership(P, g);
  if (format == "json")
    std::cout << to_json(r).dump(2) << "\n";
  else
    print_text(std::cout, r);
  return r.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_lemmas(const GroupFlags& gf, int p_min, int p_max,
               const std::string& law_flag, const std::string& schedule_path,
               const std::string& format, bool csv) {
  auto kind = parse_group_kind(gf.group);
  if (!kind)
    throw std::invalid_argument("unknown group \"" + gf.group + "\"");
  std::vector<RankLaw> laws;
  if (!law_flag.empty()) {
    auto law = parse_law_id(law_flag);
    if (!law)
      throw std::invalid_argument("--law must be one of 1|c1|2|3");
    laws.push_back(*law);
  } else if (*kind == GroupKind::G1 || *kind == GroupKind::G2) {
    laws = {RankLaw::Chain, RankLaw::MixedChain};
  } else if (*kind == GroupKind::Scalar) {
    laws = {RankLaw::ScalarMixed, RankLaw::ScalarH};
  } else {
    throw std::invalid_argument(
        "no closed-form rank law applies to seven; use coverage instead");
  }

  std::optional<Schedule> custom;
  if (!schedule_path.empty()) {
    if (p_min != p_max)
      throw std::invalid_argument(
          "--schedule requires a single group order (set --p-min = --p-max)");
    GroupSpec g = GroupSpec::make(*kind, p_min);
    custom = load_schedule(schedule_path, g, canonical_polynomial(g));
  }

  bool all_ok = true;
  Json out = Json::array();
  for (RankLaw law : laws) {
    RankLawReport r = check_rank_law(law, *kind, p_min, p_max, {},
                                     custom ? &*custom : nullptr);
    all_ok = all_ok && r.ok;
    if (csv)
      print_csv(std::cout, r);
    else if (format == "json")
      out.push_back(to_json(r));
    else
      print_text(std::cout, r);
  }
  if (!csv && format == "json") std::cout << out.dump(2) << "\n";
  return all_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_coverage(const GroupFlags& gf, long long max_rank,
                 const std::string& format, bool csv,
                 const std::string& out_path) {
  GroupSpec g = gf.resolve();
  if (max_rank == 0)
    max_rank = g.gap_bound() + 5 * (g.canonical_rank() - 1);
  CoverageReport r = coverage_scan(g, max_rank);
  if (!out_path.empty()) write_json_file(out_path, to_json(r, true));
  if (csv)
    print_csv(std::cout, r);
  else if (format == "json")
    std::cout << to_json(r, out_path.empty()).dump(2) << "\n";
  else
    print_text(std::cout, r);
  return r.ok ? kExitOk : kExitVerificationFailed;
}

int cmd_map(const GroupFlags& gf, const std::string& in_path, int precision,
            const std::string& out_path) {
  GroupSpec g = gf.resolve();
  Poly P = poly_from_json(load_json_file(in_path));
  SphereMap m = extract_sphere_map(P, g, precision);
  std::cerr << "map to the sphere in dimension " << m.target_dimension
            << "\n";
  emit(out_path, to_json(m));
  return kExitOk;
}

int cmd_explore(const GroupFlags& gf, int depth, int beam,
                const std::string& out_path) {
  GroupSpec g = gf.resolve();
  ExploreResult r = explore_ranks(g, depth, beam);
  emit(out_path, to_json(r));
  return kExitOk;
}

int cmd_reproduce() {
  std::vector<CriterionResult> results = run_acceptance(&std::cerr);
  bool all = print_acceptance(std::cout, results);
  return all ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "crmaps: exact invariant sphere-map polynomials for the admissible "
      "cyclic subgroups of U(3), their iteration operators, rank laws and "
      "coverage certificates"};
  app.require_subcommand(1);

  GroupFlags gf;
  std::string method = "closed", out_path, in_path, moves_path,
              schedule_path, law_flag, format = "text";
  int m0 = -1, m = 0, depth = 2, beam = 50, precision = 50;
  int p_min = 0, p_max = 0;
  long long max_rank = 0;
  bool csv = false;

  auto* canonical =
      app.add_subcommand("canonical", "build the canonical invariant "
                                      "polynomial (closed form, cyclotomic "
                                      "product, or both with cross-check)");
  add_group_flags(canonical, gf);
  canonical->add_option("--method", method, "product|closed|both")
      ->default_val("closed");
  canonical->add_option("--out", out_path, "write the polynomial here");

  auto* family = app.add_subcommand(
      "family", "build the family member f_{m0,m} along the group's "
                "iteration schedule");
  add_group_flags(family, gf);
  family->add_option("--m0", m0, "half-split prefix end (-1 for none)")
      ->required();
  family->add_option("--m", m, "last schedule entry rewritten")->required();
  family->add_option("--schedule", schedule_path,
                     "JSON file with a custom schedule");
  family->add_option("--out", out_path, "write the polynomial here");

  auto* iterate = app.add_subcommand(
      "iterate", "apply an explicit move list to a polynomial");
  add_group_flags(iterate, gf);
  iterate->add_option("--in", in_path, "input polynomial JSON")->required();
  iterate->add_option("--moves", moves_path, "moves JSON")->required();
  iterate->add_option("--out", out_path, "write the polynomial here");

  auto* rank_cmd =
      app.add_subcommand("rank", "print the rank of a polynomial");
  rank_cmd->add_option("--in", in_path, "input polynomial JSON")->required();

  auto* verify = app.add_subcommand(
      "verify", "check membership: nonnegative coefficients, restriction 1 "
                "on the hyperplane, invariant monomials");
  add_group_flags(verify, gf);
  verify->add_option("--in", in_path, "input polynomial JSON")->required();
  verify->add_option("--format", format, "text|json")->default_val("text");

  auto* lemmas = app.add_subcommand(
      "lemmas", "machine-check the rank laws over a range of group orders");
  lemmas->add_option("--group", gf.group, "group: g1|g2|scalar")->required();
  lemmas->add_option("--p-min", p_min, "smallest group order")->required();
  lemmas->add_option("--p-max", p_max, "largest group order")->required();
  lemmas->add_option("--law", law_flag, "1|c1|2|3 (default: all that apply)");
  lemmas->add_option("--schedule", schedule_path,
                     "JSON file with a custom schedule (single p only)");
  lemmas->add_option("--format", format, "text|json")->default_val("text");
  lemmas->add_flag("--csv", csv, "emit CSV rank tables instead");

  auto* coverage = app.add_subcommand(
      "coverage", "certify achieved ranks from the gap bound upward");
  add_group_flags(coverage, gf);
  coverage->add_option("--max-rank", max_rank,
                       "certificate ceiling (default n + 5(N-1))");
  coverage->add_option("--format", format, "text|json")->default_val("text");
  coverage->add_flag("--csv", csv, "emit a CSV rank table instead");
  coverage->add_option("--out", out_path,
                       "write the full JSON report (with witness "
                       "polynomials) here");

  auto* map_cmd = app.add_subcommand(
      "map", "extract the monomial sphere map induced by a member "
             "polynomial");
  add_group_flags(map_cmd, gf);
  map_cmd->add_option("--in", in_path, "input polynomial JSON")->required();
  map_cmd->add_option("--precision", precision,
                      "decimal digits of each sqrt coefficient")
      ->default_val(50);
  map_cmd->add_option("--out", out_path, "write the map here");

  auto* explore = app.add_subcommand(
      "explore", "breadth-first search over single moves, recording "
                 "observed ranks");
  add_group_flags(explore, gf);
  explore->add_option("--depth", depth, "move-sequence length bound")
      ->default_val(2);
  explore->add_option("--beam", beam, "frontier size bound")
      ->default_val(50);
  explore->add_option("--out", out_path, "write the result here");

  app.add_subcommand("reproduce",
                     "run the complete verification matrix and print one "
                     "pass/fail line per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (canonical->parsed()) return cmd_canonical(gf, method, out_path);
    if (family->parsed())
      return cmd_family(gf, m0, m, schedule_path, out_path);
    if (iterate->parsed())
      return cmd_iterate(gf, in_path, moves_path, out_path);
    if (rank_cmd->parsed()) return cmd_rank(in_path);
    if (verify->parsed()) return cmd_verify(gf, in_path, format);
    if (lemmas->parsed())
      return cmd_lemmas(gf, p_min, p_max, law_flag, schedule_path, format,
                        csv);
    if (coverage->parsed())
      return cmd_coverage(gf, max_rank, format, csv, out_path);
    if (map_cmd->parsed()) return cmd_map(gf, in_path, precision, out_path);
    if (explore->parsed()) return cmd_explore(gf, depth, beam, out_path);
    return cmd_reproduce();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const membership_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const internal_error& e) {
    std::cerr << "internal invariant violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
