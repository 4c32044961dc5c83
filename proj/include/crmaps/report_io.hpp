#ifndef CRMAPS_REPORT_IO_HPP
#define CRMAPS_REPORT_IO_HPP

#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>

#include "crmaps/poly_json.hpp"
#include "crmaps/verify.hpp"

namespace crmaps {

// ------------------------------ membership -------------------------------

inline Json to_json(const MembershipReport& r) {
  Json off = Json::array();
  for (const Exponent& e : r.offending_terms) {
    Json exp = Json::array();
    for (int i = 0; i < e.arity(); ++i) exp.push_back(e[i]);
    off.push_back(std::move(exp));
  }
  return Json{{"member", r.ok()},
              {"nonneg", r.nonneg_ok},
              {"hyperplane", r.hyperplane_ok},
              {"weights", r.weights_ok},
              {"offending_terms", std::move(off)}};
}

inline void print_text(std::ostream& os, const MembershipReport& r) {
  auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
  os << "nonnegative coefficients  " << flag(r.nonneg_ok) << "\n"
     << "hyperplane restriction=1  " << flag(r.hyperplane_ok) << "\n"
     << "invariant monomials       " << flag(r.weights_ok) << "\n"
     << "member                    " << (r.ok() ? "yes" : "NO") << "\n";
  if (!r.offending_terms.empty()) {
    os << "offending terms:";
    for (const Exponent& e : r.offending_terms) os << " " << to_string(e);
    os << "\n";
  }
}

// ------------------------------- rank laws -------------------------------

inline Json to_json(const RankLawReport& r) {
  Json instances = Json::array();
  for (const LawInstance& i : r.instances)
    instances.push_back(Json{{"p", i.p},
                             {"m0", i.m0},
                             {"m", i.m},
                             {"expected", i.expected},
                             {"computed", i.computed},
                             {"ok", i.ok}});
  Json j{{"law", law_id(r.law)},
         {"group", to_string(r.kind)},
         {"p_min", r.p_min},
         {"p_max", r.p_max},
         {"ok", r.ok},
         {"instances", std::move(instances)}};
  if (!r.schedule_note.empty()) j["schedule_note"] = r.schedule_note;
  return j;
}

inline void print_text(std::ostream& os, const RankLawReport& r) {
  os << "rank law " << law_id(r.law) << "  group " << to_string(r.kind)
     << "  p in [" << r.p_min << ", " << r.p_max << "]\n";
  if (!r.schedule_note.empty()) os << "note: " << r.schedule_note << "\n";
  os << std::setw(4) << "p" << std::setw(5) << "m0" << std::setw(4) << "m"
     << std::setw(10) << "expected" << std::setw(10) << "computed"
     << "  verdict\n";
  for (const LawInstance& i : r.instances)
    os << std::setw(4) << i.p << std::setw(5) << i.m0 << std::setw(4) << i.m
       << std::setw(10) << i.expected << std::setw(10) << i.computed << "  "
       << (i.ok ? "ok" : "MISMATCH") << "\n";
  os << (r.ok ? "all instances match" : "MISMATCHES FOUND") << "\n";
}

inline void print_csv(std::ostream& os, const RankLawReport& r) {
  os << "law,group,p,m0,m,expected,computed,ok\n";
  for (const LawInstance& i : r.instances)
    os << law_id(r.law) << "," << to_string(r.kind) << "," << i.p << ","
       << i.m0 << "," << i.m << "," << i.expected << "," << i.computed << ","
       << (i.ok ? 1 : 0) << "\n";
}

// ------------------------------- coverage --------------------------------

inline Json to_json(const CoverageReport& r, bool include_polys = true) {
  Json achieved = Json::array();
  for (const CoverageEntry& e : r.achieved) {
    Json w{{"rank", e.rank},
           {"witness", e.witness.describe()},
           {"m0", e.witness.m0},
           {"m", e.witness.m},
           {"h_applied", e.witness.h_applied},
           {"top_steps", e.witness.top_steps}};
    if (include_polys && !e.poly.is_zero())
      w["polynomial"] = poly_to_json(e.poly);
    achieved.push_back(std::move(w));
  }
  Json j{{"group", to_string(r.kind)},
         {"p", r.p},
         {"canonical_rank", r.canonical_rank},
         {"gap_bound", r.gap_bound},
         {"general_bound", r.general_bound},
         {"window", Json::array({r.window_lo, r.window_hi})},
         {"max_rank", r.max_rank},
         {"ok", r.ok},
         {"gaps", r.gaps},
         {"increments", r.increments},
         {"increment_anomalies", r.anomaly_ranks},
         {"achieved", std::move(achieved)}};
  if (!r.schedule_note.empty()) j["schedule_note"] = r.schedule_note;
  return j;
}

inline void print_text(std::ostream& os, const CoverageReport& r) {
  os << "group " << to_string(r.kind) << "  p=" << r.p << "  N="
     << r.canonical_rank << "  gap bound n=" << r.gap_bound
     << "  (general bound " << r.general_bound << ")\n"
     << "window [" << r.window_lo << ", " << r.window_hi << "]"
     << "  certified up to " << r.max_rank << "\n";
  if (!r.schedule_note.empty()) os << "note: " << r.schedule_note << "\n";
  os << std::setw(6) << "rank" << "  witness\n";
  for (const CoverageEntry& e : r.achieved)
    os << std::setw(6) << e.rank << "  " << e.witness.describe() << "\n";
  if (!r.gaps.empty()) {
    os << "HOLES:";
    for (long long g : r.gaps) os << " " << g;
    os << "\n";
  }
  if (!r.anomaly_ranks.empty()) {
    os << "INCREMENT ANOMALIES at ranks:";
    for (long long g : r.anomaly_ranks) os << " " << g;
    os << "\n";
  }
  os << (r.ok ? "coverage certified" : "COVERAGE FAILED") << "\n";
}

inline void print_csv(std::ostream& os, const CoverageReport& r) {
  os << "rank,witness,m0,m,h_applied,top_steps,in_window\n";
  for (const CoverageEntry& e : r.achieved)
    os << e.rank << "," << e.witness.describe() << "," << e.witness.m0 << ","
       << e.witness.m << "," << (e.witness.h_applied ? 1 : 0) << ","
       << e.witness.top_steps << ","
       << ((e.rank >= r.window_lo && e.rank <= r.window_hi) ? 1 : 0) << "\n";
}

// ------------------------------ sphere maps ------------------------------

inline Json to_json(const SphereMap& m) {
  Json comps = Json::array();
  for (const MapComponent& c : m.components) {
    Json exp = Json::array();
    for (int i = 0; i < c.exp.arity(); ++i) exp.push_back(c.exp[i]);
    comps.push_back(Json{{"exp", std::move(exp)},
                         {"coeff_num", numerator(c.coeff_sq).str()},
                         {"coeff_den", denominator(c.coeff_sq).str()},
                         {"sqrt_coeff", c.sqrt_coeff}});
  }
  return Json{{"group", to_string(m.kind)},
              {"p", m.p},
              {"target_dimension", m.target_dimension},
              {"minimal_embedding_dimension", m.minimal_embedding_dimension},
              {"components", std::move(comps)}};
}

// ------------------------------- explorer --------------------------------

inline Json to_json(const ExploreResult& r) {
  Json ranks = Json::array();
  for (const auto& [rank, moves] : r.ranks)
    ranks.push_back(Json{{"rank", rank}, {"moves", moves_to_json(moves)}});
  return Json{{"group", to_string(r.kind)},
              {"p", r.p},
              {"depth", r.depth},
              {"beam", r.beam},
              {"states_expanded", r.states_expanded},
              {"note", "observed ranks only; absence proves nothing"},
              {"ranks", std::move(ranks)}};
}

inline void print_text(std::ostream& os, const ExploreResult& r) {
  os << "group " << to_string(r.kind) << "  p=" << r.p << "  depth "
     << r.depth << "  beam " << r.beam << "  (" << r.states_expanded
     << " states expanded)\n"
     << "observed ranks only; absence proves nothing\n"
     << std::setw(6) << "rank" << "  witness moves\n";
  for (const auto& [rank, moves] : r.ranks) {
    os << std::setw(6) << rank << " ";
    if (moves.empty()) os << " (start)";
    for (const Move& m : moves)
      os << " " << mode_letter(m.mode) << to_string(m.mu);
    os << "\n";
  }
}

// ------------------------------- canonical -------------------------------

inline Json to_json(const CanonicalReport& r) {
  Json mism = Json::array();
  for (const Exponent& e : r.mismatches) {
    Json exp = Json::array();
    for (int i = 0; i < e.arity(); ++i) exp.push_back(e[i]);
    mism.push_back(std::move(exp));
  }
  return Json{{"ok", r.ok()},
              {"constructions_equal", r.equal},
              {"coefficients_positive", r.positive},
              {"rank_matches", r.rank_ok},
              {"expected_rank", r.expected_rank},
              {"closed_rank", r.closed_rank},
              {"product_rank", r.product_rank},
              {"mismatched_monomials", std::move(mism)}};
}

}  // namespace crmaps

#endif  // CRMAPS_REPORT_IO_HPP
