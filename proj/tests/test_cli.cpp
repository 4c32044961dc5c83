// End-to-end checks of the crmaps binary: exit codes, payload formats and
// byte determinism. The binary path comes from the build system.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <string>

#include "crmaps/poly_json.hpp"

#ifndef CRMAPS_BIN_PATH
#error "CRMAPS_BIN_PATH must point at the crmaps binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(CRMAPS_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_path(const std::string& name) {
  return std::string("cli_test_") + name;
}

}  // namespace

TEST_CASE("canonical emits the 17-term polynomial and cross-checks") {
  RunResult r = run("canonical --group seven --p 7 --method both");
  CHECK(r.exit_code == 0);
  crmaps::Poly p = crmaps::poly_from_json(crmaps::Json::parse(r.out));
  CHECK(p.rank() == 17);
  CHECK(p.coeff(crmaps::Exponent{3, 2, 0}) == 14);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run("rank --in nonexistent.json").exit_code == 2);
  CHECK(run("canonical --group g3 --p 5").exit_code == 2);
  CHECK(run("canonical --group g1 --p 4").exit_code == 2);
  CHECK(run("family --group seven --p 7 --m0 3 --m 1").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("lemmas --group seven --p-min 7 --p-max 7").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("rank round-trips a polynomial file") {
  std::string path = temp_path("poly.json");
  RunResult fam =
      run("family --group scalar --p 2 --m0 -1 --m 1 --out " + path);
  REQUIRE(fam.exit_code == 0);
  RunResult r = run("rank --in " + path);
  CHECK(r.exit_code == 0);
  CHECK(r.out == "13\n");
  std::remove(path.c_str());
}

TEST_CASE("verify distinguishes members from non-members") {
  std::string good = temp_path("member.json");
  REQUIRE(run("canonical --group g1 --p 3 --out " + good).exit_code == 0);
  CHECK(run("verify --group g1 --p 3 --in " + good).exit_code == 0);

  std::string bad = temp_path("nonmember.json");
  std::ofstream(bad) << R"({"arity":3,"terms":[)"
                     << R"({"exp":[1,0,0],"num":"1","den":"1"}]})";
  RunResult r = run("verify --group g1 --p 3 --in " + bad + " --format json");
  CHECK(r.exit_code == 1);
  auto j = crmaps::Json::parse(r.out);
  CHECK(j["member"] == false);
  CHECK(j["hyperplane"] == false);
  std::remove(good.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("iterate applies a move list") {
  std::string poly = temp_path("iter_in.json");
  std::string moves = temp_path("moves.json");
  REQUIRE(run("canonical --group scalar --p 2 --out " + poly).exit_code == 0);
  std::ofstream(moves) << R"([{"exp":[2,0,0],"mode":"F"},)"
                       << R"({"exp":[1,1,0],"mode":"G"}])";
  RunResult r = run("iterate --group scalar --p 2 --in " + poly +
                    " --moves " + moves);
  REQUIRE(r.exit_code == 0);
  crmaps::Poly p = crmaps::poly_from_json(crmaps::Json::parse(r.out));
  CHECK(p.rank() == 14);  // F on x1^2 gives 11, G on x1x2 adds 3 fresh terms
  std::remove(poly.c_str());
  std::remove(moves.c_str());
}

TEST_CASE("lemmas matrix passes and emits CSV on request") {
  CHECK(run("lemmas --group scalar --p-min 2 --p-max 8 --law 2").exit_code ==
        0);
  RunResult csv =
      run("lemmas --group g1 --p-min 3 --p-max 5 --law 1 --csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.rfind("law,group,p,m0,m,expected,computed,ok\n", 0) == 0);
  CHECK(csv.out.find("1,g1,3,-1,0,13,13,1") != std::string::npos);
}

TEST_CASE("coverage certifies the window") {
  RunResult r = run("coverage --group seven --p 7 --max-rank 90");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("window [56, 71]") != std::string::npos);
  CHECK(r.out.find("coverage certified") != std::string::npos);
}

TEST_CASE("map reports components with decimal square roots") {
  std::string poly = temp_path("map_in.json");
  REQUIRE(run("canonical --group seven --p 7 --out " + poly).exit_code == 0);
  RunResult r =
      run("map --group seven --p 7 --precision 12 --in " + poly);
  REQUIRE(r.exit_code == 0);
  auto j = crmaps::Json::parse(r.out);
  CHECK(j["target_dimension"] == 17);
  CHECK(j["components"].size() == 17);
  bool saw_sqrt14 = false;
  for (const auto& c : j["components"])
    if (c["coeff_num"] == "14")
      saw_sqrt14 = c["sqrt_coeff"].get<std::string>().substr(0, 6) == "3.7416";
  CHECK(saw_sqrt14);

  // non-members are rejected with exit 1
  std::string bad = temp_path("map_bad.json");
  std::ofstream(bad) << R"({"arity":3,"terms":[)"
                     << R"({"exp":[1,0,0],"num":"1","den":"1"}]})";
  CHECK(run("map --group seven --p 7 --in " + bad).exit_code == 1);
  std::remove(poly.c_str());
  std::remove(bad.c_str());
}

TEST_CASE("explore reports observed ranks") {
  RunResult r = run("explore --group scalar --p 2 --depth 1 --beam 50");
  REQUIRE(r.exit_code == 0);
  auto j = crmaps::Json::parse(r.out);
  CHECK(j["note"].get<std::string>().find("observed") != std::string::npos);
  std::set<long long> ranks;
  for (const auto& e : j["ranks"]) ranks.insert(e["rank"].get<long long>());
  CHECK(ranks.count(6) == 1);
  CHECK(ranks.count(11) == 1);
  CHECK(ranks.count(12) == 1);
}

TEST_CASE("identical flags produce identical bytes") {
  for (const std::string& args :
       {std::string("canonical --group g2 --p 9"),
        std::string("lemmas --group g1 --p-min 3 --p-max 7 --law c1 --csv"),
        std::string("coverage --group scalar --p 3 --max-rank 40 "
                     "--format json"),
        std::string("explore --group seven --p 7 --depth 1 --beam 10")}) {
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("custom schedule flows through family") {
  std::string sched = temp_path("sched.json");
  // the default seven schedule, supplied explicitly
  std::ofstream(sched)
      << R"({"monomials":[[7,0,0],[5,1,0],[3,2,0],[1,3,0],[1,1,1],)"
      << R"([2,0,3],[0,1,3]]})";
  std::string out = temp_path("sched_member.json");
  RunResult r = run("family --group seven --p 7 --m0 2 --m 6 --schedule " +
                    sched + " --out " + out);
  REQUIRE(r.exit_code == 0);
  RunResult rank = run("rank --in " + out);
  CHECK(rank.out == "69\n");

  // schedules violating the invariants are usage errors
  std::ofstream(sched) << R"({"monomials":[[1,0,0]]})";
  CHECK(run("family --group seven --p 7 --m0 -1 --m 0 --schedule " + sched)
            .exit_code == 2);
  std::remove(sched.c_str());
  std::remove(out.c_str());
}
