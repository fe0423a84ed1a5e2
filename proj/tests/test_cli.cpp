#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <braidforge/cli.hpp>

using namespace braidforge;

namespace {

  struct Run {
    int         code = -1;
    std::string out;
    std::string err;
  };

  Run run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    Run                r;
    r.code = cli::execute(std::move(args), out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  // Claims that fail exactly at n = 4 but hold modulo the center, plus the
  // omega(2) order and the shortened coordinate form.
  std::set<std::string> known_failures_at_4() {
    std::set<std::string> s{"aut-p4.s2-w4",
                            "aut-p4.s3-w4-braid",
                            "aut-p4.palindrome",
                            "aut-p4.cyclic-power",
                            "aut-p4.psi-s2-commute",
                            "aut-p4.psi-w4-commute",
                            "aut-p4.t-s2-square",
                            "omega2.s2-then-phi13",
                            "u4.conj-A13A23.coordinates"};
    for (auto const* p : {"phi13", "phi23", "phi14", "phi24", "phi34"}) {
      s.insert(std::string("aut-p4.t-") + p + "-t");
      s.insert(std::string("aut-p4.t-") + p + "-t.simplified");
      s.insert(std::string("aut-p4.w4-conjugates-") + p);
    }
    return s;
  }

}  // namespace

TEST_CASE("normalize prints the combed components", "[cli]") {
  auto r = run({"normalize", "--group", "P", "--n", "3", "A(1,2) A(1,3) A(2,3)"});
  REQUIRE(r.code == cli::ok);
  REQUIRE(r.out.find("u_3 = A(1,3) A(2,3)\nu_2 = A(1,2)\n") == 0);

  auto j = nlohmann::json::parse(
      run({"normalize", "--n", "3", "--format", "json", "A(2,3) A(1,2)"}).out);
  REQUIRE(j["components"][1]["u"] == "A(1,2)");

  auto b = run({"normalize", "--group", "B", "--n", "3", "s1 s2 s2^-1 s1"});
  REQUIRE(b.out.find("s1^2\npermutation: ()") == 0);
}

TEST_CASE("apply prints the image with its central factor", "[cli]") {
  auto r = run({"apply", "--n", "4", "--auto", "t ; eps", "A(1,2)"});
  REQUIRE(r.code == cli::ok);
  REQUIRE(r.out == "A(1,2) z^-2\n");
  REQUIRE(run({"apply", "--group", "F2", "--auto", "rho ; sigma", "x"}).out == "y\n");
  REQUIRE(run({"apply", "--n", "3", "--auto", "psi", "z"}).out == "z^-1\n");
}

TEST_CASE("parse echoes the reduced word", "[cli]") {
  auto r = run({"parse", "--n", "3", "A(1,2) A(1,2)^-1 A(1,3)^2"});
  REQUIRE(r.code == cli::ok);
  REQUIRE(r.out == "A(1,3)^2  (length 2)\n");
}

TEST_CASE("usage errors exit with 2", "[cli]") {
  REQUIRE(run({"normalize", "--n", "3"}).code == cli::usage);
  REQUIRE(run({"normalize", "--n", "3", "A(1,4)"}).code == cli::usage);
  REQUIRE(run({"normalize", "--n", "x", "A(1,2)"}).code == cli::usage);
  REQUIRE(run({"normalize", "--n", "3..4", "A(1,2)"}).code == cli::usage);
  REQUIRE(run({"verify", "--suite", "nope"}).code == cli::usage);
  REQUIRE(run({"apply", "--n", "4", "--auto", "t ;", "A(1,2)"}).code == cli::usage);
  REQUIRE(run({"frobnicate"}).code == cli::usage);
  REQUIRE(run({}).code == cli::usage);
  REQUIRE(run({"--help"}).code == cli::ok);
}

TEST_CASE("budget exhaustion exits with 3", "[cli]") {
  std::string const w = "A(1,5) A(2,3)^3 A(1,2) A(4,5)^-2 A(1,3)";
  REQUIRE(run({"normalize", "--n", "5", "--budget", "4", w}).code == cli::budget_exceeded);
  REQUIRE(run({"normalize", "--n", "5", w}).code == cli::ok);
  ::setenv("BRAIDFORGE_BUDGET", "4", 1);
  auto r = run({"normalize", "--n", "5", "--budget", "100000", w});
  ::unsetenv("BRAIDFORGE_BUDGET");
  REQUIRE(r.code == cli::budget_exceeded);
  REQUIRE(run({"verify", "--suite", "props", "--n", "5", "--budget", "4"}).code
          == cli::budget_exceeded);
}

TEST_CASE("verify emits the report schema in manifest order", "[cli]") {
  auto r = run({"verify", "--suite", "paper", "--n", "4", "--format", "json"});
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.contains("claims"));
  REQUIRE(j["summary"].size() == 3);
  auto const manifest = suite_manifest(Suite::paper);
  REQUIRE(j["claims"].size() == manifest.size());
  std::size_t pass = 0, fail = 0, skipped = 0;
  std::set<std::string> failed;
  for (std::size_t k = 0; k < manifest.size(); ++k) {
    auto const& c = j["claims"][k];
    REQUIRE(c["claim_id"] == manifest[k]->id);
    REQUIRE(c["n"] == 4);
    REQUIRE(c.contains("witness"));
    REQUIRE(c["elapsed"].is_number());
    std::string status = c["status"];
    pass += status == "pass";
    skipped += status == "skipped";
    if (status == "fail") {
      ++fail;
      failed.insert(c["claim_id"].get<std::string>());
    }
  }
  REQUIRE(j["summary"]["pass"] == pass);
  REQUIRE(j["summary"]["fail"] == fail);
  REQUIRE(j["summary"]["skipped"] == skipped);
  REQUIRE(failed == known_failures_at_4());
  REQUIRE(r.code == cli::claim_failure);
}

TEST_CASE("verify is deterministic", "[cli]") {
  auto statuses = [] {
    auto j = nlohmann::json::parse(
        run({"verify", "--suite", "all", "--n", "3..5", "--format", "json"}).out);
    std::vector<std::string> s;
    for (auto const& c : j["claims"]) {
      s.push_back(c["claim_id"].get<std::string>() + "@" + std::to_string(c["n"].get<int>())
                  + "=" + c["status"].get<std::string>());
    }
    return s;
  };
  REQUIRE(statuses() == statuses());
}

TEST_CASE("property suite passes at its default sizes", "[cli]") {
  auto r = run({"verify", "--suite", "props"});
  INFO(r.out);
  REQUIRE(r.code == cli::ok);
}

TEST_CASE("claim registry", "[claims]") {
  std::set<std::string> ids;
  for (auto const* c : suite_manifest(Suite::all)) {
    REQUIRE(ids.insert(c->id).second);
    REQUIRE(c->min_n <= c->max_n);
    for (int n : c->default_n) {
      REQUIRE(n >= c->min_n);
      REQUIRE(n <= c->max_n);
    }
  }
  REQUIRE(suite_manifest(Suite::all).size()
          == suite_manifest(Suite::paper).size() + suite_manifest(Suite::props).size());
  REQUIRE(find_claim("t.band-formula") != nullptr);
  REQUIRE(find_claim("nope") == nullptr);

  auto rec = run_claim(*find_claim("p3.lifts"), 5, {});
  REQUIRE(rec.status == ClaimStatus::skipped);
}

TEST_CASE("failing relation witnesses name the central discrepancy", "[claims]") {
  auto rec = run_claim(*find_claim("aut-p4.s2-w4"), 4, {});
  REQUIRE(rec.status == ClaimStatus::fail);
  REQUIRE(rec.witness->find("modulo the center") != std::string::npos);
  auto ok = run_claim(*find_claim("aut-p4.s1-w4-commute"), 4, {});
  REQUIRE(ok.status == ClaimStatus::pass);
  REQUIRE(ok.witness == "sa_1 read as s1");
}

TEST_CASE("mapping class relators hold modulo the center for several n", "[claims]") {
  for (int n = 3; n <= 5; ++n) {
    REQUIRE(run_claim(*find_claim("mcg.relators-central"), n, {}).status == ClaimStatus::pass);
  }
}
