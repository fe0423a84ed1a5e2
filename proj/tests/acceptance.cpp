// Acceptance run: one line per criterion, exit status 0 iff every selected
// criterion passes within its time limit.
//
//   acceptance               all criteria
//   acceptance --criterion 6 one criterion

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <braidforge/claims.hpp>

using namespace braidforge;

namespace {

  struct Step {
    std::string      claim;
    std::vector<int> n;
  };

  struct Criterion {
    int               number;
    std::string       title;
    double            limit_seconds;
    std::vector<Step> steps;
  };

  std::vector<int> span(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo; n <= hi; ++n) {
      v.push_back(n);
    }
    return v;
  }

  std::vector<Criterion> criteria() {
    std::vector<Step> prop;
    for (auto const& rel : aut_p4_relations()) {
      prop.push_back({"aut-p4." + rel.slug, {4}});
    }
    return {
        {1, "catalog automorphisms preserve the relations of P_n and B_n", 60,
         {{"catalog.homomorphism", span(3, 6)}, {"catalog.braid-homomorphism", span(2, 6)}}},
        {2, "sigma action table matches the braid oracle", 30,
         {{"sigma-action.table", span(3, 6)}}},
        {3, "t formula matches tau on sigma words", 60, {{"t.band-formula", span(3, 5)}}},
        {4, "t ; eps = psi, psi^2 = 1, psi inverts each phi", 60,
         {{"t-eps.equals-psi", {4, 5}}, {"psi.involution", {4, 5}}, {"psi.inverts-phi", {4, 5}}}},
        {5, "w_n obstruction in the abelianisation", 60, {{"wn.abelian-obstruction", span(4, 6)}}},
        {6, "Aut(P_4) relations hold exactly", 120, prop},
        {7, "mapping class relators are central", 60, {{"mcg.relators-central", {4}}}},
        {8, "P_3 actions, relations, Aut(F_2) relators and lifts", 60,
         {{"p3.sigma-actions", {3}},
          {"p3.theta-xi-eta", {3}},
          {"p3.relations.rho", {3}},
          {"p3.relations.sigma", {3}},
          {"p3.relations.nu", {3}},
          {"p3.relations.random-products", {3}},
          {"f2.presentation", {3}},
          {"p3.lifts", {3}}}},
        {9, "fixed subgroups at radius 8, ranks 2 and 1, non-extension", 300,
         {{"u4.fix.conj-A13", {4}},
          {"u4.fix.conj-A13A23", {4}},
          {"u4.fix.ranks", {4}},
          {"u4.nonextension", {4}}}},
        {10, "tau inverts the center; theta0 does not extend", 1,
         {{"tau.inverts-center", span(2, 6)}, {"theta0.no-extension", span(3, 6)}}},
        {11, "combed equality agrees with the braid oracle", 60, {{"oracle.coherence", {5}}}},
    };
  }

  bool run_criterion(Criterion const& c) {
    ClaimOptions opts;
    opts.radius = 8;
    std::vector<ClaimRecord> failures;
    std::size_t              checks = 0;
    auto const               start  = std::chrono::steady_clock::now();
    for (auto const& step : c.steps) {
      auto const* claim = find_claim(step.claim);
      if (claim == nullptr) {
        ClaimRecord r;
        r.claim_id = step.claim;
        r.witness  = "not registered";
        failures.push_back(r);
        continue;
      }
      for (int n : step.n) {
        auto r = run_claim(*claim, n, opts);
        ++checks;
        if (r.status != ClaimStatus::pass) {
          failures.push_back(r);
        }
      }
    }
    double const seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const in_time = seconds < c.limit_seconds;
    bool const ok      = failures.empty() && in_time;
    std::printf("AC%-2d %s  %s  (%zu check%s, %.3f s, limit %.0f s)\n", c.number,
                ok ? "PASS" : "FAIL", c.title.c_str(), checks, checks == 1 ? "" : "s", seconds,
                c.limit_seconds);
    for (auto const& f : failures) {
      std::printf("       %s n=%d: %s\n", f.claim_id.c_str(), f.n, f.witness.value_or("").c_str());
    }
    if (!in_time) {
      std::printf("       over the time limit\n");
    }
    return ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  int      only = 0;
  app.add_option("--criterion", only, "run a single criterion (1-11)")->check(CLI::Range(1, 11));
  CLI11_PARSE(app, argc, argv);

  int passed = 0;
  int ran    = 0;
  for (auto const& c : criteria()) {
    if (only != 0 && c.number != only) {
      continue;
    }
    ++ran;
    passed += run_criterion(c) ? 1 : 0;
  }
  std::printf("%d of %d criteria pass\n", passed, ran);
  return passed == ran ? 0 : 1;
}
