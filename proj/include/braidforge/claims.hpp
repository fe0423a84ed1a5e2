#ifndef BRAIDFORGE_CLAIMS_HPP_
#define BRAIDFORGE_CLAIMS_HPP_

// Registered verification claims, grouped into suites, and a runner that
// evaluates them on a small work pool while keeping manifest order.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "automorphism.hpp"
#include "braid.hpp"
#include "combing.hpp"
#include "error.hpp"
#include "subgroup.hpp"
#include "word.hpp"

namespace braidforge {

  enum class ClaimStatus { pass, fail, skipped };

  inline char const* to_string(ClaimStatus s) {
    switch (s) {
      case ClaimStatus::pass:
        return "pass";
      case ClaimStatus::fail:
        return "fail";
      case ClaimStatus::skipped:
        return "skipped";
    }
    return "?";
  }

  struct ClaimRecord {
    std::string                claim_id;
    int                        n = 0;
    ClaimStatus                status = ClaimStatus::skipped;
    std::optional<std::string> witness;
    double                     elapsed_ms      = 0;
    bool                       budget_exceeded = false;
  };

  struct ClaimOptions {
    CombingOptions     combing;
    int                radius = 8;
    EnumerationOptions enumeration;
  };

  struct ClaimOutcome {
    bool                       passed = false;
    std::optional<std::string> witness;
  };

  struct Claim {
    std::string      id;
    std::string      summary;
    int              min_n = 0;
    int              max_n = 0;
    std::vector<int> default_n;
    std::function<ClaimOutcome(int, ClaimOptions const&)> check;
  };

  enum class Suite { paper, props, all };

  // A relation between two automorphism expressions, with an optional note
  // on how it was transcribed.
  struct NamedRelation {
    std::string slug;
    std::string lhs;
    std::string rhs;
    std::string note;
  };

  inline std::vector<std::string> aut_p4_phis() {
    return {"phi13", "phi23", "phi14", "phi24", "phi34"};
  }

  // The defining relations of Aut(P_4) in t, s1..s3, w4, psi and phi_ij.
  inline std::vector<NamedRelation> aut_p4_relations() {
    std::vector<NamedRelation> r{
        {"s1-s3-commute", "s1 ; s3", "s3 ; s1", ""},
        {"s1-w4-commute", "s1 ; w4", "w4 ; s1", "sa_1 read as s1"},
        {"s2-w4", "s2 ; w4", "w4 ; s2 ; (phi13^-1 ; phi24^-1 ; phi34)^2", ""},
        {"s1-s2-braid", "s1 ; s2 ; s1", "s2 ; s1 ; s2", ""},
        {"s3-w4-braid", "s3 ; w4 ; s3", "w4 ; s3 ; w4 ; (phi14 ; phi24 ; phi34^-1)^2", ""},
        {"palindrome", "s1 ; s2 ; s3 ; w4^2 ; s3 ; s2 ; s1", "(phi13^-1 ; phi23^2)^2",
         "sa_1 read as s1"},
        {"cyclic-power", "(s1 ; s2 ; s3 ; w4)^5",
         "(phi13^-1 ; phi23)^3 ; (phi14^-1 ; phi24^-1 ; phi34)^4", ""},
        {"psi-t-square", "(psi ; t)^2", "id", ""},
        {"psi-t-commutator", "psi^-1 ; t^-1 ; psi ; t", "id", ""},
        {"psi-square", "psi^2", "id", ""},
        {"t-square", "t^2", "id", ""},
        {"psi-s1-commute", "psi ; s1", "s1 ; psi", ""},
        {"psi-s2-commute", "psi ; s2", "s2 ; psi", ""},
        {"psi-s3-commute", "psi ; s3", "s3 ; psi", ""},
        {"psi-w4-commute", "psi ; w4", "w4 ; psi", ""},
    };
    auto const phis = aut_p4_phis();
    for (auto const& p : phis) {
      r.push_back({"psi-" + p + "-square", "(psi ; " + p + ")^2", "id", ""});
    }
    for (auto const& p : phis) {
      r.push_back({"t-" + p + "-t", "t ; " + p + " ; t", p + "^-1 ; psi^-2", ""});
      r.push_back({"t-" + p + "-t.simplified", "t ; " + p + " ; t", p + "^-1",
                   "psi^-2 dropped using psi^2 = 1"});
    }
    for (std::size_t a = 0; a < phis.size(); ++a) {
      for (std::size_t b = a + 1; b < phis.size(); ++b) {
        r.push_back({phis[a] + "-" + phis[b] + "-commute", phis[a] + " ; " + phis[b],
                     phis[b] + " ; " + phis[a], ""});
      }
    }
    r.push_back({"t-s1-square", "(t ; s1)^2", "psi^-2", ""});
    r.push_back({"t-s2-square", "(t ; s2)^2", "phi13^-2", ""});
    r.push_back({"t-s3-square", "(t ; s3)^2", "psi^-2", ""});
    r.push_back({"t-w4-square", "(t ; w4)^2", "psi^2", ""});
    std::vector<std::pair<std::string, std::vector<std::string>>> const conj{
        {"s1", {"phi23", "phi13", "phi24", "phi14", "phi34"}},
        {"s2", {"phi13^-1", "phi13^-1 ; phi23", "phi13^-1 ; phi14", "phi13^-1 ; phi34",
                "phi13^-1 ; phi24"}},
        {"s3", {"phi14", "phi24", "phi13", "phi23", "phi34"}},
        {"w4", {"phi13 ; phi24 ; phi34^-1", "phi23 ; phi14 ; phi34^-1", "phi24", "phi14",
                "phi14 ; phi24 ; phi34^-1"}},
    };
    for (auto const& [g, images] : conj) {
      for (std::size_t k = 0; k < phis.size(); ++k) {
        r.push_back({g + "-conjugates-" + phis[k], g + "^-1 ; " + phis[k] + " ; " + g,
                     images[k], ""});
      }
    }
    return r;
  }

  // Relators of the presentation of Mod(S_{n+1}) on omega_1..omega_n and eps,
  // each written as "relator = id".
  inline std::vector<NamedRelation> mcg_relators(int n) {
    auto w = [](int i) { return "omega(" + std::to_string(i) + ")"; };
    std::vector<NamedRelation> r;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 2; j <= n; ++j) {
        r.push_back({"far-commute-" + std::to_string(i) + "-" + std::to_string(j),
                     w(i) + " ; " + w(j) + " ; " + w(i) + "^-1 ; " + w(j) + "^-1", "id", ""});
      }
    }
    for (int i = 1; i < n; ++i) {
      r.push_back({"braid-" + std::to_string(i),
                   w(i) + " ; " + w(i + 1) + " ; " + w(i) + " ; " + w(i + 1) + "^-1 ; " + w(i)
                       + "^-1 ; " + w(i + 1) + "^-1",
                   "id", ""});
    }
    std::string pal;
    for (int i = 1; i < n; ++i) {
      pal += w(i) + " ; ";
    }
    pal += w(n) + "^2";
    for (int i = n - 1; i >= 1; --i) {
      pal += " ; " + w(i);
    }
    r.push_back({"palindrome", pal, "id", ""});
    std::string cyc = "(";
    for (int i = 1; i <= n; ++i) {
      cyc += (i > 1 ? " ; " : "") + w(i);
    }
    cyc += ")^" + std::to_string(n + 1);
    r.push_back({"cyclic-power", cyc, "id", ""});
    for (int i = 1; i <= n; ++i) {
      r.push_back({"eps-omega-" + std::to_string(i) + "-square", "(eps ; " + w(i) + ")^2",
                   "id", ""});
    }
    r.push_back({"eps-square", "eps^2", "id", ""});
    return r;
  }

  inline std::vector<NamedRelation> aut_f2_relators() {
    return {
        {"rho-square", "rho^2", "id", ""},
        {"sigma-square", "sigma^2", "id", ""},
        {"sigma-rho-fourth", "(sigma ; rho)^4", "id", ""},
        {"rho-sigma-rho-nu-square", "(rho ; sigma ; rho ; nu)^2", "id", ""},
        {"nu-rho-sigma-cube", "(nu ; rho ; sigma)^3", "id", ""},
        {"nu-commutator", "nu^-1 ; (sigma ; nu ; sigma)^-1 ; nu ; sigma ; nu ; sigma", "id", ""},
    };
  }

  // rho, sigma, nu and twenty seeded random products of them.
  inline std::vector<std::string> p3_sample_automorphisms() {
    std::vector<std::string> const base{"rho", "sigma", "nu"};
    std::vector<std::string>       out = base;
    std::mt19937                   rng(1);
    for (int k = 0; k < 20; ++k) {
      int const   len = 2 + static_cast<int>(rng() % 5);
      std::string s;
      for (int i = 0; i < len; ++i) {
        s += (i ? " ; " : "") + base[rng() % 3];
        s += rng() % 2 ? "^-1" : "";
      }
      out.push_back(s);
    }
    return out;
  }

  namespace detail {

    inline ClaimOutcome pass(std::optional<std::string> witness = std::nullopt) {
      return {true, std::move(witness)};
    }

    inline ClaimOutcome fail(std::string witness) {
      return {false, std::move(witness)};
    }

    inline ClaimOutcome outcome(bool ok, std::string witness) {
      return {ok, ok ? std::nullopt : std::optional<std::string>(std::move(witness))};
    }

    inline std::string join(std::vector<std::string> const& parts, std::string const& sep = ", ") {
      std::string out;
      for (auto const& p : parts) {
        out += (out.empty() ? "" : sep) + p;
      }
      return out;
    }

    inline AutoExpr reversed_reading(AutoExpr e) {
      std::reverse(e.factors.begin(), e.factors.end());
      for (auto& f : e.factors) {
        if (f.group) {
          f.group = std::make_shared<AutoExpr>(reversed_reading(*f.group));
        }
      }
      return e;
    }

    inline bool braid_oracle_equal(FreeWord const& a, FreeWord const& b, int n) {
      return braid_words_equal(expand_pure_word(a, n), expand_pure_word(b, n));
    }

    // lhs = rhs evaluated left to right. A failure witness lists the
    // generators that differ, the central discrepancy when there is one, and
    // whether the right-to-left reading of both sides would hold.
    inline ClaimOutcome relation_outcome(NamedRelation const& rel, int n, EqualityMode mode,
                                         Group group, ClaimOptions const& o) {
      auto report = verify_relation(rel.lhs, rel.rhs, n, mode, group, o.combing);
      if (report.passed) {
        return pass(rel.note.empty() ? std::nullopt : std::optional<std::string>(rel.note));
      }
      std::string w = "differs on " + join(report.differing);
      auto const  f = evaluate(rel.lhs, n, group, o.combing);
      auto const  g = evaluate(rel.rhs, n, group, o.combing);
      if (mode == EqualityMode::exact && group == Group::pure) {
        auto const c = central_differences(f, g, o.combing);
        bool       all = std::all_of(c.begin(), c.end(), [](auto const& v) { return v.has_value(); });
        if (all) {
          std::vector<std::string> parts;
          auto const&              gens = f.domain().generators();
          for (std::size_t k = 0; k < gens.size(); ++k) {
            if (*c[k] != 0) {
              parts.push_back(f.domain().name(gens[k]) + " by z^" + std::to_string(*c[k]));
            }
          }
          w += "; sides agree modulo the center (" + join(parts) + ")";
        }
      }
      auto const fr = evaluate(reversed_reading(parse_auto_expr(rel.lhs)), n, group, o.combing);
      auto const gr = evaluate(reversed_reading(parse_auto_expr(rel.rhs)), n, group, o.combing);
      w += endomorphisms_equal(fr, gr, mode, o.combing)
               ? "; holds when factors are read right to left"
               : "; also fails when factors are read right to left";
      if (!rel.note.empty()) {
        w += "; " + rel.note;
      }
      return fail(w);
    }

    inline std::vector<std::pair<std::string, std::vector<int>>> catalog_for(int n) {
      std::vector<std::pair<std::string, std::vector<int>>> e{
          {"id", {}}, {"t", {}}, {"psi", {}}, {"eps", {}}, {"w", {}}, {"theta0", {}}};
      for (int k = 1; k < n; ++k) {
        e.push_back({"s", {k}});
      }
      for (int k = 1; k <= n; ++k) {
        e.push_back({"omega", {k}});
      }
      for (auto g : pure_generators(n)) {
        if (!(g.i == 1 && g.j == 2)) {
          e.push_back({"phi", {g.i, g.j}});
        }
      }
      if (n == 3) {
        for (auto const* name : {"theta", "xi", "eta", "rho", "sigma", "nu", "nonlift"}) {
          e.push_back({name, {}});
        }
      }
      return e;
    }

    inline FreeWord random_pure_word(std::mt19937& rng, int n, int max_length) {
      auto const               gens = pure_generators(n);
      std::uniform_int_distribution<int>         len(0, max_length);
      std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
      FreeWord                 w;
      int const                l = len(rng);
      for (int k = 0; k < l; ++k) {
        w.push_back(gens[pick(rng)], rng() % 2 ? 1 : -1);
      }
      return w;
    }

    inline std::string p3_text(P3Element const& e) {
      std::string out = format_word(e.free_part, p3_free_alphabet());
      if (e.z_exponent != 0) {
        out += " z^" + std::to_string(e.z_exponent);
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////
    // Paper suite
    ////////////////////////////////////////////////////////////////////

    inline ClaimOutcome band_relations_hold(int n, ClaimOptions const&) {
      for (auto const& r : pure_relations(n)) {
        if (!braid_oracle_equal(r.lhs, r.rhs, n)) {
          return fail(format_word(r.lhs) + " = " + format_word(r.rhs));
        }
      }
      return pass();
    }

    inline ClaimOutcome full_twist_is_band_product(int n, ClaimOptions const&) {
      auto const z = expand_pure_word(full_twist_pure_word(n), n);
      if (!braid_words_equal(z, full_twist_word(n))) {
        return fail("A(1,2) ... A(n-1,n) differs from (s1 ... s_{n-1})^n");
      }
      return outcome(is_central(z), "full twist is not central");
    }

    inline ClaimOutcome sigma_table_rows(int n, ClaimOptions const&) {
      std::size_t rows = 0;
      for (int k = 1; k < n; ++k) {
        for (int sign : {1, -1}) {
          auto const s = BraidWord(n, FreeWord(Generator::sigma(k), sign));
          for (auto g : pure_generators(n)) {
            auto act = sigma_action_on_pure(k, sign, g.i, g.j, n);
            auto lhs = expand_pure_word(act.image, n);
            auto rhs = s.inverse() * expand_pure_generator(g.i, g.j, n) * s;
            ++rows;
            if (!braid_words_equal(lhs, rhs)) {
              return fail("s" + std::to_string(k) + "^" + std::to_string(sign) + " on A("
                          + std::to_string(g.i) + "," + std::to_string(g.j) + ")");
            }
          }
        }
      }
      return pass(std::to_string(rows) + " rows");
    }

    inline ClaimOutcome catalog_homomorphisms(int n, ClaimOptions const& o) {
      for (auto const& [name, params] : catalog_for(n)) {
        auto f = named_automorphism(name, params, n);
        auto r = verify_homomorphism(f, o.combing);
        if (!r.passed) {
          return fail(f.name() + " breaks " + r.failures.front());
        }
      }
      return pass();
    }

    inline ClaimOutcome braid_catalog_homomorphisms(int n, ClaimOptions const& o) {
      std::vector<GeneratorMap> maps{named_automorphism("tau", {}, n, Group::braid)};
      for (int k = 1; k < n; ++k) {
        maps.push_back(named_automorphism("s", {k}, n, Group::braid));
      }
      for (auto const& f : maps) {
        auto r = verify_homomorphism(f, o.combing);
        if (!r.passed) {
          return fail(f.name() + " breaks " + r.failures.front());
        }
      }
      return pass();
    }

    inline ClaimOutcome t_formula(int n, ClaimOptions const&) {
      auto const t   = named_automorphism("t", {}, n);
      auto const tau = named_automorphism("tau", {}, n, Group::braid);
      for (auto g : pure_generators(n)) {
        auto formula = expand_pure_word(t.image(g), n);
        auto direct  = BraidWord(n, tau.apply(expand_pure_generator(g.i, g.j, n).word()));
        if (!braid_words_equal(formula, direct)) {
          return fail("t(" + Alphabet::default_name(g) + ")");
        }
      }
      return pass();
    }

    inline ClaimOutcome t_eps_is_psi(int n, ClaimOptions const& o) {
      auto const te  = compose(named_automorphism("t", {}, n), named_automorphism("eps", {}, n),
                               o.combing);
      auto const psi = named_automorphism("psi", {}, n);
      if (!endomorphisms_equal(te, psi, EqualityMode::exact, o.combing)) {
        return fail("t ; eps differs from psi");
      }
      auto const a12 = PureWord(n, FreeWord(Generator::pure(1, 2)));
      auto const img = central_form(PureWord(n, te.image(Generator::pure(1, 2))), o.combing);
      return outcome(img.core == a12 && img.z_exponent == -2,
                     "t ; eps sends A(1,2) to " + format_central_form(img));
    }

    inline ClaimOutcome psi_involution(int n, ClaimOptions const& o) {
      auto const psi = named_automorphism("psi", {}, n);
      return outcome(endomorphisms_equal(compose(psi, psi, o.combing),
                                         identity_map(psi.domain()), EqualityMode::exact,
                                         o.combing),
                     "psi ; psi is not the identity");
    }

    inline ClaimOutcome psi_inverts_phi(int n, ClaimOptions const& o) {
      for (auto g : pure_generators(n)) {
        if (g.i == 1 && g.j == 2) {
          continue;
        }
        auto const p = "phi(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
        auto       r = verify_relation("psi ; " + p + " ; psi", p + "^-1", n,
                                       EqualityMode::exact, Group::pure, o.combing);
        if (!r.passed) {
          return fail("psi ; " + p + " ; psi differs on " + join(r.differing));
        }
      }
      return pass();
    }

    inline ClaimOutcome wn_obstruction(int n, ClaimOptions const&) {
      auto r = verify_wn_obstruction(n);
      return outcome(r.passed, "abelianised w_n(A(1,n)) = " + r.witness.to_string());
    }

    inline ClaimOutcome omega_conjugation(int n, ClaimOptions const& o) {
      for (int k = 1; k < n; ++k) {
        if (k == 2) {
          continue;
        }
        if (!endomorphisms_equal(named_automorphism("omega", {k}, n),
                                 named_automorphism("s", {k}, n), EqualityMode::exact,
                                 o.combing)) {
          return fail("omega(" + std::to_string(k) + ") differs from s" + std::to_string(k));
        }
      }
      return pass();
    }

    inline ClaimOutcome omega2_composite(int n, ClaimOptions const& o) {
      auto const omega2 = named_automorphism("omega", {2}, n);
      auto const s2     = named_automorphism("s", {2}, n);
      auto const phi13  = named_automorphism("phi", {1, 3}, n);
      if (endomorphisms_equal(omega2, compose(s2, phi13, o.combing), EqualityMode::exact,
                              o.combing)) {
        return pass();
      }
      bool other = endomorphisms_equal(omega2, compose(phi13, s2, o.combing),
                                       EqualityMode::exact, o.combing);
      return fail(other ? "s2 ; phi13 differs from omega(2); phi13 ; s2 equals it"
                        : "omega(2) equals neither order of s2 and phi13");
    }

    inline ClaimOutcome omega_n_twist_of_wn(int n, ClaimOptions const& o) {
      auto const on = named_automorphism("omega", {n}, n);
      auto const wn = named_automorphism("w", {}, n);
      return outcome(endomorphisms_equal(on, wn, EqualityMode::mod_center, o.combing),
                     "omega(n) and w_n differ modulo the center");
    }

    inline ClaimOutcome eps_twist_of_t(int n, ClaimOptions const& o) {
      return outcome(endomorphisms_equal(named_automorphism("eps", {}, n),
                                         named_automorphism("t", {}, n),
                                         EqualityMode::mod_center, o.combing),
                     "eps and t differ modulo the center");
    }

    inline ClaimOutcome omega_eps_fix_z(int n, ClaimOptions const& o) {
      auto const z = PureWord::full_twist(n);
      std::vector<GeneratorMap> maps{named_automorphism("eps", {}, n)};
      for (int k = 1; k <= n; ++k) {
        maps.push_back(named_automorphism("omega", {k}, n));
      }
      for (auto const& f : maps) {
        if (!pure_equal(PureWord(n, f.apply(z.word())), z, o.combing)) {
          return fail(f.name() + " moves z");
        }
      }
      return pass();
    }

    inline ClaimOutcome mcg_relators_mod_center(int n, ClaimOptions const& o) {
      std::vector<std::string> exact_failures;
      for (auto const& rel : mcg_relators(n)) {
        auto r = verify_relation(rel.lhs, rel.rhs, n, EqualityMode::mod_center, Group::pure,
                                 o.combing);
        if (!r.passed) {
          return fail(rel.slug + " is not central: differs on " + join(r.differing));
        }
      }
      return pass();
    }

    inline ClaimOutcome p3_sigma_actions(int n, ClaimOptions const&) {
      auto const x  = FreeWord(p3_x());
      auto const y  = FreeWord(p3_y());
      auto const A  = [](int i, int j) { return FreeWord(Generator::pure(i, j)); };
      auto const z  = full_twist_pure_word(3);
      struct Row {
        int       k;
        FreeWord  source;
        P3Element expected;
        char const* label;
      };
      std::vector<Row> const rows{
          {1, A(1, 3), {0, x * y * x.inverse()}, "x^s1"},
          {2, A(1, 3), {1, y.inverse() * x.inverse()}, "x^s2"},
          {1, A(2, 3), {0, x}, "y^s1"},
          {2, A(2, 3), {0, y}, "y^s2"},
          {1, z, {1, FreeWord()}, "z^s1"},
          {2, z, {1, FreeWord()}, "z^s2"},
      };
      for (auto const& r : rows) {
        auto const s      = named_automorphism("s", {r.k}, n);
        auto const coords = p3_coordinates(PureWord(3, s.apply(r.source)));
        if (!(coords == r.expected)) {
          return fail(std::string(r.label) + " = " + p3_text(coords));
        }
        auto const sigma = BraidWord(3, FreeWord(Generator::sigma(r.k)));
        auto const conj  = sigma.inverse() * expand_pure_word(r.source, 3) * sigma;
        if (!braid_words_equal(expand_pure_word(from_p3_coordinates(r.expected).word(), 3),
                               conj)) {
          return fail(std::string(r.label) + " disagrees with the braid oracle");
        }
      }
      return pass();
    }

    inline ClaimOutcome p3_theta_xi_eta(int n, ClaimOptions const& o) {
      std::vector<NamedRelation> const rels{
          {"theta-square", "theta^2", "id", ""},
          {"xi-eta-commute", "xi ; eta", "eta ; xi", ""},
          {"theta-inverts-xi", "theta ; xi ; theta", "xi^-1", ""},
          {"theta-inverts-eta", "theta ; eta ; theta", "eta^-1", ""},
      };
      for (auto const& rel : rels) {
        auto r = relation_outcome(rel, n, EqualityMode::exact, Group::pure, o);
        if (!r.passed) {
          return fail(rel.slug + ": " + r.witness.value_or(""));
        }
      }
      return pass();
    }

    // Relations (5), (6), (7) and their rewritten forms for one automorphism
    // of F_2 lifted to P_3.
    inline std::vector<NamedRelation> p3_phi_relations(std::string const& phi,
                                                       ClaimOptions const& o) {
      auto const f  = evaluate(phi, 3, Group::pure, o.combing);
      auto const px = p3_coordinates(PureWord(3, f.image(Generator::pure(1, 3)))).free_part;
      auto const py = p3_coordinates(PureWord(3, f.image(Generator::pure(2, 3)))).free_part;
      long const lxp = exponent_sum(px, p3_x());
      long const lxq = exponent_sum(py, p3_x());
      long const lyp = exponent_sum(px, p3_y());
      long const lyq = exponent_sum(py, p3_y());
      auto const P   = "(" + phi + ")";
      auto       e   = [](long v) { return std::to_string(v); };
      return {
          {"theta-commutes", "theta ; " + P, P + " ; theta", ""},
          {"xi-conjugate", "xi ; " + P + " ; xi^-1",
           "xi^" + e(1 - lxp) + " ; eta^" + e(-lxq) + " ; " + P, ""},
          {"eta-conjugate", "eta ; " + P + " ; eta^-1",
           "xi^" + e(-lyp) + " ; eta^" + e(1 - lyq) + " ; " + P, ""},
          {"conjugates-xi", P + " ; xi ; " + P + "^-1", "xi^" + e(lxp) + " ; eta^" + e(lxq), ""},
          {"conjugates-eta", P + " ; eta ; " + P + "^-1", "xi^" + e(lyp) + " ; eta^" + e(lyq), ""},
      };
    }

    inline ClaimOutcome p3_phi_relations_hold(std::string const& phi, int n,
                                              ClaimOptions const& o) {
      for (auto const& rel : p3_phi_relations(phi, o)) {
        auto r = relation_outcome(rel, n, EqualityMode::exact, Group::pure, o);
        if (!r.passed) {
          return fail(phi + ", " + rel.slug + ": " + r.witness.value_or(""));
        }
      }
      return pass();
    }

    inline ClaimOutcome p3_random_relations(int n, ClaimOptions const& o) {
      auto const sample = p3_sample_automorphisms();
      for (std::size_t k = 3; k < sample.size(); ++k) {
        auto r = p3_phi_relations_hold(sample[k], n, o);
        if (!r.passed) {
          return r;
        }
      }
      return pass(std::to_string(sample.size() - 3) + " products");
    }

    inline ClaimOutcome f2_relators(int, ClaimOptions const& o) {
      for (auto const& rel : aut_f2_relators()) {
        auto r = relation_outcome(rel, 3, EqualityMode::exact, Group::free2, o);
        if (!r.passed) {
          return fail(rel.slug + ": " + r.witness.value_or(""));
        }
      }
      return pass();
    }

    inline ClaimOutcome p3_lifts(int n, ClaimOptions const& o) {
      auto const z = PureWord::full_twist(3);
      for (auto const* name : {"rho", "sigma", "nu"}) {
        auto const f = named_automorphism(name, {}, n);
        if (!pure_equal(PureWord(3, f.apply(z.word())), z, o.combing)) {
          return fail(std::string(name) + " moves z");
        }
        auto r = verify_homomorphism(f, o.combing);
        if (!r.passed) {
          return fail(std::string(name) + " breaks " + r.failures.front());
        }
        // the lift induces the stated automorphism of F_2 = P_3 / Z
        auto const g = named_automorphism(name, {}, 3, Group::free2);
        for (auto gen : {Generator::pure(1, 3), Generator::pure(2, 3)}) {
          auto c   = p3_coordinates(PureWord(3, f.image(gen)));
          auto src = gen.i == 1 ? p3_x() : p3_y();
          if (c.free_part != g.image(src)) {
            return fail(std::string(name) + " on " + Alphabet::default_name(gen)
                        + " does not reduce to its F_2 image");
          }
        }
      }
      return pass();
    }

    inline ClaimOutcome p3_central_automorphisms(int n, ClaimOptions const& o) {
      std::vector<NamedRelation> const rels{
          {"psi-square", "psi^2", "id", ""},
          {"psi-inverts-phi13", "psi ; phi13 ; psi", "phi13^-1", ""},
          {"psi-inverts-phi23", "psi ; phi23 ; psi", "phi23^-1", ""},
          {"phi13-phi23-commute", "phi13 ; phi23", "phi23 ; phi13", ""},
      };
      for (auto const& rel : rels) {
        auto r = relation_outcome(rel, n, EqualityMode::exact, Group::pure, o);
        if (!r.passed) {
          return fail(rel.slug + ": " + r.witness.value_or(""));
        }
      }
      return pass();
    }

    inline ClaimOutcome fix_lemma(int which, ClaimOptions const& o) {
      auto r     = verify_fix_lemmas(o.radius, o.enumeration);
      auto const& c = which == 0 ? r.single : r.product;
      std::string w = "radius " + std::to_string(r.radius) + ", " + std::to_string(c.fixed_found)
                      + " fixed words, rank " + std::to_string(c.rank);
      if (!c.generators_fixed) {
        return fail(w + "; a claimed generator is moved");
      }
      if (!c.outside.empty()) {
        return fail(w + "; fixed but outside: " + format_word(c.outside.front()));
      }
      if (which == 0 && !r.displayed_computation) {
        return fail(w + "; A14 A24 A34 is moved by A(1,3)");
      }
      return outcome(c.passed, w);
    }

    inline ClaimOutcome fix_ranks(int, ClaimOptions const&) {
      auto u4 = [](int i) { return FreeWord(Generator::pure(i, 4)); };
      auto a  = fold_subgroup(Alphabet::free_u(4), {u4(1) * u4(3), u4(1) * u4(2) * u4(3)});
      auto b  = fold_subgroup(Alphabet::free_u(4), {u4(1) * u4(2) * u4(3)});
      return outcome(a.rank() == 2 && b.rank() == 1,
                     "ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
    }

    inline ClaimOutcome conj_a13_action(int, ClaimOptions const& o) {
      auto u4 = [](int i) { return FreeWord(Generator::pure(i, 4)); };
      auto f  = conjugation_endo(PureWord(4, FreeWord(Generator::pure(1, 3))), o.combing);
      auto x  = u4(1) * u4(2) * u4(3);
      auto v  = u4(1) * u4(3);
      bool ok = f.apply(x) == x && f.apply(v) == v
                && f.apply(u4(1)) == v * u4(1) * v.inverse();
      return outcome(ok, "A(1,4) -> " + format_word(f.apply(u4(1))));
    }

    inline ClaimOutcome conj_a13a23_coordinates(int, ClaimOptions const& o) {
      auto r = verify_fix_lemmas(0, o.enumeration);
      if (r.shortened_z_form) {
        return pass();
      }
      return fail(r.coordinate_forms
                      ? "x -> x and y -> xyx^-1 hold; z -> (xyx^-1 z) z (xyx^-1 z)^-1, "
                        "not (xy) z (xy)^-1"
                      : "coordinate action differs from both forms");
    }

    inline ClaimOutcome fix_free_factor(int n, ClaimOptions const& o) {
      auto const a = Alphabet::free_f(n);
      auto const g = a.generators();
      std::vector<FreeWord> images;
      for (int k = 0; k + 1 < n; ++k) {
        images.emplace_back(g[static_cast<std::size_t>(k)]);
      }
      auto const w = FreeWord(g[0]);
      images.push_back(w.inverse() * FreeWord(g.back()) * w);
      auto const        f      = GeneratorMap(a, a, std::move(images), "fix");
      int const         radius = 4;
      auto const        fixed  = enumerate_fixed_elements(f, radius, o.enumeration);
      for (auto const& v : fixed) {
        auto const sup = v.support();
        if (std::find(sup.begin(), sup.end(), g.back()) != sup.end()) {
          return fail("fixed word outside F_{n-1}: " + format_word(v, a));
        }
      }
      // reduced words of length <= radius over n - 1 letters
      double     m     = 2.0 * (n - 1);
      double     ball  = 1;
      double     layer = m;
      for (int k = 1; k <= radius; ++k) {
        ball += layer;
        layer *= m - 1;
      }
      return outcome(static_cast<double>(fixed.size()) == ball,
                     std::to_string(fixed.size()) + " fixed words, ball has "
                         + std::to_string(static_cast<long>(ball)));
    }

    inline ClaimOutcome nonextension(int, ClaimOptions const&) {
      auto r = verify_nonextension_instance();
      return outcome(r.passed, "conjugates " + format_word(r.forward) + " and "
                                   + format_word(r.backward));
    }

    inline ClaimOutcome nonlift_automorphism(int n, ClaimOptions const& o) {
      auto const f = named_automorphism("nonlift", {}, n);
      auto const r = verify_homomorphism(f, o.combing);
      if (!r.passed) {
        return fail("breaks " + r.failures.front());
      }
      try {
        named_inverse("nonlift", {}, n);
      } catch (Error const& e) {
        return fail(e.what());
      }
      auto const x = FreeWord(Generator::pure(1, 3));
      auto const y = FreeWord(Generator::pure(2, 3));
      return outcome(f.image(Generator::pure(1, 3)) == x * y,
                     "A(1,3) -> " + format_word(f.image(Generator::pure(1, 3))));
    }

    inline ClaimOutcome center_acts_on_u4(int, ClaimOptions const& o) {
      auto const z3 = PureWord(4, full_twist_pure_word(3));
      auto const f  = conjugation_endo(z3, o.combing);
      auto const c  = FreeWord(Generator::pure(1, 4)) * FreeWord(Generator::pure(2, 4))
                     * FreeWord(Generator::pure(3, 4));
      for (long e : {1L, -1L}) {
        bool ok = true;
        for (auto g : f.domain().generators()) {
          ok = ok && f.image(g) == conjugate_word(FreeWord(g), c.pow(e));
        }
        if (ok) {
          return pass(e == 1 ? "conjugation by A14 A24 A34" : "conjugation by (A14 A24 A34)^-1");
        }
      }
      return fail("z_3 does not act as conjugation by A14 A24 A34");
    }

    inline ClaimOutcome center_inversion(int n, ClaimOptions const&) {
      auto r = verify_center_inversion(n);
      return outcome(r.passed, "exponent sums " + std::to_string(r.z_exponent_sum) + ", "
                                   + std::to_string(r.tz_exponent_sum));
    }

    inline ClaimOutcome theta0_obstruction(int n, ClaimOptions const&) {
      auto r = verify_theta0_obstruction(n);
      return outcome(r.passed, std::to_string(r.fixing_with_inversion) + " of "
                                   + std::to_string(r.permutations)
                                   + " permutations send -e(1,3) to e(1,3)");
    }

    inline ClaimOutcome theta0_central(int n, ClaimOptions const& o) {
      auto const f = named_automorphism("theta0", {}, n);
      auto const z = PureWord::full_twist(n);
      if (!pure_equal(PureWord(n, f.apply(z.word())), z.inverse(), o.combing)) {
        return fail("theta0 does not invert z");
      }
      return outcome(endomorphisms_equal(f, identity_map(f.domain()), EqualityMode::mod_center,
                                         o.combing),
                     "theta0 is not trivial modulo the center");
    }

    inline ClaimOutcome p2_psi_extends(int, ClaimOptions const&) {
      auto const psi = named_automorphism("psi", {}, 2);
      auto const tau = named_automorphism("tau", {}, 2, Group::braid);
      auto const a   = expand_pure_generator(1, 2, 2);
      return outcome(braid_words_equal(expand_pure_word(psi.image(Generator::pure(1, 2)), 2),
                                       BraidWord(2, tau.apply(a.word()))),
                     "tau does not restrict to psi on P_2");
    }

    ////////////////////////////////////////////////////////////////////
    // Property suite
    ////////////////////////////////////////////////////////////////////

    // 500 pairs of words in P_k, k <= n: independent words, words differing
    // by an inserted conjugate of a defining relator, and words differing in
    // one letter.
    inline ClaimOutcome oracle_coherence(int n, ClaimOptions const& o) {
      std::mt19937 rng(20170101);
      std::size_t  equal = 0;
      for (int trial = 0; trial < 500; ++trial) {
        int const k    = 2 + trial % (n - 1);
        FreeWord  a    = random_pure_word(rng, k, 12);
        FreeWord  b    = random_pure_word(rng, k, 12);
        int const kind = trial % 3;
        if (kind == 1) {
          auto rels = pure_relations(k);
          auto x    = random_pure_word(rng, k, 2);
          auto y    = random_pure_word(rng, k, 2);
          auto u    = random_pure_word(rng, k, 1);
          FreeWord r;
          if (!rels.empty()) {
            auto const& rel = rels[rng() % rels.size()];
            r               = u * rel.lhs * rel.rhs.inverse() * u.inverse();
          }
          a = x * y;
          b = x * r * y;
        } else if (kind == 2 && !a.is_identity()) {
          auto s = a.syllables();
          auto i = rng() % s.size();
          FreeWord c;
          for (std::size_t q = 0; q < s.size(); ++q) {
            c.push_back(s[q].generator, q == i ? -s[q].exponent : s[q].exponent);
          }
          b = c;
        }
        bool combed = pure_equal(PureWord(k, a), PureWord(k, b), o.combing);
        bool oracle = braid_oracle_equal(a, b, k);
        if (combed != oracle) {
          return fail("n = " + std::to_string(k) + ": " + format_word(a) + " vs "
                      + format_word(b));
        }
        equal += combed ? 1 : 0;
      }
      return pass(std::to_string(equal) + " equal pairs of 500");
    }

    inline ClaimOutcome comb_soundness(int n, ClaimOptions const& o) {
      std::mt19937 rng(7);
      for (int trial = 0; trial < 500; ++trial) {
        int const k = 3 + trial % (n - 2);
        auto      w = random_pure_word(rng, k, 12);
        auto      c = comb(PureWord(k, w), o.combing).flatten();
        if (!braid_oracle_equal(w, c.word(), k)) {
          return fail(format_word(w));
        }
      }
      return pass();
    }

    // Products of two length-12 words pass through intermediate forms well
    // above the default budget, so this check raises it.
    inline ClaimOutcome comb_multiplicative(int n, ClaimOptions const& options) {
      ClaimOptions o = options;
      o.combing.syllable_budget = std::max<std::size_t>(o.combing.syllable_budget, 20'000'000);
      std::mt19937 rng(11);
      for (int trial = 0; trial < 500; ++trial) {
        int const k = 3 + trial % (n - 2);
        auto      u = PureWord(k, random_pure_word(rng, k, 12));
        auto      v = PureWord(k, random_pure_word(rng, k, 12));
        if (!(combed_multiply(comb(u, o.combing), comb(v, o.combing), o.combing)
              == comb(u * v, o.combing))) {
          return fail(format_word(u.word()) + " times " + format_word(v.word()));
        }
      }
      return pass();
    }

    inline ClaimOutcome z_central(int n, ClaimOptions const& o) {
      auto const z = PureWord::full_twist(n);
      for (auto g : pure_generators(n)) {
        auto a = PureWord(n, FreeWord(g));
        if (!pure_equal(z * a, a * z, o.combing)) {
          return fail(Alphabet::default_name(g));
        }
      }
      return pass();
    }

    inline ClaimOutcome catalog_inverses(int n, ClaimOptions const&) {
      for (auto const& [name, params] : catalog_for(n)) {
        try {
          named_inverse(name, params, n);
        } catch (Error const& e) {
          return fail(e.what());
        }
      }
      return pass();
    }

    inline ClaimOutcome induced_matrices(int n, ClaimOptions const& o) {
      auto const entries = catalog_for(n);
      std::vector<GeneratorMap> maps;
      for (auto const& [name, params] : entries) {
        maps.push_back(named_automorphism(name, params, n));
      }
      auto const minus = [&] {
        auto m = AbelianMatrix::identity(n);
        for (auto& c : m.columns) {
          c = (-1L) * c;
        }
        return m;
      }();
      if (!(induced_matrix(named_automorphism("t", {}, n)) == minus)) {
        return fail("t does not negate the abelianisation");
      }
      for (auto const& f : maps) {
        long d = determinant(induced_matrix(f));
        if (d != 1 && d != -1) {
          return fail(f.name() + " has determinant " + std::to_string(d));
        }
      }
      for (std::size_t a = 0; a < maps.size(); ++a) {
        auto const& f = maps[a];
        auto const& g = maps[(a * 7 + 3) % maps.size()];
        if (!(induced_matrix(compose(f, g, o.combing))
              == induced_matrix(g) * induced_matrix(f))) {
          return fail("matrix of " + f.name() + " ; " + g.name());
        }
      }
      return pass();
    }

    inline ClaimOutcome aut_p4_mod_center(int n, ClaimOptions const& o) {
      for (auto const& rel : aut_p4_relations()) {
        auto r = verify_relation(rel.lhs, rel.rhs, n, EqualityMode::mod_center, Group::pure,
                                 o.combing);
        if (!r.passed) {
          return fail(rel.slug + " differs on " + join(r.differing));
        }
      }
      return pass();
    }

    inline ClaimOutcome omega2_phi13_then_s2(int n, ClaimOptions const& o) {
      return outcome(endomorphisms_equal(named_automorphism("omega", {2}, n),
                                         compose(named_automorphism("phi", {1, 3}, n),
                                                 named_automorphism("s", {2}, n), o.combing),
                                         EqualityMode::exact, o.combing),
                     "omega(2) differs from phi13 ; s2");
    }

    inline ClaimOutcome wn_inverts_center(int n, ClaimOptions const& o) {
      auto const z = PureWord::full_twist(n);
      auto const w = named_automorphism("w", {}, n);
      return outcome(pure_equal(PureWord(n, w.apply(z.word())), z.inverse(), o.combing),
                     "w_n does not invert z");
    }

    inline ClaimOutcome rho_literal_moves_z(int, ClaimOptions const& o) {
      auto const z = PureWord::full_twist(3);
      auto const f = named_automorphism("rho_literal", {}, 3);
      bool moved   = !pure_equal(PureWord(3, f.apply(z.word())), z, o.combing);
      bool broken  = !verify_homomorphism(f, o.combing).passed;
      return outcome(moved, broken ? "" : "literal rho fixes z");
    }

    inline ClaimOutcome folding_properties(int, ClaimOptions const&) {
      auto u4 = [](int i, long e = 1) { return FreeWord(Generator::pure(i, 4), e); };
      std::vector<FreeWord> gens{u4(1) * u4(3), u4(1) * u4(2) * u4(3), u4(2, 2) * u4(1, -1)};
      auto const reference = fold_subgroup(Alphabet::free_u(4), gens);
      std::mt19937 rng(3);
      std::vector<FreeWord> probes;
      for (int k = 0; k < 200; ++k) {
        FreeWord w;
        int      len = static_cast<int>(rng() % 4);
        for (int q = 0; q < len; ++q) {
          auto const& g = gens[rng() % gens.size()];
          w *= rng() % 2 ? g : g.inverse();
        }
        probes.push_back(w);
        probes.push_back(w * u4(static_cast<int>(1 + rng() % 3)));
      }
      auto order = gens;
      for (int round = 0; round < 6; ++round) {
        std::shuffle(order.begin(), order.end(), rng);
        auto g = fold_subgroup(Alphabet::free_u(4), order);
        for (auto const& p : probes) {
          if (g.contains(p) != reference.contains(p)) {
            return fail("order changes membership of " + format_word(p));
          }
        }
      }
      return pass();
    }

    inline ClaimOutcome conjugation_inverse(int n, ClaimOptions const& o) {
      std::mt19937 rng(5);
      for (int trial = 0; trial < 20; ++trial) {
        auto c  = PureWord(n, random_pure_word(rng, n - 1, 4));
        auto f  = conjugation_endo(c, o.combing);
        auto g  = conjugation_endo(c.inverse(), o.combing);
        auto id = identity_map(f.domain());
        if (!endomorphisms_equal(compose(f, g, o.combing), id)) {
          return fail("conj(" + format_word(c.word()) + ")");
        }
      }
      return pass();
    }

    inline Claim make(std::string id, std::string summary, int lo, int hi,
                      std::vector<int> defaults,
                      std::function<ClaimOutcome(int, ClaimOptions const&)> check) {
      return {std::move(id), std::move(summary), lo, hi, std::move(defaults), std::move(check)};
    }

    inline std::vector<Claim> build_paper_suite() {
      std::vector<Claim> c{
          make("band-relations.braid-oracle",
               "the four families of defining relations of P_n hold among the expanded bands",
               3, 6, {3, 4, 5, 6}, band_relations_hold),
          make("full-twist.band-product",
               "A(1,2) A(1,3) A(2,3) ... A(n-1,n) is the full twist and is central", 2, 6,
               {2, 3, 4, 5, 6}, full_twist_is_band_product),
          make("sigma-action.table", "every row of the s_k action on A(i,j), both signs", 3, 6,
               {3, 4, 5, 6}, sigma_table_rows),
          make("catalog.homomorphism",
               "every catalog automorphism of P_n respects the defining relations", 3, 6,
               {3, 4, 5, 6}, catalog_homomorphisms),
          make("catalog.braid-homomorphism", "tau and each s_k respect the relations of B_n",
               2, 6, {2, 3, 4, 5, 6}, braid_catalog_homomorphisms),
          make("t.band-formula", "the formula for t(A(i,j)) agrees with tau on sigma words", 3,
               6, {3, 4, 5}, t_formula),
          make("t-eps.equals-psi", "t ; eps = psi, and A(1,2) goes to A(1,2) z^-2", 3, 6,
               {4, 5}, t_eps_is_psi),
          make("psi.involution", "psi ; psi = id", 2, 6, {4, 5}, psi_involution),
          make("psi.inverts-phi", "psi ; phi(i,j) ; psi = phi(i,j)^-1 for every pair", 3, 6,
               {4, 5}, psi_inverts_phi),
          make("wn.abelian-obstruction",
               "w_n(A(1,n)) is not a signed generator modulo the center in P_n / P_n'", 4, 6,
               {4, 5, 6}, wn_obstruction),
          make("omega.conjugation", "omega(k) = s_k for k != 2", 3, 6, {4, 5},
               omega_conjugation),
          make("omega2.s2-then-phi13", "omega(2) = s2 ; phi13", 3, 6, {4, 5}, omega2_composite),
          make("omega-n.central-twist-of-wn", "omega(n) = w_n modulo the center", 3, 6, {4, 5},
               omega_n_twist_of_wn),
          make("eps.central-twist-of-t", "eps = t modulo the center", 3, 6, {4, 5},
               eps_twist_of_t),
          make("omega-eps.fix-z", "each omega(k) and eps fixes z", 3, 6, {4, 5},
               omega_eps_fix_z),
      };
      for (auto const& rel : aut_p4_relations()) {
        c.push_back(make("aut-p4." + rel.slug, rel.lhs + " = " + rel.rhs + " exactly", 4, 4,
                         {4}, [rel](int n, ClaimOptions const& o) {
                           return relation_outcome(rel, n, EqualityMode::exact, Group::pure, o);
                         }));
      }
      c.push_back(make("mcg.relators-central",
                       "every relator of the omega/eps presentation is central, including "
                       "(eps ; omega(i))^2 and eps^2",
                       3, 6, {4}, mcg_relators_mod_center));
      c.push_back(make("p3.sigma-actions",
                       "x^s1 = xyx^-1, x^s2 = y^-1 x^-1 z, y^s1 = x, y^s2 = y, z fixed", 3, 3,
                       {3}, p3_sigma_actions));
      c.push_back(make("p3.theta-xi-eta", "theta^2 = 1, xi eta = eta xi, theta inverts xi and eta",
                       3, 3, {3}, p3_theta_xi_eta));
      for (auto const* phi : {"rho", "sigma", "nu"}) {
        std::string p = phi;
        c.push_back(make("p3.relations." + p,
                         "theta, xi and eta relations against " + p, 3, 3, {3},
                         [p](int n, ClaimOptions const& o) {
                           return p3_phi_relations_hold(p, n, o);
                         }));
      }
      c.push_back(make("p3.relations.random-products",
                       "theta, xi and eta relations against 20 seeded products of rho, sigma, nu",
                       3, 3, {3}, p3_random_relations));
      c.push_back(make("f2.presentation", "the six relators of Aut(F_2) are trivial", 3, 3, {3},
                       f2_relators));
      c.push_back(make("p3.lifts", "the lifts of rho, sigma, nu fix z and are homomorphisms", 3,
                       3, {3}, p3_lifts));
      c.push_back(make("p3.central-automorphisms",
                       "psi^2 = 1 and psi inverts phi13, phi23 on P_3", 3, 3, {3},
                       p3_central_automorphisms));
      c.push_back(make("u4.fix.conj-A13",
                       "Fix of conjugation by A(1,3) on U_4 is <A14 A34, A14 A24 A34> (bounded)",
                       4, 4, {4}, [](int, ClaimOptions const& o) { return fix_lemma(0, o); }));
      c.push_back(make("u4.fix.conj-A13A23",
                       "Fix of conjugation by A(1,3) A(2,3) on U_4 is <A14 A24 A34> (bounded)", 4,
                       4, {4}, [](int, ClaimOptions const& o) { return fix_lemma(1, o); }));
      c.push_back(make("u4.fix.ranks", "the two fixed subgroups have ranks 2 and 1", 4, 4, {4},
                       fix_ranks));
      c.push_back(make("u4.conj-A13.action",
                       "A(1,3) fixes A14 A24 A34 and A14 A34 and sends A14 to (A14 A34) A14 "
                       "(A14 A34)^-1",
                       4, 4, {4}, conj_a13_action));
      c.push_back(make("u4.conj-A13A23.coordinates",
                       "in x = A14 A24 A34, y = A34, z = A14: x -> x, y -> xyx^-1, z -> (xy)z(xy)^-1",
                       4, 4, {4}, conj_a13a23_coordinates));
      c.push_back(make("fix.free-factor",
                       "x_i -> x_i (i < n), x_n -> w^-1 x_n w with w = x_1 fixes exactly F_{n-1} "
                       "(radius 4)",
                       2, 6, {3}, fix_free_factor));
      c.push_back(make("u4.nonextension", "both conjugates of A14 A24^2 A34 by A14 A24 A34 differ",
                       4, 4, {4}, nonextension));
      c.push_back(make("p3.nonlift.automorphism",
                       "A12 -> A12 A13 A23^-1 A13^-1, A13 -> A13 A23, A23 -> A23 is an automorphism",
                       3, 3, {3}, nonlift_automorphism));
      c.push_back(make("u4.center-action", "z_3 acts on U_4 as conjugation by A14 A24 A34", 4,
                       4, {4}, center_acts_on_u4));
      c.push_back(make("p2.psi-extends", "tau restricts to psi on P_2", 2, 2, {2},
                       p2_psi_extends));
      c.push_back(make("tau.inverts-center", "tau(z_n) = z_n^-1, read off B_n / B_n'", 2, 6,
                       {2, 3, 4, 5, 6}, center_inversion));
      c.push_back(make("theta0.inverts-center",
                       "theta0 inverts z and is trivial modulo the center", 3, 6, {3, 4, 5, 6},
                       theta0_central));
      c.push_back(make("theta0.no-extension",
                       "no pair permutation sends -e(1,3) to e(1,3) in P_n / P_n'", 3, 6,
                       {3, 4, 5, 6}, theta0_obstruction));
      return c;
    }

    inline std::vector<Claim> build_props_suite() {
      return {
          make("oracle.coherence",
               "pure_equal agrees with the braid oracle on 500 seeded pairs, n up to the given n",
               3, 6, {5}, oracle_coherence),
          make("comb.soundness", "comb(w) expands to a braid equal to w on 500 seeded words", 3,
               6, {5}, comb_soundness),
          make("comb.multiplicative", "combed_multiply(comb u, comb v) = comb(u v)", 3, 6, {5},
               comb_multiplicative),
          make("comb.z-central", "z commutes with every A(i,j)", 2, 6, {3, 4, 5}, z_central),
          make("catalog.inverses", "every catalog entry has a two-sided inverse", 3, 6,
               {3, 4, 5}, catalog_inverses),
          make("abelian.induced-matrices",
               "t negates, determinants are +-1, and composition multiplies matrices", 3, 6,
               {3, 4, 5}, induced_matrices),
          make("aut-p4.mod-center", "every relation for Aut(P_4) holds modulo the center", 4, 4,
               {4}, aut_p4_mod_center),
          make("omega2.phi13-then-s2", "omega(2) = phi13 ; s2", 3, 6, {4, 5},
               omega2_phi13_then_s2),
          make("wn.inverts-center", "w_n(z) = z^-1", 3, 6, {3, 4, 5, 6}, wn_inverts_center),
          make("rho.literal-moves-z", "rho with A12 -> A23 A13 A23^-1 does not fix z", 3, 3,
               {3}, rho_literal_moves_z),
          make("subgroup.order-independent", "folding does not depend on generator order", 4,
               4, {4}, folding_properties),
          make("conjugation.inverse", "conj(c) ; conj(c^-1) = id on U_n", 3, 6, {4, 5},
               conjugation_inverse),
      };
    }

  }  // namespace detail

  inline std::vector<Claim> const& paper_suite() {
    static std::vector<Claim> const s = detail::build_paper_suite();
    return s;
  }

  inline std::vector<Claim> const& props_suite() {
    static std::vector<Claim> const s = detail::build_props_suite();
    return s;
  }

  inline std::vector<Claim const*> suite_manifest(Suite suite) {
    std::vector<Claim const*> out;
    if (suite != Suite::props) {
      for (auto const& c : paper_suite()) {
        out.push_back(&c);
      }
    }
    if (suite != Suite::paper) {
      for (auto const& c : props_suite()) {
        out.push_back(&c);
      }
    }
    return out;
  }

  inline Claim const* find_claim(std::string_view id) {
    for (auto const* c : suite_manifest(Suite::all)) {
      if (c->id == id) {
        return c;
      }
    }
    return nullptr;
  }

  inline ClaimRecord run_claim(Claim const& c, int n, ClaimOptions const& opts) {
    ClaimRecord r;
    r.claim_id = c.id;
    r.n        = n;
    if (n < c.min_n || n > c.max_n) {
      r.status  = ClaimStatus::skipped;
      r.witness = "defined for n in " + std::to_string(c.min_n) + ".." + std::to_string(c.max_n);
      return r;
    }
    auto const start = std::chrono::steady_clock::now();
    try {
      auto o    = c.check(n, opts);
      r.status  = o.passed ? ClaimStatus::pass : ClaimStatus::fail;
      r.witness = o.witness;
    } catch (ResourceError const& e) {
      r.status          = ClaimStatus::fail;
      r.witness         = e.what();
      r.budget_exceeded = true;
    } catch (std::exception const& e) {
      r.status  = ClaimStatus::fail;
      r.witness = std::string("error: ") + e.what();
    }
    r.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now()
                                                             - start)
                       .count();
    return r;
  }

  // Runs every claim at each n of the range (or at its own defaults when no
  // range is given). Records come back in manifest order, then by n.
  inline std::vector<ClaimRecord> run_claims(std::vector<Claim const*> const& claims,
                                             std::optional<std::pair<int, int>> range,
                                             ClaimOptions const& opts,
                                             unsigned threads = std::thread::hardware_concurrency()) {
    std::vector<std::pair<Claim const*, int>> tasks;
    for (auto const* c : claims) {
      if (range) {
        for (int n = range->first; n <= range->second; ++n) {
          tasks.emplace_back(c, n);
        }
      } else {
        for (int n : c->default_n) {
          tasks.emplace_back(c, n);
        }
      }
    }
    std::vector<ClaimRecord> records(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t k = next++; k < tasks.size(); k = next++) {
        records[k] = run_claim(*tasks[k].first, tasks[k].second, opts);
      }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) {
      pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
      t.join();
    }
    return records;
  }

  struct ClaimSummary {
    std::size_t pass    = 0;
    std::size_t fail    = 0;
    std::size_t skipped = 0;
    bool        budget_exceeded = false;
  };

  inline ClaimSummary summarize(std::vector<ClaimRecord> const& records) {
    ClaimSummary s;
    for (auto const& r : records) {
      switch (r.status) {
        case ClaimStatus::pass:
          ++s.pass;
          break;
        case ClaimStatus::fail:
          ++s.fail;
          break;
        case ClaimStatus::skipped:
          ++s.skipped;
          break;
      }
      s.budget_exceeded = s.budget_exceeded || r.budget_exceeded;
    }
    return s;
  }

}  // namespace braidforge

#endif  // BRAIDFORGE_CLAIMS_HPP_
