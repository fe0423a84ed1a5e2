#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <map>
#include <string>

#include <braidforge/subgroup.hpp>

#include "support.hpp"

using namespace braidforge;

namespace {

  FreeWord u4(int i, long e = 1) {
    return FreeWord(Generator::pure(i, 4), e);
  }

  FreeWord letter(int k, long e = 1) {
    return FreeWord(Generator::letter(k), e);
  }

  // Every product of at most `depth` generators or inverses.
  std::map<std::string, FreeWord> products(std::vector<FreeWord> const& gens, int depth) {
    std::vector<FreeWord> letters;
    for (auto const& g : gens) {
      letters.push_back(g);
      letters.push_back(g.inverse());
    }
    std::map<std::string, FreeWord> seen{{format_word(FreeWord()), FreeWord()}};
    std::vector<FreeWord>           layer{FreeWord()};
    for (int d = 0; d < depth; ++d) {
      std::vector<FreeWord> next;
      for (auto const& w : layer) {
        for (auto const& l : letters) {
          next.push_back(w * l);
          seen.emplace(format_word(next.back()), next.back());
        }
      }
      layer = std::move(next);
    }
    return seen;
  }

  std::vector<FreeWord> ball(Alphabet const& a, int radius) {
    std::vector<FreeWord> out{FreeWord()};
    std::vector<FreeWord> layer{FreeWord()};
    for (int r = 0; r < radius; ++r) {
      std::vector<FreeWord> next;
      for (auto const& w : layer) {
        for (auto g : a.generators()) {
          for (long e : {1L, -1L}) {
            auto v = w * FreeWord(g, e);
            if (v.length() == w.length() + 1) {
              next.push_back(v);
            }
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      layer = std::move(next);
    }
    return out;
  }

}  // namespace

TEST_CASE("folding small subgroups", "[subgroup]") {
  auto const f2 = Alphabet::free_f(2);
  auto       g  = fold_subgroup(f2, {letter(1, 2), letter(2, 2)});
  REQUIRE(g.rank() == 2);
  REQUIRE(g.contains(letter(1, 4) * letter(2, -2)));
  REQUIRE_FALSE(g.contains(letter(1)));

  // <a, a^2 b> = <a, b>
  auto full = fold_subgroup(f2, {letter(1), letter(1, 2) * letter(2)});
  REQUIRE(full.rank() == 2);
  REQUIRE(full.vertex_count() == 1);
  REQUIRE(full.contains(letter(2)));

  auto trivial = fold_subgroup(f2, {});
  REQUIRE(trivial.rank() == 0);
  REQUIRE(trivial.contains(FreeWord()));
  REQUIRE_FALSE(trivial.contains(letter(1)));

  REQUIRE_THROWS_AS(fold_subgroup(f2, {FreeWord(Generator::pure(1, 2))}), InvalidArgument);
}

TEST_CASE("membership agrees with brute force", "[subgroup][property]") {
  auto const f2 = Alphabet::free_f(2);
  auto const u  = Alphabet::free_u(4);
  std::vector<std::pair<Alphabet, std::vector<FreeWord>>> const cases{
      {f2, {letter(1, 2), letter(2, 2)}},
      {f2, {letter(1) * letter(2), letter(2) * letter(1)}},
      {f2, {letter(1) * letter(2) * letter(1, -1), letter(2, 3)}},
      {u, {u4(1) * u4(3), u4(3, -1) * u4(2) * u4(3)}},
      {u, {u4(1) * u4(2) * u4(3)}},
  };
  for (auto const& [alphabet, gens] : cases) {
    auto const g     = fold_subgroup(alphabet, gens);
    auto const known = products(gens, 4);
    for (auto const& [text, w] : known) {
      REQUIRE(subgroup_contains(g, w));
    }
    // each generating set is Nielsen reduced, so short members are short products
    for (auto const& w : ball(alphabet, 4)) {
      CAPTURE(format_word(w, alphabet));
      REQUIRE(subgroup_contains(g, w) == (known.count(format_word(w)) > 0));
    }
  }
}

TEST_CASE("Nielsen moves do not change the folded subgroup", "[subgroup]") {
  auto const u = Alphabet::free_u(4);
  auto const v = u4(1) * u4(3);
  auto const x = u4(1) * u4(2) * u4(3);
  auto const a = fold_subgroup(u, {v, x});
  auto const b = fold_subgroup(u, {v, v.inverse() * x});
  REQUIRE(a.rank() == b.rank());
  for (auto const& w : ball(u, 5)) {
    REQUIRE(a.contains(w) == b.contains(w));
  }
  // (v x^-1)^2 v needs five factors
  REQUIRE(a.contains(u4(1) * u4(2, -2) * u4(3)));
}

TEST_CASE("folding ignores generator order", "[subgroup][property]") {
  std::mt19937          rng(30);
  auto const            a = Alphabet::free_f(3);
  std::vector<FreeWord> gens{letter(1) * letter(2), letter(2, 2) * letter(3, -1),
                             letter(3) * letter(1, -1) * letter(3), letter(1, 3)};
  auto const reference = fold_subgroup(a, gens);
  auto const probes    = ball(a, 4);
  for (int round = 0; round < 8; ++round) {
    std::shuffle(gens.begin(), gens.end(), rng);
    auto g = fold_subgroup(a, gens);
    REQUIRE(g.rank() == reference.rank());
    REQUIRE(g.vertex_count() == reference.vertex_count());
    for (auto const& p : probes) {
      REQUIRE(g.contains(p) == reference.contains(p));
    }
  }
}

TEST_CASE("conjugation endomorphisms of U_n", "[subgroup]") {
  auto f = conjugation_endo(PureWord(4, FreeWord(Generator::pure(1, 3))));
  auto v = u4(1) * u4(3);
  REQUIRE(f.apply(u4(1) * u4(2) * u4(3)) == u4(1) * u4(2) * u4(3));
  REQUIRE(f.apply(v) == v);
  REQUIRE(f.apply(u4(1)) == v * u4(1) * v.inverse());
  REQUIRE_THROWS_AS(conjugation_endo(PureWord(4, u4(1))), InvalidArgument);

  std::mt19937 rng(31);
  for (int n = 3; n <= 5; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      auto c  = PureWord(n, support::random_pure(rng, n - 1, 5));
      auto fc = conjugation_endo(c);
      auto gc = conjugation_endo(c.inverse());
      auto id = identity_map(fc.domain());
      REQUIRE(endomorphisms_equal(compose(fc, gc), id));
      REQUIRE(endomorphisms_equal(compose(gc, fc), id));
    }
  }
}

TEST_CASE("fixed elements of a ball", "[subgroup]") {
  auto const a  = Alphabet::free_f(2);
  auto const id = identity_map(a);
  REQUIRE(enumerate_fixed_elements(id, 3).size() == 1 + 4 + 12 + 36);

  // conjugation by a fixes exactly the powers of a
  auto inner = GeneratorMap(a, a, {letter(1), letter(1, -1) * letter(2) * letter(1)});
  auto fixed = enumerate_fixed_elements(inner, 5);
  REQUIRE(fixed.size() == 11);
  for (auto const& w : fixed) {
    REQUIRE(w.support().size() <= 1);
  }

  EnumerationOptions tiny;
  tiny.max_words = 100;
  REQUIRE_THROWS_AS(enumerate_fixed_elements(id, 6, tiny), ResourceError);
}

TEST_CASE("fixed subgroups of the two conjugations of U_4", "[subgroup]") {
  auto r = verify_fix_lemmas(8);
  REQUIRE(r.passed);
  REQUIRE(r.single.generators_fixed);
  REQUIRE(r.single.outside.empty());
  REQUIRE(r.single.rank == 2);
  REQUIRE(r.product.generators_fixed);
  REQUIRE(r.product.outside.empty());
  REQUIRE(r.product.rank == 1);
  REQUIRE(r.displayed_computation);
  REQUIRE(r.coordinate_forms);
  REQUIRE_FALSE(r.shortened_z_form);

  auto a = fold_subgroup(Alphabet::free_u(4), {u4(1) * u4(3), u4(1) * u4(2) * u4(3)});
  auto b = fold_subgroup(Alphabet::free_u(4), {u4(1) * u4(2) * u4(3)});
  REQUIRE(a.rank() == 2);
  REQUIRE(b.rank() == 1);
}

TEST_CASE("non-extension instance", "[subgroup]") {
  auto r = verify_nonextension_instance();
  REQUIRE(r.passed);
  REQUIRE(r.control);
  REQUIRE(r.target == u4(1) * u4(2, 2) * u4(3));
  REQUIRE(r.forward != r.target);
  REQUIRE(r.backward != r.target);
}
