#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include <braidforge/braid.hpp>

#include "support.hpp"

using namespace braidforge;

namespace {

  BraidWord sigma(int n, int k, long e = 1) {
    return BraidWord(n, FreeWord(Generator::sigma(k), e));
  }

  FreeWord x(int k) {
    return FreeWord(Generator::letter(k));
  }

}  // namespace

TEST_CASE("Artin action of a single generator", "[braid]") {
  auto f = artin_action(sigma(3, 1));
  REQUIRE(f.images[0] == x(1) * x(2) * x(1).inverse());
  REQUIRE(f.images[1] == x(1));
  REQUIRE(f.images[2] == x(3));
}

TEST_CASE("Artin action is a right action and respects the braid relations", "[braid][property]") {
  std::mt19937 rng(4);
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      REQUIRE(artin_action(sigma(n, i) * sigma(n, i, -1)) == FreeGroupEndo::identity(n));
      if (i + 1 < n) {
        REQUIRE(artin_action(sigma(n, i) * sigma(n, i + 1) * sigma(n, i))
                == artin_action(sigma(n, i + 1) * sigma(n, i) * sigma(n, i + 1)));
      }
      for (int j = i + 2; j < n; ++j) {
        REQUIRE(artin_action(sigma(n, i) * sigma(n, j)) == artin_action(sigma(n, j) * sigma(n, i)));
      }
    }
    auto const alphabet = Alphabet::braid(n);
    auto const gens     = alphabet.generators();
    for (int trial = 0; trial < 20; ++trial) {
      auto a  = BraidWord(n, support::random_word(rng, gens, 5));
      auto b  = BraidWord(n, support::random_word(rng, gens, 5));
      auto fa = artin_action(a);
      auto fb = artin_action(b);
      auto ab = artin_action(a * b);
      for (int k = 1; k <= n; ++k) {
        REQUIRE(ab.apply(x(k)) == fb.apply(fa.apply(x(k))));
      }
    }
  }
}

TEST_CASE("the full twist acts as an inner automorphism", "[braid]") {
  for (int n = 2; n <= 6; ++n) {
    FreeWord c;
    for (int k = 1; k <= n; ++k) {
      c *= x(k);
    }
    auto f = artin_action(full_twist_word(n));
    for (int k = 1; k <= n; ++k) {
      REQUIRE(f.images[static_cast<std::size_t>(k - 1)] == c * x(k) * c.inverse());
    }
  }
}

TEST_CASE("full twist is central", "[braid][property]") {
  for (int n = 2; n <= 5; ++n) {
    auto z = full_twist_word(n);
    REQUIRE(z.word().length() == static_cast<std::size_t>(n * (n - 1)));
    for (int k = 1; k < n; ++k) {
      REQUIRE(braid_words_equal(z * sigma(n, k), sigma(n, k) * z));
    }
    REQUIRE(is_central(z));
  }
  REQUIRE_FALSE(is_central(sigma(3, 1)));
}

TEST_CASE("band generators are pure", "[braid][property]") {
  for (int n = 2; n <= 6; ++n) {
    for (auto g : pure_generators(n)) {
      REQUIRE(project_to_permutation(expand_pure_generator(g.i, g.j, n))
              == Permutation::identity(n));
    }
    if (n > 2) {
      REQUIRE(project_to_permutation(sigma(n, 1)) == Permutation::transposition(n, 1, 2));
    }
  }
  REQUIRE(expand_pure_generator(1, 3, 3).word()
          == parse_word("s2 s1^2 s2^-1", Alphabet::braid(3)));
  auto const p = project_to_permutation(sigma(4, 1) * sigma(4, 2));
  REQUIRE(p == project_to_permutation(sigma(4, 1)) * project_to_permutation(sigma(4, 2)));
  REQUIRE(p.to_string().size() == std::string("(1 2 3)").size());
}

TEST_CASE("band product of the full twist matches (s1 ... s_{n-1})^n", "[braid]") {
  for (int n = 2; n <= 6; ++n) {
    REQUIRE(braid_words_equal(expand_pure_word(full_twist_pure_word(n), n), full_twist_word(n)));
  }
}

TEST_CASE("every row of the sigma action table matches the oracle", "[braid][property]") {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int sign : {1, -1}) {
        auto const s = sigma(n, k, sign);
        for (auto g : pure_generators(n)) {
          auto act = sigma_action_on_pure(k, sign, g.i, g.j, n);
          CAPTURE(n, k, sign, g.i, g.j);
          REQUIRE(braid_words_equal(expand_pure_word(act.image, n),
                                    s.inverse() * expand_pure_generator(g.i, g.j, n) * s));
          for (auto const& syl : act.image.syllables()) {
            REQUIRE(syl.generator.kind == GeneratorKind::pure);
          }
        }
      }
    }
  }
}

TEST_CASE("sigma action on generators it commutes with", "[braid]") {
  // s1 and A(3,4) commute
  auto act = sigma_action_on_pure(1, 1, 3, 4, 4);
  REQUIRE(act.image == FreeWord(Generator::pure(3, 4)));
  // s_i conjugates A(i,i+1) to itself
  REQUIRE(sigma_action_on_pure(2, -1, 2, 3, 4).image == FreeWord(Generator::pure(2, 3)));
}

TEST_CASE("oracle rejects unequal braids and mismatched strands", "[braid]") {
  REQUIRE_FALSE(braid_words_equal(sigma(3, 1), sigma(3, 2)));
  REQUIRE_FALSE(braid_words_equal(expand_pure_generator(1, 2, 3), expand_pure_generator(2, 3, 3)));
  REQUIRE_THROWS_AS(braid_words_equal(sigma(3, 1), sigma(4, 1)), InvalidArgument);
  REQUIRE_THROWS_AS(expand_pure_generator(2, 2, 3), InvalidArgument);
  REQUIRE_THROWS_AS(BraidWord(3, FreeWord(Generator::sigma(3))), InvalidArgument);
}
