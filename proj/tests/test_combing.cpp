#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <braidforge/braid.hpp>
#include <braidforge/combing.hpp>

#include "support.hpp"

using namespace braidforge;

namespace {

  FreeWord A(int i, int j, long e = 1) {
    return FreeWord(Generator::pure(i, j), e);
  }

  bool oracle_equal(PureWord const& a, PureWord const& b) {
    return braid_words_equal(expand_pure_word(a.word(), a.strands()),
                             expand_pure_word(b.word(), b.strands()));
  }

}  // namespace

TEST_CASE("combing the full twist of P_3", "[combing]") {
  auto c = comb(PureWord(3, A(1, 2) * A(1, 3) * A(2, 3)));
  REQUIRE(c.component(3) == A(1, 3) * A(2, 3));
  REQUIRE(c.component(2) == A(1, 2));
  REQUIRE(c.length() == 3);
}

TEST_CASE("combed components lie in the right free factors", "[combing]") {
  // A(2,3) A(1,2) = A(1,2) (A(1,2)^-1 A(2,3) A(1,2))
  auto c = comb(PureWord(3, A(2, 3) * A(1, 2)));
  REQUIRE(c.component(2) == A(1, 2));
  for (int k = 2; k <= 3; ++k) {
    for (auto const& s : c.component(k).syllables()) {
      REQUIRE(s.generator.j == k);
    }
  }
  REQUIRE(oracle_equal(c.flatten(), PureWord(3, A(2, 3) * A(1, 2))));
}

TEST_CASE("combing is sound against the braid oracle", "[combing][property]") {
  std::mt19937 rng(10);
  for (int trial = 0; trial < 500; ++trial) {
    int const n = 3 + trial % 3;
    auto      w = PureWord(n, support::random_pure(rng, n, 12));
    auto      c = comb(w);
    CAPTURE(format_word(w.word()));
    REQUIRE(oracle_equal(w, c.flatten()));
    REQUIRE(comb(c.flatten()) == c);
  }
}

TEST_CASE("combed multiplication is comb of the product", "[combing][property]") {
  CombingOptions big;
  big.syllable_budget = 20'000'000;
  std::mt19937 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int const n = 3 + trial % 3;
    auto      u = PureWord(n, support::random_pure(rng, n, 12));
    auto      v = PureWord(n, support::random_pure(rng, n, 12));
    REQUIRE(combed_multiply(comb(u, big), comb(v, big), big) == comb(u * v, big));
    REQUIRE(combed_multiply(comb(u, big), combed_invert(comb(u, big), big), big)
            == comb(PureWord::identity(n)));
  }
}

TEST_CASE("the full twist is central in P_n", "[combing][property]") {
  for (int n = 2; n <= 5; ++n) {
    auto const z = PureWord::full_twist(n);
    for (auto g : pure_generators(n)) {
      auto a = PureWord(n, FreeWord(g));
      REQUIRE(pure_equal(z * a, a * z));
    }
  }
  REQUIRE_FALSE(pure_equal(PureWord(3, A(1, 2) * A(1, 3)), PureWord(3, A(1, 3) * A(1, 2))));
}

TEST_CASE("every conjugation rule pattern is covered", "[combing][property]") {
  for (int n = 2; n <= 6; ++n) {
    for (int j = 2; j <= n; ++j) {
      for (int k = 1; k < j; ++k) {
        for (int s = 2; s <= j; ++s) {
          for (int r = 1; r < s; ++r) {
            for (int sign : {1, -1}) {
              CAPTURE(n, k, j, r, s, sign);
              REQUIRE_NOTHROW(detail::rule_pattern(k, j, r, s));
              auto image = rule_conjugate(k, j, r, s, sign);
              auto c     = PureWord(n, A(r, s, sign));
              REQUIRE(oracle_equal(PureWord(n, image), c.inverse() * PureWord(n, A(k, j)) * c));
              if (s < j) {
                for (auto const& syl : image.syllables()) {
                  REQUIRE(syl.generator.j == j);
                }
              }
            }
          }
        }
      }
    }
  }
  REQUIRE_THROWS_AS(detail::rule_pattern(1, 3, 1, 4), InvalidArgument);
}

TEST_CASE("a small budget is enforced", "[combing]") {
  CombingOptions tiny;
  tiny.syllable_budget = 4;
  auto w = PureWord(5, A(1, 5) * A(2, 3, 3) * A(1, 2) * A(4, 5, -2) * A(1, 3));
  REQUIRE_THROWS_AS(comb(w, tiny), ResourceError);
  REQUIRE_NOTHROW(comb(w));
}

TEST_CASE("center split and central form", "[combing]") {
  auto const z = PureWord::full_twist(4);
  auto const a = PureWord(4, A(1, 2) * A(3, 4, -1));
  REQUIRE(center_split(a * z.pow(3), a) == 3);
  REQUIRE(center_split(a, a * z.pow(-2)) == 2);
  REQUIRE(center_split(a, PureWord(4, A(1, 2))) == std::nullopt);

  auto cf = central_form(PureWord(4, A(1, 2)) * z.pow(-2));
  REQUIRE(cf.core == PureWord(4, A(1, 2)));
  REQUIRE(cf.z_exponent == -2);
  REQUIRE(format_central_form(cf) == "A(1,2) z^-2");
  REQUIRE(format_central_form(central_form(z)) == "z");
  REQUIRE(format_central_form(central_form(PureWord::identity(4))) == "1");
}

TEST_CASE("normalize gives equal words one representative", "[combing]") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto w = PureWord(4, support::random_pure(rng, 4, 8));
    auto z = PureWord::full_twist(4);
    REQUIRE(normalize(w * z) == normalize(z * w));
    REQUIRE(normalize(normalize(w)) == normalize(w));
  }
}

TEST_CASE("P_3 coordinates", "[combing][property]") {
  auto const x = FreeWord(p3_x());
  auto const y = FreeWord(p3_y());
  REQUIRE(p3_coordinates(PureWord::full_twist(3)) == P3Element{1, FreeWord()});
  REQUIRE(p3_coordinates(PureWord(3, A(1, 2))) == P3Element{1, y.inverse() * x.inverse()});

  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto u  = PureWord(3, support::random_pure(rng, 3, 10));
    auto v  = PureWord(3, support::random_pure(rng, 3, 10));
    auto cu = p3_coordinates(u);
    auto cv = p3_coordinates(v);
    REQUIRE(p3_coordinates(u * v) == cu * cv);
    REQUIRE(pure_equal(from_p3_coordinates(cu), u));
    REQUIRE(pure_equal(u, v) == (cu == cv));
  }
}

TEST_CASE("exponent vectors", "[combing]") {
  auto v = pure_exponent_vector(A(1, 2, 2) * A(2, 3, -1) * A(1, 2), 3);
  REQUIRE(v == std::vector<long>{3, 0, -1});
  REQUIRE(pure_exponent_vector(full_twist_pure_word(4), 4) == std::vector<long>(6, 1));
}
