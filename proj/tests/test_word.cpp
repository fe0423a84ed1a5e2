#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <braidforge/word.hpp>

#include "support.hpp"

using namespace braidforge;

TEST_CASE("free reduction cancels and merges syllables", "[word]") {
  auto const a = Generator::letter(1);
  auto const b = Generator::letter(2);
  std::vector<Syllable> raw{{a, 2}, {b, 1}, {b, -1}, {a, -1}, {b, 3}};
  auto w = free_reduce(raw);
  REQUIRE(w.syllables() == std::vector<Syllable>{{a, 1}, {b, 3}});
  REQUIRE(w.length() == 4);
  REQUIRE(free_reduce(std::vector<Syllable>{{a, 1}, {a, -1}}).is_identity());
}

TEST_CASE("free reduction agrees with a letter stack and ignores bracketing", "[word][property]") {
  std::mt19937 rng(1);
  auto const   f3   = Alphabet::free_f(3);
  auto const   gens = f3.generators();
  for (int trial = 0; trial < 500; ++trial) {
    auto raw = support::random_syllables(rng, gens, 14);
    auto w   = free_reduce(raw);
    REQUIRE(support::letters_of(w) == support::naive_reduce(raw));
    REQUIRE(free_reduce(w.syllables()) == w);

    std::size_t const cut = raw.empty() ? 0 : rng() % (raw.size() + 1);
    auto left  = free_reduce(std::span<Syllable const>(raw).first(cut));
    auto right = free_reduce(std::span<Syllable const>(raw).subspan(cut));
    REQUIRE(multiply(left, right) == w);
  }
}

TEST_CASE("multiplication, inversion and exponent sums", "[word][property]") {
  std::mt19937 rng(2);
  auto const   f3   = Alphabet::free_f(3);
  auto const   gens = f3.generators();
  for (int trial = 0; trial < 500; ++trial) {
    auto u = support::random_word(rng, gens, 10);
    auto v = support::random_word(rng, gens, 10);
    auto w = support::random_word(rng, gens, 10);
    REQUIRE(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    REQUIRE(invert(invert(u)) == u);
    REQUIRE(multiply(u, invert(u)).is_identity());
    for (auto g : gens) {
      REQUIRE(exponent_sum(u * v, g) == exponent_sum(u, g) + exponent_sum(v, g));
      REQUIRE(exponent_sum(invert(u), g) == -exponent_sum(u, g));
    }
  }
}

TEST_CASE("conjugate and commutator conventions", "[word]") {
  auto const x = FreeWord(Generator::letter(1));
  auto const y = FreeWord(Generator::letter(2));
  REQUIRE(conjugate_word(y, x) == x.inverse() * y * x);
  REQUIRE(commutator(x, y) == x.inverse() * y.inverse() * x * y);
  REQUIRE(commutator(x, x).is_identity());
}

TEST_CASE("parse and format round trip", "[word][property]") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 6; ++n) {
    auto const p = Alphabet::pure(n);
    auto const b = Alphabet::braid(n);
    for (int trial = 0; trial < 100; ++trial) {
      auto w = support::random_word(rng, p.generators(), 8);
      REQUIRE(parse_word(format_word(w, p), p) == w);
      auto s = support::random_word(rng, b.generators(), 8);
      REQUIRE(parse_word(format_word(s, b), b) == s);
    }
  }
  auto const f = Alphabet::free_f({"x", "y"});
  for (int trial = 0; trial < 100; ++trial) {
    auto w = support::random_word(rng, f.generators(), 8);
    REQUIRE(parse_word(format_word(w, f), f) == w);
  }
}

TEST_CASE("parsing the word grammar", "[word]") {
  auto const p3 = Alphabet::pure(3);
  REQUIRE(parse_word("A(1,2) A(1,3)^-2", p3)
          == FreeWord(Generator::pure(1, 2)) * FreeWord(Generator::pure(1, 3), -2));
  REQUIRE(parse_word("1", p3).is_identity());
  REQUIRE(parse_word("z", p3) == full_twist_pure_word(3));
  REQUIRE(parse_word("s1 s2^-1", Alphabet::braid(3))
          == FreeWord(Generator::sigma(1)) * FreeWord(Generator::sigma(2), -1));
  REQUIRE(format_word(FreeWord()) == "1");

  REQUIRE_THROWS_AS(parse_word("A(1,4)", p3), ParseError);
  REQUIRE_THROWS_AS(parse_word("A(2,1)", p3), ParseError);
  REQUIRE_THROWS_AS(parse_word("s3", Alphabet::braid(3)), ParseError);
  REQUIRE_THROWS_AS(parse_word("A(1,2)^", p3), ParseError);
  REQUIRE_THROWS_AS(parse_word("q", p3), ParseError);
}

TEST_CASE("full twist as a band product", "[word]") {
  REQUIRE(full_twist_pure_word(3) == pure_word({{1, 2}, {1, 3}, {2, 3}}));
  REQUIRE(full_twist_pure_word(4).length() == 6);
  REQUIRE(pure_generators(4).size() == pair_count(4));
  for (int n = 2; n <= 6; ++n) {
    auto gens = pure_generators(n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      REQUIRE(pair_index(gens[k].i, gens[k].j) == k);
    }
  }
}
