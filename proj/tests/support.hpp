#ifndef BRAIDFORGE_TESTS_SUPPORT_HPP_
#define BRAIDFORGE_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include <braidforge/word.hpp>

namespace support {

  using namespace braidforge;

  inline std::vector<Syllable> random_syllables(std::mt19937& rng, std::span<Generator const> gens,
                                                int max_length) {
    std::vector<Syllable> out;
    int const             len = static_cast<int>(rng() % static_cast<unsigned>(max_length + 1));
    for (int k = 0; k < len; ++k) {
      long e = static_cast<long>(rng() % 5) - 2;
      out.push_back({gens[rng() % gens.size()], e == 0 ? 1 : e});
    }
    return out;
  }

  inline FreeWord random_word(std::mt19937& rng, std::span<Generator const> gens, int max_length) {
    auto s = random_syllables(rng, gens, max_length);
    return free_reduce(s);
  }

  inline FreeWord random_pure(std::mt19937& rng, int n, int max_length) {
    auto const gens = pure_generators(n);
    FreeWord   w;
    int const  len = static_cast<int>(rng() % static_cast<unsigned>(max_length + 1));
    for (int k = 0; k < len; ++k) {
      w.push_back(gens[rng() % gens.size()], rng() % 2 ? 1 : -1);
    }
    return w;
  }

  // Letter-by-letter stack reduction, independent of FreeWord's run-length
  // bookkeeping.
  inline std::vector<std::pair<Generator, int>> naive_reduce(std::span<Syllable const> raw) {
    std::vector<std::pair<Generator, int>> stack;
    for (auto const& s : raw) {
      int const sign = s.exponent < 0 ? -1 : 1;
      for (long k = 0; k < (s.exponent < 0 ? -s.exponent : s.exponent); ++k) {
        if (!stack.empty() && stack.back().first == s.generator && stack.back().second == -sign) {
          stack.pop_back();
        } else {
          stack.emplace_back(s.generator, sign);
        }
      }
    }
    return stack;
  }

  inline std::vector<std::pair<Generator, int>> letters_of(FreeWord const& w) {
    return naive_reduce(w.syllables());
  }

}  // namespace support

#endif  // BRAIDFORGE_TESTS_SUPPORT_HPP_
