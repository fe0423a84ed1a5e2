#ifndef BRAIDFORGE_BRAID_HPP_
#define BRAIDFORGE_BRAID_HPP_

// Braid words in the Artin generators, their permutations, band-generator
// expansion, the conjugation table of s_k on A(i,j), and an equality test
// through the (faithful) Artin action on a free group of rank n.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "detail/letters.hpp"
#include "error.hpp"
#include "word.hpp"

namespace braidforge {

  class BraidWord {
   public:
    BraidWord(int n, FreeWord word) : _n(n), _word(std::move(word)) {
      if (n < 2) {
        throw InvalidArgument("a braid needs at least 2 strands");
      }
      for (auto const& s : _word.syllables()) {
        if (s.generator.kind != GeneratorKind::sigma || s.generator.i < 1
            || s.generator.i >= n) {
          throw InvalidArgument(Alphabet::default_name(s.generator)
                                + " is not a generator of B_"
                                + std::to_string(n));
        }
      }
    }

    static BraidWord identity(int n) {
      return BraidWord(n, FreeWord());
    }

    int strands() const noexcept {
      return _n;
    }

    FreeWord const& word() const noexcept {
      return _word;
    }

    BraidWord inverse() const {
      return BraidWord(_n, _word.inverse());
    }

    friend BraidWord operator*(BraidWord const& a, BraidWord const& b) {
      if (a._n != b._n) {
        throw InvalidArgument("strand-count mismatch: "
                              + std::to_string(a._n) + " vs "
                              + std::to_string(b._n));
      }
      return BraidWord(a._n, a._word * b._word);
    }

    bool operator==(BraidWord const&) const = default;

   private:
    int      _n;
    FreeWord _word;
  };

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  class Permutation {
   public:
    explicit Permutation(std::vector<int> images) : _images(std::move(images)) {
      std::vector<bool> seen(_images.size(), false);
      for (int v : _images) {
        if (v < 1 || v > static_cast<int>(_images.size())
            || seen[static_cast<std::size_t>(v - 1)]) {
          throw InvalidArgument("not a permutation");
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
      }
    }

    static Permutation identity(int n) {
      std::vector<int> im(static_cast<std::size_t>(n));
      for (int k = 0; k < n; ++k) {
        im[static_cast<std::size_t>(k)] = k + 1;
      }
      return Permutation(std::move(im));
    }

    static Permutation transposition(int n, int a, int b) {
      auto p                                = identity(n);
      p._images[static_cast<std::size_t>(a - 1)] = b;
      p._images[static_cast<std::size_t>(b - 1)] = a;
      return p;
    }

    int degree() const noexcept {
      return static_cast<int>(_images.size());
    }

    int operator()(int point) const {
      return _images.at(static_cast<std::size_t>(point - 1));
    }

    std::vector<int> const& images() const noexcept {
      return _images;
    }

    bool is_identity() const noexcept {
      for (std::size_t k = 0; k < _images.size(); ++k) {
        if (_images[k] != static_cast<int>(k + 1)) {
          return false;
        }
      }
      return true;
    }

    // Left-to-right: (p * q)(x) = q(p(x)).
    friend Permutation operator*(Permutation const& p, Permutation const& q) {
      if (p.degree() != q.degree()) {
        throw InvalidArgument("permutation degree mismatch");
      }
      std::vector<int> im(p._images.size());
      for (std::size_t k = 0; k < im.size(); ++k) {
        im[k] = q(p._images[k]);
      }
      return Permutation(std::move(im));
    }

    Permutation inverse() const {
      std::vector<int> im(_images.size());
      for (std::size_t k = 0; k < im.size(); ++k) {
        im[static_cast<std::size_t>(_images[k] - 1)] = static_cast<int>(k + 1);
      }
      return Permutation(std::move(im));
    }

    // Cycle notation, "()" for the identity.
    std::string to_string() const {
      std::string       out;
      std::vector<bool> done(_images.size(), false);
      for (std::size_t k = 0; k < _images.size(); ++k) {
        if (done[k] || _images[k] == static_cast<int>(k + 1)) {
          continue;
        }
        out += '(';
        std::size_t c = k;
        bool        first = true;
        while (!done[c]) {
          done[c] = true;
          if (!first) {
            out += ' ';
          }
          out += std::to_string(c + 1);
          first = false;
          c     = static_cast<std::size_t>(_images[c] - 1);
        }
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

    bool operator==(Permutation const&) const = default;

   private:
    std::vector<int> _images;
  };

  // s_i maps to the transposition (i i+1).
  inline Permutation project_to_permutation(BraidWord const& b) {
    auto p = Permutation::identity(b.strands());
    for (auto const& s : b.word().syllables()) {
      if (s.exponent % 2 != 0) {
        p = p * Permutation::transposition(
                b.strands(), s.generator.i, s.generator.i + 1);
      }
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Band generators and the full twist
  ////////////////////////////////////////////////////////////////////////

  // A(i,j) = s_{j-1} ... s_{i+1} s_i^2 s_{i+1}^-1 ... s_{j-1}^-1
  inline BraidWord expand_pure_generator(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n)) {
      throw InvalidArgument("A(" + std::to_string(i) + "," + std::to_string(j)
                            + ") is out of range for n = " + std::to_string(n));
    }
    FreeWord w;
    for (int k = j - 1; k > i; --k) {
      w.push_back(Generator::sigma(k));
    }
    w.push_back(Generator::sigma(i), 2);
    for (int k = i + 1; k < j; ++k) {
      w.push_back(Generator::sigma(k), -1);
    }
    return BraidWord(n, std::move(w));
  }

  // Rewrites a word in the A(i,j) as a braid word.
  inline BraidWord expand_pure_word(FreeWord const& pure, int n) {
    FreeWord w;
    for (auto const& s : pure.syllables()) {
      if (s.generator.kind != GeneratorKind::pure) {
        throw InvalidArgument(Alphabet::default_name(s.generator)
                              + " is not a band generator");
      }
      w *= expand_pure_generator(s.generator.i, s.generator.j, n)
               .word()
               .pow(s.exponent);
    }
    return BraidWord(n, std::move(w));
  }

  // (s_1 ... s_{n-1})^n
  inline BraidWord full_twist_word(int n) {
    if (n < 2) {
      throw InvalidArgument("full twist needs n >= 2");
    }
    FreeWord cycle;
    for (int i = 1; i < n; ++i) {
      cycle.push_back(Generator::sigma(i));
    }
    return BraidWord(n, cycle.pow(n));
  }

  ////////////////////////////////////////////////////////////////////////
  // Artin action
  ////////////////////////////////////////////////////////////////////////

  // An endomorphism of the free group on x1 .. x<rank>.
  struct FreeGroupEndo {
    int                   rank = 0;
    std::vector<FreeWord> images;

    static FreeGroupEndo identity(int rank) {
      FreeGroupEndo f{rank, {}};
      for (int k = 1; k <= rank; ++k) {
        f.images.emplace_back(Generator::letter(k));
      }
      return f;
    }

    FreeWord apply(FreeWord const& w) const {
      FreeWord out;
      for (auto const& s : w.syllables()) {
        out *= images.at(static_cast<std::size_t>(s.generator.i - 1))
                   .pow(s.exponent);
      }
      return out;
    }

    bool operator==(FreeGroupEndo const&) const = default;
  };

  namespace detail {

    // Artin images grow much faster than combed words; the oracle gets its
    // own cap.
    inline constexpr std::size_t oracle_letter_budget = 20'000'000;

    inline Budget oracle_budget() {
      return Budget{oracle_letter_budget, "letters"};
    }

    // Images of x_1 .. x_n (slot 0 unused) under x -> x^b, where
    // x_i^{s_i} = x_i x_{i+1} x_i^-1 and x_{i+1}^{s_i} = x_i. The word is
    // consumed right to left so every step only touches two images.
    inline std::vector<Letters> artin_images(BraidWord const& b,
                                             Budget const& budget = oracle_budget()) {
      auto const           n = static_cast<std::size_t>(b.strands());
      std::vector<Letters> img(n + 1);
      for (std::size_t k = 1; k <= n; ++k) {
        img[k] = {static_cast<int>(k)};
      }
      auto const& syl = b.word().syllables();
      for (auto it = syl.rbegin(); it != syl.rend(); ++it) {
        auto const i     = static_cast<std::size_t>(it->generator.i);
        long       count = it->exponent < 0 ? -it->exponent : it->exponent;
        for (long c = 0; c < count; ++c) {
          Letters a = std::move(img[i]);
          Letters b2 = std::move(img[i + 1]);
          if (it->exponent > 0) {
            Letters next = a;
            append(next, b2);
            append_inverse(next, a);
            img[i]     = std::move(next);
            img[i + 1] = std::move(a);
          } else {
            Letters next = inverse(b2);
            append(next, a);
            append(next, b2);
            img[i]     = std::move(b2);
            img[i + 1] = std::move(next);
          }
          budget.check(img[i].size() + img[i + 1].size(), "Artin action");
        }
      }
      return img;
    }

    inline FreeWord letters_to_word(Letters const& w, GeneratorKind kind,
                                    int j = 0) {
      FreeWord out;
      for (int a : w) {
        int k = a < 0 ? -a : a;
        out.push_back(Generator{kind, k, j}, a < 0 ? -1 : 1);
      }
      return out;
    }

  }  // namespace detail

  inline FreeGroupEndo artin_action(BraidWord const& b,
                                    detail::Budget const& budget = detail::oracle_budget()) {
    auto          img = detail::artin_images(b, budget);
    FreeGroupEndo f{b.strands(), {}};
    for (std::size_t k = 1; k < img.size(); ++k) {
      f.images.push_back(
          detail::letters_to_word(img[k], GeneratorKind::letter));
    }
    return f;
  }

  // Equality in B_n, decided by comparing Artin images of x_1 .. x_n.
  inline bool braid_words_equal(BraidWord const& a, BraidWord const& b,
                                detail::Budget const& budget = detail::oracle_budget()) {
    if (a.strands() != b.strands()) {
      throw InvalidArgument("strand-count mismatch: "
                            + std::to_string(a.strands()) + " vs "
                            + std::to_string(b.strands()));
    }
    if (a.word() == b.word()) {
      return true;
    }
    return detail::artin_images(a, budget) == detail::artin_images(b, budget);
  }

  // True when b commutes with every s_k.
  inline bool is_central(BraidWord const& b, detail::Budget const& budget = detail::oracle_budget()) {
    for (int k = 1; k < b.strands(); ++k) {
      BraidWord s(b.strands(), FreeWord(Generator::sigma(k)));
      if (!braid_words_equal(s * b, b * s, budget)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Action of s_k on band generators
  ////////////////////////////////////////////////////////////////////////

  enum class SigmaTableRow {
    disjoint,            // k not in {i-1, i, j-1, j}
    own_band,            // k = i, j = i + 1
    shift_left_start,    // k = i - 1
    shift_right_start,   // k = i, j != i + 1
    shift_left_end,      // k = j - 1, j != i + 1
    shift_right_end      // k = j
  };

  struct SigmaAction {
    FreeWord      image;
    SigmaTableRow row;
    // The table restricts the row k = j, sign -1 to j != n - 1; the formula
    // is produced whenever A(i,j+1) exists and this flag records that the
    // literal side condition was not met.
    bool outside_side_condition = false;
  };

  // s_k^{-sign} A(i,j) s_k^{sign}, as a word in the band generators.
  inline SigmaAction sigma_action_on_pure(int k, int sign, int i, int j, int n) {
    if (!(1 <= k && k < n)) {
      throw InvalidArgument("s" + std::to_string(k) + " is out of range for n = "
                            + std::to_string(n));
    }
    if (!(1 <= i && i < j && j <= n)) {
      throw InvalidArgument("A(" + std::to_string(i) + "," + std::to_string(j)
                            + ") is out of range for n = " + std::to_string(n));
    }
    if (sign != 1 && sign != -1) {
      throw InvalidArgument("sign must be +1 or -1");
    }
    auto A = [](int p, int q, long e = 1) {
      return FreeWord(Generator::pure(p, q), e);
    };
    if (k != i - 1 && k != i && k != j - 1 && k != j) {
      return {A(i, j), SigmaTableRow::disjoint};
    }
    if (k == i && j == i + 1) {
      return {A(i, j), SigmaTableRow::own_band};
    }
    if (k == i - 1) {
      if (sign == 1) {
        return {A(i - 1, j), SigmaTableRow::shift_left_start};
      }
      return {A(i, j, -1) * A(i - 1, j) * A(i, j),
              SigmaTableRow::shift_left_start};
    }
    if (k == i) {
      if (sign == 1) {
        return {A(i + 1, j) * commutator(A(i, i + 1, -1), A(i, j, -1)),
                SigmaTableRow::shift_right_start};
      }
      return {A(i + 1, j), SigmaTableRow::shift_right_start};
    }
    if (k == j - 1) {
      if (sign == 1) {
        return {A(i, j - 1), SigmaTableRow::shift_left_end};
      }
      return {A(i, j - 1) * commutator(A(i, j, -1), A(j - 1, j, -1)),
              SigmaTableRow::shift_left_end};
    }
    // k == j, so j + 1 <= n
    if (sign == 1) {
      return {A(i, j) * A(i, j + 1) * A(i, j, -1),
              SigmaTableRow::shift_right_end};
    }
    return {A(i, j + 1), SigmaTableRow::shift_right_end, j == n - 1};
  }

}  // namespace braidforge

#endif  // BRAIDFORGE_BRAID_HPP_
