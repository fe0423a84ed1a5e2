#ifndef BRAIDFORGE_COMBING_HPP_
#define BRAIDFORGE_COMBING_HPP_

// Combed normal form of pure braids. P_n splits as U_n x| P_{n-1} with U_n
// free on A(1,n) .. A(n-1,n); iterating gives a unique factorisation
// u_n u_{n-1} ... u_2 with u_k a reduced word in U_k.

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "detail/letters.hpp"
#include "error.hpp"
#include "word.hpp"

namespace braidforge {

  class PureWord {
   public:
    PureWord(int n, FreeWord word) : _n(n), _word(std::move(word)) {
      if (n < 2) {
        throw InvalidArgument("a pure braid needs at least 2 strands");
      }
      for (auto const& s : _word.syllables()) {
        auto const& g = s.generator;
        if (g.kind != GeneratorKind::pure || g.i < 1 || g.i >= g.j || g.j > n) {
          throw InvalidArgument(Alphabet::default_name(g)
                                + " is not a generator of P_"
                                + std::to_string(n));
        }
      }
    }

    static PureWord identity(int n) {
      return PureWord(n, FreeWord());
    }

    static PureWord full_twist(int n) {
      return PureWord(n, full_twist_pure_word(n));
    }

    int strands() const noexcept {
      return _n;
    }

    FreeWord const& word() const noexcept {
      return _word;
    }

    PureWord inverse() const {
      return PureWord(_n, _word.inverse());
    }

    PureWord pow(long k) const {
      return PureWord(_n, _word.pow(k));
    }

    friend PureWord operator*(PureWord const& a, PureWord const& b) {
      if (a._n != b._n) {
        throw InvalidArgument("strand-count mismatch: "
                              + std::to_string(a._n) + " vs "
                              + std::to_string(b._n));
      }
      return PureWord(a._n, a._word * b._word);
    }

    // Syntactic equality of the reduced words; see pure_equal for equality
    // in P_n.
    bool operator==(PureWord const&) const = default;

   private:
    int      _n;
    FreeWord _word;
  };

  inline BraidWord to_braid(PureWord const& w) {
    return expand_pure_word(w.word(), w.strands());
  }

  class CombedPureBraid {
   public:
    // components[k] is u_k for k = 2..n; slots 0 and 1 are unused.
    CombedPureBraid(int n, std::vector<FreeWord> components)
        : _n(n), _components(std::move(components)) {
      if (_components.size() != static_cast<std::size_t>(n + 1)) {
        throw InvalidArgument("combed braid needs n + 1 component slots");
      }
      for (int k = 2; k <= n; ++k) {
        for (auto const& s : component(k).syllables()) {
          if (s.generator.kind != GeneratorKind::pure || s.generator.j != k) {
            throw InvalidArgument("component u_" + std::to_string(k)
                                  + " contains "
                                  + Alphabet::default_name(s.generator));
          }
        }
      }
    }

    static CombedPureBraid identity(int n) {
      return CombedPureBraid(n, std::vector<FreeWord>(static_cast<std::size_t>(n + 1)));
    }

    int strands() const noexcept {
      return _n;
    }

    FreeWord const& component(int k) const {
      return _components.at(static_cast<std::size_t>(k));
    }

    bool is_identity() const noexcept {
      for (auto const& c : _components) {
        if (!c.is_identity()) {
          return false;
        }
      }
      return true;
    }

    // u_n u_{n-1} ... u_2
    PureWord flatten() const {
      FreeWord w;
      for (int k = _n; k >= 2; --k) {
        w *= component(k);
      }
      return PureWord(_n, std::move(w));
    }

    std::size_t length() const noexcept {
      std::size_t total = 0;
      for (auto const& c : _components) {
        total += c.length();
      }
      return total;
    }

    bool operator==(CombedPureBraid const&) const = default;

   private:
    int                   _n;
    std::vector<FreeWord> _components;
  };

  struct CombingOptions {
    std::size_t syllable_budget = 200'000;

    // BRAIDFORGE_BUDGET, when set to a positive integer, replaces the default.
    static CombingOptions from_environment() {
      CombingOptions opts;
      if (char const* env = std::getenv("BRAIDFORGE_BUDGET")) {
        char*              end = nullptr;
        unsigned long long v   = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
          opts.syllable_budget = static_cast<std::size_t>(v);
        }
      }
      return opts;
    }

    detail::Budget budget() const {
      return detail::Budget{syllable_budget};
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Conjugation rules
  ////////////////////////////////////////////////////////////////////////

  enum class RulePattern {
    free_factor,      // conjugator in U_j itself
    shared_end,       // s = k
    shared_start,     // r = k, s < j
    interleaved,      // r < k < s
    commuting         // k < r < s < j, or s < k
  };

  namespace detail {

    inline RulePattern rule_pattern(int k, int j, int r, int s) {
      if (!(1 <= k && k < j) || !(1 <= r && r < s) || s > j) {
        throw InvalidArgument("conjugation rule needs A(k,j), A(r,s) with s <= j");
      }
      if (s == j) {
        return RulePattern::free_factor;
      }
      if (s == k) {
        return RulePattern::shared_end;
      }
      if (r == k) {
        return RulePattern::shared_start;
      }
      if (r < k && k < s) {
        return RulePattern::interleaved;
      }
      if ((k < r && s < j) || s < k) {
        return RulePattern::commuting;
      }
      // unreachable for valid indices; the enumeration tests assert this
      throw InvalidArgument("no conjugation rule covers this index pattern");
    }

    // A(r,s)^-e A(k,j) A(r,s)^e for s < j as letters over U_j (letter m
    // stands for A(m,j)).
    inline Letters rule_letters(int k, int j, int r, int s, int e) {
      Letters out;
      auto    conj = [&](Letters const& c) {
        // c^e A(k,j) c^-e
        if (e > 0) {
          append(out, c);
          push_letter(out, k);
          append_inverse(out, c);
        } else {
          append_inverse(out, c);
          push_letter(out, k);
          append(out, c);
        }
      };
      switch (rule_pattern(k, j, r, s)) {
        case RulePattern::shared_end:
          conj({r, k});
          break;
        case RulePattern::shared_start:
          conj({k, s});
          break;
        case RulePattern::interleaved: {
          // [A(r,j)^-e, A(s,j)^-e] = A(r,j)^e A(s,j)^e A(r,j)^-e A(s,j)^-e
          Letters c;
          push_letter(c, e * r);
          push_letter(c, e * s);
          push_letter(c, -e * r);
          push_letter(c, -e * s);
          conj(c);
          break;
        }
        case RulePattern::commuting:
          out.push_back(k);
          break;
        case RulePattern::free_factor:
          throw InvalidArgument("free-factor conjugation has no rule letters");
      }
      return out;
    }

    struct PureLetter {
      int i;
      int j;
      int sign;
    };

    inline std::vector<PureLetter> pure_letters(FreeWord const& w) {
      std::vector<PureLetter> out;
      for (auto const& s : w.syllables()) {
        long count = s.exponent < 0 ? -s.exponent : s.exponent;
        for (long c = 0; c < count; ++c) {
          out.push_back({s.generator.i, s.generator.j, s.exponent < 0 ? -1 : 1});
        }
      }
      return out;
    }

    // Images of A(1,j) .. A(j-1,j) under x -> p x p^-1 for a pure braid p
    // on fewer than j strands, built up by appending letters to p.
    class ConjugationTable {
     public:
      explicit ConjugationTable(int j) : _j(j), _images(static_cast<std::size_t>(j)) {
        for (int m = 1; m < j; ++m) {
          _images[static_cast<std::size_t>(m)] = {m};
        }
      }

      // p <- p A(r,s)^sign. With a = A(r,s)^sign, x -> p a x a^-1 p^-1 is
      // the old table applied to a x a^-1, which is a short rule word.
      void append_letter(int r, int s, int sign, Budget const& budget) {
        std::vector<Letters> next(_images.size());
        std::size_t          total = 0;
        for (int m = 1; m < _j; ++m) {
          auto rule = rule_letters(m, _j, r, s, -sign);
          if (rule.size() == 1 && rule[0] == m) {
            next[static_cast<std::size_t>(m)] = _images[static_cast<std::size_t>(m)];
          } else {
            next[static_cast<std::size_t>(m)] = substitute(rule, _images);
          }
          total += syllables(next[static_cast<std::size_t>(m)]);
        }
        budget.check(total, "combing");
        _images = std::move(next);
      }

      Letters const& image(int m) const {
        return _images[static_cast<std::size_t>(m)];
      }

      std::vector<Letters> const& images() const {
        return _images;
      }

     private:
      int                  _j;
      std::vector<Letters> _images;
    };

    inline Letters word_to_letters(FreeWord const& w) {
      Letters out;
      for (auto const& s : w.syllables()) {
        long count = s.exponent < 0 ? -s.exponent : s.exponent;
        int  a     = s.exponent < 0 ? -s.generator.i : s.generator.i;
        for (long c = 0; c < count; ++c) {
          push_letter(out, a);
        }
      }
      return out;
    }

  }  // namespace detail

  // A(r,s)^-sign A(k,j) A(r,s)^sign as a reduced word in U_j when s < j, or
  // the literal conjugate when the conjugator already lies in U_j.
  inline FreeWord rule_conjugate(int k, int j, int r, int s, int sign) {
    if (sign != 1 && sign != -1) {
      throw InvalidArgument("sign must be +1 or -1");
    }
    if (detail::rule_pattern(k, j, r, s) == RulePattern::free_factor) {
      FreeWord c(Generator::pure(r, s), sign);
      return conjugate_word(FreeWord(Generator::pure(k, j)), c);
    }
    return detail::letters_to_word(
        detail::rule_letters(k, j, r, s, sign), GeneratorKind::pure, j);
  }

  ////////////////////////////////////////////////////////////////////////
  // Combing
  ////////////////////////////////////////////////////////////////////////

  namespace detail {

    // Combed components u_2 .. u_n as letters (letter m of u_j is A(m,j)),
    // grown by multiplying on the left one band generator at a time.
    class CombState {
     public:
      CombState(int n, Budget budget)
          : _n(n), _budget(budget), _u(static_cast<std::size_t>(n + 1)) {}

      CombState(CombedPureBraid const& c, Budget budget)
          : CombState(c.strands(), budget) {
        for (int j = 2; j <= _n; ++j) {
          _u[static_cast<std::size_t>(j)] = word_to_letters(c.component(j));
        }
      }

      // Left-multiplies by a = A(r,s)^sign. For j > s, a u_j = (a u_j a^-1) a
      // with a u_j a^-1 in U_j given letterwise by the conjugation rules;
      // a then joins u_s at the front.
      void prepend(int r, int s, int sign) {
        std::size_t total = 0;
        for (int j = s + 1; j <= _n; ++j) {
          auto& u = _u[static_cast<std::size_t>(j)];
          if (u.empty()) {
            continue;
          }
          std::vector<Letters> rules(static_cast<std::size_t>(j));
          bool                 moves = false;
          for (int m = 1; m < j; ++m) {
            rules[static_cast<std::size_t>(m)] = rule_letters(m, j, r, s, -sign);
            moves = moves || rules[static_cast<std::size_t>(m)] != Letters{m};
          }
          if (moves) {
            u = substitute(u, rules);
          }
          total += syllables(u);
        }
        auto&   head = _u[static_cast<std::size_t>(s)];
        int     a    = sign * r;
        if (!head.empty() && head.front() == -a) {
          head.erase(head.begin());
        } else {
          head.insert(head.begin(), a);
        }
        _budget.check(total + syllables(head), "combing");
      }

      void prepend_word(FreeWord const& w) {
        auto letters = pure_letters(w);
        for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
          prepend(it->i, it->j, it->sign);
        }
      }

      CombedPureBraid result() const {
        std::vector<FreeWord> components(static_cast<std::size_t>(_n + 1));
        for (int j = 2; j <= _n; ++j) {
          components[static_cast<std::size_t>(j)] = letters_to_word(
              _u[static_cast<std::size_t>(j)], GeneratorKind::pure, j);
        }
        return CombedPureBraid(_n, std::move(components));
      }

     private:
      int                  _n;
      Budget               _budget;
      std::vector<Letters> _u;
    };

  }  // namespace detail

  // Writes w = u_n ... u_2, reading w right to left and pushing each letter
  // A(r,s) rightwards past the higher components it does not belong to.
  inline CombedPureBraid comb(PureWord const& w, CombingOptions const& opts = {}) {
    detail::CombState state(w.strands(), opts.budget());
    state.prepend_word(w.word());
    return state.result();
  }

  // a b: the letters of a are pushed through the higher components of b.
  inline CombedPureBraid combed_multiply(CombedPureBraid const& a,
                                         CombedPureBraid const& b,
                                         CombingOptions const&  opts = {}) {
    if (a.strands() != b.strands()) {
      throw InvalidArgument("strand-count mismatch: "
                            + std::to_string(a.strands()) + " vs "
                            + std::to_string(b.strands()));
    }
    detail::CombState state(b, opts.budget());
    state.prepend_word(a.flatten().word());
    return state.result();
  }

  inline CombedPureBraid combed_invert(CombedPureBraid const& a,
                                       CombingOptions const&  opts = {}) {
    return comb(a.flatten().inverse(), opts);
  }

  inline bool pure_equal(PureWord const& a, PureWord const& b,
                         CombingOptions const& opts = {}) {
    if (a.strands() != b.strands()) {
      throw InvalidArgument("strand-count mismatch: "
                            + std::to_string(a.strands()) + " vs "
                            + std::to_string(b.strands()));
    }
    if (a.word() == b.word()) {
      return true;
    }
    return comb(a, opts) == comb(b, opts);
  }

  // Reduced representative: the flattened combed form.
  inline PureWord normalize(PureWord const& w, CombingOptions const& opts = {}) {
    return comb(w, opts).flatten();
  }

  // Exponent sums of the A(i,j), indexed by pair_index.
  inline std::vector<long> pure_exponent_vector(FreeWord const& w, int n) {
    std::vector<long> v(pair_count(n), 0);
    for (auto const& s : w.syllables()) {
      if (s.generator.kind != GeneratorKind::pure || s.generator.j > n) {
        throw InvalidArgument(Alphabet::default_name(s.generator)
                              + " is not a generator of P_"
                              + std::to_string(n));
      }
      v[pair_index(s.generator.i, s.generator.j)] += s.exponent;
    }
    return v;
  }

  // k with a = b z_n^k. The full twist abelianises to the all-ones vector,
  // so k is forced by the abelianised difference and then checked exactly.
  inline std::optional<long> center_split(PureWord const& a, PureWord const& b,
                                          CombingOptions const& opts = {}) {
    if (a.strands() != b.strands()) {
      throw InvalidArgument("strand-count mismatch: "
                            + std::to_string(a.strands()) + " vs "
                            + std::to_string(b.strands()));
    }
    int const n  = a.strands();
    auto      va = pure_exponent_vector(a.word(), n);
    auto      vb = pure_exponent_vector(b.word(), n);
    long      k  = va[0] - vb[0];
    for (std::size_t t = 1; t < va.size(); ++t) {
      if (va[t] - vb[t] != k) {
        return std::nullopt;
      }
    }
    if (!pure_equal(a, b * PureWord::full_twist(n).pow(k), opts)) {
      return std::nullopt;
    }
    return k;
  }

  // w written as core z^k, where core is a combed word and k is chosen to
  // make core shortest (ties: smaller |k|, then smaller k).
  struct CentralForm {
    PureWord core;
    long     z_exponent;
  };

  inline CentralForm central_form(PureWord const& w, CombingOptions const& opts = {}) {
    int const         n = w.strands();
    auto              v = pure_exponent_vector(w.word(), n);
    std::vector<long> candidates(v.begin(), v.end());
    candidates.push_back(0);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()),
                     candidates.end());
    std::optional<CentralForm> best;
    std::size_t                best_len = 0;
    auto const                 z        = PureWord::full_twist(n);
    for (long k : candidates) {
      auto core = normalize(w * z.pow(-k), opts);
      auto len  = core.word().length();
      bool better
          = !best || len < best_len
            || (len == best_len
                && (std::labs(k) < std::labs(best->z_exponent)
                    || (std::labs(k) == std::labs(best->z_exponent)
                        && k < best->z_exponent)));
      if (better) {
        best     = CentralForm{core, k};
        best_len = len;
      }
    }
    return *best;
  }

  inline std::string format_central_form(CentralForm const& f) {
    std::string out;
    if (!f.core.word().is_identity() || f.z_exponent == 0) {
      out = format_word(f.core.word());
    }
    if (f.z_exponent != 0) {
      if (!out.empty()) {
        out += ' ';
      }
      out += f.z_exponent == 1 ? std::string("z")
                               : "z^" + std::to_string(f.z_exponent);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // P_3 = <z> x F(x, y)
  ////////////////////////////////////////////////////////////////////////

  // x = A(1,3), y = A(2,3), z = A(1,2) A(1,3) A(2,3).
  struct P3Element {
    long     z_exponent = 0;
    FreeWord free_part;  // over p3_free_alphabet()

    friend P3Element operator*(P3Element const& a, P3Element const& b) {
      return {a.z_exponent + b.z_exponent, a.free_part * b.free_part};
    }

    bool operator==(P3Element const&) const = default;
  };

  inline Alphabet const& p3_free_alphabet() {
    static Alphabet const a = Alphabet::free_f({"x", "y"});
    return a;
  }

  inline Generator p3_x() {
    return Generator::letter(1);
  }

  inline Generator p3_y() {
    return Generator::letter(2);
  }

  // Substitutes A(1,2) = z y^-1 x^-1 and collects the central z.
  inline P3Element p3_coordinates(PureWord const& w) {
    if (w.strands() != 3) {
      throw InvalidArgument("P_3 coordinates need n = 3, found "
                            + std::to_string(w.strands()));
    }
    P3Element  out;
    auto const x = FreeWord(p3_x());
    auto const y = FreeWord(p3_y());
    for (auto const& s : w.word().syllables()) {
      auto const& g = s.generator;
      if (g.i == 1 && g.j == 2) {
        out.z_exponent += s.exponent;
        out.free_part *= (y.inverse() * x.inverse()).pow(s.exponent);
      } else if (g.i == 1) {
        out.free_part *= x.pow(s.exponent);
      } else {
        out.free_part *= y.pow(s.exponent);
      }
    }
    return out;
  }

  inline PureWord from_p3_coordinates(P3Element const& e) {
    FreeWord w = full_twist_pure_word(3).pow(e.z_exponent);
    for (auto const& s : e.free_part.syllables()) {
      auto g = s.generator == p3_x() ? Generator::pure(1, 3)
                                     : Generator::pure(2, 3);
      w.push_back(g, s.exponent);
    }
    return PureWord(3, std::move(w));
  }

}  // namespace braidforge

#endif  // BRAIDFORGE_COMBING_HPP_
