#ifndef BRAIDFORGE_WORD_HPP_
#define BRAIDFORGE_WORD_HPP_

// Freely reduced words over braid, pure-braid and named-letter generators,
// the alphabets they live in, and the textual word grammar.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace braidforge {

  enum class GeneratorKind : std::uint8_t { sigma, pure, letter };

  // sigma(i) is the Artin generator s_i, pure(i, j) the band generator
  // A_{i,j} with i < j, letter(k) the k-th (1-based) named letter of a free
  // alphabet.
  struct Generator {
    GeneratorKind kind = GeneratorKind::letter;
    int           i    = 0;
    int           j    = 0;

    static constexpr Generator sigma(int i) noexcept {
      return {GeneratorKind::sigma, i, 0};
    }
    static constexpr Generator pure(int i, int j) noexcept {
      return {GeneratorKind::pure, i, j};
    }
    static constexpr Generator letter(int index) noexcept {
      return {GeneratorKind::letter, index, 0};
    }

    constexpr auto operator<=>(Generator const&) const = default;
  };

  struct Syllable {
    Generator generator;
    long      exponent = 1;

    constexpr bool operator==(Syllable const&) const = default;
  };

  // An element of a free group in run-length form. Adjacent syllables always
  // carry distinct generators and no exponent is zero; the empty word is the
  // identity.
  class FreeWord {
   public:
    FreeWord() = default;

    explicit FreeWord(Generator g, long exponent = 1) {
      if (exponent != 0) {
        _syllables.push_back({g, exponent});
      }
    }

    static FreeWord identity() {
      return FreeWord();
    }

    // Freely reduces an arbitrary syllable list.
    static FreeWord reduce(std::span<Syllable const> raw) {
      FreeWord result;
      for (auto const& s : raw) {
        result.push_back(s);
      }
      return result;
    }

    static FreeWord reduce(std::initializer_list<Syllable> raw) {
      return reduce(std::span<Syllable const>(raw.begin(), raw.size()));
    }

    std::vector<Syllable> const& syllables() const noexcept {
      return _syllables;
    }

    bool is_identity() const noexcept {
      return _syllables.empty();
    }

    std::size_t syllable_count() const noexcept {
      return _syllables.size();
    }

    // Number of letters, i.e. the sum of |exponent|.
    std::size_t length() const noexcept {
      std::size_t n = 0;
      for (auto const& s : _syllables) {
        n += static_cast<std::size_t>(s.exponent < 0 ? -s.exponent
                                                     : s.exponent);
      }
      return n;
    }

    // Appends one syllable, cancelling against the tail.
    void push_back(Syllable s) {
      if (s.exponent == 0) {
        return;
      }
      if (!_syllables.empty() && _syllables.back().generator == s.generator) {
        _syllables.back().exponent += s.exponent;
        if (_syllables.back().exponent == 0) {
          _syllables.pop_back();
        }
      } else {
        _syllables.push_back(s);
      }
    }

    void push_back(Generator g, long exponent = 1) {
      push_back(Syllable{g, exponent});
    }

    FreeWord& operator*=(FreeWord const& other) {
      for (auto const& s : other._syllables) {
        push_back(s);
      }
      return *this;
    }

    FreeWord inverse() const {
      FreeWord result;
      result._syllables.reserve(_syllables.size());
      for (auto it = _syllables.rbegin(); it != _syllables.rend(); ++it) {
        result._syllables.push_back({it->generator, -it->exponent});
      }
      return result;
    }

    FreeWord pow(long k) const {
      FreeWord base = k < 0 ? inverse() : *this;
      FreeWord result;
      for (long t = 0; t < (k < 0 ? -k : k); ++t) {
        result *= base;
      }
      return result;
    }

    // Every generator occurring in the word, in first-occurrence order.
    std::vector<Generator> support() const {
      std::vector<Generator> out;
      for (auto const& s : _syllables) {
        if (std::find(out.begin(), out.end(), s.generator) == out.end()) {
          out.push_back(s.generator);
        }
      }
      return out;
    }

    bool operator==(FreeWord const&) const = default;

    friend FreeWord operator*(FreeWord lhs, FreeWord const& rhs) {
      lhs *= rhs;
      return lhs;
    }

   private:
    std::vector<Syllable> _syllables;
  };

  inline FreeWord free_reduce(std::span<Syllable const> raw) {
    return FreeWord::reduce(raw);
  }

  inline FreeWord multiply(FreeWord const& u, FreeWord const& v) {
    return u * v;
  }

  inline FreeWord invert(FreeWord const& u) {
    return u.inverse();
  }

  // y^x = x^-1 y x
  inline FreeWord conjugate_word(FreeWord const& y, FreeWord const& x) {
    return x.inverse() * y * x;
  }

  // [x, y] = x^-1 y^-1 x y
  inline FreeWord commutator(FreeWord const& x, FreeWord const& y) {
    return x.inverse() * y.inverse() * x * y;
  }

  inline long exponent_sum(FreeWord const& w, Generator g) {
    long total = 0;
    for (auto const& s : w.syllables()) {
      if (s.generator == g) {
        total += s.exponent;
      }
    }
    return total;
  }

  // Builds a word from a list of generators, each with exponent +1.
  inline FreeWord word_of(std::initializer_list<Generator> gens) {
    FreeWord w;
    for (auto g : gens) {
      w.push_back(g);
    }
    return w;
  }

  inline FreeWord pure_word(std::initializer_list<std::pair<int, int>> pairs) {
    FreeWord w;
    for (auto [i, j] : pairs) {
      w.push_back(Generator::pure(i, j));
    }
    return w;
  }

  // Band generators of the pure braid group in the order
  // A(1,2), A(1,3), A(2,3), A(1,4), ...
  inline std::size_t pair_index(int i, int j) noexcept {
    return static_cast<std::size_t>((j - 1) * (j - 2) / 2 + (i - 1));
  }

  inline std::size_t pair_count(int n) noexcept {
    return static_cast<std::size_t>(n * (n - 1) / 2);
  }

  inline std::vector<Generator> pure_generators(int n) {
    std::vector<Generator> out;
    for (int j = 2; j <= n; ++j) {
      for (int i = 1; i < j; ++i) {
        out.push_back(Generator::pure(i, j));
      }
    }
    return out;
  }

  // z_n = A(1,2) (A(1,3) A(2,3)) ... (A(1,n) ... A(n-1,n))
  inline FreeWord full_twist_pure_word(int n) {
    FreeWord w;
    for (auto g : pure_generators(n)) {
      w.push_back(g);
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  class Alphabet {
   public:
    enum class Context { braid, pure, free_u, free_f };

    // sigma(1) .. sigma(n-1)
    static Alphabet braid(int n) {
      if (n < 2) {
        throw InvalidArgument("braid alphabet needs n >= 2, found "
                              + std::to_string(n));
      }
      Alphabet a(Context::braid, n);
      for (int i = 1; i < n; ++i) {
        a._generators.push_back(Generator::sigma(i));
      }
      return a;
    }

    // A(i,j), 1 <= i < j <= n, with the macro z for the full twist
    static Alphabet pure(int n) {
      if (n < 2) {
        throw InvalidArgument("pure alphabet needs n >= 2, found "
                              + std::to_string(n));
      }
      Alphabet a(Context::pure, n);
      a._generators = pure_generators(n);
      a._macros.emplace_back("z", full_twist_pure_word(n));
      return a;
    }

    // A(1,k) .. A(k-1,k), the free factor U_k
    static Alphabet free_u(int k) {
      if (k < 2) {
        throw InvalidArgument("free factor U_k needs k >= 2, found "
                              + std::to_string(k));
      }
      Alphabet a(Context::free_u, k);
      for (int i = 1; i < k; ++i) {
        a._generators.push_back(Generator::pure(i, k));
      }
      return a;
    }

    // Letters named x1 .. x<rank>.
    static Alphabet free_f(int rank) {
      std::vector<std::string> names;
      for (int k = 1; k <= rank; ++k) {
        names.push_back("x" + std::to_string(k));
      }
      return free_f(std::move(names));
    }

    static Alphabet free_f(std::vector<std::string> names) {
      if (names.empty()) {
        throw InvalidArgument("free alphabet needs at least one letter");
      }
      Alphabet a(Context::free_f, static_cast<int>(names.size()));
      for (std::size_t k = 0; k < names.size(); ++k) {
        if (!valid_name(names[k])) {
          throw InvalidArgument("invalid letter name '" + names[k] + "'");
        }
        for (std::size_t l = 0; l < k; ++l) {
          if (names[l] == names[k]) {
            throw InvalidArgument("duplicate letter name '" + names[k]
                                  + "'");
          }
        }
        a._generators.push_back(Generator::letter(static_cast<int>(k + 1)));
      }
      a._names = std::move(names);
      return a;
    }

    Context context() const noexcept {
      return _context;
    }

    // n for braid/pure, k for free_u, rank for free_f.
    int parameter() const noexcept {
      return _parameter;
    }

    std::span<Generator const> generators() const noexcept {
      return _generators;
    }

    std::size_t size() const noexcept {
      return _generators.size();
    }

    bool contains(Generator g) const noexcept {
      return std::find(_generators.begin(), _generators.end(), g)
             != _generators.end();
    }

    bool contains(FreeWord const& w) const noexcept {
      return std::all_of(
          w.syllables().begin(), w.syllables().end(), [this](auto const& s) {
            return contains(s.generator);
          });
    }

    std::size_t index_of(Generator g) const {
      if (_context == Context::pure && g.kind == GeneratorKind::pure
          && 1 <= g.i && g.i < g.j && g.j <= _parameter) {
        return pair_index(g.i, g.j);
      }
      auto it = std::find(_generators.begin(), _generators.end(), g);
      if (it == _generators.end()) {
        throw InvalidArgument("generator " + default_name(g)
                              + " is not in the alphabet " + describe());
      }
      return static_cast<std::size_t>(it - _generators.begin());
    }

    std::string name(Generator g) const {
      if (g.kind == GeneratorKind::letter && !_names.empty() && g.i >= 1
          && static_cast<std::size_t>(g.i) <= _names.size()) {
        return _names[static_cast<std::size_t>(g.i - 1)];
      }
      return default_name(g);
    }

    std::optional<Generator> letter_named(std::string_view nm) const {
      for (std::size_t k = 0; k < _names.size(); ++k) {
        if (_names[k] == nm) {
          return Generator::letter(static_cast<int>(k + 1));
        }
      }
      return std::nullopt;
    }

    FreeWord const* macro(std::string_view nm) const {
      for (auto const& [key, value] : _macros) {
        if (key == nm) {
          return &value;
        }
      }
      return nullptr;
    }

    std::string describe() const {
      switch (_context) {
        case Context::braid:
          return "braid(" + std::to_string(_parameter) + ")";
        case Context::pure:
          return "pure(" + std::to_string(_parameter) + ")";
        case Context::free_u:
          return "freeU(" + std::to_string(_parameter) + ")";
        case Context::free_f:
          return "freeF(" + std::to_string(_parameter) + ")";
      }
      return "?";
    }

    bool operator==(Alphabet const& other) const {
      return _context == other._context && _parameter == other._parameter
             && _names == other._names;
    }

    static std::string default_name(Generator g) {
      switch (g.kind) {
        case GeneratorKind::sigma:
          return "s" + std::to_string(g.i);
        case GeneratorKind::pure:
          return "A(" + std::to_string(g.i) + "," + std::to_string(g.j) + ")";
        case GeneratorKind::letter:
          return "x" + std::to_string(g.i);
      }
      return "?";
    }

   private:
    Alphabet(Context c, int p) : _context(c), _parameter(p) {}

    static bool valid_name(std::string const& s) {
      if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])))) {
        return false;
      }
      return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
      });
    }

    Context                                        _context;
    int                                            _parameter;
    std::vector<Generator>                         _generators;
    std::vector<std::string>                       _names;
    std::vector<std::pair<std::string, FreeWord>> _macros;
  };

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  // Space-separated syllables, "1" for the identity.
  inline std::string format_word(FreeWord const&  w,
                                 Alphabet const* alphabet = nullptr) {
    if (w.is_identity()) {
      return "1";
    }
    std::string out;
    for (auto const& s : w.syllables()) {
      if (!out.empty()) {
        out += ' ';
      }
      out += alphabet != nullptr ? alphabet->name(s.generator)
                                 : Alphabet::default_name(s.generator);
      if (s.exponent != 1) {
        out += '^';
        out += std::to_string(s.exponent);
      }
    }
    return out;
  }

  inline std::string format_word(FreeWord const& w, Alphabet const& alphabet) {
    return format_word(w, &alphabet);
  }

  namespace detail {

    class WordScanner {
     public:
      WordScanner(std::string_view text, Alphabet const& alphabet)
          : _text(text), _alphabet(alphabet) {}

      FreeWord parse() {
        skip_space();
        if (at_end()) {
          throw ParseError(
              ParseError::Kind::syntax, _pos, "expected at least one token");
        }
        FreeWord result;
        while (!at_end()) {
          std::size_t start = _pos;
          FreeWord    base  = parse_generator();
          long        e     = 1;
          if (peek() == '^') {
            ++_pos;
            std::size_t epos = _pos;
            e                = parse_signed();
            if (e == 0) {
              throw ParseError(
                  ParseError::Kind::syntax, epos, "exponent 0 is not allowed");
            }
          }
          if (!at_end() && !is_space(peek())) {
            throw ParseError(ParseError::Kind::syntax,
                             _pos,
                             "unexpected character '" + std::string(1, peek())
                                 + "' after token starting at "
                                 + std::to_string(start));
          }
          result *= base.pow(e);
          skip_space();
        }
        return result;
      }

     private:
      static bool is_space(char c) {
        return std::isspace(static_cast<unsigned char>(c)) != 0;
      }

      bool at_end() const {
        return _pos >= _text.size();
      }

      char peek() const {
        return at_end() ? '\0' : _text[_pos];
      }

      void skip_space() {
        while (!at_end() && is_space(_text[_pos])) {
          ++_pos;
        }
      }

      void expect(char c) {
        skip_space();
        if (peek() != c) {
          throw ParseError(ParseError::Kind::syntax,
                           _pos,
                           std::string("expected '") + c + "'");
        }
        ++_pos;
      }

      long parse_unsigned() {
        std::size_t start = _pos;
        long        v     = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          v = v * 10 + (peek() - '0');
          if (v > 1'000'000'000L) {
            throw ParseError(ParseError::Kind::syntax, start, "integer too large");
          }
          ++_pos;
        }
        if (_pos == start) {
          throw ParseError(ParseError::Kind::syntax, _pos, "expected an integer");
        }
        return v;
      }

      long parse_signed() {
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
          negative = peek() == '-';
          ++_pos;
        }
        long v = parse_unsigned();
        return negative ? -v : v;
      }

      void require(Generator g, std::size_t at) {
        if (_alphabet.contains(g)) {
          return;
        }
        bool same_kind
            = std::any_of(_alphabet.generators().begin(),
                          _alphabet.generators().end(),
                          [&](Generator h) { return h.kind == g.kind; });
        if (same_kind) {
          throw ParseError(ParseError::Kind::out_of_range,
                           at,
                           Alphabet::default_name(g) + " is out of range for "
                               + _alphabet.describe());
        }
        throw ParseError(ParseError::Kind::unknown_generator,
                         at,
                         Alphabet::default_name(g) + " is not a generator of "
                             + _alphabet.describe());
      }

      FreeWord parse_generator() {
        std::size_t start = _pos;
        if (peek() == '1'
            && (_pos + 1 == _text.size() || is_space(_text[_pos + 1])
                || _text[_pos + 1] == '^')) {
          ++_pos;
          return FreeWord();
        }
        if (!std::isalpha(static_cast<unsigned char>(peek()))) {
          throw ParseError(ParseError::Kind::syntax, _pos, "expected a generator");
        }
        std::string name;
        while (!at_end()
               && (std::isalnum(static_cast<unsigned char>(peek()))
                   || peek() == '_')) {
          name += peek();
          ++_pos;
        }
        if (name == "A" && peek() == '(') {
          ++_pos;
          skip_space();
          long i = parse_unsigned();
          expect(',');
          skip_space();
          long j = parse_unsigned();
          expect(')');
          if (i >= j) {
            throw ParseError(ParseError::Kind::out_of_range,
                             start,
                             "A(i,j) needs i < j");
          }
          auto g = Generator::pure(static_cast<int>(i), static_cast<int>(j));
          require(g, start);
          return FreeWord(g);
        }
        if (auto g = _alphabet.letter_named(name)) {
          return FreeWord(*g);
        }
        if (auto const* m = _alphabet.macro(name)) {
          return *m;
        }
        if (name.size() > 1 && name[0] == 's'
            && std::all_of(name.begin() + 1, name.end(), [](char c) {
                 return std::isdigit(static_cast<unsigned char>(c));
               })) {
          auto g = Generator::sigma(std::stoi(name.substr(1)));
          require(g, start);
          return FreeWord(g);
        }
        throw ParseError(ParseError::Kind::unknown_generator,
                         start,
                         "unknown generator '" + name + "' for "
                             + _alphabet.describe());
      }

      std::string_view _text;
      Alphabet const&  _alphabet;
      std::size_t      _pos = 0;
    };

  }  // namespace detail

  // Grammar: word := token+ ; token := gen | gen '^' int ;
  // gen := 's' INT | 'A(' INT ',' INT ')' | NAME | '1'
  inline FreeWord parse_word(std::string_view text, Alphabet const& alphabet) {
    return detail::WordScanner(text, alphabet).parse();
  }

}  // namespace braidforge

template <>
struct std::hash<braidforge::Generator> {
  std::size_t operator()(braidforge::Generator const& g) const noexcept {
    return (static_cast<std::size_t>(g.kind) << 40)
           ^ (static_cast<std::size_t>(g.i) << 20)
           ^ static_cast<std::size_t>(g.j);
  }
};

#endif  // BRAIDFORGE_WORD_HPP_
