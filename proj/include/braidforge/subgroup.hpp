#ifndef BRAIDFORGE_SUBGROUP_HPP_
#define BRAIDFORGE_SUBGROUP_HPP_

// Subgroups of free groups through folded graphs, conjugation actions on
// U_n, and bounded enumeration of fixed elements.

#include <algorithm>
#include <cstddef>
#include <future>
#include <iterator>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "automorphism.hpp"
#include "combing.hpp"
#include "detail/letters.hpp"
#include "error.hpp"
#include "word.hpp"

namespace braidforge {

  // Letters are numbered by position in the alphabet (1-based, negative for
  // inverses). Vertex 0 is the base.
  class StallingsGraph {
   public:
    explicit StallingsGraph(Alphabet alphabet)
        : _alphabet(std::move(alphabet)), _vertices(1), _out(1) {}

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::size_t vertex_count() const noexcept {
      return _vertices;
    }

    std::size_t edge_count() const noexcept {
      return _edges.size();
    }

    // Rank of the subgroup: E - V + 1 for a connected graph.
    std::size_t rank() const noexcept {
      return _edges.size() + 1 - _vertices;
    }

    bool contains(FreeWord const& w) const {
      std::size_t v = 0;
      for (int a : letters(w)) {
        auto it = _out[v].find(a);
        if (it == _out[v].end()) {
          return false;
        }
        v = it->second;
      }
      return v == 0;
    }

    // Adds a loop at the base reading w, then folds.
    void add_loop(FreeWord const& w) {
      auto        ls = letters(w);
      std::size_t v  = 0;
      for (std::size_t k = 0; k < ls.size(); ++k) {
        std::size_t next = k + 1 == ls.size() ? 0 : _vertices++;
        if (ls[k] > 0) {
          _edges.push_back({v, ls[k], next});
        } else {
          _edges.push_back({next, -ls[k], v});
        }
        v = next;
      }
      fold();
    }

   private:
    struct Edge {
      std::size_t from;
      int         label;  // positive
      std::size_t to;

      auto operator<=>(Edge const&) const = default;
    };

    detail::Letters letters(FreeWord const& w) const {
      detail::Letters out;
      for (auto const& s : w.syllables()) {
        if (!_alphabet.contains(s.generator)) {
          throw InvalidArgument(_alphabet.name(s.generator) + " is not in "
                                + _alphabet.describe());
        }
        int  a   = static_cast<int>(_alphabet.index_of(s.generator)) + 1;
        long mag = s.exponent < 0 ? -s.exponent : s.exponent;
        for (long k = 0; k < mag; ++k) {
          detail::push_letter(out, s.exponent < 0 ? -a : a);
        }
      }
      return out;
    }

    // Identifies the endpoints of equally labelled edges leaving (or
    // entering) one vertex until none remain, then renumbers with the base
    // first and rebuilds the adjacency used by contains.
    void fold() {
      std::vector<std::size_t> parent(_vertices);
      std::iota(parent.begin(), parent.end(), std::size_t{0});
      auto find = [&](std::size_t v) {
        while (parent[v] != v) {
          parent[v] = parent[parent[v]];
          v         = parent[v];
        }
        return v;
      };
      auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      };
      for (bool changed = true; changed;) {
        changed = false;
        std::map<std::pair<std::size_t, int>, std::size_t> out;
        std::map<std::pair<std::size_t, int>, std::size_t> in;
        for (auto const& e : _edges) {
          std::size_t u = find(e.from);
          std::size_t v = find(e.to);
          auto [o, fresh_out] = out.try_emplace({u, e.label}, v);
          if (!fresh_out && find(o->second) != v) {
            unite(o->second, v);
            changed = true;
          }
          auto [i, fresh_in] = in.try_emplace({v, e.label}, u);
          if (!fresh_in && find(i->second) != u) {
            unite(i->second, u);
            changed = true;
          }
        }
      }
      std::vector<std::size_t> index(_vertices, static_cast<std::size_t>(-1));
      std::size_t              count = 0;
      for (std::size_t v = 0; v < _vertices; ++v) {
        std::size_t r = find(v);
        if (index[r] == static_cast<std::size_t>(-1)) {
          index[r] = count++;
        }
      }
      std::vector<Edge> edges;
      for (auto const& e : _edges) {
        edges.push_back({index[find(e.from)], e.label, index[find(e.to)]});
      }
      std::sort(edges.begin(), edges.end());
      edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
      _edges    = std::move(edges);
      _vertices = count;
      _out.assign(count, {});
      for (auto const& e : _edges) {
        _out[e.from][e.label] = e.to;
        _out[e.to][-e.label]  = e.from;
      }
    }

    Alphabet                                 _alphabet;
    std::size_t                              _vertices;
    std::vector<Edge>                        _edges;
    std::vector<std::map<int, std::size_t>> _out;
  };

  inline StallingsGraph fold_subgroup(Alphabet const& alphabet,
                                      std::vector<FreeWord> const& generators) {
    StallingsGraph g(alphabet);
    for (auto const& w : generators) {
      if (!w.is_identity()) {
        g.add_loop(w);
      }
    }
    return g;
  }

  inline bool subgroup_contains(StallingsGraph const& g, FreeWord const& w) {
    return g.contains(w);
  }

  // The inner automorphism x -> c^-1 x c of P_n restricted to the normal
  // free factor U_n, for c in P_{n-1}.
  inline GeneratorMap conjugation_endo(PureWord const& c, CombingOptions const& opts = {}) {
    int const n = c.strands();
    for (auto const& s : c.word().syllables()) {
      if (s.generator.j == n) {
        throw InvalidArgument("conjugator " + format_word(c.word())
                              + " has letters of U_" + std::to_string(n));
      }
    }
    auto                  u = Alphabet::free_u(n);
    std::vector<FreeWord> images;
    for (auto g : u.generators()) {
      auto combed = comb(c.inverse() * PureWord(n, FreeWord(g)) * c, opts);
      for (int k = 2; k < n; ++k) {
        if (!combed.component(k).is_identity()) {
          throw Error("conjugate of " + Alphabet::default_name(g) + " left U_"
                      + std::to_string(n));
        }
      }
      images.push_back(combed.component(n));
    }
    return GeneratorMap(u, u, std::move(images), "conj(" + format_word(c.word()) + ")");
  }

  struct EnumerationOptions {
    std::size_t max_words = 50'000'000;
  };

  // Every reduced word of length at most radius (in letters) that f fixes.
  inline std::vector<FreeWord> enumerate_fixed_elements(GeneratorMap const& f, int radius,
                                                        EnumerationOptions const& opts = {}) {
    if (radius < 0) {
      throw InvalidArgument("radius must be non-negative");
    }
    if (!(f.domain() == f.codomain())) {
      throw InvalidArgument("fixed elements need an endomorphism");
    }
    auto const& alphabet = f.domain();
    int const   rank     = static_cast<int>(alphabet.size());
    // ball size 1 + 2m ((2m-1)^r - 1) / (2m-2), computed with overflow care
    {
      double      total = 1;
      double      layer = 2.0 * rank;
      for (int k = 1; k <= radius; ++k) {
        total += layer;
        layer *= 2.0 * rank - 1;
      }
      if (total > static_cast<double>(opts.max_words)) {
        throw ResourceError("enumeration of the radius-" + std::to_string(radius)
                            + " ball exceeds the budget of " + std::to_string(opts.max_words)
                            + " words");
      }
    }
    std::vector<detail::Letters> images(static_cast<std::size_t>(rank) + 1);
    for (int a = 1; a <= rank; ++a) {
      auto const& img = f.images()[static_cast<std::size_t>(a - 1)];
      for (auto const& s : img.syllables()) {
        int  b   = static_cast<int>(alphabet.index_of(s.generator)) + 1;
        long mag = s.exponent < 0 ? -s.exponent : s.exponent;
        for (long k = 0; k < mag; ++k) {
          detail::push_letter(images[static_cast<std::size_t>(a)], s.exponent < 0 ? -b : b);
        }
      }
    }
    auto to_word = [&](detail::Letters const& w) {
      FreeWord out;
      for (int a : w) {
        out.push_back(alphabet.generators()[static_cast<std::size_t>((a < 0 ? -a : a) - 1)],
                      a < 0 ? -1 : 1);
      }
      return out;
    };
    // Depth-first search below a one-letter prefix; prefixes run in parallel
    // and are concatenated in letter order.
    auto search = [&](int first) {
      std::vector<FreeWord>        fixed;
      detail::Letters              word{first};
      std::vector<detail::Letters> stack{first > 0 ? images[static_cast<std::size_t>(first)]
                                                   : detail::inverse(images[static_cast<std::size_t>(-first)])};
      auto visit = [&](auto&& self) -> void {
        if (stack.back() == word) {
          fixed.push_back(to_word(word));
        }
        if (static_cast<int>(word.size()) == radius) {
          return;
        }
        for (int a = -rank; a <= rank; ++a) {
          if (a == 0 || word.back() == -a) {
            continue;
          }
          word.push_back(a);
          auto next = stack.back();
          if (a > 0) {
            detail::append(next, images[static_cast<std::size_t>(a)]);
          } else {
            detail::append_inverse(next, images[static_cast<std::size_t>(-a)]);
          }
          stack.push_back(std::move(next));
          self(self);
          stack.pop_back();
          word.pop_back();
        }
      };
      visit(visit);
      return fixed;
    };
    std::vector<FreeWord> fixed{FreeWord{}};
    if (radius == 0) {
      return fixed;
    }
    std::vector<std::future<std::vector<FreeWord>>> parts;
    for (int a = -rank; a <= rank; ++a) {
      if (a != 0) {
        parts.push_back(std::async(std::launch::async, search, a));
      }
    }
    for (auto& part : parts) {
      auto words = part.get();
      fixed.insert(fixed.end(), std::make_move_iterator(words.begin()),
                   std::make_move_iterator(words.end()));
    }
    return fixed;
  }

  struct FixClaim {
    std::string           conjugator;
    std::vector<FreeWord> generators;         // claimed basis of the fixed subgroup
    std::size_t           rank            = 0;  // of the folded graph
    bool                  generators_fixed = false;
    std::size_t           fixed_found     = 0;
    std::vector<FreeWord> outside;            // fixed words not in the claimed subgroup
    bool                  passed          = false;
  };

  struct FixLemmaReport {
    int                   radius = 0;
    FixClaim              single;      // conjugation by A(1,3)
    FixClaim              product;     // conjugation by A(1,3) A(2,3)
    bool                  displayed_computation = false;  // A14 A24 A34 fixed by A(1,3)
    // x -> x, y -> xyx^-1, z -> (xyx^-1 z) z (xyx^-1 z)^-1 in the basis
    // x = A14 A24 A34, y = A34, z = A14
    bool                  coordinate_forms      = false;
    bool                  shortened_z_form      = false;  // z -> (xy)z(xy)^-1
    bool                  passed                = false;
  };

  namespace detail {

    inline FreeWord u4(int i, long e = 1) {
      return FreeWord(Generator::pure(i, 4), e);
    }

    inline FixClaim check_fix_claim(PureWord const& c, std::vector<FreeWord> generators,
                                    std::size_t expected_rank, int radius,
                                    EnumerationOptions const& opts) {
      FixClaim r;
      r.conjugator = format_word(c.word());
      r.generators = std::move(generators);
      auto f       = conjugation_endo(c);
      auto graph   = fold_subgroup(f.domain(), r.generators);
      r.rank       = graph.rank();
      r.generators_fixed = std::all_of(r.generators.begin(), r.generators.end(),
                                       [&](FreeWord const& g) { return f.apply(g) == g; });
      auto fixed    = enumerate_fixed_elements(f, radius, opts);
      r.fixed_found = fixed.size();
      for (auto const& w : fixed) {
        if (!graph.contains(w)) {
          r.outside.push_back(w);
        }
      }
      r.passed = r.generators_fixed && r.outside.empty() && r.rank == expected_rank;
      return r;
    }

  }  // namespace detail

  inline FixLemmaReport verify_fix_lemmas(int radius = 8, EnumerationOptions const& opts = {}) {
    using detail::u4;
    FixLemmaReport r;
    r.radius = radius;
    FreeWord const x = u4(1) * u4(2) * u4(3);
    r.single  = detail::check_fix_claim(PureWord(4, FreeWord(Generator::pure(1, 3))),
                                        {u4(1) * u4(3), x}, 2, radius, opts);
    auto const c = PureWord(4, FreeWord(Generator::pure(1, 3)) * FreeWord(Generator::pure(2, 3)));
    r.product = detail::check_fix_claim(c, {x}, 1, radius, opts);
    r.displayed_computation
        = pure_equal(PureWord(4, FreeWord(Generator::pure(1, 3), -1) * x
                                     * FreeWord(Generator::pure(1, 3))),
                     PureWord(4, x));
    // x = A14 A24 A34, y = A34, z = A14, so A24 = z^-1 x y^-1
    FreeWord const y  = u4(3);
    FreeWord const zz = u4(1);
    auto const     f  = conjugation_endo(c);
    auto const     xy = x * y;
    auto const     q  = x * y * x.inverse() * zz;
    r.coordinate_forms = f.apply(x) == x && f.apply(y) == x * y * x.inverse()
                         && f.apply(zz) == q * zz * q.inverse();
    r.shortened_z_form = f.apply(zz) == xy * zz * xy.inverse();
    r.passed = r.single.passed && r.product.passed && r.displayed_computation;
    return r;
  }

  struct NonextensionReport {
    FreeWord conjugator;  // A14 A24 A34
    FreeWord target;      // A14 A24^2 A34
    FreeWord forward;     // c^-1 T c
    FreeWord backward;    // c T c^-1
    bool     control = false;  // c^-1 c c = c
    bool     passed  = false;
  };

  inline NonextensionReport verify_nonextension_instance() {
    using detail::u4;
    NonextensionReport r;
    r.conjugator = u4(1) * u4(2) * u4(3);
    r.target     = u4(1) * u4(2, 2) * u4(3);
    auto const& c = r.conjugator;
    r.forward     = conjugate_word(r.target, c);
    r.backward    = conjugate_word(r.target, c.inverse());
    r.control     = conjugate_word(c, c) == c;
    r.passed      = r.control && r.forward != r.target && r.backward != r.target;
    return r;
  }

}  // namespace braidforge

#endif  // BRAIDFORGE_SUBGROUP_HPP_
