#ifndef BRAIDFORGE_AUTOMORPHISM_HPP_
#define BRAIDFORGE_AUTOMORPHISM_HPP_

// Endomorphisms given by generator images, the catalog of named
// automorphisms of B_n, P_n and F_2, and checks built on top of them.
//
// Composition reads left to right: compose(f, g) applies f first.

#include <cctype>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braid.hpp"
#include "combing.hpp"
#include "error.hpp"
#include "word.hpp"

namespace braidforge {

  class GeneratorMap {
   public:
    GeneratorMap(Alphabet domain, Alphabet codomain, std::vector<FreeWord> images,
                 std::string name = {})
        : _domain(std::move(domain)),
          _codomain(std::move(codomain)),
          _images(std::move(images)),
          _name(std::move(name)) {
      if (_images.size() != _domain.size()) {
        throw InvalidArgument("generator map over " + _domain.describe() + " needs "
                              + std::to_string(_domain.size()) + " images, found "
                              + std::to_string(_images.size()));
      }
      for (std::size_t k = 0; k < _images.size(); ++k) {
        if (!_codomain.contains(_images[k])) {
          throw InvalidArgument("image of "
                                + _domain.name(_domain.generators()[k])
                                + " is not a word over " + _codomain.describe());
        }
      }
    }

    Alphabet const& domain() const noexcept {
      return _domain;
    }

    Alphabet const& codomain() const noexcept {
      return _codomain;
    }

    std::vector<FreeWord> const& images() const noexcept {
      return _images;
    }

    FreeWord const& image(Generator g) const {
      return _images[_domain.index_of(g)];
    }

    std::string const& name() const noexcept {
      return _name;
    }

    void set_name(std::string name) {
      _name = std::move(name);
    }

    FreeWord apply(FreeWord const& w) const {
      FreeWord out;
      for (auto const& s : w.syllables()) {
        if (!_domain.contains(s.generator)) {
          throw InvalidArgument(_domain.name(s.generator)
                                + " is not a generator of " + _domain.describe());
        }
        out *= image(s.generator).pow(s.exponent);
      }
      return out;
    }

   private:
    Alphabet              _domain;
    Alphabet              _codomain;
    std::vector<FreeWord> _images;
    std::string           _name;
  };

  inline GeneratorMap identity_map(Alphabet const& a) {
    std::vector<FreeWord> images;
    for (auto g : a.generators()) {
      images.emplace_back(g);
    }
    return GeneratorMap(a, a, std::move(images), "id");
  }

  inline FreeWord apply_endomorphism(GeneratorMap const& f, FreeWord const& w) {
    return f.apply(w);
  }

  // f then g. Images in P_n are brought to combed form so repeated
  // composition does not carry unreduced z-factors along.
  inline GeneratorMap compose(GeneratorMap const& f, GeneratorMap const& g,
                              CombingOptions const& opts = {}) {
    if (!(f.codomain() == g.domain())) {
      throw InvalidArgument("cannot compose: codomain " + f.codomain().describe()
                            + " differs from domain " + g.domain().describe());
    }
    bool const            pure = g.codomain().context() == Alphabet::Context::pure;
    int const             n    = g.codomain().parameter();
    std::vector<FreeWord> images;
    images.reserve(f.images().size());
    for (auto const& w : f.images()) {
      auto img = g.apply(w);
      if (pure) {
        img = normalize(PureWord(n, std::move(img)), opts).word();
      }
      images.push_back(std::move(img));
    }
    std::string name = f.name().empty() || g.name().empty()
                           ? std::string{}
                           : f.name() + " ; " + g.name();
    return GeneratorMap(f.domain(), g.codomain(), std::move(images), std::move(name));
  }

  inline GeneratorMap power(GeneratorMap const& f, long k, CombingOptions const& opts = {}) {
    if (k < 0) {
      throw InvalidArgument("negative powers need an inverse; use evaluate on an AutoExpr");
    }
    if (!(f.domain() == f.codomain())) {
      throw InvalidArgument("only endomorphisms have powers");
    }
    GeneratorMap result = identity_map(f.domain());
    for (long e = 0; e < k; ++e) {
      result = compose(result, f, opts);
    }
    result.set_name(k == 1 ? f.name() : "(" + f.name() + ")^" + std::to_string(k));
    return result;
  }

  // Equality of two words in the codomain of a map.
  inline bool codomain_equal(Alphabet const& codomain, FreeWord const& a, FreeWord const& b,
                             CombingOptions const& opts = {}) {
    switch (codomain.context()) {
      case Alphabet::Context::pure:
        return pure_equal(PureWord(codomain.parameter(), a),
                          PureWord(codomain.parameter(), b), opts);
      case Alphabet::Context::braid:
        return braid_words_equal(BraidWord(codomain.parameter(), a),
                                 BraidWord(codomain.parameter(), b));
      case Alphabet::Context::free_u:
      case Alphabet::Context::free_f:
        return a == b;
    }
    return false;
  }

  enum class EqualityMode { exact, mod_center };

  inline char const* to_string(EqualityMode m) {
    return m == EqualityMode::exact ? "exact" : "modCenter";
  }

  // Per generator, the k with f(a) = g(a) z^k; nullopt where none exists.
  inline std::vector<std::optional<long>> central_differences(GeneratorMap const& f,
                                                              GeneratorMap const& g,
                                                              CombingOptions const& opts = {}) {
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
      throw InvalidArgument("maps have different domains or codomains");
    }
    if (f.codomain().context() != Alphabet::Context::pure) {
      throw InvalidArgument("equality modulo the center needs a pure codomain");
    }
    int const                        n = f.codomain().parameter();
    std::vector<std::optional<long>> out;
    for (std::size_t k = 0; k < f.images().size(); ++k) {
      out.push_back(center_split(PureWord(n, f.images()[k]), PureWord(n, g.images()[k]), opts));
    }
    return out;
  }

  inline bool endomorphisms_equal(GeneratorMap const& f, GeneratorMap const& g,
                                  EqualityMode mode = EqualityMode::exact,
                                  CombingOptions const& opts = {}) {
    if (!(f.domain() == g.domain()) || !(f.codomain() == g.codomain())) {
      throw InvalidArgument("maps have different domains or codomains");
    }
    if (mode == EqualityMode::mod_center) {
      for (auto const& c : central_differences(f, g, opts)) {
        if (!c) {
          return false;
        }
      }
      return true;
    }
    for (std::size_t k = 0; k < f.images().size(); ++k) {
      if (!codomain_equal(f.codomain(), f.images()[k], g.images()[k], opts)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Defining relations
  ////////////////////////////////////////////////////////////////////////

  struct Relation {
    FreeWord lhs;
    FreeWord rhs;
  };

  inline std::vector<Relation> braid_relations(int n) {
    std::vector<Relation> out;
    auto                  s = [](int i) { return FreeWord(Generator::sigma(i)); };
    for (int i = 1; i < n; ++i) {
      for (int j = i + 2; j < n; ++j) {
        out.push_back({s(i) * s(j), s(j) * s(i)});
      }
      if (i + 1 < n) {
        out.push_back({s(i) * s(i + 1) * s(i), s(i + 1) * s(i) * s(i + 1)});
      }
    }
    return out;
  }

  // The four families of defining relations of P_n.
  inline std::vector<Relation> pure_relations(int n) {
    std::vector<Relation> out;
    auto A = [](int p, int q, long e = 1) { return FreeWord(Generator::pure(p, q), e); };
    for (int i = 1; i <= n; ++i) {
      for (int k = i + 1; k <= n; ++k) {
        for (int j = k + 1; j <= n; ++j) {
          out.push_back({A(i, k) * A(i, j) * A(k, j), A(k, j) * A(i, k) * A(i, j)});
        }
      }
    }
    for (int k = 1; k <= n; ++k) {
      for (int l = k + 1; l <= n; ++l) {
        for (int j = l + 1; j <= n; ++j) {
          out.push_back({A(l, j) * A(k, l) * A(k, j), A(k, j) * A(l, j) * A(k, l)});
        }
      }
    }
    for (int i = 1; i <= n; ++i) {
      for (int k = i + 1; k <= n; ++k) {
        for (int l = k + 1; l <= n; ++l) {
          for (int j = l + 1; j <= n; ++j) {
            auto c = A(k, l) * A(k, j) * A(k, l, -1);
            out.push_back({c * A(i, l), A(i, l) * c});
          }
        }
      }
    }
    for (int k = 1; k <= n; ++k) {
      for (int j = k + 1; j <= n; ++j) {
        for (int i = 1; i <= n; ++i) {
          for (int l = i + 1; l <= n; ++l) {
            if ((k < i && l < j) || l < k) {
              out.push_back({A(k, j) * A(i, l), A(i, l) * A(k, j)});
            }
          }
        }
      }
    }
    return out;
  }

  struct HomomorphismReport {
    bool                     passed = true;
    std::size_t              relations_checked = 0;
    std::vector<std::string> failures;  // relations whose images differ
  };

  inline HomomorphismReport verify_homomorphism(GeneratorMap const& f,
                                                CombingOptions const& opts = {}) {
    HomomorphismReport    report;
    auto const&           dom = f.domain();
    std::vector<Relation> relations;
    switch (dom.context()) {
      case Alphabet::Context::braid:
        relations = braid_relations(dom.parameter());
        break;
      case Alphabet::Context::pure:
        relations = pure_relations(dom.parameter());
        break;
      case Alphabet::Context::free_u:
      case Alphabet::Context::free_f:
        break;
    }
    for (auto const& r : relations) {
      ++report.relations_checked;
      if (!codomain_equal(f.codomain(), f.apply(r.lhs), f.apply(r.rhs), opts)) {
        report.passed = false;
        report.failures.push_back(format_word(r.lhs, &dom) + " = "
                                  + format_word(r.rhs, &dom));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Catalog
  ////////////////////////////////////////////////////////////////////////

  enum class Group { braid, pure, free2 };

  inline Alphabet group_alphabet(Group g, int n) {
    switch (g) {
      case Group::braid:
        return Alphabet::braid(n);
      case Group::pure:
        return Alphabet::pure(n);
      case Group::free2:
        return p3_free_alphabet();
    }
    throw InvalidArgument("unknown group");
  }

  namespace detail {

    inline FreeWord A(int p, int q, long e = 1) {
      return FreeWord(Generator::pure(p, q), e);
    }

    inline FreeWord z(int n, long e = 1) {
      return full_twist_pure_word(n).pow(e);
    }

    inline GeneratorMap pure_map(int n, std::string name,
                                 auto const& image_of) {  // image_of(i, j) -> FreeWord
      std::vector<FreeWord> images;
      for (auto g : pure_generators(n)) {
        images.push_back(image_of(g.i, g.j));
      }
      auto a = Alphabet::pure(n);
      return GeneratorMap(a, a, std::move(images), std::move(name));
    }

    // A(i,j) -> A(i,j) z^c(i,j), with c indexed by pair_index.
    inline GeneratorMap central_map(int n, std::vector<long> const& c, std::string name) {
      return pure_map(n, std::move(name), [&](int i, int j) {
        return A(i, j) * z(n, c[pair_index(i, j)]);
      });
    }

    // z goes to z^s with s = 1 + sum c, so A -> A z^c is undone by A -> A z^(-s c).
    inline GeneratorMap central_inverse(int n, std::vector<long> const& c, std::string name) {
      long s = 1;
      for (long v : c) {
        s += v;
      }
      if (s != 1 && s != -1) {
        throw InvalidArgument("central map is not invertible: z goes to z^" + std::to_string(s));
      }
      std::vector<long> d(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) {
        d[k] = -s * c[k];
      }
      return central_map(n, d, std::move(name));
    }

    inline std::vector<long> phi_exponents(int n, int i, int j, long sign) {
      std::vector<long> c(pair_count(n), 0);
      c[pair_index(1, 2)] += sign;
      c[pair_index(i, j)] -= sign;
      return c;
    }

    // A(1,i) .. A(i-1,i) A(i,i+1) .. A(i,n-1)
    inline FreeWord w_factor(int n, int i) {
      FreeWord c;
      for (int p = 1; p < i; ++p) {
        c *= A(p, i);
      }
      for (int q = i + 1; q < n; ++q) {
        c *= A(i, q);
      }
      return c;
    }

    // A(i+1,j) .. A(j-1,j)
    inline FreeWord tail_product(int i, int j) {
      FreeWord d;
      for (int p = i + 1; p < j; ++p) {
        d *= A(p, j);
      }
      return d;
    }

    // Map on P_3 from images of x = A(1,3), y = A(2,3), z = A(1,2) A(1,3) A(2,3),
    // using A(1,2) = z y^-1 x^-1.
    inline GeneratorMap p3_map(FreeWord const& x, FreeWord const& y, FreeWord const& zz,
                               std::string name) {
      return pure_map(3, std::move(name), [&](int i, int j) {
        if (i == 1 && j == 3) {
          return x;
        }
        if (i == 2 && j == 3) {
          return y;
        }
        return zz * y.inverse() * x.inverse();
      });
    }

    inline GeneratorMap f2_map(FreeWord const& x, FreeWord const& y, std::string name) {
      auto a = p3_free_alphabet();
      return GeneratorMap(a, a, {x, y}, std::move(name));
    }

    inline std::string with_params(std::string const& name, std::vector<int> const& params) {
      if (params.empty()) {
        return name;
      }
      std::string out = name + "(";
      for (std::size_t k = 0; k < params.size(); ++k) {
        out += (k ? "," : "") + std::to_string(params[k]);
      }
      return out + ")";
    }

    inline void expect_params(std::string const& name, std::vector<int> const& params,
                              std::size_t count) {
      if (params.size() != count) {
        throw InvalidArgument(name + " takes " + std::to_string(count) + " parameter"
                              + (count == 1 ? "" : "s") + ", found "
                              + std::to_string(params.size()));
      }
    }

    inline void expect_n(std::string const& name, int n, int want) {
      if (n != want) {
        throw InvalidArgument(name + " is defined for n = " + std::to_string(want)
                              + " only, found n = " + std::to_string(n));
      }
    }

    // Forward map (inverse = false) or its inverse.
    inline GeneratorMap catalog_entry(std::string const& name, std::vector<int> const& params,
                                      int n, Group group, bool inverse);

  }  // namespace detail

  inline std::vector<std::string> const& catalog_names() {
    static std::vector<std::string> const names{
        "id",    "tau",   "t",   "s",     "psi",   "phi",  "omega", "eps",
        "w",     "theta0", "theta", "xi", "eta",   "rho",  "sigma", "nu",
        "rho_literal", "nonlift"};
    return names;
  }

  inline GeneratorMap named_automorphism(std::string const& name, std::vector<int> const& params,
                                         int n, Group group = Group::pure) {
    return detail::catalog_entry(name, params, n, group, false);
  }

  // The inverse of a catalog entry, checked to compose to the identity on both
  // sides before it is returned.
  inline GeneratorMap named_inverse(std::string const& name, std::vector<int> const& params,
                                    int n, Group group = Group::pure) {
    auto f   = detail::catalog_entry(name, params, n, group, false);
    auto inv = detail::catalog_entry(name, params, n, group, true);
    auto id  = identity_map(f.domain());
    if (!endomorphisms_equal(compose(f, inv), id) || !endomorphisms_equal(compose(inv, f), id)) {
      throw Error("inverse of " + f.name() + " does not compose to the identity");
    }
    return inv;
  }

  namespace detail {

    inline GeneratorMap catalog_entry(std::string const& name, std::vector<int> const& params,
                                      int n, Group group, bool inverse) {
      std::string const label = with_params(name, params) + (inverse ? "^-1" : "");
      if (name == "id") {
        expect_params(name, params, 0);
        auto f = identity_map(group_alphabet(group, n));
        f.set_name(label);
        return f;
      }

      if (group == Group::braid) {
        auto a = Alphabet::braid(n);
        auto s = [](int i, long e = 1) { return FreeWord(Generator::sigma(i), e); };
        std::vector<FreeWord> images;
        if (name == "tau") {
          expect_params(name, params, 0);
          for (int i = 1; i < n; ++i) {
            images.push_back(s(i, -1));
          }
        } else if (name == "s") {
          expect_params(name, params, 1);
          int k = params[0];
          if (!(1 <= k && k < n)) {
            throw InvalidArgument("s(" + std::to_string(k) + ") is out of range for n = "
                                  + std::to_string(n));
          }
          long e = inverse ? -1 : 1;
          for (int i = 1; i < n; ++i) {
            images.push_back(s(k, -e) * s(i) * s(k, e));
          }
        } else {
          throw InvalidArgument("'" + name + "' is not an automorphism of B_n in the catalog");
        }
        return GeneratorMap(a, a, std::move(images), label);
      }

      if (group == Group::free2) {
        expect_params(name, params, 0);
        FreeWord x(p3_x());
        FreeWord y(p3_y());
        if (name == "rho") {
          return f2_map(y, x, label);
        }
        if (name == "sigma") {
          return f2_map(x.inverse(), y, label);
        }
        if (name == "nu") {
          return f2_map(inverse ? x * y.inverse() : x * y, y, label);
        }
        throw InvalidArgument("'" + name + "' is not an automorphism of F_2 in the catalog");
      }

      if (name == "t") {
        expect_params(name, params, 0);
        return pure_map(n, label, [](int i, int j) {
          auto c = A(i, j) * tail_product(i, j);
          return c.inverse() * A(i, j, -1) * c;
        });
      }
      if (name == "s") {
        expect_params(name, params, 1);
        int k = params[0];
        if (!(1 <= k && k < n)) {
          throw InvalidArgument("s(" + std::to_string(k) + ") is out of range for n = "
                                + std::to_string(n));
        }
        return pure_map(n, label, [&](int i, int j) {
          return sigma_action_on_pure(k, inverse ? -1 : 1, i, j, n).image;
        });
      }
      if (name == "psi" || name == "theta0") {
        expect_params(name, params, 0);
        std::vector<long> c(pair_count(n), 0);
        c[pair_index(1, 2)] = -2;
        return central_map(n, c, label);
      }
      if (name == "phi") {
        expect_params(name, params, 2);
        int i = params[0];
        int j = params[1];
        if (!(1 <= i && i < j && j <= n) || (i == 1 && j == 2)) {
          throw InvalidArgument("phi(" + std::to_string(i) + "," + std::to_string(j)
                                + ") needs 1 <= i < j <= n and {i,j} != {1,2}");
        }
        auto c = phi_exponents(n, i, j, 1);
        return inverse ? central_inverse(n, c, label) : central_map(n, c, label);
      }
      if (name == "w") {
        if (params.size() == 1 && params[0] != n) {
          throw InvalidArgument("w(" + std::to_string(params[0]) + ") needs n = "
                                + std::to_string(params[0]));
        }
        if (params.size() > 1) {
          expect_params(name, params, 1);
        }
        if (n < 3) {
          throw InvalidArgument("w needs n >= 3");
        }
        return pure_map(n, label, [&](int i, int j) {
          if (j != n) {
            return A(i, j);
          }
          auto c = w_factor(n, i);
          return inverse ? (c * A(i, n)).inverse() : (A(i, n) * c).inverse();
        });
      }
      if (name == "omega") {
        expect_params(name, params, 1);
        int k = params[0];
        if (n < 3 || !(1 <= k && k <= n)) {
          throw InvalidArgument("omega(" + std::to_string(k) + ") needs n >= 3 and 1 <= k <= n");
        }
        if (inverse) {
          // each omega is an s_k, w_n or s_2 up to a central correction;
          // the inverse is assembled from that and checked by the caller
          auto f = catalog_entry(name, params, n, group, false);
          GeneratorMap base = k == n ? catalog_entry("w", {}, n, group, false)
                                     : catalog_entry("s", {k}, n, group, false);
          GeneratorMap base_inv = k == n ? catalog_entry("w", {}, n, group, true)
                                         : catalog_entry("s", {k}, n, group, true);
          // f = chi ; base with chi central: f(A) = base(A chi-part)
          auto back = compose(f, base_inv);  // = chi ; base ; base^-1 = chi
          std::vector<long> c(pair_count(n), 0);
          for (auto g : pure_generators(n)) {
            auto d = center_split(PureWord(n, back.image(g)), PureWord(n, A(g.i, g.j)));
            if (!d) {
              throw Error("omega(" + std::to_string(k) + ") is not a central twist of "
                          + base.name());
            }
            c[pair_index(g.i, g.j)] = *d;
          }
          auto inv = compose(base_inv, central_inverse(n, c, "chi^-1"));
          inv.set_name(label);
          return inv;
        }
        if (k == n) {
          return pure_map(n, label, [&](int i, int j) {
            if (j != n) {
              return A(i, j);
            }
            auto w = (A(i, n) * w_factor(n, i)).inverse();
            return i <= 2 ? w * z(n) : w;
          });
        }
        if (k == 2) {
          return pure_map(n, label, [&](int i, int j) {
            if (i == 1 && j == 2) {
              return conjugate_word(A(1, 3), A(2, 3)) * z(n);
            }
            if (i == 1 && j == 3) {
              return A(1, 2) * z(n, -1);
            }
            if (i == 2 && j >= 4) {
              return conjugate_word(A(3, j), A(2, 3));
            }
            if (i == 3) {
              return A(2, j);
            }
            return A(i, j);
          });
        }
        return pure_map(n, label, [&](int i, int j) {
          if (k == i - 1) {
            return A(i - 1, j);
          }
          if (k == i && i < j - 1) {
            return conjugate_word(A(i + 1, j), A(i, i + 1));
          }
          if (k == j - 1 && j - 1 > i) {
            return A(i, j - 1);
          }
          if (k == j) {
            return conjugate_word(A(i, j + 1), A(j, j + 1));
          }
          return A(i, j);
        });
      }
      if (name == "eps") {
        expect_params(name, params, 0);
        auto eps = pure_map(n, label, [&](int i, int j) {
          if (i == 1 && j == 2) {
            return A(1, 2, -1) * z(n, 2);
          }
          auto d = tail_product(i, j);
          return d.inverse() * A(i, j, -1) * d;
        });
        if (!inverse) {
          return eps;
        }
        // eps ; eps is central; eps^-1 = eps ; (eps ; eps)^-1
        auto sq = compose(eps, eps);
        std::vector<long> c(pair_count(n), 0);
        for (auto g : pure_generators(n)) {
          auto d = center_split(PureWord(n, sq.image(g)), PureWord(n, A(g.i, g.j)));
          if (!d) {
            throw Error("eps ; eps is not central");
          }
          c[pair_index(g.i, g.j)] = *d;
        }
        auto inv = compose(eps, central_inverse(n, c, "chi^-1"));
        inv.set_name(label);
        return inv;
      }

      // n = 3 entries, written in x = A(1,3), y = A(2,3), z = A(1,2) A(1,3) A(2,3)
      FreeWord const x  = A(1, 3);
      FreeWord const y  = A(2, 3);
      if (name == "theta" || name == "xi" || name == "eta") {
        expect_params(name, params, 0);
        expect_n(name, n, 3);
        FreeWord const zz = z(3);
        long const     e  = inverse ? -1 : 1;
        if (name == "theta") {
          return p3_map(x, y, zz.inverse(), label);
        }
        if (name == "xi") {
          return p3_map(x * zz.pow(e), y, zz, label);
        }
        return p3_map(x, y * zz.pow(e), zz, label);
      }
      if (name == "rho" || name == "rho_literal") {
        expect_params(name, params, 0);
        expect_n(name, n, 3);
        auto a12 = name == "rho" ? y * A(1, 2) * y.inverse() : y * x * y.inverse();
        if (inverse && name == "rho_literal") {
          throw InvalidArgument("rho_literal has no inverse in the catalog");
        }
        return pure_map(3, label, [&](int i, int j) {
          if (i == 1 && j == 2) {
            return a12;
          }
          return i == 1 ? y : x;
        });
      }
      if (name == "sigma") {
        expect_params(name, params, 0);
        expect_n(name, n, 3);
        return pure_map(3, label, [&](int i, int j) {
          if (i == 1 && j == 2) {
            return A(1, 2) * x.pow(2);
          }
          return i == 1 ? x.inverse() : y;
        });
      }
      if (name == "nu") {
        expect_params(name, params, 0);
        expect_n(name, n, 3);
        return pure_map(3, label, [&](int i, int j) {
          if (i == 1 && j == 2) {
            return inverse ? y * A(1, 2) : y.inverse() * A(1, 2);
          }
          if (i == 1) {
            return inverse ? x * y.inverse() : x * y;
          }
          return y;
        });
      }
      if (name == "nonlift") {
        expect_params(name, params, 0);
        expect_n(name, n, 3);
        if (inverse) {
          // A(1,3) -> A(1,3) A(2,3)^-1, and A(1,2) solved from the image of z
          return pure_map(3, label, [&](int i, int j) {
            if (i == 1 && j == 2) {
              return A(1, 2) * x * y * x.inverse();
            }
            return i == 1 ? x * y.inverse() : y;
          });
        }
        return pure_map(3, label, [&](int i, int j) {
          if (i == 1 && j == 2) {
            return A(1, 2) * x * y.inverse() * x.inverse();
          }
          return i == 1 ? x * y : y;
        });
      }
      if (name == "tau") {
        throw InvalidArgument("tau acts on B_n; its restriction to P_n is t");
      }
      throw InvalidArgument("unknown automorphism '" + name + "'");
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Automorphism expressions
  ////////////////////////////////////////////////////////////////////////

  // expr := factor (';' factor)* ; factor := name args? ('^' int)? | '(' expr ')' ('^' int)?
  // Factors apply left to right. Shorthand such as s2, w4, phi13, omega2 is
  // accepted for single-digit parameters.
  struct AutoExpr {
    struct Factor {
      std::string                name;  // empty for a parenthesised group
      std::vector<int>           params;
      std::shared_ptr<AutoExpr>  group;
      long                       exponent = 1;
    };

    std::vector<Factor> factors;
  };

  namespace detail {

    class ExprParser {
     public:
      explicit ExprParser(std::string_view text) : _text(text) {}

      AutoExpr parse() {
        auto e = expr();
        skip();
        if (_pos != _text.size()) {
          fail("unexpected '" + std::string(1, _text[_pos]) + "'");
        }
        return e;
      }

     private:
      [[noreturn]] void fail(std::string const& msg) const {
        throw ParseError(ParseError::Kind::syntax, _pos, msg);
      }

      void skip() {
        while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
      }

      bool eat(char c) {
        skip();
        if (_pos < _text.size() && _text[_pos] == c) {
          ++_pos;
          return true;
        }
        return false;
      }

      long integer() {
        skip();
        std::size_t start = _pos;
        if (_pos < _text.size() && (_text[_pos] == '-' || _text[_pos] == '+')) {
          ++_pos;
        }
        std::size_t digits = _pos;
        while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos]))) {
          ++_pos;
        }
        if (_pos == digits) {
          _pos = start;
          fail("expected an integer");
        }
        return std::stol(std::string(_text.substr(start, _pos - start)));
      }

      AutoExpr expr() {
        AutoExpr e;
        e.factors.push_back(factor());
        while (eat(';')) {
          e.factors.push_back(factor());
        }
        return e;
      }

      AutoExpr::Factor factor() {
        AutoExpr::Factor f;
        skip();
        if (eat('(')) {
          f.group = std::make_shared<AutoExpr>(expr());
          if (!eat(')')) {
            fail("expected ')'");
          }
        } else {
          std::size_t start = _pos;
          while (_pos < _text.size()
                 && (std::isalnum(static_cast<unsigned char>(_text[_pos])) || _text[_pos] == '_')) {
            ++_pos;
          }
          if (_pos == start) {
            fail("expected an automorphism name");
          }
          std::string token(_text.substr(start, _pos - start));
          split_name(token, f, start);
          skip();
          if (f.params.empty() && _pos < _text.size() && _text[_pos] == '(') {
            ++_pos;
            f.params.push_back(static_cast<int>(integer()));
            while (eat(',')) {
              f.params.push_back(static_cast<int>(integer()));
            }
            if (!eat(')')) {
              fail("expected ')'");
            }
          }
        }
        if (eat('^')) {
          f.exponent = integer();
        }
        return f;
      }

      void split_name(std::string const& token, AutoExpr::Factor& f, std::size_t start) const {
        auto const& names = catalog_names();
        if (std::find(names.begin(), names.end(), token) != names.end()) {
          f.name = token;
          return;
        }
        if (token == "1") {
          f.name = "id";
          return;
        }
        std::size_t cut = token.size();
        while (cut > 0 && std::isdigit(static_cast<unsigned char>(token[cut - 1]))) {
          --cut;
        }
        std::string base = token.substr(0, cut);
        if (cut == token.size() || std::find(names.begin(), names.end(), base) == names.end()) {
          throw ParseError(ParseError::Kind::unknown_generator, start,
                           "unknown automorphism '" + token + "'");
        }
        f.name = base;
        for (std::size_t k = cut; k < token.size(); ++k) {
          f.params.push_back(token[k] - '0');
        }
        if (base != "phi" && f.params.size() > 1) {
          f.params = {std::stoi(token.substr(cut))};
        }
      }

      std::string_view _text;
      std::size_t      _pos = 0;
    };

  }  // namespace detail

  inline AutoExpr parse_auto_expr(std::string_view text) {
    return detail::ExprParser(text).parse();
  }

  namespace detail {

    inline GeneratorMap evaluate_signed(AutoExpr const& e, int n, Group group, bool inverted,
                                        CombingOptions const& opts);

    inline GeneratorMap evaluate_factor(AutoExpr::Factor const& f, int n, Group group,
                                        bool inverted, CombingOptions const& opts) {
      bool const   inv  = inverted != (f.exponent < 0);
      long const   reps = f.exponent < 0 ? -f.exponent : f.exponent;
      GeneratorMap base = f.group ? evaluate_signed(*f.group, n, group, inv, opts)
                                  : (inv ? named_inverse(f.name, f.params, n, group)
                                         : named_automorphism(f.name, f.params, n, group));
      if (reps == 1) {
        return base;
      }
      return power(base, reps, opts);
    }

    inline GeneratorMap evaluate_signed(AutoExpr const& e, int n, Group group, bool inverted,
                                        CombingOptions const& opts) {
      std::optional<GeneratorMap> result;
      auto step = [&](AutoExpr::Factor const& f) {
        auto m = evaluate_factor(f, n, group, inverted, opts);
        result = result ? compose(*result, m, opts) : m;
      };
      if (inverted) {
        for (auto it = e.factors.rbegin(); it != e.factors.rend(); ++it) {
          step(*it);
        }
      } else {
        for (auto const& f : e.factors) {
          step(f);
        }
      }
      return *result;
    }

  }  // namespace detail

  inline GeneratorMap evaluate(AutoExpr const& e, int n, Group group = Group::pure,
                               CombingOptions const& opts = {}) {
    return detail::evaluate_signed(e, n, group, false, opts);
  }

  inline GeneratorMap evaluate(std::string_view text, int n, Group group = Group::pure,
                               CombingOptions const& opts = {}) {
    auto f = evaluate(parse_auto_expr(text), n, group, opts);
    f.set_name(std::string(text));
    return f;
  }

  struct RelationReport {
    bool                             passed = false;
    EqualityMode                     mode   = EqualityMode::exact;
    // mod_center only: image of each generator is lhs-image times z^c
    std::vector<std::optional<long>> central_exponents;
    std::vector<std::string>         differing;  // generators where the sides disagree
  };

  inline RelationReport verify_relation(std::string_view lhs, std::string_view rhs, int n,
                                        EqualityMode mode = EqualityMode::exact,
                                        Group group = Group::pure,
                                        CombingOptions const& opts = {}) {
    auto           f = evaluate(lhs, n, group, opts);
    auto           g = evaluate(rhs, n, group, opts);
    RelationReport report;
    report.mode = mode;
    auto const& gens = f.domain().generators();
    if (mode == EqualityMode::mod_center) {
      report.central_exponents = central_differences(f, g, opts);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!report.central_exponents[k]) {
          report.differing.push_back(f.domain().name(gens[k]));
        }
      }
    } else {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        if (!codomain_equal(f.codomain(), f.images()[k], g.images()[k], opts)) {
          report.differing.push_back(f.domain().name(gens[k]));
        }
      }
    }
    report.passed = report.differing.empty();
    return report;
  }

}  // namespace braidforge

#endif  // BRAIDFORGE_AUTOMORPHISM_HPP_
