#ifndef BRAIDFORGE_CLI_HPP_
#define BRAIDFORGE_CLI_HPP_

// Command-line front end. execute() is the whole program minus main(), so
// tests can drive it with argument vectors and string streams.

#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "automorphism.hpp"
#include "braid.hpp"
#include "claims.hpp"
#include "combing.hpp"
#include "error.hpp"
#include "word.hpp"

namespace braidforge::cli {

  enum ExitCode : int { ok = 0, claim_failure = 1, usage = 2, budget_exceeded = 3 };

  class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  struct NRange {
    int first = 0;
    int last  = 0;
  };

  // "4" or "3..5"
  inline NRange parse_n_range(std::string const& text) {
    auto const dots = text.find("..");
    try {
      std::size_t used = 0;
      if (dots == std::string::npos) {
        int v = std::stoi(text, &used);
        if (used != text.size()) {
          throw std::invalid_argument(text);
        }
        return {v, v};
      }
      auto const a = text.substr(0, dots);
      auto const b = text.substr(dots + 2);
      int        lo = std::stoi(a, &used);
      if (used != a.size()) {
        throw std::invalid_argument(text);
      }
      int hi = std::stoi(b, &used);
      if (used != b.size() || hi < lo) {
        throw std::invalid_argument(text);
      }
      return {lo, hi};
    } catch (std::logic_error const&) {
      throw UsageError("--n expects INT or A..B, got \"" + text + "\"");
    }
  }

  inline Group parse_group(std::string const& g) {
    if (g == "B") {
      return Group::braid;
    }
    if (g == "F2") {
      return Group::free2;
    }
    return Group::pure;
  }

  inline Alphabet alphabet_for(Group g, int n) {
    switch (g) {
      case Group::braid:
        return Alphabet::braid(n);
      case Group::free2:
        return p3_free_alphabet();
      case Group::pure:
        break;
    }
    return Alphabet::pure(n);
  }

  inline nlohmann::json to_json(ClaimRecord const& r) {
    return {{"claim_id", r.claim_id},
            {"n", r.n},
            {"status", to_string(r.status)},
            {"witness", r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr)},
            {"elapsed", r.elapsed_ms}};
  }

  struct Settings {
    std::string              n_text;
    std::string              group = "P";
    std::string              auto_expr;
    std::string              suite = "paper";
    int                      radius = 8;
    std::optional<long long> budget;
    std::string              format = "text";
    std::vector<std::string> words;
  };

  namespace detail {

    inline int single_n(Settings const& s, Group g) {
      if (g == Group::free2 && s.n_text.empty()) {
        return 3;
      }
      if (s.n_text.empty()) {
        throw UsageError("--n is required");
      }
      auto r = parse_n_range(s.n_text);
      if (r.first != r.last) {
        throw UsageError("this subcommand takes a single --n");
      }
      return r.first;
    }

    inline std::string joined_words(Settings const& s) {
      std::string text;
      for (auto const& w : s.words) {
        text += (text.empty() ? "" : " ") + w;
      }
      if (text.empty()) {
        throw UsageError("expected a word");
      }
      return text;
    }

    inline int run_normalize(Settings const& s, CombingOptions const& opts, std::ostream& out) {
      auto const g = parse_group(s.group);
      int const  n = single_n(s, g);
      auto const a = alphabet_for(g, n);
      auto const w = parse_word(joined_words(s), a);
      nlohmann::json j;
      if (g == Group::pure) {
        auto const c = comb(PureWord(n, w), opts);
        j["group"] = "P";
        j["n"]     = n;
        for (int k = n; k >= 2; --k) {
          auto text = format_word(c.component(k), a);
          j["components"].push_back({{"k", k}, {"u", text}});
          if (s.format == "text") {
            out << "u_" << k << " = " << text << '\n';
          }
        }
        auto const cf = format_central_form(central_form(PureWord(n, w), opts));
        j["central_form"] = cf;
        j["length"]       = c.length();
        if (s.format == "text") {
          out << "central form: " << cf << '\n';
        }
      } else if (g == Group::braid) {
        auto const b = BraidWord(n, w);
        j            = {{"group", "B"},
                        {"n", n},
                        {"word", format_word(b.word(), a)},
                        {"permutation", project_to_permutation(b).to_string()}};
        if (s.format == "text") {
          out << format_word(b.word(), a) << '\n'
              << "permutation: " << project_to_permutation(b).to_string() << '\n';
        }
      } else {
        j = {{"group", "F2"}, {"word", format_word(w, a)}};
        if (s.format == "text") {
          out << format_word(w, a) << '\n';
        }
      }
      if (s.format == "json") {
        out << j.dump(2) << '\n';
      }
      return ok;
    }

    inline int run_apply(Settings const& s, CombingOptions const& opts, std::ostream& out) {
      auto const g = parse_group(s.group);
      int const  n = single_n(s, g);
      if (s.auto_expr.empty()) {
        throw UsageError("apply needs --auto EXPR");
      }
      auto const  f     = evaluate(s.auto_expr, n, g, opts);
      auto const  w     = parse_word(joined_words(s), f.domain());
      auto const  image = f.apply(w);
      std::string text;
      if (g == Group::pure) {
        text = format_central_form(central_form(PureWord(n, image), opts));
      } else {
        text = format_word(image, f.codomain());
      }
      if (s.format == "json") {
        out << nlohmann::json{{"auto", s.auto_expr}, {"n", n}, {"image", text}}.dump(2) << '\n';
      } else {
        out << text << '\n';
      }
      return ok;
    }

    inline int run_parse(Settings const& s, std::ostream& out) {
      auto const g = parse_group(s.group);
      int const  n = single_n(s, g);
      auto const a = alphabet_for(g, n);
      auto const w = parse_word(joined_words(s), a);
      if (s.format == "json") {
        out << nlohmann::json{{"group", s.group},
                              {"n", n},
                              {"word", format_word(w, a)},
                              {"length", w.length()}}
                   .dump(2)
            << '\n';
      } else {
        out << format_word(w, a) << "  (length " << w.length() << ")\n";
      }
      return ok;
    }

    inline int run_verify(Settings const& s, CombingOptions const& opts, std::ostream& out) {
      Suite suite = Suite::paper;
      if (s.suite == "props") {
        suite = Suite::props;
      } else if (s.suite == "all") {
        suite = Suite::all;
      }
      std::optional<std::pair<int, int>> range;
      if (!s.n_text.empty()) {
        auto r = parse_n_range(s.n_text);
        range  = std::pair{r.first, r.last};
      }
      ClaimOptions co;
      co.combing       = opts;
      co.radius        = s.radius;
      auto const recs  = run_claims(suite_manifest(suite), range, co);
      auto const total = summarize(recs);
      if (s.format == "json") {
        nlohmann::json j;
        j["claims"] = nlohmann::json::array();
        for (auto const& r : recs) {
          j["claims"].push_back(to_json(r));
        }
        j["summary"] = {{"pass", total.pass}, {"fail", total.fail}, {"skipped", total.skipped}};
        out << j.dump(2) << '\n';
      } else {
        for (auto const& r : recs) {
          char elapsed[32];
          std::snprintf(elapsed, sizeof elapsed, "%.1f ms", r.elapsed_ms);
          out << to_string(r.status) << "  " << r.claim_id << "  n=" << r.n << "  " << elapsed;
          if (r.witness) {
            out << "  " << *r.witness;
          }
          out << '\n';
        }
        out << total.pass << " pass, " << total.fail << " fail, " << total.skipped
            << " skipped\n";
      }
      if (total.budget_exceeded) {
        return budget_exceeded;
      }
      return total.fail > 0 ? claim_failure : ok;
    }

  }  // namespace detail

  inline int execute(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"braid and pure braid group calculations and checks", "braidforge"};
    app.require_subcommand(1);
    Settings s;

    auto add_common = [&s](CLI::App* sub) {
      sub->add_option("--n", s.n_text, "strand count, INT or A..B");
      sub->add_option("--group", s.group, "B, P or F2")
          ->check(CLI::IsMember({"B", "P", "F2"}));
      sub->add_option("--budget", s.budget, "combing syllable budget")
          ->check(CLI::PositiveNumber);
      sub->add_option("--format", s.format, "text or json")
          ->check(CLI::IsMember({"text", "json"}));
    };
    auto* normalize = app.add_subcommand("normalize", "print the combed form of a word");
    add_common(normalize);
    normalize->add_option("word", s.words, "word")->required();
    auto* apply = app.add_subcommand("apply", "apply an automorphism expression to a word");
    add_common(apply);
    apply->add_option("--auto", s.auto_expr, "expression such as \"t ; eps\"")->required();
    apply->add_option("word", s.words, "word")->required();
    auto* parse = app.add_subcommand("parse", "parse and echo a word");
    add_common(parse);
    parse->add_option("word", s.words, "word")->required();
    auto* verify = app.add_subcommand("verify", "run a suite of claims");
    add_common(verify);
    verify->add_option("--suite", s.suite, "paper, props or all")
        ->check(CLI::IsMember({"paper", "props", "all"}));
    verify->add_option("--radius", s.radius, "ball radius for fixed-subgroup checks")
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(std::move(reversed));
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return ok;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return ok;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }

    CombingOptions opts;
    if (s.budget) {
      opts.syllable_budget = static_cast<std::size_t>(*s.budget);
    }
    if (std::getenv("BRAIDFORGE_BUDGET") != nullptr) {
      opts = CombingOptions::from_environment();
    }

    try {
      if (normalize->parsed()) {
        return detail::run_normalize(s, opts, out);
      }
      if (apply->parsed()) {
        return detail::run_apply(s, opts, out);
      }
      if (parse->parsed()) {
        return detail::run_parse(s, out);
      }
      return detail::run_verify(s, opts, out);
    } catch (ResourceError const& e) {
      err << "budget exceeded: " << e.what() << '\n';
      return budget_exceeded;
    } catch (Error const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    } catch (UsageError const& e) {
      err << "error: " << e.what() << '\n';
      return usage;
    }
  }

}  // namespace braidforge::cli

#endif  // BRAIDFORGE_CLI_HPP_
