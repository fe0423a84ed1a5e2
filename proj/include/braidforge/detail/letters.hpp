#ifndef BRAIDFORGE_DETAIL_LETTERS_HPP_
#define BRAIDFORGE_DETAIL_LETTERS_HPP_

// Letter-by-letter reduced words over an indexed basis: letter k > 0 is the
// k-th basis element, -k its inverse. The engines (Artin action, combing)
// work on these and convert to FreeWord at their boundaries.

#include <cstddef>
#include <string>
#include <vector>

#include "../error.hpp"

namespace braidforge::detail {

  using Letters = std::vector<int>;

  inline void push_letter(Letters& w, int a) {
    if (!w.empty() && w.back() == -a) {
      w.pop_back();
    } else {
      w.push_back(a);
    }
  }

  inline void append(Letters& w, Letters const& v) {
    for (int a : v) {
      push_letter(w, a);
    }
  }

  inline void append_inverse(Letters& w, Letters const& v) {
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      push_letter(w, -*it);
    }
  }

  inline Letters inverse(Letters const& v) {
    Letters out;
    append_inverse(out, v);
    return out;
  }

  inline Letters reduced(Letters const& v) {
    Letters out;
    append(out, v);
    return out;
  }

  // Substitutes images[k] for letter k (inverse image for -k).
  inline Letters substitute(Letters const& w, std::vector<Letters> const& images) {
    Letters out;
    for (int a : w) {
      if (a > 0) {
        append(out, images[static_cast<std::size_t>(a)]);
      } else {
        append_inverse(out, images[static_cast<std::size_t>(-a)]);
      }
    }
    return out;
  }

  // Number of maximal runs of one letter.
  inline std::size_t syllables(Letters const& w) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i == 0 || w[i] != w[i - 1]) {
        ++count;
      }
    }
    return count;
  }

  // Hard cap on the size of intermediate words, in the given unit.
  struct Budget {
    std::size_t limit = 200'000;
    char const* unit  = "syllables";

    void check(std::size_t size, char const* what) const {
      if (size > limit) {
        throw ResourceError(std::string(what) + " exceeded the word-length budget of "
                            + std::to_string(limit) + " " + unit);
      }
    }
  };

}  // namespace braidforge::detail

#endif  // BRAIDFORGE_DETAIL_LETTERS_HPP_
