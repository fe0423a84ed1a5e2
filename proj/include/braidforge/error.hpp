#ifndef BRAIDFORGE_ERROR_HPP_
#define BRAIDFORGE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidforge {

  // Base of everything the library throws.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Malformed input, mismatched contexts, invalid parameters.
  class InvalidArgument : public Error {
   public:
    using Error::Error;
  };

  // A word grew past the configured length budget.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  class ParseError : public Error {
   public:
    enum class Kind { syntax, unknown_generator, out_of_range };

    ParseError(Kind kind, std::size_t position, std::string const& message)
        : Error(message + " (at position " + std::to_string(position) + ")"),
          _kind(kind),
          _position(position) {}

    Kind kind() const noexcept {
      return _kind;
    }

    std::size_t position() const noexcept {
      return _position;
    }

   private:
    Kind        _kind;
    std::size_t _position;
  };

}  // namespace braidforge

#endif  // BRAIDFORGE_ERROR_HPP_
