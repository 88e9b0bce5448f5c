#ifndef SUSHKEVICH_ERROR_HPP_
#define SUSHKEVICH_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sushkevich {

  // Base class for every error the library raises on bad input.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // A text input (presentation file, table file, ...) could not be parsed.
  class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::string const& what)
        : Error("line " + std::to_string(line) + ": " + what), _line(line) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // A hard enumeration cap was exceeded.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  // Preconditions on an algebraic structure failed; carries the first
  // offending pair of element indices.
  class HypothesisError : public Error {
   public:
    HypothesisError(std::string const&                     what,
                    std::pair<std::size_t, std::size_t> pair)
        : Error(what), _pair(pair) {}

    [[nodiscard]] std::pair<std::size_t, std::size_t>
    counterexample() const noexcept {
      return _pair;
    }

   private:
    std::pair<std::size_t, std::size_t> _pair;
  };

}  // namespace sushkevich

#endif  // SUSHKEVICH_ERROR_HPP_
