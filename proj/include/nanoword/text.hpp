#ifndef NANOWORD_TEXT_HPP_
#define NANOWORD_TEXT_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "nanoword/alphabet.hpp"
#include "nanoword/word.hpp"

namespace nanoword {

  /// Malformed text input. Line and column are 1-based.
  class ParseError : public std::runtime_error {
   public:
    ParseError(std::string const& what, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
          line_(line),
          column_(column) {}

    int line() const noexcept {
      return line_;
    }
    int column() const noexcept {
      return column_;
    }

   private:
    int line_;
    int column_;
  };

  /// Reads the line-oriented alphabet format:
  ///
  ///     letter <id>
  ///     tau <id> <id>
  ///     fixed <id>
  ///     triple <id> <id> <id>   |   S diagonal
  ///
  /// `#` starts a comment.
  AlphabetSpec parse_alphabet(std::string_view text);
  AlphabetSpec load_alphabet(std::string const& path);
  std::string  format_alphabet(AlphabetSpec const& alpha);

  /// `A:a B:b :: A B A B`. Declarations, then the word.
  EtaleWord   parse_etale(std::string_view text, AlphabetSpec const& alpha);
  Nanoword    parse_nanoword(std::string_view text, AlphabetSpec const& alpha);
  std::string format_nanoword(Nanoword const& n, AlphabetSpec const& alpha);
  std::string format_etale(EtaleWord const& w, AlphabetSpec const& alpha);

  /// A plain word on the alphabet, e.g. `abaab` or `word abaab`. Letter
  /// names are matched longest-first, so multi-character names work too.
  EtaleWord parse_plain_word(std::string_view text, AlphabetSpec const& alpha);

}  // namespace nanoword

#endif  // NANOWORD_TEXT_HPP_
