#ifndef NANOWORD_WORD_HPP_
#define NANOWORD_WORD_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "nanoword/alphabet.hpp"

namespace nanoword {

  /// A letter of an alpha-alphabet: a name and its projection |A|.
  struct LetterDecl {
    std::string name;
    Letter      proj;

    bool operator==(LetterDecl const&) const = default;
  };

  /// A word over an alpha-alphabet. Letters may occur any number of times.
  class EtaleWord {
   public:
    EtaleWord() = default;
    EtaleWord(std::vector<LetterDecl> letters, std::vector<int> word);

    std::vector<LetterDecl> const& letters() const noexcept {
      return letters_;
    }
    std::vector<int> const& word() const noexcept {
      return word_;
    }
    std::size_t length() const noexcept {
      return word_.size();
    }
    bool empty() const noexcept {
      return word_.empty();
    }
    int multiplicity(int letter) const;
    int letter_index(std::string_view name) const;

    bool operator==(EtaleWord const&) const = default;

   private:
    std::vector<LetterDecl> letters_;
    std::vector<int>        word_;
  };

  /// An etale word in which every declared letter occurs exactly twice.
  class Nanoword {
   public:
    Nanoword() = default;
    /// Throws ContractError unless the Gauss condition holds.
    Nanoword(std::vector<LetterDecl> letters, std::vector<int> word);
    explicit Nanoword(EtaleWord const& w);

    std::vector<LetterDecl> const& letters() const noexcept {
      return letters_;
    }
    std::vector<int> const& word() const noexcept {
      return word_;
    }
    std::size_t length() const noexcept {
      return word_.size();
    }
    std::size_t letter_count() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return word_.empty();
    }

    int at(std::size_t pos) const {
      return word_[pos];
    }
    Letter proj(int letter) const {
      return letters_[letter].proj;
    }
    Letter proj_at(std::size_t pos) const {
      return letters_[word_[pos]].proj;
    }
    std::string const& name(int letter) const {
      return letters_[letter].name;
    }
    /// Position of the first occurrence of `letter`.
    int first(int letter) const {
      return first_[letter];
    }
    /// Position of the second occurrence of `letter`.
    int second(int letter) const {
      return second_[letter];
    }
    bool is_first(std::size_t pos) const {
      return first_[word_[pos]] == static_cast<int>(pos);
    }
    int letter_index(std::string_view name) const;

    EtaleWord as_etale() const {
      return EtaleWord(letters_, word_);
    }

    bool operator==(Nanoword const&) const = default;

   private:
    std::vector<LetterDecl> letters_;
    std::vector<int>        word_;
    std::vector<int>        first_;
    std::vector<int>        second_;
  };

  /// Isomorphism-class key: letters ranked by first occurrence.
  struct CanonicalNanoword {
    std::vector<int>    word;  // ranks 0, 1, ... in order of first occurrence
    std::vector<Letter> proj;  // projection per rank

    auto operator<=>(CanonicalNanoword const&) const = default;
    bool operator==(CanonicalNanoword const&) const = default;

    /// Compact byte key, injective on canonical forms over alphabets of
    /// fewer than 256 letters and words shorter than 65536.
    std::string key() const;
    /// Rebuilds a nanoword with letters named by rank.
    Nanoword to_nanoword() const;
  };

  EtaleWord opposite(EtaleWord const& w);
  Nanoword  opposite(Nanoword const& n);

  /// Concatenation over the disjoint union of the letter sets. Letters of
  /// `w2` whose names clash are renamed by a numeric suffix.
  EtaleWord product(EtaleWord const& w1, EtaleWord const& w2);
  Nanoword  product(Nanoword const& n1, Nanoword const& n2);

  /// Letters of multiplicity m >= 2 become m(m-1)/2 letters named
  /// `<base>_<i>_<j>`; letters of multiplicity 1 are dropped.
  Nanoword desingularize(EtaleWord const& w);

  CanonicalNanoword canonical_form(Nanoword const& n);
  bool              is_isomorphic(Nanoword const& n1, Nanoword const& n2);

  /// Etale word over the alphabet itself: each letter a is the alpha-letter
  /// named a with |a| = a.
  EtaleWord plain_word(AlphabetSpec const& alpha, std::vector<Letter> const& letters);

  /// A name not used by any letter of `n`, of the form `<stem><k>`.
  std::string fresh_name(Nanoword const& n, std::string_view stem = "X");

}  // namespace nanoword

#endif  // NANOWORD_WORD_HPP_
