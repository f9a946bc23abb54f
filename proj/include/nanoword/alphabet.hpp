#ifndef NANOWORD_ALPHABET_HPP_
#define NANOWORD_ALPHABET_HPP_

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace nanoword {

  /// Raised when a value violates the contract of the operation building it.
  class ContractError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  /// Index of a letter of the base alphabet.
  using Letter = int;

  using Triple = std::array<Letter, 3>;

  /// Symbolic marker for the homotopy data {(a,a,a) : a in the alphabet}.
  struct Diagonal {};

  using NamedTriple = std::array<std::string, 3>;

  /// A finite alphabet with an involution and a set of homotopy triples.
  ///
  /// Letters are addressed by their position in declaration order. The
  /// diagonal marker is kept as given; `triples()` always returns the
  /// expanded set.
  class AlphabetSpec {
   public:
    AlphabetSpec() = default;

    std::size_t size() const noexcept {
      return names_.size();
    }
    std::string const& name(Letter a) const {
      return names_.at(a);
    }
    std::vector<std::string> const& names() const noexcept {
      return names_;
    }
    std::optional<Letter> find(std::string_view name) const;
    Letter index(std::string_view name) const;

    Letter tau(Letter a) const {
      return tau_.at(a);
    }
    bool is_fixed(Letter a) const {
      return tau(a) == a;
    }
    bool has_fixed_points() const noexcept;

    /// True when the triple set was declared with the diagonal marker.
    bool diagonal_marker() const noexcept {
      return diagonal_marker_;
    }
    /// True when the triple set equals the diagonal, however it was declared.
    bool is_diagonal() const noexcept;
    bool contains(Letter a, Letter b, Letter c) const;
    std::vector<Triple> const& triples() const noexcept {
      return triples_;
    }

    /// Letters in declaration order whose orbit they open.
    std::vector<Letter> orbit_representatives() const;

    bool operator==(AlphabetSpec const&) const = default;

   private:
    friend AlphabetSpec make_alphabet(
        std::vector<std::string> const&,
        std::vector<std::pair<std::string, std::string>> const&,
        std::vector<std::string> const&,
        std::variant<Diagonal, std::vector<NamedTriple>> const&);

    std::vector<std::string>                 names_;
    std::unordered_map<std::string, Letter> index_;
    std::vector<Letter>                      tau_;
    std::vector<Triple>                      triples_;
    std::vector<char>                        triple_bits_;
    bool                                     diagonal_marker_ = false;
  };

  /// Validates and builds an alphabet. `involution_pairs` and `fixed_points`
  /// must partition `letters`.
  AlphabetSpec
  make_alphabet(std::vector<std::string> const&                          letters,
                std::vector<std::pair<std::string, std::string>> const& involution_pairs,
                std::vector<std::string> const&                          fixed_points,
                std::variant<Diagonal, std::vector<NamedTriple>> const& triples);

  /// True if `id` can name a base letter: it must not start with a digit,
  /// '+', or '-', and must avoid whitespace and the characters `.^:#(),*`.
  bool is_valid_letter_name(std::string_view id);

  namespace presets {
    /// alpha_0 = {a, b}, tau swaps them, S_0 = {(a,a,a), (b,b,b)}.
    AlphabetSpec curves();
    /// alpha_* = {a+, a-, b+, b-}, tau(a+) = b-, tau(a-) = b+, with S_*.
    AlphabetSpec knots();
    /// Letters {a, b}, both fixed by tau, diagonal S.
    AlphabetSpec two_fixed();
    /// Letters {a, b, c, d} with tau(a) = c and tau(b) = d, diagonal S.
    AlphabetSpec two_free_orbits();
  }  // namespace presets

}  // namespace nanoword

#endif  // NANOWORD_ALPHABET_HPP_
