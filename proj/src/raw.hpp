#ifndef NANOWORD_SRC_RAW_HPP_
#define NANOWORD_SRC_RAW_HPP_

// Lightweight word representation shared by the move engine and the
// derived-move expansions. Letter ids index `proj`; ids of deleted letters
// may linger in `proj` unused.

#include <array>
#include <optional>
#include <vector>

#include "nanoword/homotopy.hpp"

namespace nanoword::detail {

  struct Raw {
    std::vector<int>    w;
    std::vector<Letter> proj;

    int fresh(Letter p) {
      proj.push_back(p);
      return static_cast<int>(proj.size()) - 1;
    }
  };

  struct Occurrences {
    std::vector<int> first, second;

    explicit Occurrences(Raw const& r) : first(r.proj.size(), -1), second(r.proj.size(), -1) {
      for (int i = 0; i < static_cast<int>(r.w.size()); ++i) {
        auto& f = first[r.w[i]];
        if (f < 0) {
          f = i;
        } else {
          second[r.w[i]] = i;
        }
      }
    }
    int other(int letter, int pos) const {
      return first[letter] == pos ? second[letter] : first[letter];
    }
  };

  Raw               to_raw(Nanoword const& n);
  Raw               to_raw(CanonicalNanoword const& c);
  CanonicalNanoword canonical(Raw const& r);
  /// Rebuilds a nanoword, keeping the names of letters of `base` that survive.
  Nanoword to_nanoword(Raw const& r, Nanoword const& base);

  std::optional<Raw> apply_raw(Raw const& r, MoveInstance const& m, AlphabetSpec const& alpha);
  MoveInstance       invert_raw(Raw const& before, MoveInstance const& m, AlphabetSpec const& alpha);

  /// Three adjacent pairs at i, j, k described by roles 0, 1, 2, for
  /// example {{0,1},{0,2},{1,2}} for AB..AC..BC.
  using Template = std::array<std::array<int, 2>, 3>;

  struct TripleMatch {
    int                i, j, k;
    std::array<int, 3> letters;  // letter id per role
  };

  std::vector<TripleMatch> match_template(Raw const& r, Occurrences const& occ, Template const& t);

  /// Letter ids per role if the pairs at i, j, k follow `t`.
  std::optional<std::array<int, 3>> check_template(Raw const& r, Template const& t, int i, int j,
                                                   int k);

  inline constexpr Template kM3Source = {{{0, 1}, {0, 2}, {1, 2}}};
  inline constexpr Template kM3Target = {{{1, 0}, {2, 0}, {2, 1}}};

  struct DerivedRaw {
    DerivedKind               kind;
    std::vector<int>          anchors;
    std::vector<MoveInstance> expansion;
    Raw                       result;
  };

  std::vector<DerivedRaw> derived_raw(Raw const& r, AlphabetSpec const& alpha);

}  // namespace nanoword::detail

#endif  // NANOWORD_SRC_RAW_HPP_
