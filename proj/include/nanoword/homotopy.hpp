#ifndef NANOWORD_HOMOTOPY_HPP_
#define NANOWORD_HOMOTOPY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nanoword/alphabet.hpp"
#include "nanoword/word.hpp"

namespace nanoword {

  enum class MoveKind { M1, M2, M3, M1Inv, M2Inv, M3Inv, Shift, ShiftInv };

  /// One homotopy move, addressed by 0-based word positions.
  ///
  /// M1 and M1Inv carry one anchor p (the pair sits at p, p+1), M2 and M2Inv
  /// carry p and q (pairs at p, p+1 and q, q+1), M3 and M3Inv carry i, j, k.
  /// Inverse moves address positions in their result and carry the
  /// projection of the first inserted letter. Shift moves take no anchors.
  struct MoveInstance {
    MoveKind         kind;
    std::vector<int> anchors;
    Letter           proj = -1;

    bool operator==(MoveInstance const&) const = default;
  };

  /// `M3 @ (i,i+1,j,j+1,k,k+1)` with 1-based positions; inverse insertions
  /// append `: <letter>`.
  std::string  format_move(MoveInstance const& m, AlphabetSpec const& alpha);
  MoveInstance parse_move(std::string_view text, AlphabetSpec const& alpha);
  std::string  format_witness(std::vector<MoveInstance> const& moves, AlphabetSpec const& alpha);
  std::vector<MoveInstance> parse_witness(std::string_view text, AlphabetSpec const& alpha);

  /// Applies `m`; throws ContractError if the pattern or side condition fails.
  Nanoword apply_move(Nanoword const& n, MoveInstance const& m, AlphabetSpec const& alpha);
  /// Applies the moves in order, validating each intermediate word.
  Nanoword replay(Nanoword const& n, std::vector<MoveInstance> const& moves,
                  AlphabetSpec const& alpha);
  /// The move undoing `m`, given the word `m` was applied to.
  MoveInstance invert_move(Nanoword const& before, MoveInstance const& m,
                           AlphabetSpec const& alpha);

  struct MoveOptions {
    bool shift = false;
  };

  /// Every forward and inverse application whose result has length at most
  /// `max_len`, in a fixed order.
  std::vector<MoveInstance> applicable_moves(Nanoword const& n, AlphabetSpec const& alpha,
                                             std::size_t max_len, MoveOptions opts = {});

  enum class DerivedKind {
    Swap1,         // xAByCAzBCt <-> xBAyACzCBt
    Swap1Reverse,  //
    Swap2,         // xAByCAzCBt <-> xBAyACzBCt
    Swap2Reverse,  //
    Swap3,         // xAByACzCBt <-> xBAyCAzBCt
    Swap3Reverse,  //
    Cancel,        // xAByABz -> xyz
  };

  std::string_view derived_kind_name(DerivedKind k);

  /// A derived move together with the base moves it expands to.
  struct DerivedMove {
    DerivedKind               kind;
    std::vector<int>          anchors;  // i, j, k or p, q
    std::vector<MoveInstance> expansion;
    Nanoword                  result;
  };

  /// Every applicable derived move whose side condition holds.
  std::vector<DerivedMove> derived_moves(Nanoword const& n, AlphabetSpec const& alpha);

  enum class Verdict { Equivalent, Unknown };

  struct SearchStats {
    std::size_t states         = 0;
    std::size_t frontier_peak  = 0;
    std::size_t max_len        = 0;
    std::size_t max_states     = 0;
    bool        bound_exhausted = false;
  };

  struct SearchOutcome {
    Verdict                   verdict = Verdict::Unknown;
    std::vector<MoveInstance> witness;
    SearchStats               stats;
  };

  struct SearchOptions {
    std::size_t max_len    = 0;
    std::size_t max_states = 200000;
    bool        shift      = false;
    bool        derived    = true;  // use derived moves as accelerators
  };

  /// Bidirectional breadth-first search over isomorphism classes. Never
  /// concludes non-equivalence.
  SearchOutcome equivalent_bounded(Nanoword const& from, Nanoword const& to,
                                   AlphabetSpec const& alpha, SearchOptions const& opts);
  SearchOutcome is_contractible_bounded(Nanoword const& n, AlphabetSpec const& alpha,
                                        SearchOptions const& opts);

}  // namespace nanoword

#endif  // NANOWORD_HOMOTOPY_HPP_
