#ifndef NANOWORD_REPORT_HPP_
#define NANOWORD_REPORT_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nanoword/homotopy.hpp"
#include "nanoword/kei.hpp"
#include "nanoword/linear.hpp"
#include "nanoword/pairing.hpp"

namespace nanoword {

  enum class Contractibility { Contractible, NonContractible, Unknown };

  std::string_view contractibility_name(Contractibility c);

  struct TricolorEntry {
    std::vector<Letter> beta;
    TricolorCensus      census;
  };

  struct ReportOptions {
    std::optional<std::vector<Letter>> alpha_plus;
    /// Empty means every tau-stable subset when there are at most three
    /// orbits, otherwise the empty set and alpha.
    std::vector<std::vector<Letter>> betas;
    /// With max_len 0 the search runs twice: first at the word's own length,
    /// then with `extra_len` more letters.
    SearchOptions search;
    std::size_t   extra_len  = 4;
    bool          run_search = true;
  };

  struct InvariantReport {
    OrbitTablePtr table;
    std::string   nanoword;
    std::string   canonical;
    std::size_t   length = 0;

    /// Unset under non-diagonal S, where none of the invariants apply.
    std::optional<PiElement>         gamma;
    std::optional<SelfLinkingReport> self_linking;
    std::optional<AlphaPairing>      primitive;
    std::size_t                      norm_bound = 0;
    std::vector<TricolorEntry>       tricolorings;
    std::optional<Lambda>            lambda;
    std::optional<GradedLambda>      graded;
    /// Unset when tau has a fixed point; `sequence_note` says why.
    std::optional<CharacteristicSequence> sequence;
    std::string                           sequence_note;

    Contractibility           verdict = Contractibility::Unknown;
    std::vector<MoveInstance> witness;      // CONTRACTIBLE
    std::string               certificate;  // NON-CONTRACTIBLE
    bool                      searched = false;
    SearchStats               stats;
  };

  /// Invariants only; verdict stays UNKNOWN unless an invariant is nontrivial.
  InvariantReport invariant_report(Nanoword const& n, AlphabetSpec const& alpha,
                                   ReportOptions const& opts = {});
  /// Invariants, then the bounded search when every invariant vanishes.
  InvariantReport make_report(Nanoword const& n, AlphabetSpec const& alpha,
                              ReportOptions const& opts = {});

  using Fingerprint = std::vector<std::pair<std::string, std::string>>;

  /// Named invariant values, in a fixed order. Two reports built with the
  /// same options can be compared component by component.
  Fingerprint fingerprint(InvariantReport const& r);

  /// Name of the first invariant that differs, including isomorphism of the
  /// primitive pairings.
  std::optional<std::string> separating_invariant(InvariantReport const& x,
                                                  InvariantReport const& y);

  std::string report_text(InvariantReport const& r);
  std::string report_json(InvariantReport const& r);

  std::string format_census(TricolorCensus const& c);
  std::string format_letters(std::vector<Letter> const& letters, AlphabetSpec const& alpha);

}  // namespace nanoword

#endif  // NANOWORD_REPORT_HPP_
