#ifndef NANOWORD_CLASSIFY_HPP_
#define NANOWORD_CLASSIFY_HPP_

#include <string>
#include <vector>

#include "nanoword/report.hpp"

namespace nanoword {

  struct ClassifyOptions {
    std::size_t   length = 0;
    std::size_t   cap    = 6;
    /// report.extra_len also bounds the pairwise searches: extra letters
    /// above the longer word, unless report.search.max_len is set.
    ReportOptions report;
    unsigned      jobs = 0;  // 0 = hardware concurrency
  };

  struct ClassifiedWord {
    std::string     word;
    InvariantReport report;
    int             cls = -1;
    /// Moves from this word to word `via` of the same class, when the class
    /// was merged by a search rather than by isomorphism or contraction.
    std::vector<MoveInstance> witness;
    int                       via = -1;
  };

  struct WordClass {
    std::vector<int> members;  // indices into Classification::words, sorted
    Contractibility  verdict = Contractibility::Unknown;
    std::string      certificate;
  };

  struct ClassEdge {
    int         a, b;
    bool        separated;
    std::string detail;  // separating invariant, or the bound used
  };

  struct Classification {
    std::vector<ClassifiedWord> words;
    std::vector<WordClass>      classes;
    std::vector<ClassEdge>      edges;  // one per pair of classes, a < b

    int class_of(std::string const& word) const;
    bool has_unknown() const;
  };

  /// Every plain word of the given length on single-character letters,
  /// grouped by oracle-proven equivalence. Words are desingularized first.
  Classification classify_words(AlphabetSpec const& alpha, ClassifyOptions const& opts);

  std::string classification_text(Classification const& c, AlphabetSpec const& alpha);
  std::string classification_json(Classification const& c, AlphabetSpec const& alpha);

}  // namespace nanoword

#endif  // NANOWORD_CLASSIFY_HPP_
