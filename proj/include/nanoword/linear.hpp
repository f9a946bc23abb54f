#ifndef NANOWORD_LINEAR_HPP_
#define NANOWORD_LINEAR_HPP_

#include <array>
#include <string>
#include <vector>

#include "nanoword/algebra.hpp"
#include "nanoword/word.hpp"

namespace nanoword {

  /// A tau-stable subset of the alphabet.
  class BetaSet {
   public:
    /// Throws ContractError unless tau(beta) = beta.
    BetaSet(AlphabetSpec const& alpha, std::vector<Letter> const& letters);

    static BetaSet all(AlphabetSpec const& alpha);

    bool contains(Letter a) const {
      return in_.at(a) != 0;
    }
    std::vector<Letter> letters() const;

   private:
    std::vector<char> in_;
  };

  /// census[k][l] = number of tricolorings with input k and output l.
  using TricolorCensus = std::array<std::array<long long, 3>, 3>;

  TricolorCensus tricolor_census(Nanoword const& n, BetaSet const& beta);

  /// Checks the per-letter conditions on a dash colouring f(0..n).
  bool is_tricoloring(Nanoword const& n, BetaSet const& beta, std::vector<int> const& f);

  /// n relations over n + 1 dash generators, two rows per letter, letters
  /// taken in order of first occurrence.
  struct PresentationMatrix {
    std::vector<std::vector<Lambda>> rows;
    std::size_t                      columns = 1;

    std::size_t row_count() const noexcept {
      return rows.size();
    }
    std::size_t column_count() const noexcept {
      return columns;
    }

    std::string to_string() const;
  };

  PresentationMatrix presentation_matrix(Nanoword const& n, OrbitTablePtr const& table,
                                         BetaSet const& beta);

  /// iota of lambda', where x_n = lambda' x_0 after eliminating the relations.
  Lambda lambda_by_elimination(Nanoword const& n, OrbitTablePtr const& table);

  /// Chain edges i-1 -> i labelled a or a. and one arc i_A - 1 -> j_A per
  /// letter labelled 1 - a a.
  struct PathEdge {
    int    from;
    int    to;
    Lambda label;
    bool   arc;
  };

  struct PathSumGraph {
    int                   vertices = 1;
    std::vector<PathEdge> edges;
  };

  PathSumGraph path_sum_graph(Nanoword const& n, OrbitTablePtr const& table);

  struct LambdaPath {
    std::vector<int> vertices;
    Lambda           product;
  };

  /// Every monotone path from the input to the output.
  std::vector<LambdaPath> lambda_paths(Nanoword const& n, OrbitTablePtr const& table);

  /// Sum over lambda_paths; throws std::logic_error if it disagrees with
  /// the elimination.
  Lambda lambda_by_paths(Nanoword const& n, OrbitTablePtr const& table);

  struct GradedLambda {
    Lambda part[2][2];

    bool operator==(GradedLambda const& rhs) const {
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          if (!(part[i][j] == rhs.part[i][j])) {
            return false;
          }
        }
      }
      return true;
    }
  };

  GradedLambda lambda_graded(Nanoword const& n, OrbitTablePtr const& table);
  GradedLambda grade(Lambda const& x);

}  // namespace nanoword

#endif  // NANOWORD_LINEAR_HPP_
