#ifndef NANOWORD_INVARIANTS_HPP_
#define NANOWORD_INVARIANTS_HPP_

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "nanoword/algebra.hpp"
#include "nanoword/word.hpp"

namespace nanoword {

  using IntMatrix = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;

  /// Throws ContractError unless S is diagonal.
  void require_diagonal(AlphabetSpec const& alpha, char const* what);

  /// Product of z_|A| at first occurrences and z_|A|^-1 at second ones.
  PiElement gamma(Nanoword const& n, OrbitTablePtr const& table);

  /// n(A,B) = 1 for A..B..A..B, -1 for B..A..B..A, 0 otherwise.
  IntMatrix interlacement(Nanoword const& n);

  /// [A] = prod_B |B|^n(A,B).
  AbelianPi letter_class(Nanoword const& n, int letter, OrbitTablePtr const& table);

  struct SelfLinkingReport {
    std::vector<AbelianPi> letter_class;  // per letter of the nanoword
    std::vector<ZPi>       per_letter;    // [a] per letter of the alphabet
    /// [a] - [tau(a)] keyed by the orbit representative a.
    std::vector<std::pair<Letter, ZPi>> free_differences;
    /// [a] mod 2 for letters fixed by tau.
    std::vector<std::pair<Letter, ZPi>> fixed_mod2;

    /// Compares only the fields that survive homotopy.
    bool same_invariants(SelfLinkingReport const& other) const {
      return free_differences == other.free_differences && fixed_mod2 == other.fixed_mod2;
    }
    bool invariants_vanish() const;
  };

  SelfLinkingReport self_linking(Nanoword const& n, OrbitTablePtr const& table);

  enum class MonoliteralVerdict { NotHomotopic, Inconclusive };

  /// Compares desingularized a^m and b^n by their self-linking. Requires
  /// tau(a) != a, tau(b) != b and m, n >= 3.
  MonoliteralVerdict monoliteral_distinguish(Letter a, int m, Letter b, int n,
                                             OrbitTablePtr const& table);

}  // namespace nanoword

#endif  // NANOWORD_INVARIANTS_HPP_
