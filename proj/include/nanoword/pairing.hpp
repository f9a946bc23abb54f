#ifndef NANOWORD_PAIRING_HPP_
#define NANOWORD_PAIRING_HPP_

#include <functional>
#include <string>
#include <vector>

#include "nanoword/invariants.hpp"

namespace nanoword {

  /// A finite set with basepoint (index 0), a projection of the other
  /// elements to the alphabet and a skew-symmetric pairing into pi.
  struct AlphaPairing {
    OrbitTablePtr                       table;
    std::vector<std::string>            names;  // names[0] is the basepoint
    std::vector<Letter>                 proj;   // proj[0] == -1
    std::vector<std::vector<AbelianPi>> b;

    /// The pairing on {s} alone.
    static AlphaPairing trivial(OrbitTablePtr table);

    std::size_t size() const noexcept {
      return names.size();
    }
    int index(std::string_view name) const;
    AbelianPi const& at(std::string_view x, std::string_view y) const {
      return b.at(index(x)).at(index(y));
    }

    /// Copy with the listed elements removed. The basepoint cannot be removed.
    AlphaPairing without(std::vector<int> drop) const;
    /// Copy with elements reordered: element k of the result is old element order[k].
    AlphaPairing permuted(std::vector<int> const& order) const;

    bool is_skew_symmetric() const;

    /// `S: s A B ...`, one `|A| = a` line per element, then one row per element.
    std::string to_string() const;
  };

  /// Product of |F| over letters F with i_D < i_F < j_D and i_E < j_F < j_E.
  AbelianPi circ(Nanoword const& n, int d, int e, OrbitTablePtr const& table);
  /// (D o E)(E o D)^-1.
  AbelianPi linking(Nanoword const& n, int d, int e, OrbitTablePtr const& table);

  /// Letter-indexed matrix of linking numbers.
  std::vector<std::vector<AbelianPi>> linking_matrix(Nanoword const& n, OrbitTablePtr const& table);

  AlphaPairing build_pairing(Nanoword const& n, OrbitTablePtr const& table);

  std::vector<int>                 find_annihilating(AlphaPairing const& p);
  std::vector<std::pair<int, int>> find_twins(AlphaPairing const& p);
  bool                             is_primitive(AlphaPairing const& p);

  struct ReductionStep {
    enum class Kind { Annihilate, Twins };
    Kind                     kind;
    std::vector<std::string> removed;
  };

  /// Picks one of the available deletions; receives their count.
  using ReductionChooser = std::function<std::size_t(std::size_t)>;

  /// Deletes annihilating elements first, then twins, leftmost first.
  AlphaPairing reduce_primitive(AlphaPairing p, std::vector<ReductionStep>* trace = nullptr);
  /// Deletes in the order chosen by `choose` among all available deletions.
  AlphaPairing reduce_primitive(AlphaPairing p, ReductionChooser const& choose,
                                std::vector<ReductionStep>* trace = nullptr);

  /// Bijection fixing the basepoint and preserving projections and b.
  bool pairing_isomorphic(AlphaPairing const& p, AlphaPairing const& q);

  /// card(S+) - 1 for the primitive form of b_w.
  std::size_t norm_lower_bound(Nanoword const& n, OrbitTablePtr const& table);

  /// Equivariant map to {a, b}: f[x] is 0 when x goes to a and 1 when it goes to b.
  using CurveMap = std::vector<int>;

  /// Throws ContractError unless f o tau = tau0 o f.
  void check_equivariant(AlphabetSpec const& alpha, CurveMap const& f);

  /// Integer image of b_w with generators over a sent to 1 and over b to -1.
  IntMatrix genus_matrix(Nanoword const& n, OrbitTablePtr const& table, CurveMap const& f);

  /// Exact rank by fraction-free elimination.
  long long integer_rank(IntMatrix m);

  /// rank(M) / 2.
  long long genus_lower_bound(Nanoword const& n, OrbitTablePtr const& table, CurveMap const& f);

}  // namespace nanoword

#endif  // NANOWORD_PAIRING_HPP_
