#ifndef NANOWORD_KEI_HPP_
#define NANOWORD_KEI_HPP_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nanoword/algebra.hpp"
#include "nanoword/linear.hpp"
#include "nanoword/word.hpp"

namespace nanoword {

  /// Unary actions and binary operations indexed by the alphabet.
  template <class X>
  struct KeiStructure {
    std::function<X(Letter, X const&)>             act;
    std::function<X(Letter, X const&, X const&)>   star;
  };

  struct AxiomViolation {
    int         axiom;  // 1..5
    Letter      letter;
    std::size_t x, y, z;  // sample indices
  };

  /// Checks the five axioms on every letter and every triple of samples.
  template <class X>
  std::optional<AxiomViolation> check_kei_axioms(AlphabetSpec const& alpha, KeiStructure<X> const& k,
                                                 std::vector<X> const& samples) {
    auto const n = samples.size();
    for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
      Letter const ta = alpha.tau(a);
      for (std::size_t i = 0; i < n; ++i) {
        X const& x = samples[i];
        if (!(k.star(a, k.act(a, x), x) == x)) {
          return AxiomViolation{1, a, i, i, i};
        }
        if (!(k.act(a, k.act(ta, x)) == x)) {
          return AxiomViolation{4, a, i, i, i};
        }
        for (std::size_t j = 0; j < n; ++j) {
          X const& y = samples[j];
          if (!(k.act(a, k.star(a, x, y)) == k.star(a, k.act(a, x), k.act(a, y)))) {
            return AxiomViolation{2, a, i, j, j};
          }
          if (!(k.star(ta, k.star(a, x, y), k.act(a, y)) == x)) {
            return AxiomViolation{5, a, i, j, j};
          }
          for (std::size_t l = 0; l < n; ++l) {
            X const& z = samples[l];
            if (!(k.star(a, k.star(a, x, y), z)
                  == k.star(a, k.star(a, x, k.act(a, z)), k.star(a, y, z)))) {
              return AxiomViolation{3, a, i, j, l};
            }
          }
        }
      }
    }
    return std::nullopt;
  }

  /// Vectors over Lambda with ax and x *_a y = a. x + (1 - a. a) y.
  using LambdaVector = std::vector<Lambda>;
  KeiStructure<LambdaVector> abelian_kei(OrbitTablePtr const& table);

  /// Element of the free group on the set Psi, freely reduced.
  class FreeKeiElement {
   public:
    struct Syllable {
      PsiElement psi;
      int        sign;  // +1 or -1

      bool operator==(Syllable const&) const = default;
    };

    FreeKeiElement() = default;

    /// The generator underline(psi).
    static FreeKeiElement generator(PsiElement psi);
    /// Reduces an arbitrary signed sequence.
    static FreeKeiElement from_sequence(std::vector<Syllable> const& seq);

    std::vector<Syllable> const& syllables() const noexcept {
      return syl_;
    }
    bool is_unit() const noexcept {
      return syl_.empty();
    }
    std::size_t length() const noexcept {
      return syl_.size();
    }

    FreeKeiElement  inverse() const;
    FreeKeiElement& operator*=(FreeKeiElement const& rhs);
    friend FreeKeiElement operator*(FreeKeiElement lhs, FreeKeiElement const& rhs) {
      return lhs *= rhs;
    }
    /// Left multiplication of every generator by g.
    FreeKeiElement relabel(PsiElement const& g) const;

    bool operator==(FreeKeiElement const&) const = default;

    /// `(a, b., -b. a. b a)`; the unit prints as `()`.
    std::string to_string() const;

   private:
    void push(Syllable s);

    std::vector<Syllable> syl_;
  };

  /// Throws ContractError if tau fixes a letter.
  void require_fixed_point_free(OrbitTable const& table);

  /// a x on the free kei.
  FreeKeiElement free_kei_act(OrbitTablePtr const& table, Letter a, FreeKeiElement const& x);
  /// x *_a y on the free kei; the branch depends on whether a is in alpha_+.
  FreeKeiElement free_kei_star(OrbitTablePtr const& table, Letter a, FreeKeiElement const& x,
                               FreeKeiElement const& y);
  KeiStructure<FreeKeiElement> free_kei(OrbitTablePtr const& table);

  /// Image of the output under V_- -> underline(1); alpha_+ comes from the table.
  FreeKeiElement kei_output(Nanoword const& n, OrbitTablePtr const& table);

  using CharacteristicSequence = std::vector<FreeKeiElement::Syllable>;

  CharacteristicSequence characteristic_sequence(Nanoword const& n, OrbitTablePtr const& table);

  /// Sum of sign * psi in Lambda.
  Lambda signed_sum(CharacteristicSequence const& seq, OrbitTablePtr const& table);

  std::string format_sequence(CharacteristicSequence const& seq);

  struct KeiPresentation {
    std::size_t              generators = 1;
    std::vector<std::string> relations;

    std::string to_string() const;
  };

  KeiPresentation kei_presentation(Nanoword const& n, AlphabetSpec const& alpha,
                                   BetaSet const& beta);

}  // namespace nanoword

#endif  // NANOWORD_KEI_HPP_
