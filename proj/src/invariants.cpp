#include "nanoword/invariants.hpp"

#include <string>

namespace nanoword {

  void require_diagonal(AlphabetSpec const& alpha, char const* what) {
    if (!alpha.is_diagonal()) {
      throw ContractError(std::string(what) + " requires diagonal S");
    }
  }

  PiElement gamma(Nanoword const& n, OrbitTablePtr const& table) {
    require_diagonal(table->alphabet(), "gamma");
    PiElement g(table);
    for (std::size_t i = 0; i < n.length(); ++i) {
      auto z = PiElement::generator(table, n.proj_at(i));
      g *= n.is_first(i) ? z : z.inverse();
    }
    return g;
  }

  IntMatrix interlacement(Nanoword const& n) {
    auto const k = static_cast<Eigen::Index>(n.letter_count());
    IntMatrix  m = IntMatrix::Zero(k, k);
    for (int a = 0; a < k; ++a) {
      for (int b = 0; b < k; ++b) {
        if (n.first(a) < n.first(b) && n.first(b) < n.second(a) && n.second(a) < n.second(b)) {
          m(a, b) = 1;
          m(b, a) = -1;
        }
      }
    }
    return m;
  }

  AbelianPi letter_class(Nanoword const& n, int letter, OrbitTablePtr const& table) {
    if (letter < 0 || letter >= static_cast<int>(n.letter_count())) {
      throw ContractError("unknown letter");
    }
    auto      m = interlacement(n);
    AbelianPi c(table);
    for (int b = 0; b < static_cast<int>(n.letter_count()); ++b) {
      if (m(letter, b) != 0) {
        c *= AbelianPi::generator(table, n.proj(b)).pow(m(letter, b));
      }
    }
    return c;
  }

  bool SelfLinkingReport::invariants_vanish() const {
    for (auto const& [a, d] : free_differences) {
      if (!d.is_zero()) {
        return false;
      }
    }
    for (auto const& [a, d] : fixed_mod2) {
      if (!d.is_zero()) {
        return false;
      }
    }
    return true;
  }

  SelfLinkingReport self_linking(Nanoword const& n, OrbitTablePtr const& table) {
    auto const& alpha = table->alphabet();
    require_diagonal(alpha, "self-linking");
    SelfLinkingReport r;
    for (int x = 0; x < static_cast<int>(n.letter_count()); ++x) {
      r.letter_class.push_back(letter_class(n, x, table));
    }
    r.per_letter.assign(alpha.size(), ZPi(table));
    for (int x = 0; x < static_cast<int>(n.letter_count()); ++x) {
      if (!r.letter_class[x].is_identity()) {
        r.per_letter[n.proj(x)].add(r.letter_class[x], 1);
      }
    }
    for (std::size_t k = 0; k < table->size(); ++k) {
      auto const& o = table->orbit(static_cast<int>(k));
      if (o.kind == OrbitTable::Kind::Free) {
        r.free_differences.emplace_back(o.rep, r.per_letter[o.rep] - r.per_letter[o.partner]);
      } else {
        r.fixed_mod2.emplace_back(o.rep, r.per_letter[o.rep].mod2());
      }
    }
    return r;
  }

  MonoliteralVerdict monoliteral_distinguish(Letter a, int m, Letter b, int n,
                                             OrbitTablePtr const& table) {
    auto const& alpha = table->alphabet();
    auto const  size  = static_cast<Letter>(alpha.size());
    if (a < 0 || a >= size || b < 0 || b >= size) {
      throw ContractError("letter outside the alphabet");
    }
    if (alpha.is_fixed(a) || alpha.is_fixed(b)) {
      throw ContractError("monoliteral comparison needs letters moved by tau");
    }
    if (m < 3 || n < 3) {
      throw ContractError("monoliteral comparison needs at least three repetitions");
    }
    auto wa = desingularize(plain_word(alpha, std::vector<Letter>(m, a)));
    auto wb = desingularize(plain_word(alpha, std::vector<Letter>(n, b)));
    return self_linking(wa, table).same_invariants(self_linking(wb, table))
               ? MonoliteralVerdict::Inconclusive
               : MonoliteralVerdict::NotHomotopic;
  }

}  // namespace nanoword
