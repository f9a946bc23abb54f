#include "nanoword/kei.hpp"

namespace nanoword {

  KeiStructure<LambdaVector> abelian_kei(OrbitTablePtr const& table) {
    KeiStructure<LambdaVector> k;
    k.act = [table](Letter a, LambdaVector const& x) {
      Lambda const g(PsiElement::generator(table, a));
      LambdaVector out;
      out.reserve(x.size());
      for (auto const& c : x) {
        out.push_back(g * c);
      }
      return out;
    };
    k.star = [table](Letter a, LambdaVector const& x, LambdaVector const& y) {
      if (x.size() != y.size()) {
        throw ContractError("abelian kei operands differ in rank");
      }
      Lambda const b(PsiElement::bullet(table, a));
      Lambda const rest = Lambda::one(table) - b * Lambda(PsiElement::generator(table, a));
      LambdaVector out;
      out.reserve(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) {
        out.push_back(b * x[i] + rest * y[i]);
      }
      return out;
    };
    return k;
  }

  FreeKeiElement FreeKeiElement::generator(PsiElement psi) {
    FreeKeiElement e;
    e.syl_.push_back({std::move(psi), 1});
    return e;
  }

  FreeKeiElement FreeKeiElement::from_sequence(std::vector<Syllable> const& seq) {
    FreeKeiElement e;
    for (auto const& s : seq) {
      if (s.sign != 1 && s.sign != -1) {
        throw ContractError("free kei signs must be +1 or -1");
      }
      e.push(s);
    }
    return e;
  }

  void FreeKeiElement::push(Syllable s) {
    if (!syl_.empty() && syl_.back().sign == -s.sign && syl_.back().psi == s.psi) {
      syl_.pop_back();
    } else {
      syl_.push_back(std::move(s));
    }
  }

  FreeKeiElement FreeKeiElement::inverse() const {
    FreeKeiElement e;
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
      e.syl_.push_back({it->psi, -it->sign});
    }
    return e;
  }

  FreeKeiElement& FreeKeiElement::operator*=(FreeKeiElement const& rhs) {
    for (auto const& s : rhs.syl_) {
      push(s);
    }
    return *this;
  }

  FreeKeiElement FreeKeiElement::relabel(PsiElement const& g) const {
    // left multiplication is a bijection of Psi, so no new cancellations
    FreeKeiElement e;
    e.syl_.reserve(syl_.size());
    for (auto const& s : syl_) {
      e.syl_.push_back({g * s.psi, s.sign});
    }
    return e;
  }

  std::string FreeKeiElement::to_string() const {
    return format_sequence(syl_);
  }

  std::string format_sequence(CharacteristicSequence const& seq) {
    std::string out = "(";
    for (std::size_t k = 0; k < seq.size(); ++k) {
      if (k > 0) {
        out += ", ";
      }
      if (seq[k].sign < 0) {
        out += "-";
      }
      out += seq[k].psi.to_string();
    }
    return out + ")";
  }

  void require_fixed_point_free(OrbitTable const& table) {
    auto const& alpha = table.alphabet();
    for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
      if (alpha.tau(a) == a) {
        throw ContractError("the characteristic sequence needs a fixed-point-free tau; '"
                            + alpha.name(a) + "' is fixed");
      }
    }
  }

  namespace {
    bool in_alpha_plus(OrbitTable const& table, Letter a) {
      return !table.is_fixed(table.orbit_of(a)) && table.sign_of(a) == 1;
    }
  }  // namespace

  FreeKeiElement free_kei_act(OrbitTablePtr const& table, Letter a, FreeKeiElement const& x) {
    return x.relabel(PsiElement::generator(table, a));
  }

  FreeKeiElement free_kei_star(OrbitTablePtr const& table, Letter a, FreeKeiElement const& x,
                               FreeKeiElement const& y) {
    auto const g  = PsiElement::generator(table, a);
    auto const gb = PsiElement::bullet(table, a);
    if (in_alpha_plus(*table, a)) {
      return y * x.relabel(gb) * y.relabel(gb * g).inverse();
    }
    // tau(a)^{-1} = a and tau(a)._{-1} = a. in Psi; x is shifted by a., not
    // by a._{-1}, otherwise ax *_a x = x fails
    return y.relabel(gb * g).inverse() * x.relabel(gb) * y;
  }

  KeiStructure<FreeKeiElement> free_kei(OrbitTablePtr const& table) {
    require_fixed_point_free(*table);
    KeiStructure<FreeKeiElement> k;
    k.act  = [table](Letter a, FreeKeiElement const& x) { return free_kei_act(table, a, x); };
    k.star = [table](Letter a, FreeKeiElement const& x, FreeKeiElement const& y) {
      return free_kei_star(table, a, x, y);
    };
    return k;
  }

  FreeKeiElement kei_output(Nanoword const& n, OrbitTablePtr const& table) {
    require_fixed_point_free(*table);
    std::size_t const           len = n.length();
    std::vector<FreeKeiElement> x(len + 1);
    x[0] = FreeKeiElement::generator(PsiElement::identity(table));
    for (std::size_t p = 1; p <= len; ++p) {
      int const    letter = n.at(p - 1);
      Letter const a      = n.proj(letter);
      if (n.is_first(p - 1)) {
        x[p] = free_kei_act(table, a, x[p - 1]);
      } else {
        x[p] = free_kei_star(table, a, x[p - 1], x[n.first(letter)]);
      }
    }
    return x[len];
  }

  CharacteristicSequence characteristic_sequence(Nanoword const& n, OrbitTablePtr const& table) {
    return kei_output(n, table).syllables();
  }

  Lambda signed_sum(CharacteristicSequence const& seq, OrbitTablePtr const& table) {
    Lambda sum(table);
    for (auto const& s : seq) {
      sum.add(s.psi, s.sign);
    }
    return sum;
  }

  std::string KeiPresentation::to_string() const {
    std::string out = "generators: X0..X" + std::to_string(generators - 1) + "\n";
    for (auto const& r : relations) {
      out += r + "\n";
    }
    return out;
  }

  KeiPresentation kei_presentation(Nanoword const& n, AlphabetSpec const& alpha,
                                   BetaSet const& beta) {
    KeiPresentation pr;
    pr.generators = n.length() + 1;
    auto X        = [](std::size_t k) { return "X" + std::to_string(k); };
    for (std::size_t p = 0; p < n.length(); ++p) {
      if (!n.is_first(p)) {
        continue;
      }
      int const          letter = n.at(p);
      Letter const       a      = n.proj(letter);
      std::string const& name   = alpha.name(a);
      std::size_t const  i      = static_cast<std::size_t>(n.first(letter)) + 1;
      std::size_t const  j      = static_cast<std::size_t>(n.second(letter)) + 1;
      if (beta.contains(a)) {
        pr.relations.push_back(X(i) + " = " + name + " " + X(i - 1));
        pr.relations.push_back(X(j) + " = " + X(j - 1) + " *_" + name + " " + X(i - 1));
      } else {
        pr.relations.push_back(X(i) + " = " + X(i - 1) + " *_" + name + " " + X(j - 1));
        pr.relations.push_back(X(j) + " = " + name + " " + X(j - 1));
      }
    }
    return pr;
  }

}  // namespace nanoword
