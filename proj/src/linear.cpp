#include "nanoword/linear.hpp"

#include <stdexcept>

namespace nanoword {

  BetaSet::BetaSet(AlphabetSpec const& alpha, std::vector<Letter> const& letters)
      : in_(alpha.size(), 0) {
    for (Letter a : letters) {
      if (a < 0 || a >= static_cast<Letter>(alpha.size())) {
        throw ContractError("beta names a letter outside the alphabet");
      }
      in_[a] = 1;
    }
    for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
      if (in_[a] != in_[alpha.tau(a)]) {
        throw ContractError("beta must be closed under tau");
      }
    }
  }

  BetaSet BetaSet::all(AlphabetSpec const& alpha) {
    std::vector<Letter> every(alpha.size());
    for (std::size_t a = 0; a < every.size(); ++a) {
      every[a] = static_cast<Letter>(a);
    }
    return BetaSet(alpha, every);
  }

  std::vector<Letter> BetaSet::letters() const {
    std::vector<Letter> out;
    for (std::size_t a = 0; a < in_.size(); ++a) {
      if (in_[a]) {
        out.push_back(static_cast<Letter>(a));
      }
    }
    return out;
  }

  namespace {
    int mod3(int x) {
      return ((x % 3) + 3) % 3;
    }

    // 1-based positions of the two occurrences
    std::pair<int, int> span(Nanoword const& n, int letter) {
      return {n.first(letter) + 1, n.second(letter) + 1};
    }

    std::vector<int> letters_by_first_occurrence(Nanoword const& n) {
      std::vector<int> out;
      for (std::size_t p = 0; p < n.length(); ++p) {
        if (n.is_first(p)) {
          out.push_back(n.at(p));
        }
      }
      return out;
    }

    Lambda gen(OrbitTablePtr const& t, Letter a) {
      return Lambda(PsiElement::generator(t, a));
    }
    Lambda bul(OrbitTablePtr const& t, Letter a) {
      return Lambda(PsiElement::bullet(t, a));
    }
    Lambda one_minus(OrbitTablePtr const& t, Letter a) {
      return Lambda::one(t) - gen(t, a) * bul(t, a);
    }
  }  // namespace

  bool is_tricoloring(Nanoword const& n, BetaSet const& beta, std::vector<int> const& f) {
    if (f.size() != n.length() + 1) {
      return false;
    }
    for (int x = 0; x < static_cast<int>(n.letter_count()); ++x) {
      auto [i, j] = span(n, x);
      if (beta.contains(n.proj(x))) {
        if (mod3(f[i] - f[i - 1]) != 0 || mod3(f[j - 1] + f[j] + f[i]) != 0) {
          return false;
        }
      } else if (mod3(f[j] - f[j - 1]) != 0 || mod3(f[i - 1] + f[i] + f[j]) != 0) {
        return false;
      }
    }
    return true;
  }

  TricolorCensus tricolor_census(Nanoword const& n, BetaSet const& beta) {
    TricolorCensus   census{};
    int const        len = static_cast<int>(n.length());
    std::vector<int> f(len + 1, 0);

    auto rec = [&](auto&& self, int p) -> void {
      if (p > len) {
        ++census[f[0]][f[len]];
        return;
      }
      int const x     = n.at(p - 1);
      auto [i, j]     = span(n, x);
      bool const in_b = beta.contains(n.proj(x));
      if (in_b) {
        f[p] = p == i ? f[p - 1] : mod3(-f[p - 1] - f[i]);
        self(self, p + 1);
      } else if (p == i) {
        for (int c = 0; c < 3; ++c) {
          f[p] = c;
          self(self, p + 1);
        }
      } else {
        f[p] = f[p - 1];
        if (mod3(f[i - 1] + f[i] + f[j]) == 0) {
          self(self, p + 1);
        }
      }
    };
    for (int k = 0; k < 3; ++k) {
      f[0] = k;
      rec(rec, 1);
    }
    return census;
  }

  std::string PresentationMatrix::to_string() const {
    std::string out;
    for (auto const& row : rows) {
      out += "[";
      for (std::size_t c = 0; c < row.size(); ++c) {
        out += (c == 0 ? " " : " | ") + row[c].to_string();
      }
      out += " ]\n";
    }
    return out;
  }

  PresentationMatrix presentation_matrix(Nanoword const& n, OrbitTablePtr const& table,
                                         BetaSet const& beta) {
    PresentationMatrix m;
    m.columns = n.length() + 1;
    for (int x : letters_by_first_occurrence(n)) {
      Letter const a = n.proj(x);
      auto [i, j]    = span(n, x);
      std::vector<Lambda> r1(m.columns, Lambda(table)), r2(m.columns, Lambda(table));
      if (beta.contains(a)) {
        r1[i - 1] += gen(table, a);
        r1[i] -= Lambda::one(table);
        r2[i - 1] += one_minus(table, a);
        r2[j - 1] += bul(table, a);
        r2[j] -= Lambda::one(table);
      } else {
        r1[j - 1] += gen(table, a);
        r1[j] -= Lambda::one(table);
        r2[i - 1] += bul(table, a);
        r2[i] -= Lambda::one(table);
        r2[j - 1] += one_minus(table, a);
      }
      m.rows.push_back(std::move(r1));
      m.rows.push_back(std::move(r2));
    }
    return m;
  }

  Lambda lambda_by_elimination(Nanoword const& n, OrbitTablePtr const& table) {
    int const           len = static_cast<int>(n.length());
    std::vector<Lambda> c(len + 1, Lambda(table));
    c[0] = Lambda::one(table);
    for (int p = 1; p <= len; ++p) {
      int const    x = n.at(p - 1);
      Letter const a = n.proj(x);
      auto [i, j]    = span(n, x);
      if (p == i) {
        c[p] = gen(table, a) * c[p - 1];
      } else {
        c[p] = bul(table, a) * c[p - 1] + one_minus(table, a) * c[i - 1];
      }
    }
    return c[len].iota();
  }

  PathSumGraph path_sum_graph(Nanoword const& n, OrbitTablePtr const& table) {
    PathSumGraph g;
    g.vertices = static_cast<int>(n.length()) + 1;
    for (int p = 1; p < g.vertices; ++p) {
      int const    x = n.at(p - 1);
      Letter const a = n.proj(x);
      bool const   f = n.is_first(p - 1);
      g.edges.push_back({p - 1, p, f ? gen(table, a) : bul(table, a), false});
      if (!f) {
        g.edges.push_back({n.first(x), p, one_minus(table, a), true});
      }
    }
    return g;
  }

  std::vector<LambdaPath> lambda_paths(Nanoword const& n, OrbitTablePtr const& table) {
    auto const                         g = path_sum_graph(n, table);
    std::vector<std::vector<PathEdge>> out(g.vertices);
    for (auto const& e : g.edges) {
      out[e.from].push_back(e);
    }
    std::vector<LambdaPath> paths;
    LambdaPath              cur{{0}, Lambda::one(table)};
    auto rec = [&](auto&& self, int v) -> void {
      if (v == g.vertices - 1) {
        paths.push_back(cur);
        return;
      }
      for (auto const& e : out[v]) {
        auto const saved = cur.product;
        cur.product      = cur.product * e.label;
        cur.vertices.push_back(e.to);
        self(self, e.to);
        cur.vertices.pop_back();
        cur.product = saved;
      }
    };
    rec(rec, 0);
    return paths;
  }

  Lambda lambda_by_paths(Nanoword const& n, OrbitTablePtr const& table) {
    Lambda sum(table);
    for (auto const& p : lambda_paths(n, table)) {
      sum += p.product;
    }
    if (!(sum == lambda_by_elimination(n, table))) {
      throw std::logic_error("path sum disagrees with elimination");
    }
    return sum;
  }

  GradedLambda grade(Lambda const& x) {
    GradedLambda g;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        g.part[i][j] = x.graded(i, j);
      }
    }
    return g;
  }

  GradedLambda lambda_graded(Nanoword const& n, OrbitTablePtr const& table) {
    return grade(lambda_by_elimination(n, table));
  }

}  // namespace nanoword
