#ifndef NANOWORD_TESTS_SUPPORT_HPP_
#define NANOWORD_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <iterator>
#include <random>
#include <string>
#include <vector>

#include "nanoword/homotopy.hpp"
#include "nanoword/pairing.hpp"
#include "nanoword/text.hpp"

namespace support {

  using namespace nanoword;

  /// Two free orbits {a,c}, {b,d} and one fixed letter e.
  inline AlphabetSpec three_orbits() {
    return make_alphabet({"a", "b", "c", "d", "e"}, {{"a", "c"}, {"b", "d"}}, {"e"}, Diagonal{});
  }

  inline Nanoword random_nanoword(std::mt19937& rng, int letters, int alpha_size) {
    std::vector<LetterDecl> decls;
    std::vector<int>        word;
    for (int k = 0; k < letters; ++k) {
      decls.push_back({"L" + std::to_string(k), static_cast<Letter>(rng() % alpha_size)});
      word.push_back(k);
      word.push_back(k);
    }
    std::shuffle(word.begin(), word.end(), rng);
    return Nanoword(decls, word);
  }

  /// Every nanoword on `letters` letters with every projection, up to isomorphism.
  inline std::vector<Nanoword> all_nanowords(int letters, int alpha_size) {
    std::vector<Nanoword> out;
    std::vector<int>      word;
    std::vector<int>      count(letters, 0);
    std::vector<Letter>   proj(letters, 0);
    // words with letters introduced in order of first occurrence
    auto emit = [&] {
      for (;;) {
        std::vector<LetterDecl> decls;
        for (int k = 0; k < letters; ++k) {
          decls.push_back({"L" + std::to_string(k), proj[k]});
        }
        out.emplace_back(decls, word);
        int k = 0;
        while (k < letters && ++proj[k] == alpha_size) {
          proj[k++] = 0;
        }
        if (k == letters) {
          return;
        }
      }
    };
    auto rec = [&](auto&& self, int opened) -> void {
      if (static_cast<int>(word.size()) == 2 * letters) {
        emit();
        return;
      }
      for (int x = 0; x <= opened && x < letters; ++x) {
        if (count[x] == 2 || (x == opened && count[x] != 0)) {
          continue;
        }
        ++count[x];
        word.push_back(x);
        self(self, x == opened ? opened + 1 : opened);
        word.pop_back();
        --count[x];
      }
    };
    rec(rec, 0);
    return out;
  }

  /// A random applicable move that keeps the word within `slack` extra letters.
  inline bool random_move(std::mt19937& rng, Nanoword const& n, AlphabetSpec const& alpha,
                          MoveInstance& out, std::size_t slack = 4) {
    auto moves = applicable_moves(n, alpha, n.length() + slack);
    if (moves.empty()) {
      return false;
    }
    // uniform over move kinds first, so shrinking and M3 moves are not swamped
    std::vector<MoveKind> kinds;
    for (auto const& m : moves) {
      if (std::find(kinds.begin(), kinds.end(), m.kind) == kinds.end()) {
        kinds.push_back(m.kind);
      }
    }
    MoveKind const        k = kinds[rng() % kinds.size()];
    std::vector<MoveInstance> pick;
    std::copy_if(moves.begin(), moves.end(), std::back_inserter(pick),
                 [k](auto const& m) { return m.kind == k; });
    out = pick[rng() % pick.size()];
    return true;
  }

  inline AbelianPi random_element(std::mt19937& rng, OrbitTablePtr const& t) {
    std::vector<long long> e(t->size());
    for (auto& x : e) {
      x = static_cast<long long>(rng() % 5) - 2;
    }
    return AbelianPi::from_exponents(t, e);
  }

  // appends an element with the given row (basepoint first, own entry excluded)
  inline void append(AlphaPairing& p, std::string name, Letter proj, std::vector<AbelianPi> row) {
    auto const one = AbelianPi(p.table);
    for (std::size_t i = 0; i < p.size(); ++i) {
      p.b[i].push_back(row[i].inverse());
    }
    row.push_back(one);
    p.b.push_back(std::move(row));
    p.names.push_back(std::move(name));
    p.proj.push_back(proj);
  }

  /// Random pairing with annihilating elements and twins mixed in, rows shuffled.
  inline AlphaPairing random_pairing(std::mt19937& rng, OrbitTablePtr const& t) {
    auto const& alpha = t->alphabet();
    auto        p     = AlphaPairing::trivial(t);
    auto        one   = AbelianPi(t);
    int         fresh = 0;
    auto        name  = [&] { return "X" + std::to_string(fresh++); };
    auto        proj  = [&] { return static_cast<Letter>(rng() % alpha.size()); };

    for (int k = static_cast<int>(rng() % 4); k > 0; --k) {
      std::vector<AbelianPi> row;
      for (std::size_t i = 0; i < p.size(); ++i) {
        row.push_back(random_element(rng, t));
      }
      append(p, name(), proj(), row);
    }
    for (int k = 1 + static_cast<int>(rng() % 4); k > 0; --k) {
      switch (rng() % 3) {
        case 0:
          append(p, name(), proj(), std::vector<AbelianPi>(p.size(), one));
          break;
        case 1: {
          std::vector<AbelianPi> row;
          for (std::size_t i = 0; i < p.size(); ++i) {
            row.push_back(random_element(rng, t));
          }
          Letter const x = proj();
          append(p, name(), x, row);
          row.push_back(one);
          append(p, name(), alpha.tau(x), row);
          break;
        }
        default: {
          if (p.size() < 2) {
            break;
          }
          // twin of an existing element
          int const              x = 1 + static_cast<int>(rng() % (p.size() - 1));
          std::vector<AbelianPi> row(p.b[x].begin(), p.b[x].end());
          append(p, name(), alpha.tau(p.proj[x]), row);
          break;
        }
      }
    }
    std::vector<int> order(p.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = static_cast<int>(i);
    }
    std::shuffle(order.begin() + 1, order.end(), rng);
    return p.permuted(order);
  }
}  // namespace support

#endif  // NANOWORD_TESTS_SUPPORT_HPP_
