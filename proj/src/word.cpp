#include "nanoword/word.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace nanoword {

  namespace {
    int find_letter(std::vector<LetterDecl> const& letters, std::string_view name) {
      for (std::size_t k = 0; k < letters.size(); ++k) {
        if (letters[k].name == name) {
          return static_cast<int>(k);
        }
      }
      throw ContractError("unknown letter '" + std::string(name) + "'");
    }

    void check_names(std::vector<LetterDecl> const& letters) {
      std::unordered_set<std::string> seen;
      for (auto const& l : letters) {
        if (l.name.empty()) {
          throw ContractError("letter with empty name");
        }
        if (!seen.insert(l.name).second) {
          throw ContractError("duplicate letter '" + l.name + "'");
        }
      }
    }
  }  // namespace

  EtaleWord::EtaleWord(std::vector<LetterDecl> letters, std::vector<int> word)
      : letters_(std::move(letters)), word_(std::move(word)) {
    check_names(letters_);
    for (int x : word_) {
      if (x < 0 || x >= static_cast<int>(letters_.size())) {
        throw ContractError("word refers to an undeclared letter");
      }
    }
  }

  int EtaleWord::multiplicity(int letter) const {
    return static_cast<int>(std::count(word_.begin(), word_.end(), letter));
  }

  int EtaleWord::letter_index(std::string_view name) const {
    return find_letter(letters_, name);
  }

  Nanoword::Nanoword(std::vector<LetterDecl> letters, std::vector<int> word)
      : letters_(std::move(letters)), word_(std::move(word)) {
    check_names(letters_);
    auto const n = letters_.size();
    if (word_.size() != 2 * n) {
      throw ContractError("Gauss condition violated: word length "
                          + std::to_string(word_.size()) + " for " + std::to_string(n)
                          + " letters");
    }
    first_.assign(n, -1);
    second_.assign(n, -1);
    for (std::size_t i = 0; i < word_.size(); ++i) {
      int const x = word_[i];
      if (x < 0 || x >= static_cast<int>(n)) {
        throw ContractError("word refers to an undeclared letter");
      }
      if (first_[x] < 0) {
        first_[x] = static_cast<int>(i);
      } else if (second_[x] < 0) {
        second_[x] = static_cast<int>(i);
      } else {
        throw ContractError("Gauss condition violated: letter '" + letters_[x].name
                            + "' occurs more than twice");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (second_[x] < 0) {
        throw ContractError("Gauss condition violated: letter '" + letters_[x].name
                            + "' does not occur twice");
      }
    }
  }

  Nanoword::Nanoword(EtaleWord const& w) : Nanoword(w.letters(), w.word()) {}

  int Nanoword::letter_index(std::string_view name) const {
    return find_letter(letters_, name);
  }

  std::string CanonicalNanoword::key() const {
    std::string k;
    k.reserve(2 * word.size() + proj.size() + 2);
    k.push_back(static_cast<char>(word.size() & 0xff));
    k.push_back(static_cast<char>((word.size() >> 8) & 0xff));
    for (int r : word) {
      k.push_back(static_cast<char>(r & 0xff));
      k.push_back(static_cast<char>((r >> 8) & 0xff));
    }
    for (Letter p : proj) {
      k.push_back(static_cast<char>(p));
    }
    return k;
  }

  Nanoword CanonicalNanoword::to_nanoword() const {
    std::vector<LetterDecl> letters;
    letters.reserve(proj.size());
    for (std::size_t r = 0; r < proj.size(); ++r) {
      letters.push_back({"A" + std::to_string(r + 1), proj[r]});
    }
    return Nanoword(std::move(letters), word);
  }

  EtaleWord opposite(EtaleWord const& w) {
    std::vector<int> rev(w.word().rbegin(), w.word().rend());
    return EtaleWord(w.letters(), std::move(rev));
  }

  Nanoword opposite(Nanoword const& n) {
    return Nanoword(opposite(n.as_etale()));
  }

  EtaleWord product(EtaleWord const& w1, EtaleWord const& w2) {
    std::vector<LetterDecl> letters = w1.letters();
    std::set<std::string>   used;
    for (auto const& l : w1.letters()) {
      used.insert(l.name);
    }
    for (auto const& l : w2.letters()) {
      used.insert(l.name);
    }
    std::set<std::string> taken;
    for (auto const& l : w1.letters()) {
      taken.insert(l.name);
    }
    auto const offset = static_cast<int>(letters.size());
    for (auto const& l : w2.letters()) {
      std::string name = l.name;
      if (taken.count(name) != 0) {
        for (int k = 2;; ++k) {
          name = l.name + std::to_string(k);
          if (used.count(name) == 0) {
            break;
          }
        }
        used.insert(name);
      }
      taken.insert(name);
      letters.push_back({name, l.proj});
    }
    std::vector<int> word = w1.word();
    for (int x : w2.word()) {
      word.push_back(x + offset);
    }
    return EtaleWord(std::move(letters), std::move(word));
  }

  Nanoword product(Nanoword const& n1, Nanoword const& n2) {
    return Nanoword(product(n1.as_etale(), n2.as_etale()));
  }

  Nanoword desingularize(EtaleWord const& w) {
    auto const& src = w.letters();
    // index of A_{i,j} for each base letter, i < j, 1-based
    std::vector<std::vector<std::vector<int>>> ids(src.size());
    std::vector<LetterDecl>                     letters;
    for (std::size_t x = 0; x < src.size(); ++x) {
      int const m = w.multiplicity(static_cast<int>(x));
      if (m < 2) {
        continue;
      }
      ids[x].assign(m + 1, std::vector<int>(m + 1, -1));
      for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
          ids[x][i][j] = static_cast<int>(letters.size());
          letters.push_back(
              {src[x].name + "_" + std::to_string(i) + "_" + std::to_string(j), src[x].proj});
        }
      }
    }
    std::vector<int> seen(src.size(), 0);
    std::vector<int> word;
    for (int x : w.word()) {
      int const i = ++seen[x];
      if (ids[x].empty()) {
        continue;
      }
      int const m = static_cast<int>(ids[x].size()) - 1;
      // A_{1,i} ... A_{i-1,i} A_{i,i+1} ... A_{i,m}
      for (int k = 1; k < i; ++k) {
        word.push_back(ids[x][k][i]);
      }
      for (int k = i + 1; k <= m; ++k) {
        word.push_back(ids[x][i][k]);
      }
    }
    return Nanoword(std::move(letters), std::move(word));
  }

  CanonicalNanoword canonical_form(Nanoword const& n) {
    CanonicalNanoword c;
    std::vector<int>  rank(n.letter_count(), -1);
    c.word.reserve(n.length());
    c.proj.reserve(n.letter_count());
    for (int x : n.word()) {
      if (rank[x] < 0) {
        rank[x] = static_cast<int>(c.proj.size());
        c.proj.push_back(n.proj(x));
      }
      c.word.push_back(rank[x]);
    }
    return c;
  }

  bool is_isomorphic(Nanoword const& n1, Nanoword const& n2) {
    return canonical_form(n1) == canonical_form(n2);
  }

  EtaleWord plain_word(AlphabetSpec const& alpha, std::vector<Letter> const& letters) {
    std::vector<LetterDecl> decls;
    std::vector<int>        index(alpha.size(), -1);
    std::vector<int>        word;
    for (Letter a : letters) {
      if (a < 0 || a >= static_cast<Letter>(alpha.size())) {
        throw ContractError("letter outside the alphabet");
      }
      if (index[a] < 0) {
        index[a] = static_cast<int>(decls.size());
        decls.push_back({alpha.name(a), a});
      }
      word.push_back(index[a]);
    }
    return EtaleWord(std::move(decls), std::move(word));
  }

  std::string fresh_name(Nanoword const& n, std::string_view stem) {
    std::unordered_set<std::string> used;
    for (auto const& l : n.letters()) {
      used.insert(l.name);
    }
    for (std::size_t k = n.letter_count() + 1;; ++k) {
      std::string name = std::string(stem) + std::to_string(k);
      if (used.count(name) == 0) {
        return name;
      }
    }
  }

}  // namespace nanoword
