#include "nanoword/pairing.hpp"

#include <algorithm>
#include <stdexcept>

namespace nanoword {

  AlphaPairing AlphaPairing::trivial(OrbitTablePtr table) {
    AlphaPairing p;
    p.table = table;
    p.names = {"s"};
    p.proj  = {-1};
    p.b     = {{AbelianPi(table)}};
    return p;
  }

  int AlphaPairing::index(std::string_view name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) {
      throw ContractError("no element named '" + std::string(name) + "'");
    }
    return static_cast<int>(it - names.begin());
  }

  AlphaPairing AlphaPairing::without(std::vector<int> drop) const {
    std::vector<int> keep;
    for (int i = 0; i < static_cast<int>(size()); ++i) {
      if (std::find(drop.begin(), drop.end(), i) == drop.end()) {
        keep.push_back(i);
      } else if (i == 0) {
        throw ContractError("the basepoint cannot be deleted");
      }
    }
    return permuted(keep);
  }

  AlphaPairing AlphaPairing::permuted(std::vector<int> const& order) const {
    AlphaPairing r;
    r.table = table;
    for (int i : order) {
      r.names.push_back(names.at(i));
      r.proj.push_back(proj.at(i));
      std::vector<AbelianPi> row;
      for (int j : order) {
        row.push_back(b.at(i).at(j));
      }
      r.b.push_back(std::move(row));
    }
    return r;
  }

  bool AlphaPairing::is_skew_symmetric() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (!b[i][i].is_identity()) {
        return false;
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (b[i][j] != b[j][i].inverse()) {
          return false;
        }
      }
    }
    return true;
  }

  std::string AlphaPairing::to_string() const {
    auto const& alpha = table->alphabet();
    std::string out   = "S:";
    for (auto const& x : names) {
      out += " " + x;
    }
    out += "\n";
    for (std::size_t i = 1; i < size(); ++i) {
      out += "|" + names[i] + "| = " + alpha.name(proj[i]) + "\n";
    }
    for (std::size_t i = 0; i < size(); ++i) {
      out += names[i] + ":";
      for (std::size_t j = 0; j < size(); ++j) {
        out += (j == 0 ? " " : " | ") + b[i][j].to_string();
      }
      out += "\n";
    }
    return out;
  }

  namespace {
    void check_letter(Nanoword const& n, int x) {
      if (x < 0 || x >= static_cast<int>(n.letter_count())) {
        throw ContractError("unknown letter");
      }
    }
  }  // namespace

  AbelianPi circ(Nanoword const& n, int d, int e, OrbitTablePtr const& table) {
    check_letter(n, d);
    check_letter(n, e);
    AbelianPi r(table);
    for (int f = 0; f < static_cast<int>(n.letter_count()); ++f) {
      if (n.first(d) < n.first(f) && n.first(f) < n.second(d) && n.first(e) < n.second(f)
          && n.second(f) < n.second(e)) {
        r *= AbelianPi::generator(table, n.proj(f));
      }
    }
    return r;
  }

  AbelianPi linking(Nanoword const& n, int d, int e, OrbitTablePtr const& table) {
    return circ(n, d, e, table) * circ(n, e, d, table).inverse();
  }

  std::vector<std::vector<AbelianPi>> linking_matrix(Nanoword const& n,
                                                     OrbitTablePtr const& table) {
    int const k = static_cast<int>(n.letter_count());
    std::vector<std::vector<AbelianPi>> m(k, std::vector<AbelianPi>(k, AbelianPi(table)));
    for (int d = 0; d < k; ++d) {
      for (int e = 0; e < k; ++e) {
        m[d][e] = linking(n, d, e, table);
      }
    }
    return m;
  }

  AlphaPairing build_pairing(Nanoword const& n, OrbitTablePtr const& table) {
    require_diagonal(table->alphabet(), "the alpha-pairing");
    int const    k   = static_cast<int>(n.letter_count());
    auto const   nw  = interlacement(n);
    auto const   lk  = linking_matrix(n, table);
    AlphaPairing p   = AlphaPairing::trivial(table);
    auto const   one = AbelianPi(table);
    p.b.assign(k + 1, std::vector<AbelianPi>(k + 1, one));
    for (int a = 0; a < k; ++a) {
      p.names.push_back(n.name(a));
      p.proj.push_back(n.proj(a));
      auto const cls  = letter_class(n, a, table);
      p.b[a + 1][0] = cls;
      p.b[0][a + 1] = cls.inverse();
      for (int c = 0; c < k; ++c) {
        long long const e = nw(a, c);
        p.b[a + 1][c + 1] = lk[a][c].pow(2) * AbelianPi::generator(table, n.proj(a)).pow(e)
                            * AbelianPi::generator(table, n.proj(c)).pow(e);
      }
    }
    return p;
  }

  std::vector<int> find_annihilating(AlphaPairing const& p) {
    std::vector<int> out;
    for (int i = 1; i < static_cast<int>(p.size()); ++i) {
      if (std::all_of(p.b[i].begin(), p.b[i].end(), [](auto const& x) { return x.is_identity(); })) {
        out.push_back(i);
      }
    }
    return out;
  }

  std::vector<std::pair<int, int>> find_twins(AlphaPairing const& p) {
    std::vector<std::pair<int, int>> out;
    auto const&                      alpha = p.table->alphabet();
    for (int i = 1; i < static_cast<int>(p.size()); ++i) {
      for (int j = i + 1; j < static_cast<int>(p.size()); ++j) {
        if (p.proj[i] == alpha.tau(p.proj[j]) && p.b[i] == p.b[j]) {
          out.emplace_back(i, j);
        }
      }
    }
    return out;
  }

  bool is_primitive(AlphaPairing const& p) {
    return find_annihilating(p).empty() && find_twins(p).empty();
  }

  namespace {
    struct Deletion {
      ReductionStep::Kind kind;
      std::vector<int>    drop;
    };

    std::vector<Deletion> deletions(AlphaPairing const& p) {
      std::vector<Deletion> out;
      for (int i : find_annihilating(p)) {
        out.push_back({ReductionStep::Kind::Annihilate, {i}});
      }
      for (auto [i, j] : find_twins(p)) {
        out.push_back({ReductionStep::Kind::Twins, {i, j}});
      }
      return out;
    }
  }  // namespace

  AlphaPairing reduce_primitive(AlphaPairing p, ReductionChooser const& choose,
                                std::vector<ReductionStep>* trace) {
    for (;;) {
      auto const options = deletions(p);
      if (options.empty()) {
        return p;
      }
      auto const& d = options.at(choose(options.size()));
      if (trace) {
        ReductionStep step{d.kind, {}};
        for (int i : d.drop) {
          step.removed.push_back(p.names[i]);
        }
        trace->push_back(std::move(step));
      }
      p = p.without(d.drop);
    }
  }

  AlphaPairing reduce_primitive(AlphaPairing p, std::vector<ReductionStep>* trace) {
    // annihilators are listed before twins
    return reduce_primitive(std::move(p), [](std::size_t) { return std::size_t{0}; }, trace);
  }

  namespace {
    struct Signature {
      Letter                 proj;
      AbelianPi              to_base;
      std::vector<AbelianPi> row;

      auto operator<=>(Signature const&) const = default;
      bool operator==(Signature const&) const  = default;
    };

    std::vector<Signature> signatures(AlphaPairing const& p) {
      std::vector<Signature> out;
      for (std::size_t i = 0; i < p.size(); ++i) {
        Signature s{p.proj[i], p.b[i][0], p.b[i]};
        std::sort(s.row.begin(), s.row.end());
        out.push_back(std::move(s));
      }
      return out;
    }

    struct Matcher {
      AlphaPairing const&           p;
      AlphaPairing const&           q;
      std::vector<Signature> const& sp;
      std::vector<Signature> const& sq;
      std::vector<int>              to;
      std::vector<char>             used;

      bool extend(std::size_t i) {
        if (i == p.size()) {
          return true;
        }
        for (std::size_t j = 1; j < q.size(); ++j) {
          if (used[j] || !(sp[i] == sq[j])) {
            continue;
          }
          bool ok = true;
          for (std::size_t k = 0; k < i && ok; ++k) {
            ok = p.b[i][k] == q.b[j][to[k]];
          }
          if (!ok) {
            continue;
          }
          to[i]   = static_cast<int>(j);
          used[j] = 1;
          if (extend(i + 1)) {
            return true;
          }
          used[j] = 0;
        }
        return false;
      }
    };
  }  // namespace

  bool pairing_isomorphic(AlphaPairing const& p, AlphaPairing const& q) {
    if (p.size() != q.size()) {
      return false;
    }
    auto const sp = signatures(p);
    auto const sq = signatures(q);
    if (!(sp[0] == sq[0])) {
      return false;
    }
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      return false;
    }
    Matcher m{p, q, sp, sq, std::vector<int>(p.size(), 0), std::vector<char>(q.size(), 0)};
    m.used[0] = 1;
    return m.extend(1);
  }

  std::size_t norm_lower_bound(Nanoword const& n, OrbitTablePtr const& table) {
    return reduce_primitive(build_pairing(n, table)).size() - 1;
  }

  void check_equivariant(AlphabetSpec const& alpha, CurveMap const& f) {
    if (f.size() != alpha.size()) {
      throw ContractError("the map to {a, b} must cover every letter");
    }
    for (Letter x = 0; x < static_cast<Letter>(alpha.size()); ++x) {
      if ((f[x] != 0 && f[x] != 1) || f[alpha.tau(x)] != 1 - f[x]) {
        throw ContractError("the map to {a, b} is not equivariant at '" + alpha.name(x) + "'");
      }
    }
  }

  IntMatrix genus_matrix(Nanoword const& n, OrbitTablePtr const& table, CurveMap const& f) {
    check_equivariant(table->alphabet(), f);
    auto const p = build_pairing(n, table);
    auto const k = static_cast<Eigen::Index>(p.size());
    IntMatrix  m(k, k);
    for (Eigen::Index i = 0; i < k; ++i) {
      for (Eigen::Index j = 0; j < k; ++j) {
        auto const& e   = p.b[i][j].exponents();
        long long   sum = 0;
        for (std::size_t o = 0; o < e.size(); ++o) {
          sum += e[o] * (f[table->orbit(static_cast<int>(o)).rep] == 0 ? 1 : -1);
        }
        m(i, j) = sum;
      }
    }
    return m;
  }

  long long integer_rank(IntMatrix m) {
    using Wide        = __int128;
    auto const rows   = m.rows();
    auto const cols   = m.cols();
    std::vector<std::vector<Wide>> a(rows, std::vector<Wide>(cols));
    for (Eigen::Index r = 0; r < rows; ++r) {
      for (Eigen::Index c = 0; c < cols; ++c) {
        a[r][c] = m(r, c);
      }
    }
    auto mul = [](Wide x, Wide y) {
      Wide z;
      if (__builtin_mul_overflow(x, y, &z)) {
        throw std::overflow_error("integer rank overflow");
      }
      return z;
    };
    auto sub = [](Wide x, Wide y) {
      Wide z;
      if (__builtin_sub_overflow(x, y, &z)) {
        throw std::overflow_error("integer rank overflow");
      }
      return z;
    };
    long long rank = 0;
    Wide      prev = 1;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
      Eigen::Index piv = rank;
      while (piv < rows && a[piv][c] == 0) {
        ++piv;
      }
      if (piv == rows) {
        continue;
      }
      std::swap(a[piv], a[rank]);
      for (Eigen::Index r = rank + 1; r < rows; ++r) {
        for (Eigen::Index c2 = c + 1; c2 < cols; ++c2) {
          a[r][c2] = sub(mul(a[rank][c], a[r][c2]), mul(a[r][c], a[rank][c2])) / prev;
        }
        a[r][c] = 0;
      }
      prev = a[rank][c];
      ++rank;
    }
    return rank;
  }

  long long genus_lower_bound(Nanoword const& n, OrbitTablePtr const& table, CurveMap const& f) {
    return integer_rank(genus_matrix(n, table, f)) / 2;
  }

}  // namespace nanoword
