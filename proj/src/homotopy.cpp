#include "nanoword/homotopy.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "nanoword/text.hpp"
#include "raw.hpp"

namespace nanoword {

  namespace detail {

    Raw to_raw(Nanoword const& n) {
      Raw r;
      r.w = n.word();
      for (auto const& l : n.letters()) {
        r.proj.push_back(l.proj);
      }
      return r;
    }

    Raw to_raw(CanonicalNanoword const& c) {
      return Raw{c.word, c.proj};
    }

    CanonicalNanoword canonical(Raw const& r) {
      CanonicalNanoword c;
      std::vector<int>  rank(r.proj.size(), -1);
      c.word.reserve(r.w.size());
      c.proj.reserve(r.w.size() / 2);
      for (int x : r.w) {
        if (rank[x] < 0) {
          rank[x] = static_cast<int>(c.proj.size());
          c.proj.push_back(r.proj[x]);
        }
        c.word.push_back(rank[x]);
      }
      return c;
    }

    Nanoword to_nanoword(Raw const& r, Nanoword const& base) {
      std::vector<int> index(r.proj.size(), -1);
      for (int x : r.w) {
        index[x] = 0;
      }
      std::vector<LetterDecl>         letters;
      std::unordered_map<std::string, int> used;
      for (int x = 0; x < static_cast<int>(r.proj.size()); ++x) {
        if (index[x] < 0) {
          continue;
        }
        index[x] = static_cast<int>(letters.size());
        std::string name;
        if (x < static_cast<int>(base.letter_count())) {
          name = base.name(x);
        }
        letters.push_back({name, r.proj[x]});
        if (!name.empty()) {
          used.emplace(name, 0);
        }
      }
      int k = 1;
      for (auto& l : letters) {
        if (l.name.empty()) {
          do {
            l.name = "X" + std::to_string(k++);
          } while (used.count(l.name) != 0);
          used.emplace(l.name, 0);
        }
      }
      std::vector<int> word;
      word.reserve(r.w.size());
      for (int x : r.w) {
        word.push_back(index[x]);
      }
      return Nanoword(std::move(letters), std::move(word));
    }

    std::optional<std::array<int, 3>> check_template(Raw const& r, Template const& t, int i,
                                                     int j, int k) {
      int const n = static_cast<int>(r.w.size());
      if (i < 0 || j < i + 2 || k < j + 2 || k + 1 >= n) {
        return std::nullopt;
      }
      std::array<int, 3> role{-1, -1, -1};
      int const          at[3] = {i, j, k};
      for (int s = 0; s < 3; ++s) {
        for (int h = 0; h < 2; ++h) {
          int const x = r.w[at[s] + h];
          int&      slot = role[t[s][h]];
          if (slot < 0) {
            slot = x;
          } else if (slot != x) {
            return std::nullopt;
          }
        }
      }
      if (role[0] == role[1] || role[0] == role[2] || role[1] == role[2]) {
        return std::nullopt;
      }
      return role;
    }

    std::vector<TripleMatch> match_template(Raw const& r, Occurrences const& occ,
                                            Template const& t) {
      std::vector<TripleMatch> out;
      int const                n = static_cast<int>(r.w.size());
      // pair 2 shares exactly one role with pair 1
      int const shared = (t[1][0] == t[0][0] || t[1][0] == t[0][1]) ? 0 : 1;
      for (int i = 0; i + 5 < n; ++i) {
        int const x = r.w[i], y = r.w[i + 1];
        if (x == y) {
          continue;
        }
        int const known     = t[1][shared] == t[0][0] ? x : y;
        int const known_pos = t[1][shared] == t[0][0] ? i : i + 1;
        int const j         = occ.other(known, known_pos) - shared;
        if (j < i + 2) {
          continue;
        }
        // pair 3 starts with a role already placed; its other occurrence fixes k
        int const  lead = t[2][0];
        int        lead_pos;
        if (lead == t[0][0]) {
          lead_pos = i;
        } else if (lead == t[0][1]) {
          lead_pos = i + 1;
        } else {
          lead_pos = t[1][0] == lead ? j : j + 1;
        }
        if (lead_pos >= n) {
          continue;
        }
        int const k = occ.other(r.w[lead_pos], lead_pos);
        if (auto role = check_template(r, t, i, j, k)) {
          out.push_back({i, j, k, *role});
        }
      }
      return out;
    }

    std::optional<Raw> apply_raw(Raw const& r, MoveInstance const& m, AlphabetSpec const& alpha) {
      int const n = static_cast<int>(r.w.size());
      auto const& a = m.anchors;
      auto arity  = [&](std::size_t k) { return a.size() == k; };
      switch (m.kind) {
        case MoveKind::M1: {
          if (!arity(1) || a[0] < 0 || a[0] + 1 >= n || r.w[a[0]] != r.w[a[0] + 1]) {
            return std::nullopt;
          }
          Raw out = r;
          out.w.erase(out.w.begin() + a[0], out.w.begin() + a[0] + 2);
          return out;
        }
        case MoveKind::M1Inv: {
          if (!arity(1) || a[0] < 0 || a[0] > n || m.proj < 0
              || m.proj >= static_cast<Letter>(alpha.size())) {
            return std::nullopt;
          }
          Raw       out = r;
          int const x   = out.fresh(m.proj);
          out.w.insert(out.w.begin() + a[0], {x, x});
          return out;
        }
        case MoveKind::M2: {
          if (!arity(2)) {
            return std::nullopt;
          }
          int const p = a[0], q = a[1];
          if (p < 0 || q < p + 2 || q + 1 >= n) {
            return std::nullopt;
          }
          int const x = r.w[p], y = r.w[p + 1];
          if (x == y || r.w[q] != y || r.w[q + 1] != x || r.proj[x] != alpha.tau(r.proj[y])) {
            return std::nullopt;
          }
          Raw out = r;
          out.w.erase(out.w.begin() + q, out.w.begin() + q + 2);
          out.w.erase(out.w.begin() + p, out.w.begin() + p + 2);
          return out;
        }
        case MoveKind::M2Inv: {
          if (!arity(2) || m.proj < 0 || m.proj >= static_cast<Letter>(alpha.size())) {
            return std::nullopt;
          }
          int const p = a[0], q = a[1];
          if (p < 0 || q < p + 2 || q > n + 2) {
            return std::nullopt;
          }
          Raw       out = r;
          int const x   = out.fresh(m.proj);
          int const y   = out.fresh(alpha.tau(m.proj));
          std::vector<int> w;
          w.reserve(n + 4);
          w.insert(w.end(), r.w.begin(), r.w.begin() + p);
          w.push_back(x);
          w.push_back(y);
          w.insert(w.end(), r.w.begin() + p, r.w.begin() + (q - 2));
          w.push_back(y);
          w.push_back(x);
          w.insert(w.end(), r.w.begin() + (q - 2), r.w.end());
          out.w = std::move(w);
          return out;
        }
        case MoveKind::M3:
        case MoveKind::M3Inv: {
          if (!arity(3)) {
            return std::nullopt;
          }
          bool const fwd  = m.kind == MoveKind::M3;
          auto       role = check_template(r, fwd ? kM3Source : kM3Target, a[0], a[1], a[2]);
          if (!role
              || !alpha.contains(r.proj[(*role)[0]], r.proj[(*role)[1]], r.proj[(*role)[2]])) {
            return std::nullopt;
          }
          auto const& to = fwd ? kM3Target : kM3Source;
          Raw         out = r;
          for (int s = 0; s < 3; ++s) {
            out.w[a[s]]     = (*role)[to[s][0]];
            out.w[a[s] + 1] = (*role)[to[s][1]];
          }
          return out;
        }
        case MoveKind::Shift:
        case MoveKind::ShiftInv: {
          if (!arity(0) || n == 0) {
            return std::nullopt;
          }
          Raw out = r;
          if (m.kind == MoveKind::Shift) {
            std::rotate(out.w.rbegin(), out.w.rbegin() + 1, out.w.rend());
          } else {
            std::rotate(out.w.begin(), out.w.begin() + 1, out.w.end());
          }
          return out;
        }
      }
      return std::nullopt;
    }

    MoveInstance invert_raw(Raw const& before, MoveInstance const& m, AlphabetSpec const&) {
      switch (m.kind) {
        case MoveKind::M1:
          return {MoveKind::M1Inv, m.anchors, before.proj[before.w[m.anchors[0]]]};
        case MoveKind::M1Inv:
          return {MoveKind::M1, m.anchors, -1};
        case MoveKind::M2:
          return {MoveKind::M2Inv, m.anchors, before.proj[before.w[m.anchors[0]]]};
        case MoveKind::M2Inv:
          return {MoveKind::M2, m.anchors, -1};
        case MoveKind::M3:
          return {MoveKind::M3Inv, m.anchors, -1};
        case MoveKind::M3Inv:
          return {MoveKind::M3, m.anchors, -1};
        case MoveKind::Shift:
          return {MoveKind::ShiftInv, {}, -1};
        case MoveKind::ShiftInv:
          return {MoveKind::Shift, {}, -1};
      }
      throw std::logic_error("unknown move kind");
    }

    struct Edge {
      std::vector<MoveInstance> moves;
      Raw                       result;
    };

    std::vector<Edge> base_edges(Raw const& r, AlphabetSpec const& alpha, std::size_t max_len,
                                 bool shift) {
      std::vector<Edge> out;
      int const         n = static_cast<int>(r.w.size());
      Occurrences const occ(r);
      auto              emit = [&](MoveInstance m) {
        if (auto res = apply_raw(r, m, alpha)) {
          out.push_back({{std::move(m)}, std::move(*res)});
        }
      };
      for (int p = 0; p + 1 < n; ++p) {
        if (r.w[p] == r.w[p + 1]) {
          emit({MoveKind::M1, {p}, -1});
        }
      }
      for (int p = 0; p + 1 < n; ++p) {
        int const x = r.w[p], y = r.w[p + 1];
        if (x != y && occ.first[x] == p && occ.first[y] == p + 1) {
          int const q = occ.second[y];
          if (q + 1 < n && r.w[q + 1] == x && r.proj[x] == alpha.tau(r.proj[y])) {
            emit({MoveKind::M2, {p, q}, -1});
          }
        }
      }
      for (auto const& mt : match_template(r, occ, kM3Source)) {
        emit({MoveKind::M3, {mt.i, mt.j, mt.k}, -1});
      }
      for (auto const& mt : match_template(r, occ, kM3Target)) {
        emit({MoveKind::M3Inv, {mt.i, mt.j, mt.k}, -1});
      }
      auto const letters = static_cast<Letter>(alpha.size());
      if (static_cast<std::size_t>(n) + 2 <= max_len) {
        for (int p = 0; p <= n; ++p) {
          for (Letter a = 0; a < letters; ++a) {
            emit({MoveKind::M1Inv, {p}, a});
          }
        }
      }
      if (static_cast<std::size_t>(n) + 4 <= max_len) {
        for (int p = 0; p <= n; ++p) {
          for (int q = p + 2; q <= n + 2; ++q) {
            for (Letter a = 0; a < letters; ++a) {
              emit({MoveKind::M2Inv, {p, q}, a});
            }
          }
        }
      }
      if (shift && n > 0) {
        emit({MoveKind::Shift, {}, -1});
        emit({MoveKind::ShiftInv, {}, -1});
      }
      return out;
    }

  }  // namespace detail

  using detail::Raw;

  // --- text form

  namespace {
    std::string_view kind_name(MoveKind k) {
      switch (k) {
        case MoveKind::M1:
          return "M1";
        case MoveKind::M2:
          return "M2";
        case MoveKind::M3:
          return "M3";
        case MoveKind::M1Inv:
          return "M1inv";
        case MoveKind::M2Inv:
          return "M2inv";
        case MoveKind::M3Inv:
          return "M3inv";
        case MoveKind::Shift:
          return "SHIFT";
        case MoveKind::ShiftInv:
          return "SHIFTinv";
      }
      return "?";
    }
  }  // namespace

  std::string format_move(MoveInstance const& m, AlphabetSpec const& alpha) {
    std::ostringstream out;
    out << kind_name(m.kind) << " @ (";
    bool first = true;
    for (int a : m.anchors) {
      for (int p : {a + 1, a + 2}) {
        out << (first ? "" : ",") << p;
        first = false;
      }
    }
    out << ')';
    if (m.proj >= 0) {
      out << " : " << alpha.name(m.proj);
    }
    return out.str();
  }

  MoveInstance parse_move(std::string_view text, AlphabetSpec const& alpha) {
    auto fail = [&](std::size_t col, std::string const& what) -> MoveInstance {
      throw ParseError(what, 1, static_cast<int>(col) + 1);
    };
    auto at = text.find('@');
    if (at == std::string_view::npos) {
      return fail(0, "expected '<kind> @ (...)'");
    }
    std::string kind(text.substr(0, at));
    kind.erase(std::remove_if(kind.begin(), kind.end(),
                              [](unsigned char c) { return std::isspace(c); }),
               kind.end());
    MoveInstance m{MoveKind::M1, {}, -1};
    static constexpr MoveKind kinds[] = {MoveKind::M1,    MoveKind::M2,    MoveKind::M3,
                                         MoveKind::M1Inv, MoveKind::M2Inv, MoveKind::M3Inv,
                                         MoveKind::Shift, MoveKind::ShiftInv};
    auto it = std::find_if(std::begin(kinds), std::end(kinds),
                           [&](MoveKind k) { return kind_name(k) == kind; });
    if (it == std::end(kinds)) {
      return fail(0, "unknown move '" + kind + "'");
    }
    m.kind     = *it;
    auto open  = text.find('(', at);
    auto close = text.find(')', at);
    if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
      return fail(at, "expected a parenthesized position list");
    }
    std::vector<int> pos;
    std::string      body(text.substr(open + 1, close - open - 1));
    std::stringstream ss(body);
    for (std::string item; std::getline(ss, item, ',');) {
      try {
        pos.push_back(std::stoi(item) - 1);
      } catch (std::exception const&) {
        return fail(open + 1, "bad position '" + item + "'");
      }
    }
    if (pos.size() % 2 != 0) {
      return fail(open, "positions come in adjacent pairs");
    }
    for (std::size_t k = 0; k < pos.size(); k += 2) {
      if (pos[k + 1] != pos[k] + 1) {
        return fail(open, "positions come in adjacent pairs");
      }
      m.anchors.push_back(pos[k]);
    }
    auto rest  = text.substr(close + 1);
    auto colon = rest.find(':');
    if (colon != std::string_view::npos) {
      std::string name(rest.substr(colon + 1));
      name.erase(std::remove_if(name.begin(), name.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 name.end());
      auto p = alpha.find(name);
      if (!p) {
        return fail(close + 1 + colon, "unknown letter '" + name + "'");
      }
      m.proj = *p;
    }
    return m;
  }

  std::string format_witness(std::vector<MoveInstance> const& moves, AlphabetSpec const& alpha) {
    std::string out;
    for (auto const& m : moves) {
      out += format_move(m, alpha) + "\n";
    }
    return out;
  }

  std::vector<MoveInstance> parse_witness(std::string_view text, AlphabetSpec const& alpha) {
    std::vector<MoveInstance> out;
    int                       line = 0;
    std::size_t               pos  = 0;
    while (pos < text.size()) {
      ++line;
      auto eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      auto l = text.substr(pos, eol - pos);
      if (l.find_first_not_of(" \t\r") != std::string_view::npos) {
        try {
          out.push_back(parse_move(l, alpha));
        } catch (ParseError const& e) {
          throw ParseError(e.what(), line, e.column());
        }
      }
      pos = eol + 1;
    }
    return out;
  }

  // --- moves on nanowords

  Nanoword apply_move(Nanoword const& n, MoveInstance const& m, AlphabetSpec const& alpha) {
    auto r = detail::apply_raw(detail::to_raw(n), m, alpha);
    if (!r) {
      throw ContractError("move " + format_move(m, alpha) + " does not apply");
    }
    return detail::to_nanoword(*r, n);
  }

  Nanoword replay(Nanoword const& n, std::vector<MoveInstance> const& moves,
                  AlphabetSpec const& alpha) {
    Nanoword cur = n;
    for (auto const& m : moves) {
      cur = apply_move(cur, m, alpha);
    }
    return cur;
  }

  MoveInstance invert_move(Nanoword const& before, MoveInstance const& m,
                           AlphabetSpec const& alpha) {
    return detail::invert_raw(detail::to_raw(before), m, alpha);
  }

  std::vector<MoveInstance> applicable_moves(Nanoword const& n, AlphabetSpec const& alpha,
                                             std::size_t max_len, MoveOptions opts) {
    std::vector<MoveInstance> out;
    for (auto& e : detail::base_edges(detail::to_raw(n), alpha, max_len, opts.shift)) {
      out.push_back(e.moves.front());
    }
    return out;
  }

  std::vector<DerivedMove> derived_moves(Nanoword const& n, AlphabetSpec const& alpha) {
    std::vector<DerivedMove> out;
    for (auto& d : detail::derived_raw(detail::to_raw(n), alpha)) {
      out.push_back({d.kind, d.anchors, d.expansion, detail::to_nanoword(d.result, n)});
    }
    return out;
  }

  // --- search

  namespace {
    struct Node {
      CanonicalNanoword         form;
      std::string               parent;  // empty at the root
      std::vector<MoveInstance> moves;   // parent -> this
    };

    using Tree = std::unordered_map<std::string, Node>;

    /// Moves leading from the root of `tree` to `key`.
    std::vector<MoveInstance> path_from_root(Tree const& tree, std::string key) {
      std::vector<std::vector<MoveInstance> const*> hops;
      for (auto it = tree.find(key); !it->second.moves.empty(); it = tree.find(it->second.parent)) {
        hops.push_back(&it->second.moves);
      }
      std::vector<MoveInstance> out;
      for (auto h = hops.rbegin(); h != hops.rend(); ++h) {
        out.insert(out.end(), (*h)->begin(), (*h)->end());
      }
      return out;
    }

    /// Moves leading from `key` back to the root of `tree`.
    std::vector<MoveInstance> path_to_root(Tree const& tree, std::string key,
                                           AlphabetSpec const& alpha) {
      std::vector<MoveInstance> out;
      for (auto it = tree.find(key); !it->second.moves.empty(); it = tree.find(it->second.parent)) {
        auto const&      parent = tree.at(it->second.parent);
        std::vector<Raw> states{detail::to_raw(parent.form)};
        for (auto const& m : it->second.moves) {
          auto next = detail::apply_raw(states.back(), m, alpha);
          if (!next) {
            throw std::logic_error("stored search edge does not replay");
          }
          states.push_back(std::move(*next));
        }
        for (std::size_t s = it->second.moves.size(); s-- > 0;) {
          out.push_back(detail::invert_raw(states[s], it->second.moves[s], alpha));
        }
      }
      return out;
    }
  }  // namespace

  SearchOutcome equivalent_bounded(Nanoword const& from, Nanoword const& to,
                                   AlphabetSpec const& alpha, SearchOptions const& opts) {
    if (opts.max_len < std::max(from.length(), to.length())) {
      throw ContractError("max_len " + std::to_string(opts.max_len)
                          + " is shorter than an input word");
    }
    SearchOutcome out;
    out.stats.max_len    = opts.max_len;
    out.stats.max_states = opts.max_states;

    auto const src = canonical_form(from);
    auto const dst = canonical_form(to);
    Tree       fwd, bwd;
    fwd.emplace(src.key(), Node{src, {}, {}});
    bwd.emplace(dst.key(), Node{dst, {}, {}});
    out.stats.states = fwd.size() + bwd.size();

    auto finish = [&](std::string const& meet) {
      out.verdict = Verdict::Equivalent;
      out.witness = path_from_root(fwd, meet);
      auto tail   = path_to_root(bwd, meet, alpha);
      out.witness.insert(out.witness.end(), tail.begin(), tail.end());
      if (!is_isomorphic(replay(from, out.witness, alpha), to)) {
        throw std::logic_error("search produced a witness that does not replay");
      }
      return out;
    };

    if (src.key() == dst.key()) {
      return finish(src.key());
    }

    std::vector<std::string> ffront{src.key()}, bfront{dst.key()};
    while (!ffront.empty() && !bfront.empty()) {
      bool const forward = ffront.size() <= bfront.size();
      auto&      front   = forward ? ffront : bfront;
      Tree&      mine    = forward ? fwd : bwd;
      Tree&      other   = forward ? bwd : fwd;
      out.stats.frontier_peak = std::max(out.stats.frontier_peak, front.size());

      std::vector<std::string> next;
      for (auto const& key : front) {
        Raw const here = detail::to_raw(mine.at(key).form);
        auto      edges = detail::base_edges(here, alpha, opts.max_len, opts.shift);
        if (opts.derived) {
          for (auto& d : detail::derived_raw(here, alpha)) {
            edges.push_back({std::move(d.expansion), std::move(d.result)});
          }
        }
        for (auto& e : edges) {
          auto form = detail::canonical(e.result);
          auto k    = form.key();
          if (mine.count(k) != 0) {
            continue;
          }
          mine.emplace(k, Node{std::move(form), key, std::move(e.moves)});
          out.stats.states = fwd.size() + bwd.size();
          if (other.count(k) != 0) {
            return finish(k);
          }
          next.push_back(std::move(k));
          if (out.stats.states >= opts.max_states) {
            out.stats.bound_exhausted = true;
            return out;
          }
        }
      }
      front = std::move(next);
    }
    return out;
  }

  SearchOutcome is_contractible_bounded(Nanoword const& n, AlphabetSpec const& alpha,
                                        SearchOptions const& opts) {
    return equivalent_bounded(n, Nanoword{}, alpha, opts);
  }

}  // namespace nanoword
