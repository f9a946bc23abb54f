// Derived moves expanded into base moves.
//
// Each swap is first written as a forward expansion on its left-hand
// pattern. The right-to-left direction is obtained by rewriting the three
// pairs into the left-hand pattern, expanding forward, and inverting the
// resulting base moves in reverse order.

#include <stdexcept>

#include "raw.hpp"

namespace nanoword {

  std::string_view derived_kind_name(DerivedKind k) {
    switch (k) {
      case DerivedKind::Swap1:
        return "swap1";
      case DerivedKind::Swap1Reverse:
        return "swap1-reverse";
      case DerivedKind::Swap2:
        return "swap2";
      case DerivedKind::Swap2Reverse:
        return "swap2-reverse";
      case DerivedKind::Swap3:
        return "swap3";
      case DerivedKind::Swap3Reverse:
        return "swap3-reverse";
      case DerivedKind::Cancel:
        return "cancel";
    }
    return "?";
  }

  namespace detail {
    namespace {
      // roles: 0 = A, 1 = B, 2 = C
      constexpr Template kSwapSource[3] = {
          {{{0, 1}, {2, 0}, {1, 2}}},  // xAByCAzBCt
          {{{0, 1}, {2, 0}, {2, 1}}},  // xAByCAzCBt
          {{{0, 1}, {0, 2}, {2, 1}}},  // xAByACzCBt
      };
      constexpr Template kSwapTarget[3] = {
          {{{1, 0}, {0, 2}, {2, 1}}},  // xBAyACzCBt
          {{{1, 0}, {0, 2}, {1, 2}}},  // xBAyACzBCt
          {{{1, 0}, {2, 0}, {1, 2}}},  // xBAyCAzBCt
      };

      struct Work {
        Raw                       r;
        std::vector<MoveInstance> moves;
        AlphabetSpec const&       alpha;

        void step(MoveInstance m) {
          auto next = apply_raw(r, m, alpha);
          if (!next) {
            throw std::logic_error("derived move expansion failed");
          }
          r = std::move(*next);
          moves.push_back(std::move(m));
        }
        Letter proj(int pos) const {
          return r.proj[r.w[pos]];
        }
      };

      bool swap_condition(int variant, AlphabetSpec const& alpha, Letter a, Letter b, Letter c) {
        switch (variant) {
          case 0:
            return alpha.contains(a, alpha.tau(b), c);
          case 1:
            return alpha.contains(alpha.tau(a), alpha.tau(b), c);
          default:
            return alpha.contains(a, alpha.tau(b), alpha.tau(c));
        }
      }

      void swap_forward(Work& w, int variant, int i, int j, int k);
      void swap_reverse(Work& w, int variant, int i, int j, int k);

      void swap_forward(Work& w, int variant, int i, int j, int k) {
        auto const& tau = [&](Letter x) { return w.alpha.tau(x); };
        switch (variant) {
          case 0: {
            // xAByCAzBCt -> xPQAByCAzBCQPt -> xPAQByACzBQCPt -> xPAyACzCPt
            Letter const b = w.proj(i + 1);
            w.step({MoveKind::M2Inv, {i, k + 4}, b});
            w.step({MoveKind::M3Inv, {i + 1, j + 2, k + 3}, -1});
            w.step({MoveKind::M2, {i + 2, k + 2}, -1});
            return;
          }
          case 1: {
            // xAByCAzCBt -> xABQPyPQCAzCBt, swap back on (Q,B,C), then drop A Q .. Q A
            Letter const a = w.proj(i);
            w.step({MoveKind::M2Inv, {i + 2, j + 2}, tau(a)});
            swap_reverse(w, 0, i + 1, j + 3, k + 4);
            w.step({MoveKind::M2, {i, j + 4}, -1});
            return;
          }
          default: {
            // xAByACzCBt -> xAByVDACzCBDVt, swap on (A,B,D), then drop D C .. C D
            Letter const c = w.proj(j + 1);
            w.step({MoveKind::M2Inv, {j, k + 4}, c});
            swap_forward(w, 0, i, j + 1, k + 3);
            w.step({MoveKind::M2, {j + 2, k + 2}, -1});
            return;
          }
        }
      }

      void swap_reverse(Work& w, int variant, int i, int j, int k) {
        auto role = check_template(w.r, kSwapTarget[variant], i, j, k);
        if (!role) {
          throw std::logic_error("reverse swap pattern mismatch");
        }
        Raw                src = w.r;
        Template const&    t   = kSwapSource[variant];
        int const          at[3] = {i, j, k};
        for (int s = 0; s < 3; ++s) {
          src.w[at[s]]     = (*role)[t[s][0]];
          src.w[at[s] + 1] = (*role)[t[s][1]];
        }
        Work fwd{src, {}, w.alpha};
        swap_forward(fwd, variant, i, j, k);
        if (canonical(fwd.r) != canonical(w.r)) {
          throw std::logic_error("reverse swap does not close up");
        }
        std::vector<Raw> states{src};
        for (auto const& m : fwd.moves) {
          states.push_back(*apply_raw(states.back(), m, w.alpha));
        }
        for (std::size_t s = fwd.moves.size(); s-- > 0;) {
          w.step(invert_raw(states[s], fwd.moves[s], w.alpha));
        }
      }

      void cancel(Work& w, int p, int q, Letter e) {
        // xAByABz -> xAEEByABz -> xEABEyBAz -> xEEyz -> xyz
        w.step({MoveKind::M1Inv, {p + 1}, w.alpha.tau(e)});
        swap_reverse(w, 1, p, p + 2, q + 2);
        w.step({MoveKind::M2, {p + 1, q + 2}, -1});
        w.step({MoveKind::M1, {p}, -1});
      }
    }  // namespace

    std::vector<DerivedRaw> derived_raw(Raw const& r, AlphabetSpec const& alpha) {
      std::vector<DerivedRaw> out;
      Occurrences const       occ(r);

      for (int variant = 0; variant < 3; ++variant) {
        for (int dir = 0; dir < 2; ++dir) {
          Template const& t = dir == 0 ? kSwapSource[variant] : kSwapTarget[variant];
          for (auto const& mt : match_template(r, occ, t)) {
            auto const& L = mt.letters;
            if (!swap_condition(variant, alpha, r.proj[L[0]], r.proj[L[1]], r.proj[L[2]])) {
              continue;
            }
            Work w{r, {}, alpha};
            if (dir == 0) {
              swap_forward(w, variant, mt.i, mt.j, mt.k);
            } else {
              swap_reverse(w, variant, mt.i, mt.j, mt.k);
            }
            auto kind = static_cast<DerivedKind>(2 * variant + dir);
            out.push_back({kind, {mt.i, mt.j, mt.k}, std::move(w.moves), std::move(w.r)});
          }
        }
      }

      int const n = static_cast<int>(r.w.size());
      for (int p = 0; p + 1 < n; ++p) {
        int const a = r.w[p], b = r.w[p + 1];
        if (a == b || occ.first[a] != p || occ.first[b] != p + 1) {
          continue;
        }
        int const q = occ.second[a];
        if (q < p + 2 || q + 1 >= n || r.w[q + 1] != b
            || r.proj[a] != alpha.tau(r.proj[b])) {
          continue;
        }
        Letter const pb = r.proj[b];
        for (Letter e = 0; e < static_cast<Letter>(alpha.size()); ++e) {
          if (alpha.contains(e, pb, pb)) {
            Work w{r, {}, alpha};
            cancel(w, p, q, e);
            out.push_back({DerivedKind::Cancel, {p, q}, std::move(w.moves), std::move(w.r)});
            break;
          }
        }
      }
      return out;
    }

  }  // namespace detail
}  // namespace nanoword
