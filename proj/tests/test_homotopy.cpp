#include <random>

#include "doctest.h"
#include "nanoword/homotopy.hpp"
#include "nanoword/text.hpp"

using namespace nanoword;

namespace {
  AlphabetSpec ab() {
    return parse_alphabet("letter a\nletter b\ntau a b\nS diagonal\n");
  }

  Nanoword random_nanoword(std::mt19937& rng, int letters, int alpha_size) {
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

  bool has_kind(std::vector<MoveInstance> const& ms, MoveKind k) {
    return std::any_of(ms.begin(), ms.end(), [k](auto const& m) { return m.kind == k; });
  }
}  // namespace

TEST_CASE("move enumeration") {
  auto alpha = ab();
  auto aa    = parse_nanoword("A:a :: A A", alpha);
  auto moves = applicable_moves(aa, alpha, 2);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].kind == MoveKind::M1);
  CHECK(apply_move(aa, moves[0], alpha).empty());

  auto abab = parse_nanoword("A:a B:b :: A B A B", alpha);
  auto ms   = applicable_moves(abab, alpha, 6);
  CHECK_FALSE(has_kind(ms, MoveKind::M2));
  CHECK(has_kind(ms, MoveKind::M1Inv));
  CHECK_FALSE(has_kind(ms, MoveKind::M2Inv));
  CHECK(has_kind(applicable_moves(abab, alpha, 8), MoveKind::M2Inv));
  CHECK(applicable_moves(abab, alpha, 4).empty());

  auto abba = parse_nanoword("A:a B:b :: A B B A", alpha);
  CHECK(has_kind(applicable_moves(abba, alpha, 4), MoveKind::M2));

  // xAByACzBCt with x = y = z = t = empty
  auto m3  = parse_nanoword("A:a B:a C:a :: A B A C B C", alpha);
  auto ms3 = applicable_moves(m3, alpha, 6);
  REQUIRE(has_kind(ms3, MoveKind::M3));
  auto it = std::find_if(ms3.begin(), ms3.end(), [](auto const& m) { return m.kind == MoveKind::M3; });
  auto after = apply_move(m3, *it, alpha);
  CHECK(is_isomorphic(after, parse_nanoword("A:a B:a C:a :: B A C A C B", alpha)));
  CHECK(format_move(*it, alpha) == "M3 @ (1,2,3,4,5,6)");

  // the same pattern with mixed projections is blocked by S
  auto blocked = parse_nanoword("A:a B:b C:a :: A B A C B C", alpha);
  CHECK_FALSE(has_kind(applicable_moves(blocked, alpha, 6), MoveKind::M3));

  CHECK_THROWS_AS(apply_move(abab, {MoveKind::M1, {0}, -1}, alpha), ContractError);
}

TEST_CASE("moves and their inverses") {
  auto         alpha = presets::two_free_orbits();
  std::mt19937 rng(3);
  int          checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    auto n = random_nanoword(rng, 1 + static_cast<int>(rng() % 4), 4);
    for (auto const& m : applicable_moves(n, alpha, n.length() + 4, {true})) {
      auto after = apply_move(n, m, alpha);
      auto back  = apply_move(after, invert_move(n, m, alpha), alpha);
      CHECK(is_isomorphic(back, n));
      ++checked;
    }
  }
  CHECK(checked > 1000);

  auto abab = parse_nanoword("A:a B:b :: A B A B", ab());
  for (int p = 0; p <= 4; ++p) {
    MoveInstance ins{MoveKind::M1Inv, {p}, 0};
    auto         grown = apply_move(abab, ins, ab());
    CHECK(is_isomorphic(apply_move(grown, {MoveKind::M1, {p}, -1}, ab()), abab));
  }
}

TEST_CASE("witness text round trip") {
  auto                      alpha = ab();
  std::vector<MoveInstance> w{{MoveKind::M1Inv, {2}, 1},
                              {MoveKind::M2Inv, {0, 5}, 0},
                              {MoveKind::M3Inv, {1, 4, 8}, -1},
                              {MoveKind::M2, {0, 3}, -1},
                              {MoveKind::Shift, {}, -1}};
  auto                      text = format_witness(w, alpha);
  CHECK(text.substr(0, text.find('\n')) == "M1inv @ (3,4) : b");
  CHECK(parse_witness(text, alpha) == w);
  CHECK_THROWS_AS(parse_move("M7 @ (1,2)", alpha), ParseError);
  CHECK_THROWS_AS(parse_move("M1 @ (1,3)", alpha), ParseError);
}

TEST_CASE("derived moves") {
  auto alpha = ab();
  auto abab  = parse_nanoword("A:a B:b :: A B A B", alpha);
  auto ds    = derived_moves(abab, alpha);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].kind == DerivedKind::Cancel);
  CHECK(ds[0].result.empty());
  CHECK(replay(abab, ds[0].expansion, alpha).empty());

  // same projection on both letters: no cancellation
  CHECK(derived_moves(parse_nanoword("A:a B:a :: A B A B", alpha), alpha).empty());

  // xAByCAzBCt with (|A|, tau|B|, |C|) in S
  auto swap = parse_nanoword("A:a B:b C:a :: A B C A B C", alpha);
  auto sd   = derived_moves(swap, alpha);
  auto it   = std::find_if(sd.begin(), sd.end(),
                           [](auto const& d) { return d.kind == DerivedKind::Swap1; });
  REQUIRE(it != sd.end());
  CHECK(is_isomorphic(it->result, parse_nanoword("A:a B:b C:a :: B A A C C B", alpha)));
  CHECK(is_isomorphic(replay(swap, it->expansion, alpha), it->result));

  // side condition fails when |B| = |A|
  auto no = derived_moves(parse_nanoword("A:a B:a C:a :: A B C A B C", alpha), alpha);
  CHECK(std::none_of(no.begin(), no.end(),
                     [](auto const& d) { return d.kind == DerivedKind::Swap1; }));

  // every emitted macro replays through base moves
  std::mt19937 rng(5);
  auto         big   = presets::two_free_orbits();
  int          fired = 0;
  for (int trial = 0; trial < 400; ++trial) {
    auto n = random_nanoword(rng, 3 + static_cast<int>(rng() % 3), 2);
    for (auto const& d : derived_moves(n, alpha)) {
      CHECK(is_isomorphic(replay(n, d.expansion, alpha), d.result));
      ++fired;
    }
    auto m = random_nanoword(rng, 3 + static_cast<int>(rng() % 3), 4);
    for (auto const& d : derived_moves(m, big)) {
      CHECK(is_isomorphic(replay(m, d.expansion, big), d.result));
      ++fired;
    }
  }
  CHECK(fired > 100);
}

TEST_CASE("bounded search") {
  auto          alpha = ab();
  SearchOptions opts;
  opts.max_len = 8;

  auto empty = is_contractible_bounded(Nanoword{}, alpha, opts);
  CHECK(empty.verdict == Verdict::Equivalent);
  CHECK(empty.witness.empty());

  auto aabb = parse_nanoword("A:a B:b :: A A B B", alpha);
  auto r1   = is_contractible_bounded(aabb, alpha, opts);
  REQUIRE(r1.verdict == Verdict::Equivalent);
  CHECK(r1.witness.size() == 2);

  auto abab = parse_nanoword("A:a B:b :: A B A B", alpha);
  opts.max_len = 14;
  for (bool derived : {true, false}) {
    opts.derived = derived;
    auto r       = is_contractible_bounded(abab, alpha, opts);
    REQUIRE(r.verdict == Verdict::Equivalent);
    CHECK(replay(abab, r.witness, alpha).empty());
  }

  // non-contractible: the search stays inconclusive
  opts.derived    = true;
  opts.max_len    = 8;
  opts.max_states = 20000;
  auto aa_ab      = parse_nanoword("A:a B:a :: A B A B", alpha);
  auto r2         = is_contractible_bounded(aa_ab, alpha, opts);
  CHECK(r2.verdict == Verdict::Unknown);
  CHECK(r2.witness.empty());

  CHECK_THROWS_AS(is_contractible_bounded(abab, alpha, {2, 100, false, true}), ContractError);

  // aabab desingularized against AA'AA'
  auto w1 = desingularize(parse_plain_word("aabab", alpha));
  auto w4 = parse_nanoword("A:a A':a :: A A' A A'", alpha);
  opts.max_len    = 14;
  opts.max_states = 200000;
  auto r3         = equivalent_bounded(w1, w4, alpha, opts);
  REQUIRE(r3.verdict == Verdict::Equivalent);
  CHECK(is_isomorphic(replay(w1, r3.witness, alpha), w4));
}

TEST_CASE("enumerated moves respect the length bound") {
  std::mt19937 rng(9);
  auto         alpha = presets::two_free_orbits();
  for (int trial = 0; trial < 50; ++trial) {
    auto              n   = random_nanoword(rng, 1 + static_cast<int>(rng() % 4), 4);
    std::size_t const cap = n.length() + 2 * (rng() % 3);
    for (auto const& m : applicable_moves(n, alpha, cap)) {
      CHECK(apply_move(n, m, alpha).length() <= cap);
    }
  }
}
