#include "doctest.h"
#include "nanoword/kei.hpp"
#include "support.hpp"

using namespace nanoword;

namespace {
  using Syl = FreeKeiElement::Syllable;

  CharacteristicSequence seq(OrbitTablePtr const& t,
                             std::vector<std::pair<int, char const*>> const& terms) {
    CharacteristicSequence out;
    for (auto const& [sign, text] : terms) {
      out.push_back({parse_psi(text, t), sign});
    }
    return out;
  }

  FreeKeiElement random_element(std::mt19937& rng, OrbitTablePtr const& t, int len) {
    char const*      pool[] = {"1", "a", "b.", "a a.", "c b", "d. a", "a^2 b."};
    std::vector<Syl> s;
    for (int k = 0; k < len; ++k) {
      s.push_back({parse_psi(pool[rng() % 7], t), rng() % 2 ? 1 : -1});
    }
    return FreeKeiElement::from_sequence(s);
  }

  bool is_unit_sequence(CharacteristicSequence const& s, OrbitTablePtr const& t) {
    return s.size() == 1 && s[0].sign == 1 && s[0].psi == PsiElement::identity(t);
  }
}  // namespace

TEST_CASE("free group reduction") {
  auto t   = make_orbit_table(presets::two_free_orbits());
  auto a   = parse_psi("a", t);
  auto one = PsiElement::identity(t);
  auto e   = FreeKeiElement::from_sequence({{a, 1}, {one, 1}, {one, -1}, {a, -1}, {one, 1}});
  CHECK(e.length() == 1);
  CHECK(e.to_string() == "(1)");
  CHECK((e * e.inverse()).is_unit());
  CHECK(FreeKeiElement().to_string() == "()");
  CHECK_THROWS_AS(FreeKeiElement::from_sequence({{a, 2}}), ContractError);
  CHECK(e.relabel(a) == FreeKeiElement::generator(a));
}

TEST_CASE("characteristic sequence of ABAB") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  auto w     = parse_nanoword("A:a B:b :: A B A B", alpha);
  auto s     = characteristic_sequence(w, t);
  CHECK(s == seq(t, {{1, "a"}, {1, "b."}, {1, "b. a. b a"}, {-1, "b. a. a"}, {-1, "b. b a"}}));
  CHECK(format_sequence(s) == "(a, b., b. a. b a, -b. a a., -b b. a)");

  // a = b
  auto ww = parse_nanoword("A:a B:a :: A B A B", alpha);
  CHECK(characteristic_sequence(ww, t)
        == seq(t, {{1, "a"}, {1, "a."}, {1, "a^2 a.^2"}, {-1, "a a.^2"}, {-1, "a^2 a."}}));

  auto pr = kei_presentation(w, alpha, BetaSet::all(alpha));
  CHECK(pr.generators == 5);
  CHECK(pr.relations
        == std::vector<std::string>{"X1 = a X0", "X3 = X2 *_a X0", "X2 = b X1", "X4 = X3 *_b X1"});
}

TEST_CASE("characteristic sequence of ABACBC") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  auto w1    = parse_nanoword("A:a B:c C:a :: A B A C B C", alpha);
  auto s     = characteristic_sequence(w1, t);
  CHECK(s
        == seq(t, {{1, "1"},
                   {1, "a."},
                   {-1, "a a."},
                   {-1, "1"},
                   {1, "a"},
                   {1, "a a."},
                   {-1, "a^2 a."},
                   {1, "a a."},
                   {1, "a^2 a.^2"},
                   {-1, "a a.^2"},
                   {-1, "a a."}}));
  auto w2 = parse_nanoword("A:a C:a :: A C A C", alpha);
  CHECK(s != characteristic_sequence(w2, t));
  // lambda does not separate them
  CHECK(lambda_by_elimination(w1, t) == lambda_by_elimination(w2, t));
}

TEST_CASE("ABCDCDAB has the sequence of the empty word") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  auto w     = parse_nanoword("A:a B:b C:d D:c :: A B C D C D A B", alpha);
  CHECK(is_unit_sequence(characteristic_sequence(w, t), t));
  CHECK(is_unit_sequence(characteristic_sequence(Nanoword{}, t), t));
  CHECK(format_sequence(characteristic_sequence(w, t)) == "(1)");
}

TEST_CASE("fixed letters are refused") {
  auto alpha = presets::two_fixed();
  auto t     = make_orbit_table(alpha);
  CHECK_THROWS_AS(characteristic_sequence(parse_nanoword("A:a :: A A", alpha), t), ContractError);
  CHECK_THROWS_AS(free_kei(t), ContractError);
}

TEST_CASE("kei axioms") {
  auto         alpha = presets::two_free_orbits();
  std::mt19937 rng(61);
  for (auto plus : {std::vector<Letter>{0, 1}, std::vector<Letter>{2, 1}, std::vector<Letter>{2, 3}}) {
    auto                        t = make_orbit_table(alpha, plus);
    std::vector<FreeKeiElement> xs{FreeKeiElement(),
                                   FreeKeiElement::generator(PsiElement::identity(t))};
    for (int k = 0; k < 4; ++k) {
      xs.push_back(random_element(rng, t, 1 + static_cast<int>(rng() % 3)));
    }
    CHECK_FALSE(check_kei_axioms(alpha, free_kei(t), xs).has_value());
  }

  auto t = make_orbit_table(alpha);
  auto k = free_kei(t);
  k.star = [t](Letter a, FreeKeiElement const& x, FreeKeiElement const& y) {
    return free_kei_star(t, a, x, y) * FreeKeiElement::generator(PsiElement::identity(t));
  };
  std::vector<FreeKeiElement> xs{FreeKeiElement::generator(PsiElement::identity(t))};
  auto bad = check_kei_axioms(alpha, k, xs);
  REQUIRE(bad.has_value());
  CHECK(bad->axiom == 1);

  // abelian kei over Lambda^r
  auto        ab     = abelian_kei(t);
  char const* pool[] = {"0", "1", "a - b.", "2 a a.", "c d. + 1", "-b a."};
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    std::vector<LambdaVector> vs;
    for (int k2 = 0; k2 < 5; ++k2) {
      LambdaVector v;
      for (std::size_t i = 0; i < rank; ++i) {
        v.push_back(parse_lambda(pool[rng() % 6], t));
      }
      vs.push_back(v);
    }
    CHECK_FALSE(check_kei_axioms(alpha, ab, vs).has_value());
  }
}

TEST_CASE("free reduction does not depend on the cancellation order") {
  auto         t = make_orbit_table(presets::two_free_orbits());
  std::mt19937 rng(63);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Syl> s;
    for (int k = static_cast<int>(rng() % 10); k > 0; --k) {
      char const* pool[] = {"1", "a", "b."};
      s.push_back({parse_psi(pool[rng() % 3], t), rng() % 2 ? 1 : -1});
    }
    auto const reduced = FreeKeiElement::from_sequence(s);
    // cancel adjacent inverse pairs in a random order until none is left
    auto w = s;
    for (;;) {
      std::vector<std::size_t> spots;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i].psi == w[i + 1].psi && w[i].sign == -w[i + 1].sign) {
          spots.push_back(i);
        }
      }
      if (spots.empty()) {
        break;
      }
      auto const i = spots[rng() % spots.size()];
      w.erase(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i) + 2);
    }
    CHECK(w == reduced.syllables());
    // and products reduce the same way as concatenation
    auto const half = s.size() / 2;
    auto const x    = FreeKeiElement::from_sequence({s.begin(), s.begin() + static_cast<long>(half)});
    auto const y    = FreeKeiElement::from_sequence({s.begin() + static_cast<long>(half), s.end()});
    CHECK(x * y == reduced);
  }
}

TEST_CASE("signed sum is iota of lambda") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  int  count = 0;
  for (int k = 0; k <= 3; ++k) {
    for (auto const& n : support::all_nanowords(k, 4)) {
      CHECK(signed_sum(characteristic_sequence(n, t), t) == lambda_by_elimination(n, t).iota());
      ++count;
    }
  }
  CHECK(count == 1013);
  // the two differ as soon as two orbits interleave
  auto w = parse_nanoword("A:a B:b :: A B A B", alpha);
  CHECK(signed_sum(characteristic_sequence(w, t), t) != lambda_by_elimination(w, t));
}

TEST_CASE("invariance under moves") {
  auto         alpha = presets::two_free_orbits();
  std::mt19937 rng(67);
  for (auto plus : {std::vector<Letter>{0, 1}, std::vector<Letter>{2, 1}}) {
    auto t     = make_orbit_table(alpha, plus);
    int  moved = 0;
    while (moved < 250) {
      auto         n = support::random_nanoword(rng, 1 + static_cast<int>(rng() % 5), 4);
      MoveInstance m;
      if (!support::random_move(rng, n, alpha, m)) {
        continue;
      }
      CHECK(characteristic_sequence(apply_move(n, m, alpha), t) == characteristic_sequence(n, t));
      ++moved;
    }
  }
}

TEST_CASE("contractible words have the unit sequence") {
  auto          alpha = presets::two_free_orbits();
  auto          t     = make_orbit_table(alpha);
  std::mt19937  rng(71);
  SearchOptions opts;
  opts.max_states = 5000;
  int proven      = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto n       = support::random_nanoword(rng, 1 + static_cast<int>(rng() % 3), 4);
    opts.max_len = n.length() + 4;
    if (is_contractible_bounded(n, alpha, opts).verdict == Verdict::Equivalent) {
      CHECK(is_unit_sequence(characteristic_sequence(n, t), t));
      ++proven;
    }
  }
  CHECK(proven > 20);
}

TEST_CASE("presentation outside beta") {
  auto alpha = presets::two_free_orbits();
  auto w     = parse_nanoword("A:a B:b :: A B A B", alpha);
  auto pr    = kei_presentation(w, alpha, BetaSet(alpha, {alpha.index("b"), alpha.index("d")}));
  CHECK(pr.relations
        == std::vector<std::string>{"X1 = X0 *_a X2", "X3 = a X2", "X2 = b X1", "X4 = X3 *_b X1"});
  CHECK(pr.to_string().rfind("generators: X0..X4\n", 0) == 0);
}
