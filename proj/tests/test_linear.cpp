#include "doctest.h"
#include "nanoword/linear.hpp"
#include "support.hpp"

using namespace nanoword;

namespace {
  struct Ring {
    OrbitTablePtr t;

    Lambda g(char const* name) const {
      return Lambda(PsiElement::generator(t, t->alphabet().index(name)));
    }
    Lambda b(char const* name) const {
      return Lambda(PsiElement::bullet(t, t->alphabet().index(name)));
    }
    Lambda one() const {
      return Lambda::one(t);
    }
  };

  bool identity_pattern(TricolorCensus const& c) {
    for (int k = 0; k < 3; ++k) {
      for (int l = 0; l < 3; ++l) {
        if (c[k][l] != (k == l ? 1 : 0)) {
          return false;
        }
      }
    }
    return true;
  }
}  // namespace

TEST_CASE("beta sets") {
  auto alpha = presets::two_free_orbits();
  CHECK(BetaSet(alpha, {0, 2}).letters() == std::vector<Letter>{0, 2});
  CHECK_THROWS_AS(BetaSet(alpha, {0}), ContractError);
  CHECK(BetaSet::all(alpha).letters().size() == 4);
}

TEST_CASE("tricolorings") {
  auto alpha = presets::two_free_orbits();
  auto all   = BetaSet::all(alpha);
  CHECK(identity_pattern(tricolor_census(Nanoword{}, all)));

  auto w    = parse_nanoword("P:a Q:a B:b R:a :: P Q B R P B Q R", alpha);
  auto beta = BetaSet(alpha, {alpha.index("a"), alpha.index("c")});
  CHECK(is_tricoloring(w, beta, {0, 0, 0, 1, 1, 2, 2, 1, 1}));
  CHECK_FALSE(is_tricoloring(w, beta, {0, 0, 0, 1, 1, 2, 2, 1, 2}));
  auto census = tricolor_census(w, beta);
  CHECK(census[0][1] >= 1);

  // census against brute force over all dash colourings
  std::mt19937 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    auto           n = support::random_nanoword(rng, 1 + static_cast<int>(rng() % 4), 4);
    BetaSet        b = rng() % 2 ? all : beta;
    TricolorCensus brute{};
    std::vector<int> f(n.length() + 1, 0);
    for (;;) {
      if (is_tricoloring(n, b, f)) {
        ++brute[f.front()][f.back()];
      }
      std::size_t k = 0;
      while (k < f.size() && ++f[k] == 3) {
        f[k++] = 0;
      }
      if (k == f.size()) {
        break;
      }
    }
    auto c = tricolor_census(n, b);
    CHECK(c == brute);
    for (int k = 0; k < 3; ++k) {
      CHECK(c[k][k] >= 1);
    }
  }
}

TEST_CASE("presentation matrix") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  Ring r{t};
  auto zero = Lambda(t);
  auto m    = presentation_matrix(parse_nanoword("A:a B:b :: A B A B", alpha), t, BetaSet::all(alpha));
  REQUIRE(m.row_count() == 4);
  CHECK(m.column_count() == 5);
  CHECK(m.rows[0] == std::vector<Lambda>{r.g("a"), -r.one(), zero, zero, zero});
  // A sits at positions 1 and 3: second row spans dashes 0, 2 and 3
  CHECK(m.rows[1]
        == std::vector<Lambda>{r.one() - r.g("a") * r.b("a"), zero, r.b("a"), -r.one(), zero});
  CHECK(m.rows[3]
        == std::vector<Lambda>{zero, r.one() - r.g("b") * r.b("b"), zero, r.b("b"), -r.one()});
  for (auto const& row : m.rows) {
    CHECK(std::count_if(row.begin(), row.end(), [](auto const& x) { return !x.is_zero(); }) <= 3);
  }

  auto e = presentation_matrix(Nanoword{}, t, BetaSet::all(alpha));
  CHECK(e.row_count() == 0);
  CHECK(e.column_count() == 1);

  auto aa = presentation_matrix(parse_nanoword("A:a :: A A", alpha), t, BetaSet::all(alpha));
  REQUIRE(aa.row_count() == 2);
  CHECK(aa.rows[0] == std::vector<Lambda>{r.g("a"), -r.one(), zero});
  CHECK(aa.rows[1] == std::vector<Lambda>{r.one() - r.g("a") * r.b("a"), r.b("a"), -r.one()});

  // a letter outside beta swaps the roles of its two occurrences
  auto sw = presentation_matrix(parse_nanoword("A:a B:b :: A B A B", alpha), t,
                                BetaSet(alpha, {alpha.index("b"), alpha.index("d")}));
  CHECK(sw.rows[0] == std::vector<Lambda>{zero, zero, r.g("a"), -r.one(), zero});
  CHECK(sw.rows[1]
        == std::vector<Lambda>{r.b("a"), -r.one(), r.one() - r.g("a") * r.b("a"), zero, zero});
  CHECK(sw.to_string().substr(0, sw.to_string().find('\n')) == "[ 0 | 0 | a | -1 | 0 ]");
}

TEST_CASE("lambda of ABAB") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  Ring r{t};
  auto w = parse_nanoword("A:a B:b :: A B A B", alpha);
  auto a = r.g("a"), ab = r.b("a"), b = r.g("b"), bb = r.b("b");
  auto expect = a * b * ab * bb + a * (r.one() - b * bb) + (r.one() - a * ab) * bb;
  CHECK(lambda_by_elimination(w, t) == expect);
  CHECK(lambda_by_paths(w, t) == expect);

  auto paths = lambda_paths(w, t);
  REQUIRE(paths.size() == 3);
  std::map<std::vector<int>, Lambda> by_route;
  for (auto const& p : paths) {
    by_route.emplace(p.vertices, p.product);
  }
  CHECK(by_route.at({0, 1, 2, 3, 4}) == a * b * ab * bb);
  CHECK(by_route.at({0, 1, 4}) == a * (r.one() - b * bb));
  CHECK(by_route.at({0, 3, 4}) == (r.one() - a * ab) * bb);

  auto g = lambda_graded(w, t);
  CHECK(g.part[0][0] == a * b * ab * bb);
  CHECK(g.part[0][1] == bb - a * b * bb);
  CHECK(g.part[1][0] == a - a * ab * bb);
  CHECK(g.part[1][1].is_zero());
  CHECK(g.part[0][1] == parse_lambda("-a b b. + b.", t));
}

TEST_CASE("lambda of small words") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  CHECK(lambda_by_elimination(Nanoword{}, t) == Lambda::one(t));
  CHECK(lambda_paths(Nanoword{}, t).size() == 1);
  auto ge = lambda_graded(Nanoword{}, t);
  CHECK(ge.part[0][0] == Lambda::one(t));
  CHECK(ge.part[0][1].is_zero());
  CHECK(ge.part[1][0].is_zero());
  CHECK(ge.part[1][1].is_zero());
  // c1 = a, c2 = a. a + (1 - a a.)
  CHECK(lambda_by_elimination(parse_nanoword("A:a :: A A", alpha), t) == Lambda::one(t));

  auto w1 = parse_nanoword("A:a B:c C:a :: A B A C B C", alpha);
  auto w2 = parse_nanoword("A:a C:a :: A C A C", alpha);
  CHECK(lambda_by_elimination(w1, t) == lambda_by_elimination(w2, t));
}

TEST_CASE("lambda of ababa") {
  auto free = presets::two_free_orbits();
  auto t    = make_orbit_table(free);
  Ring r{t};
  auto a = r.g("a"), ab = r.b("a"), b = r.g("b"), bb = r.b("b"), one = r.one();
  auto w = desingularize(parse_plain_word("ababa", free));

  std::vector<Lambda> expect = {
      (one - a * ab) * (one - a * ab),
      (one - a * ab) * a * bb * ab * ab,
      a * (one - a * ab) * ab,
      a * a * (one - b * bb) * ab * ab,
      a * a * b * ab * (one - a * ab),
      a * a * b * a * ab * bb * ab * ab,
  };
  auto paths = lambda_paths(w, t);
  REQUIRE(paths.size() == 6);
  for (auto const& x : expect) {
    CHECK(std::count_if(paths.begin(), paths.end(), [&](auto const& p) { return p.product == x; })
          == 1);
  }

  auto fixed = presets::two_fixed();
  auto tf    = make_orbit_table(fixed);
  auto wf    = desingularize(parse_plain_word("ababa", fixed));
  CHECK(lambda_graded(wf, tf).part[0][0] == parse_lambda("2 - b a - a. b. + b a a. b.", tf));
  CHECK(lambda_by_paths(wf, tf) == lambda_by_elimination(wf, tf));
}

TEST_CASE("paths agree with elimination") {
  auto alpha = presets::two_free_orbits();
  auto t     = make_orbit_table(alpha);
  int  count = 0;
  for (int k = 0; k <= 4; ++k) {
    for (auto const& n : support::all_nanowords(k, 4)) {
      Lambda sum(t);
      for (auto const& p : lambda_paths(n, t)) {
        sum += p.product;
      }
      CHECK(sum == lambda_by_elimination(n, t));
      ++count;
    }
  }
  CHECK(count == 1 + 4 + 48 + 960 + 105 * 256);

  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    auto n = support::random_nanoword(rng, 5 + static_cast<int>(rng() % 2), 4);
    CHECK_NOTHROW(lambda_by_paths(n, t));
  }
}

TEST_CASE("invariance under moves") {
  auto         alpha = support::three_orbits();
  auto         t     = make_orbit_table(alpha);
  auto         beta  = BetaSet(alpha, {alpha.index("a"), alpha.index("c")});
  std::mt19937 rng(57);
  int          moved = 0;
  while (moved < 500) {
    auto         n = support::random_nanoword(rng, 1 + static_cast<int>(rng() % 5), 5);
    MoveInstance m;
    if (!support::random_move(rng, n, alpha, m)) {
      continue;
    }
    auto after = apply_move(n, m, alpha);
    CHECK(lambda_by_elimination(after, t) == lambda_by_elimination(n, t));
    CHECK(tricolor_census(after, beta) == tricolor_census(n, beta));
    CHECK(tricolor_census(after, BetaSet::all(alpha)) == tricolor_census(n, BetaSet::all(alpha)));
    ++moved;
  }
}

TEST_CASE("contractible words have trivial linear invariants") {
  auto          alpha = support::three_orbits();
  auto          t     = make_orbit_table(alpha);
  std::mt19937  rng(59);
  SearchOptions opts;
  opts.max_states = 5000;
  int proven      = 0;
  for (int trial = 0; trial < 120; ++trial) {
    auto n       = support::random_nanoword(rng, 1 + static_cast<int>(rng() % 3), 5);
    opts.max_len = n.length() + 4;
    if (is_contractible_bounded(n, alpha, opts).verdict == Verdict::Equivalent) {
      CHECK(lambda_by_elimination(n, t) == Lambda::one(t));
      CHECK(identity_pattern(tricolor_census(n, BetaSet::all(alpha))));
      ++proven;
    }
  }
  CHECK(proven > 20);
}
