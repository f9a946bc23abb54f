#include "doctest.h"
#include "nanoword/classify.hpp"
#include "nanoword/text.hpp"
#include "support.hpp"

#include <json.hpp>

using namespace nanoword;

namespace {
  Nanoword plain(char const* w, AlphabetSpec const& alpha) {
    return desingularize(parse_plain_word(w, alpha));
  }
}  // namespace

TEST_CASE("report verdicts") {
  auto free = presets::curves();
  auto r    = make_report(plain("abaab", free), free);
  CHECK(r.verdict == Contractibility::NonContractible);
  CHECK(r.norm_bound == 4);
  CHECK_FALSE(r.certificate.empty());
  CHECK_FALSE(r.searched);

  auto e = make_report(Nanoword{}, free);
  CHECK(e.verdict == Contractibility::Contractible);
  CHECK(e.witness.empty());
  CHECK(e.norm_bound == 0);
  CHECK(*e.lambda == Lambda::one(e.table));

  auto fixed = presets::two_fixed();
  auto f     = make_report(plain("ababa", fixed), fixed);
  CHECK(f.verdict == Contractibility::NonContractible);
  CHECK(f.norm_bound == 0);
  CHECK_FALSE(f.graded->part[0][0] == Lambda::one(f.table));
  CHECK(f.certificate.rfind("lambda", 0) == 0);
  CHECK_FALSE(f.sequence.has_value());

  // contractible with a replayable witness
  auto c = make_report(plain("ababa", free), free);
  REQUIRE(c.verdict == Contractibility::Contractible);
  CHECK(replay(plain("ababa", free), c.witness, free).empty());
}

TEST_CASE("non-diagonal S leaves only the search") {
  auto knots = presets::knots();
  auto r     = invariant_report(parse_nanoword("A:a+ B:a+ :: A B A B", knots), knots);
  CHECK_FALSE(r.gamma.has_value());
  CHECK(fingerprint(r).empty());
  CHECK(r.verdict == Contractibility::Unknown);
}

TEST_CASE("verdicts never contradict the oracle") {
  auto          alpha = support::three_orbits();
  std::mt19937  rng(73);
  ReportOptions o;
  o.search.max_states = 3000;
  for (int trial = 0; trial < 60; ++trial) {
    auto n = support::random_nanoword(rng, 1 + static_cast<int>(rng() % 3), 5);
    auto r = make_report(n, alpha, o);
    if (r.verdict == Contractibility::NonContractible) {
      SearchOptions so;
      so.max_len    = n.length() + 2;
      so.max_states = 3000;
      CHECK(is_contractible_bounded(n, alpha, so).verdict == Verdict::Unknown);
      CHECK_FALSE(r.certificate.empty());
    }
  }
}

TEST_CASE("separating invariants") {
  auto alpha = presets::two_free_orbits();
  auto w1    = invariant_report(parse_nanoword("A:a B:c C:a :: A B A C B C", alpha), alpha);
  auto w2    = invariant_report(parse_nanoword("A:a C:a :: A C A C", alpha), alpha);
  CHECK(separating_invariant(w1, w2) == std::optional<std::string>("characteristic sequence"));
  CHECK_FALSE(separating_invariant(w1, w1).has_value());
}

TEST_CASE("json mirrors the report") {
  auto free = presets::curves();
  auto r    = make_report(plain("abaab", free), free);
  auto j    = nlohmann::json::parse(report_json(r));
  CHECK(j["verdict"] == "NON-CONTRACTIBLE");
  CHECK(j["pairing"]["norm_lower_bound"] == 4);
  CHECK(j["alpha_plus"][0] == "a");
  CHECK(report_json(r) == report_json(make_report(plain("abaab", free), free)));
  CHECK(report_text(r).find("NON-CONTRACTIBLE") != std::string::npos);
}

TEST_CASE("classification of length 5, tau(a) = b") {
  auto            alpha = presets::curves();
  ClassifyOptions o;
  o.length = 5;
  auto c   = classify_words(alpha, o);
  CHECK(c.words.size() == 32);
  CHECK_FALSE(c.has_unknown());
  CHECK(c.class_of("aaabb") == c.class_of("aabba"));
  CHECK(c.class_of("aaabb") == c.class_of("bbaaa"));
  CHECK(c.class_of("aabab") == c.class_of("babaa"));
  CHECK(c.class_of("aabab") == c.class_of("baaab"));
  CHECK(c.classes[c.class_of("ababa")].verdict == Contractibility::Contractible);
  CHECK(c.class_of("abaab") != c.class_of("baaba"));

  // fingerprints are constant on classes, witnesses replay
  for (auto const& w : c.words) {
    auto const& rep = c.words[c.classes[w.cls].members.front()];
    CHECK(fingerprint(w.report) == fingerprint(rep.report));
    if (w.via >= 0) {
      auto end = replay(plain(w.word.c_str(), alpha), w.witness, alpha);
      CHECK(canonical_form(end) == canonical_form(plain(c.words[w.via].word.c_str(), alpha)));
    }
  }
  o.jobs = 1;
  CHECK(classification_json(classify_words(alpha, o), alpha) == classification_json(c, alpha));
}

TEST_CASE("classification bounds") {
  auto            alpha = presets::curves();
  ClassifyOptions o;
  o.length = 7;
  CHECK_THROWS_AS(classify_words(alpha, o), ContractError);
  o.length = 1;
  auto c   = classify_words(alpha, o);
  CHECK(c.classes.size() == 1);
  CHECK(c.classes[0].verdict == Contractibility::Contractible);
  CHECK_THROWS_AS(classify_words(presets::knots(), o), ContractError);
}
