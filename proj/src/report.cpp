#include "nanoword/report.hpp"

#include <json.hpp>

#include "nanoword/text.hpp"

namespace nanoword {

  std::string_view contractibility_name(Contractibility c) {
    switch (c) {
      case Contractibility::Contractible:
        return "CONTRACTIBLE";
      case Contractibility::NonContractible:
        return "NON-CONTRACTIBLE";
      case Contractibility::Unknown:
        return "UNKNOWN";
    }
    return "UNKNOWN";
  }

  std::string format_census(TricolorCensus const& c) {
    std::string out = "[";
    for (int k = 0; k < 3; ++k) {
      out += k ? " | " : "";
      for (int l = 0; l < 3; ++l) {
        out += (l ? " " : "") + std::to_string(c[k][l]);
      }
    }
    return out + "]";
  }

  std::string format_letters(std::vector<Letter> const& letters, AlphabetSpec const& alpha) {
    std::string out = "{";
    for (std::size_t k = 0; k < letters.size(); ++k) {
      out += (k ? "," : "") + alpha.name(letters[k]);
    }
    return out + "}";
  }

  namespace {
    std::vector<std::vector<Letter>> default_betas(OrbitTable const& t) {
      std::vector<std::vector<Letter>> out;
      if (t.size() > 3) {
        out.push_back({});
        out.push_back(BetaSet::all(t.alphabet()).letters());
        return out;
      }
      for (unsigned mask = 0; mask < (1u << t.size()); ++mask) {
        std::vector<Letter> beta;
        for (Letter a = 0; a < static_cast<Letter>(t.alphabet().size()); ++a) {
          if (mask >> t.orbit_of(a) & 1u) {
            beta.push_back(a);
          }
        }
        out.push_back(beta);
      }
      return out;
    }

    bool identity_census(TricolorCensus const& c) {
      for (int k = 0; k < 3; ++k) {
        for (int l = 0; l < 3; ++l) {
          if (c[k][l] != (k == l ? 1 : 0)) {
            return false;
          }
        }
      }
      return true;
    }

    bool unit_sequence(CharacteristicSequence const& s) {
      return s.size() == 1 && s[0].sign == 1 && s[0].psi.is_identity();
    }

    std::string keyed(std::vector<std::pair<Letter, ZPi>> const& xs, AlphabetSpec const& alpha) {
      std::string out;
      for (auto const& [a, v] : xs) {
        out += (out.empty() ? "" : "; ") + alpha.name(a) + ": " + v.to_string();
      }
      return out;
    }

    void certify(InvariantReport& r) {
      auto const& alpha = r.table->alphabet();
      if (r.gamma && !r.gamma->is_identity()) {
        r.certificate = "gamma = " + r.gamma->to_string();
      } else if (r.self_linking && !r.self_linking->invariants_vanish()) {
        r.certificate = "self-linking: ";
        r.certificate += r.self_linking->free_differences.empty()
                             ? keyed(r.self_linking->fixed_mod2, alpha)
                             : keyed(r.self_linking->free_differences, alpha);
      } else if (r.primitive && r.norm_bound > 0) {
        r.certificate = "alpha-pairing: primitive of size " + std::to_string(r.primitive->size())
                        + ", norm >= " + std::to_string(r.norm_bound);
      } else if (r.lambda && !(*r.lambda == Lambda::one(r.table))) {
        r.certificate = "lambda = " + r.lambda->to_string();
      } else {
        for (auto const& e : r.tricolorings) {
          if (!identity_census(e.census)) {
            r.certificate = "tricolorings for beta = " + format_letters(e.beta, alpha) + ": "
                            + format_census(e.census);
            break;
          }
        }
        if (r.certificate.empty() && r.sequence && !unit_sequence(*r.sequence)) {
          r.certificate = "characteristic sequence = " + format_sequence(*r.sequence);
        }
      }
      if (!r.certificate.empty()) {
        r.verdict = Contractibility::NonContractible;
      }
    }
  }  // namespace

  InvariantReport invariant_report(Nanoword const& n, AlphabetSpec const& alpha,
                                   ReportOptions const& opts) {
    InvariantReport r;
    r.table     = make_orbit_table(alpha, opts.alpha_plus);
    r.nanoword  = format_nanoword(n, alpha);
    r.canonical = format_nanoword(canonical_form(n).to_nanoword(), alpha);
    r.length    = n.length();
    if (!alpha.is_diagonal()) {
      r.sequence_note = "invariants need a diagonal S";
      return r;
    }
    r.gamma        = gamma(n, r.table);
    r.self_linking = self_linking(n, r.table);
    r.primitive    = reduce_primitive(build_pairing(n, r.table));
    r.norm_bound   = r.primitive->size() - 1;
    for (auto const& b : opts.betas.empty() ? default_betas(*r.table) : opts.betas) {
      BetaSet const beta(alpha, b);
      r.tricolorings.push_back({beta.letters(), tricolor_census(n, beta)});
    }
    r.lambda = lambda_by_elimination(n, r.table);
    r.graded = grade(*r.lambda);
    try {
      r.sequence = characteristic_sequence(n, r.table);
    } catch (ContractError const& e) {
      r.sequence_note = e.what();
    }
    certify(r);
    return r;
  }

  InvariantReport make_report(Nanoword const& n, AlphabetSpec const& alpha,
                              ReportOptions const& opts) {
    auto r = invariant_report(n, alpha, opts);
    if (r.verdict != Contractibility::Unknown || !opts.run_search) {
      return r;
    }
    std::vector<std::size_t> tiers{opts.search.max_len};
    if (tiers[0] == 0) {
      tiers = {n.length(), n.length() + opts.extra_len};
    }
    r.searched = true;
    for (auto len : tiers) {
      SearchOptions so = opts.search;
      so.max_len       = len;
      auto const out   = is_contractible_bounded(n, alpha, so);
      r.stats          = out.stats;
      if (out.verdict == Verdict::Equivalent) {
        if (!replay(n, out.witness, alpha).empty()) {
          throw std::logic_error("contraction witness does not replay to the empty word");
        }
        r.verdict = Contractibility::Contractible;
        r.witness = out.witness;
        break;
      }
    }
    return r;
  }

  Fingerprint fingerprint(InvariantReport const& r) {
    Fingerprint f;
    if (!r.gamma) {
      return f;
    }
    auto const& alpha = r.table->alphabet();
    f.emplace_back("gamma", r.gamma->to_string());
    f.emplace_back("self-linking", keyed(r.self_linking->free_differences, alpha) + " / "
                                       + keyed(r.self_linking->fixed_mod2, alpha));
    f.emplace_back("alpha-pairing", "size " + std::to_string(r.primitive->size()));
    f.emplace_back("lambda", r.lambda->to_string());
    for (auto const& e : r.tricolorings) {
      f.emplace_back("tricolorings " + format_letters(e.beta, alpha), format_census(e.census));
    }
    if (r.sequence) {
      f.emplace_back("characteristic sequence", format_sequence(*r.sequence));
    }
    return f;
  }

  std::optional<std::string> separating_invariant(InvariantReport const& x,
                                                  InvariantReport const& y) {
    auto const fx = fingerprint(x);
    auto const fy = fingerprint(y);
    for (std::size_t k = 0; k < std::min(fx.size(), fy.size()); ++k) {
      if (fx[k].first == fy[k].first && fx[k].second != fy[k].second) {
        return fx[k].first;
      }
    }
    if (x.primitive && y.primitive && !pairing_isomorphic(*x.primitive, *y.primitive)) {
      return std::string("alpha-pairing");
    }
    return std::nullopt;
  }

  std::string report_text(InvariantReport const& r) {
    auto const&                                      alpha = r.table->alphabet();
    std::vector<std::pair<std::string, std::string>> rows;
    rows.emplace_back("nanoword", r.nanoword.empty() ? "(empty)" : r.nanoword);
    rows.emplace_back("canonical", r.canonical.empty() ? "(empty)" : r.canonical);
    rows.emplace_back("alpha_+", format_letters(r.table->alpha_plus(), alpha));
    if (r.gamma) {
      rows.emplace_back("gamma", r.gamma->to_string());
      for (auto const& [a, v] : r.self_linking->free_differences) {
        rows.emplace_back("[" + alpha.name(a) + "] - [" + alpha.name(alpha.tau(a)) + "]",
                          v.to_string());
      }
      for (auto const& [a, v] : r.self_linking->fixed_mod2) {
        rows.emplace_back("[" + alpha.name(a) + "] mod 2", v.to_string());
      }
      rows.emplace_back("primitive pairing size", std::to_string(r.primitive->size()));
      rows.emplace_back("norm lower bound", std::to_string(r.norm_bound));
      for (auto const& e : r.tricolorings) {
        rows.emplace_back("tricolorings " + format_letters(e.beta, alpha), format_census(e.census));
      }
      rows.emplace_back("lambda", r.lambda->to_string());
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          rows.emplace_back("lambda_" + std::to_string(i) + std::to_string(j),
                            r.graded->part[i][j].to_string());
        }
      }
    }
    rows.emplace_back("characteristic sequence",
                      r.sequence ? format_sequence(*r.sequence) : "n/a (" + r.sequence_note + ")");
    rows.emplace_back("verdict", std::string(contractibility_name(r.verdict)));
    if (r.verdict == Contractibility::Contractible) {
      rows.emplace_back("witness moves", std::to_string(r.witness.size()));
    } else if (r.verdict == Contractibility::NonContractible) {
      rows.emplace_back("certificate", r.certificate);
    } else if (r.searched) {
      rows.emplace_back("search", "no contraction within max_len " + std::to_string(r.stats.max_len)
                                      + ", " + std::to_string(r.stats.states) + " states");
    }
    std::size_t width = 0;
    for (auto const& row : rows) {
      width = std::max(width, row.first.size());
    }
    std::string out;
    for (auto const& [k, v] : rows) {
      out += k + std::string(width + 2 - k.size(), ' ') + v + "\n";
    }
    if (r.verdict == Contractibility::Contractible && !r.witness.empty()) {
      out += format_witness(r.witness, alpha);
      if (out.back() != '\n') {
        out += "\n";
      }
    }
    return out;
  }

  std::string report_json(InvariantReport const& r) {
    using nlohmann::ordered_json;
    auto const&  alpha = r.table->alphabet();
    ordered_json j;
    auto         names = [&](std::vector<Letter> const& ls) {
      ordered_json a = ordered_json::array();
      for (Letter l : ls) {
        a.push_back(alpha.name(l));
      }
      return a;
    };
    j["nanoword"]   = r.nanoword;
    j["canonical"]  = r.canonical;
    j["length"]     = r.length;
    j["alpha_plus"] = names(r.table->alpha_plus());
    if (r.gamma) {
      j["gamma"] = r.gamma->to_string();
      ordered_json sl;
      auto         keyed_json = [&](auto const& xs) {
        ordered_json o = ordered_json::object();
        for (auto const& [a, v] : xs) {
          o[alpha.name(a)] = v.to_string();
        }
        return o;
      };
      ordered_json per = ordered_json::object();
      for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
        per[alpha.name(a)] = r.self_linking->per_letter[a].to_string();
      }
      sl["per_letter"]       = per;
      sl["free_differences"] = keyed_json(r.self_linking->free_differences);
      sl["fixed_mod2"]       = keyed_json(r.self_linking->fixed_mod2);
      j["self_linking"]      = sl;
      j["pairing"] = {{"primitive_size", r.primitive->size()}, {"norm_lower_bound", r.norm_bound}};
      ordered_json tc = ordered_json::array();
      for (auto const& e : r.tricolorings) {
        tc.push_back({{"beta", names(e.beta)}, {"census", e.census}});
      }
      j["tricolorings"] = tc;
      j["lambda"]       = {{"value", r.lambda->to_string()},
                           {"00", r.graded->part[0][0].to_string()},
                           {"01", r.graded->part[0][1].to_string()},
                           {"10", r.graded->part[1][0].to_string()},
                           {"11", r.graded->part[1][1].to_string()}};
    } else {
      j["gamma"] = nullptr;
    }
    if (r.sequence) {
      j["characteristic_sequence"] = format_sequence(*r.sequence);
    } else {
      j["characteristic_sequence"] = nullptr;
      j["characteristic_sequence_note"] = r.sequence_note;
    }
    j["verdict"] = contractibility_name(r.verdict);
    if (r.verdict == Contractibility::Contractible) {
      ordered_json w = ordered_json::array();
      for (auto const& m : r.witness) {
        w.push_back(format_move(m, alpha));
      }
      j["witness"] = w;
    }
    if (r.verdict == Contractibility::NonContractible) {
      j["certificate"] = r.certificate;
    }
    j["search"] = {{"searched", r.searched},
                   {"states", r.stats.states},
                   {"max_len", r.stats.max_len},
                   {"max_states", r.stats.max_states},
                   {"bound_exhausted", r.stats.bound_exhausted}};
    return j.dump(2);
  }

}  // namespace nanoword
