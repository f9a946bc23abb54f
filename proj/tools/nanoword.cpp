// nanoword: invariants, homotopy search and classification of words.

#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "nanoword/classify.hpp"
#include "nanoword/text.hpp"

using namespace nanoword;
using nlohmann::ordered_json;

namespace {

  constexpr int kExitOk      = 0;
  constexpr int kExitError   = 1;
  constexpr int kExitUnknown = 2;

  struct Flags {
    std::string              alphabet_file;
    std::vector<std::string> words;
    std::vector<std::string> nanowords;
    std::string              beta;
    std::string              alpha_plus;
    std::size_t              max_len    = 0;
    std::size_t              max_states = 200000;
    bool                     shift      = false;
    bool                     json       = false;
    bool                     strict     = false;
    std::size_t              length     = 0;
    std::size_t              cap        = 6;
    unsigned                 jobs       = 0;
    std::string              map;
  };

  AlphabetSpec alphabet(Flags const& f) {
    return f.alphabet_file.empty() ? presets::curves() : load_alphabet(f.alphabet_file);
  }

  std::vector<Letter> letter_list(std::string const& text, AlphabetSpec const& alpha) {
    std::vector<Letter> out;
    std::string         s = text;
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    for (std::string name; in >> name;) {
      auto a = alpha.find(name);
      if (!a) {
        throw ContractError("unknown letter '" + name + "'");
      }
      out.push_back(*a);
    }
    return out;
  }

  Nanoword from_literal(std::string const& text, AlphabetSpec const& alpha) {
    auto const w = parse_etale(text, alpha);
    for (int x = 0; x < static_cast<int>(w.letters().size()); ++x) {
      if (w.multiplicity(x) != 2) {
        return desingularize(w);
      }
    }
    return Nanoword(w);
  }

  std::vector<Nanoword> inputs(Flags const& f, AlphabetSpec const& alpha) {
    std::vector<Nanoword> out;
    for (auto const& w : f.words) {
      out.push_back(desingularize(parse_plain_word(w, alpha)));
    }
    for (auto const& w : f.nanowords) {
      out.push_back(from_literal(w, alpha));
    }
    return out;
  }

  Nanoword single_input(Flags const& f, AlphabetSpec const& alpha) {
    auto in = inputs(f, alpha);
    if (in.size() != 1) {
      throw ContractError("expected exactly one --word or --nanoword");
    }
    return in.front();
  }

  ReportOptions report_options(Flags const& f, AlphabetSpec const& alpha) {
    ReportOptions o;
    if (!f.alpha_plus.empty()) {
      o.alpha_plus = letter_list(f.alpha_plus, alpha);
    }
    if (!f.beta.empty()) {
      o.betas.push_back(f.beta == "-" ? std::vector<Letter>{} : letter_list(f.beta, alpha));
    }
    o.search.max_len    = f.max_len;
    o.search.max_states = f.max_states;
    o.search.shift      = f.shift;
    return o;
  }

  int cmd_report(Flags const& f) {
    auto const alpha = alphabet(f);
    auto const r     = make_report(single_input(f, alpha), alpha, report_options(f, alpha));
    std::cout << (f.json ? report_json(r) + "\n" : report_text(r));
    return f.strict && r.verdict == Contractibility::Unknown ? kExitUnknown : kExitOk;
  }

  int cmd_equiv(Flags const& f) {
    auto const alpha = alphabet(f);
    auto const in    = inputs(f, alpha);
    if (in.size() != 2) {
      throw ContractError("equiv needs two words");
    }
    auto ro       = report_options(f, alpha);
    auto const r1 = invariant_report(in[0], alpha, ro);
    auto const r2 = invariant_report(in[1], alpha, ro);

    std::vector<std::string> differ;
    auto const               f1 = fingerprint(r1), f2 = fingerprint(r2);
    for (std::size_t k = 0; k < std::min(f1.size(), f2.size()); ++k) {
      if (f1[k].second != f2[k].second) {
        differ.push_back(f1[k].first);
      }
    }
    if (r1.primitive && r2.primitive && !pairing_isomorphic(*r1.primitive, *r2.primitive)
        && std::find(differ.begin(), differ.end(), "alpha-pairing") == differ.end()) {
      differ.push_back("alpha-pairing");
    }

    ordered_json j;
    std::string  text;
    int          code = kExitOk;
    if (!differ.empty()) {
      j["verdict"]   = "NOT-HOMOTOPIC";
      j["separated_by"] = differ;
      text = "NOT-HOMOTOPIC\nseparated by:";
      for (auto const& d : differ) {
        text += " " + d + (&d == &differ.back() ? "" : ",");
      }
      text += "\n";
    } else {
      SearchOptions so = ro.search;
      if (so.max_len == 0) {
        so.max_len = std::max(in[0].length(), in[1].length()) + 4;
      }
      auto const out = equivalent_bounded(in[0], in[1], alpha, so);
      j["verdict"]   = out.verdict == Verdict::Equivalent ? "EQUIVALENT" : "UNKNOWN";
      if (out.verdict == Verdict::Equivalent) {
        ordered_json w = ordered_json::array();
        for (auto const& m : out.witness) {
          w.push_back(format_move(m, alpha));
        }
        j["witness"] = w;
        text = "EQUIVALENT\n" + format_witness(out.witness, alpha);
        if (!text.empty() && text.back() != '\n') {
          text += "\n";
        }
      } else {
        text = "UNKNOWN\nno witness within max_len " + std::to_string(out.stats.max_len)
               + ", max_states " + std::to_string(out.stats.max_states) + " ("
               + std::to_string(out.stats.states) + " states visited)\n";
        code = f.strict ? kExitUnknown : kExitOk;
      }
      j["search"] = {{"states", out.stats.states},
                     {"max_len", out.stats.max_len},
                     {"max_states", out.stats.max_states},
                     {"bound_exhausted", out.stats.bound_exhausted}};
    }
    std::cout << (f.json ? j.dump(2) + "\n" : text);
    return code;
  }

  int cmd_classify(Flags const& f) {
    auto const      alpha = alphabet(f);
    ClassifyOptions o;
    o.length = f.length;
    o.cap    = f.cap;
    o.report = report_options(f, alpha);
    o.jobs   = f.jobs;
    auto const c = classify_words(alpha, o);
    std::cout << (f.json ? classification_json(c, alpha) + "\n" : classification_text(c, alpha));
    return f.strict && c.has_unknown() ? kExitUnknown : kExitOk;
  }

  int cmd_genus(Flags const& f) {
    auto const alpha = alphabet(f);
    auto const n     = single_input(f, alpha);
    auto const table = make_orbit_table(alpha);
    CurveMap   map(alpha.size(), 0);
    if (f.map.empty()) {
      for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
        map[a] = table->sign_of(a) > 0 ? 0 : 1;
      }
    } else {
      std::string s = f.map;
      std::replace(s.begin(), s.end(), ',', ' ');
      std::istringstream in(s);
      for (std::string item; in >> item;) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw ContractError("map entries look like x:a or x:b");
        }
        auto letter = letter_list(item.substr(0, colon), alpha);
        auto target = item.substr(colon + 1);
        if (letter.size() != 1 || (target != "a" && target != "b")) {
          throw ContractError("bad map entry '" + item + "'");
        }
        map[letter.front()] = target == "a" ? 0 : 1;
      }
    }
    auto const bound = genus_lower_bound(n, table, map);
    if (f.json) {
      std::cout << ordered_json{{"genus_lower_bound", bound}}.dump(2) << "\n";
    } else {
      std::cout << bound << "\n";
    }
    return kExitOk;
  }

  int cmd_desing(Flags const& f) {
    auto const alpha = alphabet(f);
    auto const n     = single_input(f, alpha);
    if (f.json) {
      std::cout << ordered_json{{"nanoword", format_nanoword(n, alpha)},
                                {"canonical", format_nanoword(canonical_form(n).to_nanoword(), alpha)}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << format_nanoword(n, alpha) << "\n";
    }
    return kExitOk;
  }

  int cmd_norm_bound(Flags const& f) {
    auto const alpha = alphabet(f);
    auto const n     = single_input(f, alpha);
    auto const bound = norm_lower_bound(n, make_orbit_table(alpha));
    if (f.json) {
      std::cout << ordered_json{{"norm_lower_bound", bound}}.dump(2) << "\n";
    } else {
      std::cout << bound << "\n";
    }
    return kExitOk;
  }

  void common(CLI::App* sub, Flags& f, bool many) {
    sub->add_option("--alphabet", f.alphabet_file, "alphabet file (default: a, b swapped by tau)");
    auto* w = sub->add_option("--word", f.words, "plain word on the alphabet");
    auto* n = sub->add_option("--nanoword", f.nanowords, "literal `A:a B:b :: A B A B`");
    if (!many) {
      w->expected(0, 1);
      n->expected(0, 1);
    }
    sub->add_option("--beta", f.beta, "tau-stable letters for tricolorings, `-` for none");
    sub->add_option("--alpha-plus", f.alpha_plus, "one letter per orbit");
    sub->add_option("--max-len", f.max_len, "search length bound");
    sub->add_option("--max-states", f.max_states, "search state bound");
    sub->add_flag("--shift", f.shift, "allow the circular shift");
    sub->add_flag("--json", f.json, "machine-readable output");
    sub->add_flag("--strict", f.strict, "exit 2 when a bound leaves the answer UNKNOWN");
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homotopy invariants of words and nanowords"};
  app.require_subcommand(1);
  Flags f;

  auto* report = app.add_subcommand("report", "invariants and contractibility verdict");
  common(report, f, false);
  auto* equiv = app.add_subcommand("equiv", "decide homotopy of two words within bounds");
  common(equiv, f, true);
  auto* classify = app.add_subcommand("classify", "classify all words of a given length");
  common(classify, f, false);
  classify->add_option("--length", f.length, "word length")->required();
  classify->add_option("--cap", f.cap, "largest allowed length");
  classify->add_option("--jobs", f.jobs, "worker threads, 0 for all cores");
  auto* genus = app.add_subcommand("genus", "lower bound on the genus");
  common(genus, f, false);
  genus->add_option("--map", f.map, "equivariant map to {a,b}, e.g. `a:a,c:b`");
  auto* desing = app.add_subcommand("desing", "desingularize a word");
  common(desing, f, false);
  auto* norm = app.add_subcommand("norm-bound", "lower bound on the length norm");
  common(norm, f, false);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kExitOk : kExitError;
  }
  try {
    if (*report) return cmd_report(f);
    if (*equiv) return cmd_equiv(f);
    if (*classify) return cmd_classify(f);
    if (*genus) return cmd_genus(f);
    if (*desing) return cmd_desing(f);
    if (*norm) return cmd_norm_bound(f);
  } catch (ParseError const& e) {
    // what() already carries line:column
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (ContractError const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
