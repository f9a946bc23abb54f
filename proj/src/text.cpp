#include "nanoword/text.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace nanoword {

  namespace {
    struct Token {
      std::string text;
      std::size_t offset;
    };

    std::vector<Token> split_ws(std::string_view s, std::size_t base) {
      std::vector<Token> out;
      std::size_t        i = 0;
      while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        std::size_t const start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) {
          ++i;
        }
        if (i > start) {
          out.push_back({std::string(s.substr(start, i - start)), base + start});
        }
      }
      return out;
    }

    [[noreturn]] void fail_at(std::string_view text, std::size_t offset, std::string const& what) {
      int line = 1, column = 1;
      for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
        if (text[k] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
      throw ParseError(what, line, column);
    }
  }  // namespace

  AlphabetSpec parse_alphabet(std::string_view text) {
    std::vector<std::string>                         letters;
    std::vector<std::pair<std::string, std::string>> pairs;
    std::vector<std::string>                         fixed;
    std::vector<NamedTriple>                         triples;
    bool                                             diagonal = false;

    int         line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      ++line_no;
      std::size_t eol = text.find('\n', pos);
      if (eol == std::string_view::npos) {
        eol = text.size();
      }
      std::string_view line = text.substr(pos, eol - pos);
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto toks = split_ws(line, 0);
      auto bad  = [&](std::size_t k, std::string const& what) -> void {
        std::size_t col = k < toks.size() ? toks[k].offset : line.size();
        throw ParseError(what, line_no, static_cast<int>(col) + 1);
      };
      auto arity = [&](std::size_t n) {
        if (toks.size() != n + 1) {
          bad(std::min(toks.size(), n + 1),
              "'" + toks[0].text + "' expects " + std::to_string(n) + " argument(s)");
        }
      };
      if (!toks.empty()) {
        auto const& kw = toks[0].text;
        if (kw == "letter") {
          arity(1);
          if (!is_valid_letter_name(toks[1].text)) {
            bad(1, "invalid letter name '" + toks[1].text + "'");
          }
          letters.push_back(toks[1].text);
        } else if (kw == "tau") {
          arity(2);
          pairs.emplace_back(toks[1].text, toks[2].text);
        } else if (kw == "fixed") {
          arity(1);
          fixed.push_back(toks[1].text);
        } else if (kw == "triple") {
          arity(3);
          triples.push_back({toks[1].text, toks[2].text, toks[3].text});
        } else if (kw == "S") {
          arity(1);
          if (toks[1].text != "diagonal") {
            bad(1, "expected 'diagonal'");
          }
          diagonal = true;
        } else {
          bad(0, "unknown directive '" + kw + "'");
        }
      }
      pos = eol + 1;
    }
    if (diagonal && !triples.empty()) {
      throw ParseError("'S diagonal' cannot be combined with explicit triples", line_no, 1);
    }
    try {
      if (diagonal) {
        return make_alphabet(letters, pairs, fixed, Diagonal{});
      }
      return make_alphabet(letters, pairs, fixed, triples);
    } catch (ContractError const& e) {
      throw ParseError(e.what(), line_no, 1);
    }
  }

  AlphabetSpec load_alphabet(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ContractError("cannot open alphabet file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_alphabet(ss.str());
  }

  std::string format_alphabet(AlphabetSpec const& alpha) {
    std::ostringstream out;
    for (auto const& name : alpha.names()) {
      out << "letter " << name << '\n';
    }
    for (Letter a = 0; a < static_cast<Letter>(alpha.size()); ++a) {
      if (alpha.is_fixed(a)) {
        out << "fixed " << alpha.name(a) << '\n';
      } else if (a < alpha.tau(a)) {
        out << "tau " << alpha.name(a) << ' ' << alpha.name(alpha.tau(a)) << '\n';
      }
    }
    if (alpha.diagonal_marker()) {
      out << "S diagonal\n";
    } else {
      for (auto const& t : alpha.triples()) {
        out << "triple " << alpha.name(t[0]) << ' ' << alpha.name(t[1]) << ' '
            << alpha.name(t[2]) << '\n';
      }
    }
    return out.str();
  }

  EtaleWord parse_etale(std::string_view text, AlphabetSpec const& alpha) {
    auto const sep = text.find("::");
    if (sep == std::string_view::npos) {
      if (split_ws(text, 0).empty()) {
        return {};
      }
      fail_at(text, text.size(), "expected '::' between declarations and word");
    }
    std::vector<LetterDecl> decls;
    for (auto const& tok : split_ws(text.substr(0, sep), 0)) {
      auto const colon = tok.text.find(':');
      if (colon == std::string::npos || colon == 0 || colon + 1 == tok.text.size()) {
        fail_at(text, tok.offset, "expected <Name>:<proj>, got '" + tok.text + "'");
      }
      auto const name = tok.text.substr(0, colon);
      auto const proj = alpha.find(tok.text.substr(colon + 1));
      if (!proj) {
        fail_at(text, tok.offset + colon + 1,
                "unknown alphabet letter '" + tok.text.substr(colon + 1) + "'");
      }
      if (std::any_of(decls.begin(), decls.end(),
                      [&](LetterDecl const& d) { return d.name == name; })) {
        fail_at(text, tok.offset, "duplicate letter '" + name + "'");
      }
      decls.push_back({name, *proj});
    }
    std::vector<int> word;
    for (auto const& tok : split_ws(text.substr(sep + 2), sep + 2)) {
      auto it = std::find_if(decls.begin(), decls.end(),
                             [&](LetterDecl const& d) { return d.name == tok.text; });
      if (it == decls.end()) {
        fail_at(text, tok.offset, "undeclared letter '" + tok.text + "'");
      }
      word.push_back(static_cast<int>(it - decls.begin()));
    }
    return EtaleWord(std::move(decls), std::move(word));
  }

  Nanoword parse_nanoword(std::string_view text, AlphabetSpec const& alpha) {
    auto w = parse_etale(text, alpha);
    try {
      return Nanoword(w);
    } catch (ContractError const& e) {
      fail_at(text, text.find("::") == std::string_view::npos ? 0 : text.find("::") + 2,
              e.what());
    }
  }

  std::string format_etale(EtaleWord const& w, AlphabetSpec const& alpha) {
    std::string out;
    for (auto const& l : w.letters()) {
      out += l.name + ":" + alpha.name(l.proj) + " ";
    }
    out += "::";
    for (int x : w.word()) {
      out += " " + w.letters()[x].name;
    }
    return out;
  }

  std::string format_nanoword(Nanoword const& n, AlphabetSpec const& alpha) {
    return format_etale(n.as_etale(), alpha);
  }

  EtaleWord parse_plain_word(std::string_view text, AlphabetSpec const& alpha) {
    std::size_t i = 0;
    auto        skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
    };
    skip_ws();
    if (text.substr(i, 4) == "word"
        && (i + 4 == text.size() || std::isspace(static_cast<unsigned char>(text[i + 4])))) {
      // `word` is only a keyword if no alphabet letter parse would consume it
      if (!alpha.find("word")) {
        i += 4;
      }
    }
    std::vector<std::string> names = alpha.names();
    std::sort(names.begin(), names.end(),
              [](auto const& x, auto const& y) { return x.size() > y.size(); });
    std::vector<Letter> letters;
    for (skip_ws(); i < text.size(); skip_ws()) {
      auto it = std::find_if(names.begin(), names.end(), [&](std::string const& nm) {
        return text.substr(i, nm.size()) == nm;
      });
      if (it == names.end()) {
        fail_at(text, i, "no alphabet letter matches here");
      }
      letters.push_back(alpha.index(*it));
      i += it->size();
    }
    return plain_word(alpha, letters);
  }

}  // namespace nanoword
