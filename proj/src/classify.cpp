#include "nanoword/classify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "nanoword/text.hpp"

namespace nanoword {

  int Classification::class_of(std::string const& word) const {
    for (auto const& w : words) {
      if (w.word == word) {
        return w.cls;
      }
    }
    throw ContractError("word '" + word + "' is not in the classification");
  }

  bool Classification::has_unknown() const {
    return std::any_of(edges.begin(), edges.end(), [](auto const& e) { return !e.separated; });
  }

  namespace {
    struct UnionFind {
      std::vector<int> parent;

      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int find(int x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      // the smaller index stays the root
      void join(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    };

    std::vector<std::string> enumerate(AlphabetSpec const& alpha, std::size_t length) {
      std::vector<std::string> letters = alpha.names();
      std::sort(letters.begin(), letters.end());
      std::vector<std::string> out;
      std::vector<std::size_t> digit(length, 0);
      for (;;) {
        std::string w;
        for (auto d : digit) {
          w += letters[d];
        }
        out.push_back(w);
        std::size_t k = length;
        while (k > 0 && ++digit[k - 1] == letters.size()) {
          digit[--k] = 0;
        }
        if (k == 0) {
          return out;
        }
      }
    }

    template <class F>
    void parallel_for(std::size_t n, unsigned jobs, F const& body) {
      if (jobs == 0) {
        jobs = std::max(1u, std::thread::hardware_concurrency());
      }
      jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
      std::atomic<std::size_t> next{0};
      std::exception_ptr       error;
      std::atomic<bool>        failed{false};
      auto                     worker = [&] {
        for (std::size_t i; !failed && (i = next++) < n;) {
          try {
            body(i);
          } catch (...) {
            if (!failed.exchange(true)) {
              error = std::current_exception();
            }
          }
        }
      };
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < jobs; ++t) {
        pool.emplace_back(worker);
      }
      worker();
      for (auto& t : pool) {
        t.join();
      }
      if (error) {
        std::rethrow_exception(error);
      }
    }
  }  // namespace

  Classification classify_words(AlphabetSpec const& alpha, ClassifyOptions const& opts) {
    if (opts.length > opts.cap) {
      throw ContractError("length " + std::to_string(opts.length) + " exceeds the cap of "
                          + std::to_string(opts.cap));
    }
    for (auto const& name : alpha.names()) {
      if (name.size() != 1) {
        throw ContractError("classification needs single-character letter names");
      }
    }
    Classification c;
    for (auto const& w : enumerate(alpha, opts.length)) {
      c.words.push_back({w, {}, -1, {}, -1});
    }
    std::vector<Nanoword> nano(c.words.size());
    auto                  report_opts = opts.report;
    parallel_for(c.words.size(), opts.jobs, [&](std::size_t i) {
      nano[i] = desingularize(parse_plain_word(c.words[i].word, alpha));
      c.words[i].report = make_report(nano[i], alpha, report_opts);
    });

    int const n = static_cast<int>(c.words.size());
    UnionFind uf(c.words.size());
    // isomorphic words, and all words proven contractible
    int first_contractible = -1;
    for (int i = 0; i < n; ++i) {
      auto const& r = c.words[i].report;
      for (int j = 0; j < i; ++j) {
        if (c.words[j].report.canonical == r.canonical) {
          uf.join(i, j);
          break;
        }
      }
      if (r.verdict == Contractibility::Contractible) {
        if (first_contractible < 0) {
          first_contractible = i;
        } else {
          uf.join(i, first_contractible);
        }
      }
    }
    // oracle searches between classes that no invariant separates
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < i; ++j) {
        if (uf.find(j) != j || uf.find(i) == uf.find(j)) {
          continue;
        }
        if (separating_invariant(c.words[i].report, c.words[j].report)) {
          continue;
        }
        SearchOptions so = report_opts.search;
        if (so.max_len == 0) {
          so.max_len = std::max(nano[i].length(), nano[j].length()) + report_opts.extra_len;
        }
        auto out = equivalent_bounded(nano[i], nano[j], alpha, so);
        if (out.verdict == Verdict::Equivalent) {
          if (!(canonical_form(replay(nano[i], out.witness, alpha)) == canonical_form(nano[j]))) {
            throw std::logic_error("equivalence witness does not replay");
          }
          c.words[i].witness = std::move(out.witness);
          c.words[i].via     = j;
          uf.join(i, j);
          break;
        }
      }
    }

    std::vector<int> class_index(c.words.size(), -1);
    for (int i = 0; i < n; ++i) {
      int const root = uf.find(i);
      if (class_index[root] < 0) {
        class_index[root] = static_cast<int>(c.classes.size());
        c.classes.emplace_back();
      }
      c.words[i].cls = class_index[root];
      auto& cls      = c.classes[class_index[root]];
      cls.members.push_back(i);
      auto const& r = c.words[i].report;
      if (r.verdict == Contractibility::Contractible) {
        cls.verdict = Contractibility::Contractible;
      } else if (r.verdict == Contractibility::NonContractible
                 && cls.verdict == Contractibility::Unknown) {
        cls.verdict     = Contractibility::NonContractible;
        cls.certificate = r.certificate;
      }
    }

    for (int a = 0; a < static_cast<int>(c.classes.size()); ++a) {
      for (int b = a + 1; b < static_cast<int>(c.classes.size()); ++b) {
        auto const& ra  = c.words[c.classes[a].members.front()];
        auto const& rb  = c.words[c.classes[b].members.front()];
        auto        sep = separating_invariant(ra.report, rb.report);
        if (sep) {
          c.edges.push_back({a, b, true, *sep});
        } else {
          std::size_t bound = report_opts.search.max_len;
          if (bound == 0) {
            bound = std::max(ra.report.length, rb.report.length) + report_opts.extra_len;
          }
          c.edges.push_back({a, b, false,
                             "no witness within max_len " + std::to_string(bound) + ", max_states "
                                 + std::to_string(report_opts.search.max_states)});
        }
      }
    }
    return c;
  }

  std::string classification_text(Classification const& c, AlphabetSpec const& alpha) {
    std::string out;
    for (std::size_t k = 0; k < c.classes.size(); ++k) {
      auto const& cls = c.classes[k];
      out += "class " + std::to_string(k) + "  " + std::string(contractibility_name(cls.verdict));
      if (!cls.certificate.empty()) {
        out += "  (" + cls.certificate + ")";
      }
      out += "\n  ";
      for (std::size_t m = 0; m < cls.members.size(); ++m) {
        auto const& w = c.words[cls.members[m]];
        out += (m ? " " : "") + w.word;
        if (w.via >= 0) {
          out += "[" + std::to_string(w.witness.size()) + " moves to " + c.words[w.via].word + "]";
        }
      }
      out += "\n";
    }
    std::size_t unknown = 0;
    for (auto const& e : c.edges) {
      if (!e.separated) {
        ++unknown;
        out += "UNKNOWN class " + std::to_string(e.a) + " vs class " + std::to_string(e.b) + ": "
               + e.detail + "\n";
      }
    }
    out += std::to_string(c.words.size()) + " words, " + std::to_string(c.classes.size())
           + " classes, " + std::to_string(c.edges.size() - unknown) + " separated pairs, "
           + std::to_string(unknown) + " unknown\n";
    (void)alpha;
    return out;
  }

  std::string classification_json(Classification const& c, AlphabetSpec const& alpha) {
    using nlohmann::ordered_json;
    ordered_json j;
    ordered_json classes = ordered_json::array();
    for (auto const& cls : c.classes) {
      ordered_json members = ordered_json::array();
      for (int m : cls.members) {
        auto const&  w = c.words[m];
        ordered_json e;
        e["word"]      = w.word;
        e["canonical"] = w.report.canonical;
        if (w.via >= 0) {
          e["witness_to"] = c.words[w.via].word;
          e["witness"]    = format_witness(w.witness, alpha);
        }
        members.push_back(e);
      }
      ordered_json o;
      o["representative"] = c.words[cls.members.front()].word;
      o["verdict"]        = contractibility_name(cls.verdict);
      if (!cls.certificate.empty()) {
        o["certificate"] = cls.certificate;
      }
      o["members"] = members;
      classes.push_back(o);
    }
    ordered_json edges = ordered_json::array();
    for (auto const& e : c.edges) {
      edges.push_back({{"a", e.a},
                       {"b", e.b},
                       {"status", e.separated ? "SEPARATED" : "UNKNOWN"},
                       {"detail", e.detail}});
    }
    j["classes"] = classes;
    j["pairs"]   = edges;
    return j.dump(2);
  }

}  // namespace nanoword
