#include "nanoword/alphabet.hpp"

#include <algorithm>
#include <cctype>

namespace nanoword {

  bool is_valid_letter_name(std::string_view id) {
    if (id.empty()) {
      return false;
    }
    char const c0 = id.front();
    if (std::isdigit(static_cast<unsigned char>(c0)) || c0 == '+' || c0 == '-') {
      return false;
    }
    return std::none_of(id.begin(), id.end(), [](char c) {
      return std::isspace(static_cast<unsigned char>(c))
             || std::string_view(".^:#(),*").find(c) != std::string_view::npos;
    });
  }

  std::optional<Letter> AlphabetSpec::find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Letter AlphabetSpec::index(std::string_view name) const {
    auto a = find(name);
    if (!a) {
      throw ContractError("unknown letter '" + std::string(name) + "'");
    }
    return *a;
  }

  bool AlphabetSpec::has_fixed_points() const noexcept {
    for (std::size_t a = 0; a < tau_.size(); ++a) {
      if (tau_[a] == static_cast<Letter>(a)) {
        return true;
      }
    }
    return false;
  }

  bool AlphabetSpec::is_diagonal() const noexcept {
    if (diagonal_marker_) {
      return true;
    }
    if (triples_.size() != names_.size()) {
      return false;
    }
    return std::all_of(triples_.begin(), triples_.end(), [](Triple const& t) {
      return t[0] == t[1] && t[1] == t[2];
    });
  }

  bool AlphabetSpec::contains(Letter a, Letter b, Letter c) const {
    auto const n = static_cast<Letter>(names_.size());
    return triple_bits_[(a * n + b) * n + c] != 0;
  }

  std::vector<Letter> AlphabetSpec::orbit_representatives() const {
    std::vector<Letter> reps;
    for (Letter a = 0; a < static_cast<Letter>(size()); ++a) {
      if (tau(a) >= a) {
        reps.push_back(a);
      }
    }
    return reps;
  }

  AlphabetSpec
  make_alphabet(std::vector<std::string> const&                          letters,
                std::vector<std::pair<std::string, std::string>> const& involution_pairs,
                std::vector<std::string> const&                          fixed_points,
                std::variant<Diagonal, std::vector<NamedTriple>> const& triples) {
    AlphabetSpec spec;
    for (auto const& name : letters) {
      if (!is_valid_letter_name(name)) {
        throw ContractError("invalid letter name '" + name + "'");
      }
      if (spec.index_.count(name) != 0) {
        throw ContractError("duplicate letter '" + name + "'");
      }
      spec.index_.emplace(name, static_cast<Letter>(spec.names_.size()));
      spec.names_.push_back(name);
    }
    auto const n = spec.names_.size();
    spec.tau_.assign(n, -1);

    auto lookup = [&spec](std::string const& name) {
      auto it = spec.index_.find(name);
      if (it == spec.index_.end()) {
        throw ContractError("undeclared letter '" + name + "'");
      }
      return it->second;
    };
    auto assign = [&spec](Letter a, Letter b) {
      if (spec.tau_[a] != -1) {
        throw ContractError("letter '" + spec.names_[a] + "' is in two orbits");
      }
      spec.tau_[a] = b;
    };

    for (auto const& [x, y] : involution_pairs) {
      Letter a = lookup(x), b = lookup(y);
      if (a == b) {
        throw ContractError("involution pair (" + x + ", " + y
                            + ") must name two distinct letters; use 'fixed'");
      }
      assign(a, b);
      assign(b, a);
    }
    for (auto const& x : fixed_points) {
      Letter a = lookup(x);
      assign(a, a);
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (spec.tau_[a] == -1) {
        throw ContractError("letter '" + spec.names_[a] + "' is in no orbit");
      }
    }

    spec.triple_bits_.assign(n * n * n, 0);
    auto add = [&spec, n](Triple const& t) {
      auto& bit = spec.triple_bits_[(t[0] * n + t[1]) * n + t[2]];
      if (bit == 0) {
        bit = 1;
        spec.triples_.push_back(t);
      }
    };
    if (std::holds_alternative<Diagonal>(triples)) {
      spec.diagonal_marker_ = true;
      for (Letter a = 0; a < static_cast<Letter>(n); ++a) {
        add({a, a, a});
      }
    } else {
      for (auto const& t : std::get<std::vector<NamedTriple>>(triples)) {
        add({lookup(t[0]), lookup(t[1]), lookup(t[2])});
      }
    }
    return spec;
  }

  namespace presets {
    AlphabetSpec curves() {
      return make_alphabet(
          {"a", "b"}, {{"a", "b"}}, {}, std::vector<NamedTriple>{{"a", "a", "a"}, {"b", "b", "b"}});
    }

    AlphabetSpec knots() {
      std::vector<NamedTriple> s;
      // (x±, x±, x±), (x±, x±, x∓), (x∓, x±, x±) for x in {a, b}
      for (std::string x : {"a", "b"}) {
        for (auto [p, m] : {std::pair{"+", "-"}, std::pair{"-", "+"}}) {
          std::string const xp = x + p, xm = x + m;
          s.push_back({xp, xp, xp});
          s.push_back({xp, xp, xm});
          s.push_back({xm, xp, xp});
        }
      }
      return make_alphabet({"a+", "a-", "b+", "b-"}, {{"a+", "b-"}, {"a-", "b+"}}, {}, s);
    }

    AlphabetSpec two_fixed() {
      return make_alphabet({"a", "b"}, {}, {"a", "b"}, Diagonal{});
    }

    AlphabetSpec two_free_orbits() {
      return make_alphabet({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}}, {}, Diagonal{});
    }
  }  // namespace presets

}  // namespace nanoword
