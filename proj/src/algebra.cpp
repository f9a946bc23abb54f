#include "nanoword/algebra.hpp"

#include <algorithm>
#include <cctype>

#include "nanoword/text.hpp"

namespace nanoword {

  OrbitTable::OrbitTable(AlphabetSpec alpha, std::optional<std::vector<Letter>> alpha_plus)
      : alpha_(std::move(alpha)) {
    auto const n = static_cast<Letter>(alpha_.size());
    orbit_of_.assign(n, -1);
    sign_of_.assign(n, 1);
    std::vector<char> chosen(n, 0);
    if (alpha_plus) {
      for (Letter a : *alpha_plus) {
        if (a < 0 || a >= n) {
          throw ContractError("alpha_plus names a letter outside the alphabet");
        }
        if (chosen[a] || chosen[alpha_.tau(a)]) {
          throw ContractError("alpha_plus must meet every orbit exactly once");
        }
        chosen[a] = 1;
      }
    }
    for (Letter a = 0; a < n; ++a) {
      if (orbit_of_[a] >= 0) {
        continue;
      }
      Letter const b   = alpha_.tau(a);
      Letter       rep = a;
      if (alpha_plus) {
        if (!chosen[a] && !chosen[b]) {
          throw ContractError("alpha_plus misses the orbit of '" + alpha_.name(a) + "'");
        }
        rep = chosen[a] ? a : b;
      } else if (alpha_.name(b) < alpha_.name(a)) {
        rep = b;
      }
      Letter const partner = alpha_.tau(rep);
      int const    k       = static_cast<int>(orbits_.size());
      orbits_.push_back({a == b ? Kind::Fixed : Kind::Free, rep, partner});
      orbit_of_[a] = orbit_of_[b] = k;
      if (partner != rep) {
        sign_of_[partner] = -1;
      }
    }
  }

  std::vector<Letter> OrbitTable::alpha_plus() const {
    std::vector<Letter> out;
    for (auto const& o : orbits_) {
      out.push_back(o.rep);
    }
    return out;
  }

  OrbitTablePtr make_orbit_table(AlphabetSpec const&                 alpha,
                                 std::optional<std::vector<Letter>> alpha_plus) {
    return std::make_shared<OrbitTable const>(alpha, std::move(alpha_plus));
  }

  void require_same_table(OrbitTablePtr const& x, OrbitTablePtr const& y) {
    if (x && y && x != y && !(*x == *y)) {
      throw ContractError("operands belong to different alphabets");
    }
  }

  namespace {
    std::string power(std::string const& base, long long e) {
      return e == 1 ? base : base + "^" + std::to_string(e);
    }

    long long reduce_exp(OrbitTable const& t, int orbit, long long e) {
      if (t.is_fixed(orbit)) {
        e %= 2;
        return e < 0 ? -e : e;
      }
      return e;
    }
  }  // namespace

  // --- Pi

  PiElement PiElement::generator(OrbitTablePtr table, Letter a) {
    PiElement g(table);
    g.push({table->orbit_of(a), table->sign_of(a)});
    return g;
  }

  void PiElement::push(Syllable s) {
    s.exp = static_cast<int>(reduce_exp(*table_, s.orbit, s.exp));
    if (s.exp == 0) {
      return;
    }
    if (!syl_.empty() && syl_.back().orbit == s.orbit) {
      int const e = static_cast<int>(reduce_exp(*table_, s.orbit, syl_.back().exp + s.exp));
      if (e == 0) {
        syl_.pop_back();
      } else {
        syl_.back().exp = e;
      }
      return;
    }
    syl_.push_back(s);
  }

  PiElement PiElement::inverse() const {
    PiElement r(table_);
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
      r.push({it->orbit, -it->exp});
    }
    return r;
  }

  PiElement& PiElement::operator*=(PiElement const& rhs) {
    require_same_table(table_, rhs.table_);
    if (!table_) {
      table_ = rhs.table_;
    }
    for (auto const& s : rhs.syl_) {
      push(s);
    }
    return *this;
  }

  bool PiElement::is_in_commutator() const {
    return abelianize(*this).is_identity();
  }

  std::string PiElement::to_string() const {
    if (syl_.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : syl_) {
      if (!out.empty()) {
        out += ' ';
      }
      out += power(table_->generator_name(s.orbit), s.exp);
    }
    return out;
  }

  // --- pi

  AbelianPi::AbelianPi(OrbitTablePtr table) : table_(std::move(table)) {
    if (table_) {
      exp_.assign(table_->size(), 0);
    }
  }

  AbelianPi AbelianPi::generator(OrbitTablePtr table, Letter a) {
    AbelianPi g(table);
    g.exp_[table->orbit_of(a)] = table->sign_of(a);
    g.normalize();
    return g;
  }

  AbelianPi AbelianPi::from_exponents(OrbitTablePtr table, std::vector<long long> exps) {
    AbelianPi g(table);
    if (exps.size() != g.exp_.size()) {
      throw ContractError("exponent vector has the wrong length");
    }
    g.exp_ = std::move(exps);
    g.normalize();
    return g;
  }

  void AbelianPi::normalize() {
    for (std::size_t k = 0; k < exp_.size(); ++k) {
      exp_[k] = reduce_exp(*table_, static_cast<int>(k), exp_[k]);
    }
  }

  bool AbelianPi::is_identity() const noexcept {
    return std::all_of(exp_.begin(), exp_.end(), [](long long e) { return e == 0; });
  }

  AbelianPi AbelianPi::inverse() const {
    return pow(-1);
  }

  AbelianPi AbelianPi::pow(long long k) const {
    AbelianPi r = *this;
    for (auto& e : r.exp_) {
      e *= k;
    }
    if (r.table_) {
      r.normalize();
    }
    return r;
  }

  AbelianPi& AbelianPi::operator*=(AbelianPi const& rhs) {
    require_same_table(table_, rhs.table_);
    if (!table_) {
      *this = AbelianPi(rhs.table_);
    }
    for (std::size_t k = 0; k < rhs.exp_.size(); ++k) {
      exp_[k] += rhs.exp_[k];
    }
    if (table_) {
      normalize();
    }
    return *this;
  }

  std::pair<int, int> AbelianPi::grade() const {
    long long s = 0;
    for (long long e : exp_) {
      s += e;
    }
    return {static_cast<int>(((s % 2) + 2) % 2), 0};
  }

  bool AbelianPi::operator==(AbelianPi const& rhs) const {
    return (*this <=> rhs) == std::strong_ordering::equal;
  }

  std::strong_ordering AbelianPi::operator<=>(AbelianPi const& rhs) const {
    // missing entries read as zero so that a tableless identity compares equal
    auto const n = std::max(exp_.size(), rhs.exp_.size());
    auto       at = [](std::vector<long long> const& v, std::size_t k) {
      return k < v.size() ? v[k] : 0;
    };
    long long wl = 0, wr = 0;
    for (std::size_t k = 0; k < n; ++k) {
      wl += at(exp_, k) < 0 ? -at(exp_, k) : at(exp_, k);
      wr += at(rhs.exp_, k) < 0 ? -at(rhs.exp_, k) : at(rhs.exp_, k);
    }
    if (auto c = wl <=> wr; c != 0) {
      return c;
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (auto c = at(rhs.exp_, k) <=> at(exp_, k); c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string AbelianPi::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < exp_.size(); ++k) {
      if (exp_[k] == 0) {
        continue;
      }
      if (!out.empty()) {
        out += ' ';
      }
      out += power(table_->generator_name(static_cast<int>(k)), exp_[k]);
    }
    return out.empty() ? "1" : out;
  }

  AbelianPi abelianize(PiElement const& g) {
    AbelianPi r(g.table());
    if (!g.table()) {
      return r;
    }
    std::vector<long long> e(g.table()->size(), 0);
    for (auto const& s : g.syllables()) {
      e[s.orbit] += s.exp;
    }
    return AbelianPi::from_exponents(g.table(), std::move(e));
  }

  // --- Psi

  PsiElement PsiElement::generator(OrbitTablePtr table, Letter a) {
    PsiElement g(table);
    g.push({table->orbit_of(a), table->sign_of(a), 0});
    return g;
  }

  PsiElement PsiElement::bullet(OrbitTablePtr table, Letter a) {
    PsiElement g(table);
    g.push({table->orbit_of(a), 0, table->sign_of(a)});
    return g;
  }

  void PsiElement::push(Syllable s) {
    s.p = reduce_exp(*table_, s.orbit, s.p);
    s.q = reduce_exp(*table_, s.orbit, s.q);
    if (s.p == 0 && s.q == 0) {
      return;
    }
    if (!syl_.empty() && syl_.back().orbit == s.orbit) {
      auto& top = syl_.back();
      top.p     = reduce_exp(*table_, s.orbit, top.p + s.p);
      top.q     = reduce_exp(*table_, s.orbit, top.q + s.q);
      if (top.p == 0 && top.q == 0) {
        syl_.pop_back();
      }
      return;
    }
    syl_.push_back(s);
  }

  PsiElement PsiElement::inverse() const {
    PsiElement r(table_);
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) {
      r.push({it->orbit, -it->p, -it->q});
    }
    return r;
  }

  PsiElement& PsiElement::operator*=(PsiElement const& rhs) {
    require_same_table(table_, rhs.table_);
    if (!table_) {
      table_ = rhs.table_;
    }
    for (auto const& s : rhs.syl_) {
      push(s);
    }
    return *this;
  }

  PsiElement PsiElement::reversed() const {
    PsiElement r(table_);
    r.syl_.assign(syl_.rbegin(), syl_.rend());
    return r;
  }

  std::pair<int, int> PsiElement::grade() const {
    long long p = 0, q = 0;
    for (auto const& s : syl_) {
      p += s.p;
      q += s.q;
    }
    return {static_cast<int>(((p % 2) + 2) % 2), static_cast<int>(((q % 2) + 2) % 2)};
  }

  std::strong_ordering PsiElement::operator<=>(PsiElement const& rhs) const {
    if (auto c = syl_.size() <=> rhs.syl_.size(); c != 0) {
      return c;
    }
    return syl_ <=> rhs.syl_;
  }

  std::string PsiElement::to_string() const {
    if (syl_.empty()) {
      return "1";
    }
    std::string out;
    for (auto const& s : syl_) {
      auto const& name = table_->generator_name(s.orbit);
      if (s.p != 0) {
        out += (out.empty() ? "" : " ") + power(name, s.p);
      }
      if (s.q != 0) {
        out += (out.empty() ? "" : " ") + power(name + ".", s.q);
      }
    }
    return out;
  }

  // --- parsing

  namespace {
    struct Factor {
      Letter    letter;
      bool      bullet;
      long long exp;
    };

    class Reader {
     public:
      Reader(std::string_view text, OrbitTable const& table) : text_(text), table_(table) {
        names_ = table.alphabet().names();
        std::sort(names_.begin(), names_.end(),
                  [](auto const& x, auto const& y) { return x.size() > y.size(); });
      }

      [[noreturn]] void fail(std::string const& what) const {
        throw ParseError(what, 1, static_cast<int>(i_) + 1);
      }

      void skip() {
        while (i_ < text_.size()
               && (std::isspace(static_cast<unsigned char>(text_[i_])) || text_[i_] == '*')) {
          ++i_;
        }
      }
      bool done() {
        skip();
        return i_ >= text_.size();
      }
      char peek() {
        skip();
        return i_ < text_.size() ? text_[i_] : '\0';
      }
      void advance() {
        ++i_;
      }

      bool at_digit() {
        return std::isdigit(static_cast<unsigned char>(peek())) != 0;
      }

      long long integer() {
        skip();
        bool neg = false;
        if (i_ < text_.size() && (text_[i_] == '-' || text_[i_] == '+')) {
          neg = text_[i_] == '-';
          ++i_;
        }
        std::size_t const start = i_;
        long long         v     = 0;
        while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
          v = v * 10 + (text_[i_] - '0');
          ++i_;
        }
        if (i_ == start) {
          fail("expected an integer");
        }
        return neg ? -v : v;
      }

      /// Reads factors up to the next top-level '+'/'-' or end of input.
      /// Identity factors "1" are consumed and dropped.
      std::vector<Factor> monomial(bool allow_bullet) {
        std::vector<Factor> out;
        while (!done() && peek() != '+' && peek() != '-') {
          if (peek() == '1' && (i_ + 1 >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_ + 1])))) {
            ++i_;
            continue;
          }
          auto it = std::find_if(names_.begin(), names_.end(), [&](std::string const& nm) {
            return text_.substr(i_, nm.size()) == nm;
          });
          if (it == names_.end()) {
            fail("unexpected character '" + std::string(1, text_[i_]) + "'");
          }
          i_ += it->size();
          Factor f{table_.alphabet().index(*it), false, 1};
          if (i_ < text_.size() && text_[i_] == '.') {
            if (!allow_bullet) {
              fail("bullet generators are not allowed here");
            }
            f.bullet = true;
            ++i_;
          }
          if (i_ < text_.size() && text_[i_] == '^') {
            ++i_;
            std::size_t const at = i_;
            if (at < text_.size() && text_[at] == '{') {
              ++i_;
            }
            f.exp = integer();
            if (at < text_.size() && text_[at] == '{') {
              if (i_ >= text_.size() || text_[i_] != '}') {
                fail("expected '}'");
              }
              ++i_;
            }
          }
          out.push_back(f);
        }
        return out;
      }

     private:
      std::string_view         text_;
      OrbitTable const&        table_;
      std::vector<std::string> names_;
      std::size_t              i_ = 0;
    };

    template <class G, class Make>
    G build(OrbitTablePtr const& table, std::vector<Factor> const& fs, Make make) {
      G g = G::identity(table);
      for (auto const& f : fs) {
        G       x = make(f);
        G const y = f.exp < 0 ? x.inverse() : x;
        for (long long k = 0; k < (f.exp < 0 ? -f.exp : f.exp); ++k) {
          g *= y;
        }
      }
      return g;
    }

    template <class G, class Make>
    GroupRing<G> parse_ring(std::string_view text, OrbitTablePtr const& table, bool bullets,
                            Make make) {
      Reader       r(text, *table);
      GroupRing<G> out(table);
      if (r.peek() == '0' && (r.advance(), r.done())) {
        return out;
      }
      Reader rr(text, *table);
      bool   first = true;
      while (!rr.done()) {
        long long sign = 1;
        if (rr.peek() == '+' || rr.peek() == '-') {
          sign = rr.peek() == '-' ? -1 : 1;
          rr.advance();
        } else if (!first) {
          rr.fail("expected '+' or '-'");
        }
        first         = false;
        long long c = 1;
        if (rr.at_digit()) {
          c = rr.integer();
        }
        auto fs = rr.monomial(bullets);
        out.add(build<G>(table, fs, make), sign * c);
      }
      return out;
    }
  }  // namespace

  PiElement parse_pi(std::string_view text, OrbitTablePtr const& table) {
    Reader r(text, *table);
    auto   fs = r.monomial(false);
    if (!r.done()) {
      r.fail("trailing input");
    }
    return build<PiElement>(table, fs,
                            [&](Factor const& f) { return PiElement::generator(table, f.letter); });
  }

  AbelianPi parse_abelian(std::string_view text, OrbitTablePtr const& table) {
    Reader r(text, *table);
    auto   fs = r.monomial(false);
    if (!r.done()) {
      r.fail("trailing input");
    }
    return build<AbelianPi>(
        table, fs, [&](Factor const& f) { return AbelianPi::generator(table, f.letter); });
  }

  PsiElement parse_psi(std::string_view text, OrbitTablePtr const& table) {
    Reader r(text, *table);
    auto   fs = r.monomial(true);
    if (!r.done()) {
      r.fail("trailing input");
    }
    return build<PsiElement>(table, fs, [&](Factor const& f) {
      return f.bullet ? PsiElement::bullet(table, f.letter)
                      : PsiElement::generator(table, f.letter);
    });
  }

  ZPi parse_zpi(std::string_view text, OrbitTablePtr const& table) {
    return parse_ring<AbelianPi>(text, table, false, [&](Factor const& f) {
      return AbelianPi::generator(table, f.letter);
    });
  }

  Lambda parse_lambda(std::string_view text, OrbitTablePtr const& table) {
    return parse_ring<PsiElement>(text, table, true, [&](Factor const& f) {
      return f.bullet ? PsiElement::bullet(table, f.letter)
                      : PsiElement::generator(table, f.letter);
    });
  }

}  // namespace nanoword
