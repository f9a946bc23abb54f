#ifndef NANOWORD_ALGEBRA_HPP_
#define NANOWORD_ALGEBRA_HPP_

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nanoword/alphabet.hpp"

namespace nanoword {

  /// The tau-orbits of an alphabet with a chosen representative per orbit.
  ///
  /// Free orbits {a, tau(a)} have one generator: the representative a
  /// carries exponent +1 and its partner exponent -1. Fixed orbits have a
  /// generator of order two.
  class OrbitTable {
   public:
    enum class Kind { Free, Fixed };

    struct Orbit {
      Kind   kind;
      Letter rep;
      Letter partner;

      bool operator==(Orbit const&) const = default;
    };

    /// `alpha_plus` picks one letter per orbit. Defaults to the
    /// lexicographically least name in each orbit.
    explicit OrbitTable(AlphabetSpec alpha, std::optional<std::vector<Letter>> alpha_plus = {});

    AlphabetSpec const& alphabet() const noexcept {
      return alpha_;
    }
    std::size_t size() const noexcept {
      return orbits_.size();
    }
    Orbit const& orbit(int k) const {
      return orbits_.at(k);
    }
    bool is_fixed(int k) const {
      return orbits_.at(k).kind == Kind::Fixed;
    }
    int orbit_of(Letter a) const {
      return orbit_of_.at(a);
    }
    /// +1 for representatives and fixed letters, -1 for partners.
    int sign_of(Letter a) const {
      return sign_of_.at(a);
    }
    std::string const& generator_name(int k) const {
      return alpha_.name(orbits_.at(k).rep);
    }
    std::vector<Letter> alpha_plus() const;

    bool operator==(OrbitTable const& other) const {
      return alpha_ == other.alpha_ && orbits_ == other.orbits_;
    }

   private:
    AlphabetSpec       alpha_;
    std::vector<Orbit> orbits_;
    std::vector<int>   orbit_of_;
    std::vector<int>   sign_of_;
  };

  using OrbitTablePtr = std::shared_ptr<OrbitTable const>;

  OrbitTablePtr make_orbit_table(AlphabetSpec const&                 alpha,
                                 std::optional<std::vector<Letter>> alpha_plus = {});

  /// Throws ContractError if the two tables describe different alphabets.
  void require_same_table(OrbitTablePtr const& x, OrbitTablePtr const& y);

  /// Element of the free product of cyclic groups generated by z_a with
  /// z_a z_tau(a) = 1.
  class PiElement {
   public:
    struct Syllable {
      int orbit;
      int exp;

      auto operator<=>(Syllable const&) const = default;
    };

    PiElement() = default;
    explicit PiElement(OrbitTablePtr table) : table_(std::move(table)) {}

    static PiElement identity(OrbitTablePtr table) {
      return PiElement(std::move(table));
    }
    static PiElement generator(OrbitTablePtr table, Letter a);

    OrbitTablePtr const& table() const noexcept {
      return table_;
    }
    std::vector<Syllable> const& syllables() const noexcept {
      return syl_;
    }
    bool is_identity() const noexcept {
      return syl_.empty();
    }

    PiElement  inverse() const;
    PiElement& operator*=(PiElement const& rhs);
    friend PiElement operator*(PiElement lhs, PiElement const& rhs) {
      return lhs *= rhs;
    }

    /// True iff the exponent sum per orbit vanishes (mod 2 on fixed orbits).
    bool is_in_commutator() const;

    bool operator==(PiElement const& rhs) const {
      return syl_ == rhs.syl_;
    }
    auto operator<=>(PiElement const& rhs) const {
      return syl_ <=> rhs.syl_;
    }

    std::string to_string() const;

   private:
    void push(Syllable s);

    OrbitTablePtr         table_;
    std::vector<Syllable> syl_;
  };

  /// Element of the abelianization pi: an exponent per orbit, Z for free
  /// orbits and Z/2 for fixed ones.
  class AbelianPi {
   public:
    AbelianPi() = default;
    explicit AbelianPi(OrbitTablePtr table);

    static AbelianPi identity(OrbitTablePtr table) {
      return AbelianPi(std::move(table));
    }
    static AbelianPi generator(OrbitTablePtr table, Letter a);
    static AbelianPi from_exponents(OrbitTablePtr table, std::vector<long long> exps);

    OrbitTablePtr const& table() const noexcept {
      return table_;
    }
    std::vector<long long> const& exponents() const noexcept {
      return exp_;
    }
    bool is_identity() const noexcept;

    AbelianPi  inverse() const;
    AbelianPi& operator*=(AbelianPi const& rhs);
    friend AbelianPi operator*(AbelianPi lhs, AbelianPi const& rhs) {
      return lhs *= rhs;
    }
    AbelianPi pow(long long k) const;

    /// Image under the group ring's reversal; the identity on an abelian group.
    AbelianPi reversed() const {
      return *this;
    }
    /// (parity of the total exponent, 0).
    std::pair<int, int> grade() const;

    bool operator==(AbelianPi const& rhs) const;
    std::strong_ordering operator<=>(AbelianPi const& rhs) const;

    std::string to_string() const;

   private:
    void normalize();

    OrbitTablePtr          table_;
    std::vector<long long> exp_;
  };

  /// Element of Psi: the free product over orbits of Z^2 (free orbits) or
  /// (Z/2)^2 (fixed orbits), generated by a and a. (bullet) per orbit.
  class PsiElement {
   public:
    struct Syllable {
      int       orbit;
      long long p;  // plain exponent
      long long q;  // bullet exponent

      auto operator<=>(Syllable const&) const = default;
    };

    PsiElement() = default;
    explicit PsiElement(OrbitTablePtr table) : table_(std::move(table)) {}

    static PsiElement identity(OrbitTablePtr table) {
      return PsiElement(std::move(table));
    }
    static PsiElement generator(OrbitTablePtr table, Letter a);
    static PsiElement bullet(OrbitTablePtr table, Letter a);

    OrbitTablePtr const& table() const noexcept {
      return table_;
    }
    std::vector<Syllable> const& syllables() const noexcept {
      return syl_;
    }
    bool is_identity() const noexcept {
      return syl_.empty();
    }

    PsiElement  inverse() const;
    PsiElement& operator*=(PsiElement const& rhs);
    friend PsiElement operator*(PsiElement lhs, PsiElement const& rhs) {
      return lhs *= rhs;
    }
    /// Syllable order reversed; fixes every generator.
    PsiElement reversed() const;
    /// (parity of the plain exponents, parity of the bullet exponents).
    std::pair<int, int> grade() const;

    bool operator==(PsiElement const& rhs) const {
      return syl_ == rhs.syl_;
    }
    /// Shorter elements first, then syllables lexicographically.
    std::strong_ordering operator<=>(PsiElement const& rhs) const;

    std::string to_string() const;

   private:
    void push(Syllable s);

    OrbitTablePtr         table_;
    std::vector<Syllable> syl_;
  };

  /// Integral group ring over G. Coefficients are never zero.
  template <class G>
  class GroupRing {
   public:
    using Terms = std::map<G, long long>;

    GroupRing() = default;
    explicit GroupRing(OrbitTablePtr table) : table_(std::move(table)) {}
    GroupRing(G const& g, long long c = 1) : table_(g.table()) {
      add(g, c);
    }

    static GroupRing zero(OrbitTablePtr table) {
      return GroupRing(std::move(table));
    }
    static GroupRing one(OrbitTablePtr table) {
      return GroupRing(G::identity(table));
    }
    static GroupRing integer(OrbitTablePtr table, long long c) {
      return GroupRing(G::identity(table), c);
    }

    OrbitTablePtr const& table() const noexcept {
      return table_;
    }
    Terms const& terms() const noexcept {
      return terms_;
    }
    bool is_zero() const noexcept {
      return terms_.empty();
    }
    long long coefficient(G const& g) const {
      auto it = terms_.find(g);
      return it == terms_.end() ? 0 : it->second;
    }

    void add(G const& g, long long c) {
      if (c == 0) {
        return;
      }
      adopt(g.table());
      auto [it, inserted] = terms_.emplace(g, c);
      if (!inserted && (it->second += c) == 0) {
        terms_.erase(it);
      }
    }

    GroupRing& operator+=(GroupRing const& rhs) {
      adopt(rhs.table_);
      for (auto const& [g, c] : rhs.terms_) {
        add(g, c);
      }
      return *this;
    }
    GroupRing& operator-=(GroupRing const& rhs) {
      adopt(rhs.table_);
      for (auto const& [g, c] : rhs.terms_) {
        add(g, -c);
      }
      return *this;
    }
    GroupRing operator-() const {
      GroupRing r(table_);
      for (auto const& [g, c] : terms_) {
        r.terms_.emplace(g, -c);
      }
      return r;
    }
    friend GroupRing operator+(GroupRing lhs, GroupRing const& rhs) {
      return lhs += rhs;
    }
    friend GroupRing operator-(GroupRing lhs, GroupRing const& rhs) {
      return lhs -= rhs;
    }
    friend GroupRing operator*(GroupRing const& lhs, GroupRing const& rhs) {
      require_same_table(lhs.table_, rhs.table_);
      GroupRing r(lhs.table_ ? lhs.table_ : rhs.table_);
      for (auto const& [g, c] : lhs.terms_) {
        for (auto const& [h, d] : rhs.terms_) {
          r.add(g * h, c * d);
        }
      }
      return r;
    }
    GroupRing& operator*=(GroupRing const& rhs) {
      return *this = *this * rhs;
    }
    friend GroupRing operator*(long long k, GroupRing const& x) {
      GroupRing r(x.table_);
      if (k != 0) {
        for (auto const& [g, c] : x.terms_) {
          r.terms_.emplace(g, k * c);
        }
      }
      return r;
    }

    /// Anti-automorphism induced by G::reversed().
    GroupRing iota() const {
      GroupRing r(table_);
      for (auto const& [g, c] : terms_) {
        r.add(g.reversed(), c);
      }
      return r;
    }

    /// Component of grade (i, j).
    GroupRing graded(int i, int j) const {
      GroupRing r(table_);
      for (auto const& [g, c] : terms_) {
        if (g.grade() == std::pair{i, j}) {
          r.terms_.emplace(g, c);
        }
      }
      return r;
    }

    /// Coefficients reduced mod 2.
    GroupRing mod2() const {
      GroupRing r(table_);
      for (auto const& [g, c] : terms_) {
        if (c % 2 != 0) {
          r.terms_.emplace(g, 1);
        }
      }
      return r;
    }

    bool operator==(GroupRing const& rhs) const {
      return terms_ == rhs.terms_;
    }
    auto operator<=>(GroupRing const& rhs) const {
      return terms_ <=> rhs.terms_;
    }

    std::string to_string() const {
      if (terms_.empty()) {
        return "0";
      }
      std::string out;
      bool        first = true;
      for (auto const& [g, c] : terms_) {
        long long const mag = c < 0 ? -c : c;
        if (first) {
          out += c < 0 ? "-" : "";
        } else {
          out += c < 0 ? " - " : " + ";
        }
        first = false;
        if (g.is_identity()) {
          out += std::to_string(mag);
        } else {
          if (mag != 1) {
            out += std::to_string(mag) + " ";
          }
          out += g.to_string();
        }
      }
      return out;
    }

   private:
    void adopt(OrbitTablePtr const& t) {
      require_same_table(table_, t);
      if (!table_) {
        table_ = t;
      }
    }

    OrbitTablePtr table_;
    Terms         terms_;
  };

  using ZPi    = GroupRing<AbelianPi>;
  using Lambda = GroupRing<PsiElement>;

  PiElement  parse_pi(std::string_view text, OrbitTablePtr const& table);
  AbelianPi  parse_abelian(std::string_view text, OrbitTablePtr const& table);
  PsiElement parse_psi(std::string_view text, OrbitTablePtr const& table);
  ZPi        parse_zpi(std::string_view text, OrbitTablePtr const& table);
  Lambda     parse_lambda(std::string_view text, OrbitTablePtr const& table);

  /// Abelianization Pi -> pi.
  AbelianPi abelianize(PiElement const& g);

}  // namespace nanoword

#endif  // NANOWORD_ALGEBRA_HPP_
