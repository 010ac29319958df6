#pragma once

// Exact sparse multivariate polynomials over the rationals.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace eulab {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Interned variable name. Two VarIds are equal iff their names are equal.
/// The interning table is process-wide and append-only.
class VarId {
 public:
  VarId() = default;
  explicit VarId(std::string_view name);

  const std::string& name() const;
  std::uint32_t index() const { return id_; }

  friend bool operator==(VarId a, VarId b) { return a.id_ == b.id_; }
  friend auto operator<=>(VarId a, VarId b) { return a.id_ <=> b.id_; }

 private:
  std::uint32_t id_ = 0;
};

/// Shorthand for indexed names such as x_3 or e_5.
VarId indexed_var(std::string_view stem, int index);

/// Orders variables by name (the order used for serialization and for the
/// graded lexicographic monomial order).
struct NameLess {
  bool operator()(VarId a, VarId b) const { return a.name() < b.name(); }
};

class Monomial {
 public:
  using Entry = std::pair<VarId, std::uint32_t>;

  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exponent = 1);
  Monomial(std::initializer_list<Entry> entries);

  std::uint32_t exponent(VarId v) const;
  std::uint32_t degree() const;
  bool is_one() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Sets the exponent of v (zero removes it).
  Monomial with_exponent(VarId v, std::uint32_t e) const;
  /// this / other, if other divides this.
  std::optional<Monomial> divide(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Pure lex order with variables prioritized by interning index. This is a
  /// monomial order (compatible with multiplication) but not the published
  /// one; see grlex_less.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::vector<Entry> entries_;  // sorted by VarId, exponents > 0
};

/// Graded lexicographic order on sorted variable names: total degree first,
/// then exponent vectors compared along the name-sorted union of variables.
bool grlex_less(const Monomial& a, const Monomial& b);

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c);             // NOLINT(google-explicit-constructor)
  explicit Poly(VarId v);
  Poly(const Monomial& m, const Rational& c);

  static Poly var(std::string_view name) { return Poly(VarId(name)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }

  Rational coeff(const Monomial& m) const;
  Rational constant_term() const { return coeff(Monomial{}); }
  std::set<VarId, NameLess> variables() const;
  std::uint32_t degree_in(VarId v) const;
  std::uint32_t total_degree() const;

  /// Part of the polynomial with v^e exactly, with v removed.
  Poly coefficient_of(VarId v, std::uint32_t e) const;
  /// Terms sorted by grlex_less, ascending.
  std::vector<std::pair<Monomial, Rational>> sorted_terms() const;

  void add_term(const Monomial& m, const Rational& c);
  /// this += c * m * p
  void add_product(const Rational& c, const Monomial& m, const Poly& p);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

Poly pow(const Poly& p, unsigned exponent);

/// Formal partial derivative.
Poly diff(const Poly& p, VarId v);

/// Simultaneous substitution; variables absent from the map are kept.
using Substitution = std::map<VarId, Poly>;
Poly subst(const Poly& p, const Substitution& map);

/// Invariance under all transpositions of `vars` (adjacent ones are checked).
bool is_symmetric(const Poly& p, std::span<const VarId> vars);

/// Coefficient of v^i equals coefficient of v^(n-i) for every i. False if p
/// is not univariate in v or has degree above n.
bool is_palindromic(const Poly& p, VarId v, int n);

/// Quotient of an exact division, or nullopt when `divisor` does not divide
/// `dividend`.
std::optional<Poly> exact_divide(const Poly& dividend, const Poly& divisor);

/// Coefficient list c_0..c_deg of a polynomial univariate in v. Throws
/// InvalidParamError if other variables appear.
std::vector<Rational> univariate_coeffs(const Poly& p, VarId v);
Poly from_univariate(std::span<const Rational> coeffs, VarId v);

/// Elementary symmetric polynomial e_k over the given variables.
Poly elementary_symmetric(int k, std::span<const VarId> vars);

std::string to_string(const Rational& q);
std::string to_string(const Monomial& m);
std::string to_string(const Poly& p);
std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace eulab
