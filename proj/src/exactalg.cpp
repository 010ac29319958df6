#include "eulab/exactalg.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "eulab/errors.hpp"

namespace eulab {

namespace {

struct InternTable {
  std::mutex mutex;
  std::deque<std::string> names{std::string{}};
  std::unordered_map<std::string, std::uint32_t> ids{{std::string{}, 0}};
};

InternTable& table() {
  static InternTable t;
  return t;
}

}  // namespace

VarId::VarId(std::string_view name) {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  auto [it, inserted] = t.ids.try_emplace(std::string(name), 0);
  if (inserted) {
    it->second = static_cast<std::uint32_t>(t.names.size());
    t.names.emplace_back(name);
  }
  id_ = it->second;
}

const std::string& VarId::name() const {
  auto& t = table();
  std::lock_guard lock(t.mutex);
  // deque never relocates existing elements
  return t.names[id_];
}

VarId indexed_var(std::string_view stem, int index) {
  std::string name(stem);
  name += '_';
  name += std::to_string(index);
  return VarId(name);
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(VarId v, std::uint32_t exponent) {
  if (exponent > 0) entries_.emplace_back(v, exponent);
}

Monomial::Monomial(std::initializer_list<Entry> entries) {
  for (const auto& [v, e] : entries) *this = with_exponent(v, exponent(v) + e);
}

std::uint32_t Monomial::exponent(VarId v) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                             [](const Entry& e, VarId x) { return e.first < x; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& e : entries_) d += e.second;
  return d;
}

Monomial Monomial::with_exponent(VarId v, std::uint32_t e) const {
  Monomial out = *this;
  auto it = std::lower_bound(out.entries_.begin(), out.entries_.end(), v,
                             [](const Entry& en, VarId x) { return en.first < x; });
  if (it != out.entries_.end() && it->first == v) {
    if (e == 0)
      out.entries_.erase(it);
    else
      it->second = e;
  } else if (e > 0) {
    out.entries_.insert(it, Entry{v, e});
  }
  return out;
}

std::optional<Monomial> Monomial::divide(const Monomial& other) const {
  Monomial out;
  out.entries_.reserve(entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (b != other.entries_.end()) {
    if (a == entries_.end() || b->first < a->first) return std::nullopt;
    if (a->first < b->first) {
      out.entries_.push_back(*a++);
      continue;
    }
    if (a->second < b->second) return std::nullopt;
    if (a->second > b->second) out.entries_.emplace_back(a->first, a->second - b->second);
    ++a;
    ++b;
  }
  out.entries_.insert(out.entries_.end(), a, entries_.end());
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first < j->first) {
      out.entries_.push_back(*i++);
    } else if (j->first < i->first) {
      out.entries_.push_back(*j++);
    } else {
      out.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.entries_.insert(out.entries_.end(), i, a.entries_.end());
  out.entries_.insert(out.entries_.end(), j, b.entries_.end());
  return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() && j != b.entries_.end()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second <=> j->second;
      ++i;
      ++j;
    } else {
      return i->first < j->first ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  if (i != a.entries_.end()) return std::strong_ordering::greater;
  if (j != b.entries_.end()) return std::strong_ordering::less;
  return std::strong_ordering::equal;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  auto da = a.degree();
  auto db = b.degree();
  if (da != db) return da < db;
  std::set<VarId, NameLess> vars;
  for (const auto& e : a.entries()) vars.insert(e.first);
  for (const auto& e : b.entries()) vars.insert(e.first);
  for (VarId v : vars) {
    auto ea = a.exponent(v);
    auto eb = b.exponent(v);
    if (ea != eb) return ea < eb;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Poly

namespace {

// mpq_class(p, q) is not reduced on construction; everything stored is.
Rational canonical(const Rational& c) {
  Rational out = c;
  out.canonicalize();
  return out;
}

}  // namespace

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, canonical(c));
}

Poly::Poly(long c) : Poly(Rational(c)) {}

Poly::Poly(VarId v) { terms_.emplace(Monomial(v), Rational(1)); }

Poly::Poly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.emplace(m, canonical(c));
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<VarId, NameLess> Poly::variables() const {
  std::set<VarId, NameLess> out;
  for (const auto& [m, c] : terms_)
    for (const auto& e : m.entries()) out.insert(e.first);
  return out;
}

std::uint32_t Poly::degree_in(VarId v) const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

std::uint32_t Poly::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Poly Poly::coefficient_of(VarId v, std::uint32_t e) const {
  Poly out;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == e) out.terms_.emplace(m.with_exponent(v, 0), c);
  return out;
}

std::vector<std::pair<Monomial, Rational>> Poly::sorted_terms() const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
  return out;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  const Rational k = canonical(c);
  auto [it, inserted] = terms_.try_emplace(m, k);
  if (!inserted) {
    it->second += k;
    if (it->second == 0) terms_.erase(it);
  }
}

void Poly::add_product(const Rational& c, const Monomial& m, const Poly& p) {
  if (c == 0) return;
  for (const auto& [pm, pc] : p.terms_) add_term(m * pm, c * pc);
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  const Rational f = canonical(c);
  for (auto& [m, k] : terms_) k *= f;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  const Poly& small = a.size() <= b.size() ? a : b;
  const Poly& large = a.size() <= b.size() ? b : a;
  for (const auto& [m, c] : small.terms_) out.add_product(c, m, large);
  return out;
}

Poly operator-(Poly a) {
  for (auto& [m, c] : a.terms_) c = -c;
  return a;
}

Poly pow(const Poly& p, unsigned exponent) {
  Poly result(1L);
  Poly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Poly diff(const Poly& p, VarId v) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    auto e = m.exponent(v);
    if (e == 0) continue;
    out.add_term(m.with_exponent(v, e - 1), c * e);
  }
  return out;
}

Poly subst(const Poly& p, const Substitution& map) {
  // cache of powers per substituted variable
  std::map<VarId, std::vector<Poly>> powers;
  auto power_of = [&](VarId v, std::uint32_t e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.emplace_back(1L);
    while (cache.size() <= e) cache.push_back(cache.back() * map.at(v));
    return cache[e];
  };

  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    Poly factor(c);
    for (const auto& [v, e] : m.entries()) {
      if (map.contains(v))
        factor = factor * power_of(v, e);
      else
        kept = kept * Monomial(v, e);
    }
    out.add_product(1, kept, factor);
  }
  return out;
}

bool is_symmetric(const Poly& p, std::span<const VarId> vars) {
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    Substitution swap{{vars[i], Poly(vars[i + 1])}, {vars[i + 1], Poly(vars[i])}};
    if (subst(p, swap) != p) return false;
  }
  return true;
}

bool is_palindromic(const Poly& p, VarId v, int n) {
  if (n < 0) return p.is_zero();
  for (const auto& [m, c] : p.terms()) {
    if (m.entries().size() > 1 || (!m.is_one() && m.entries().front().first != v)) return false;
    if (m.exponent(v) > static_cast<std::uint32_t>(n)) return false;
  }
  for (int i = 0; i <= n; ++i) {
    if (p.coeff(Monomial(v, i)) != p.coeff(Monomial(v, n - i))) return false;
  }
  return true;
}

namespace {

// Leading term under the internal lex order; any monomial order works for
// exact division.
const std::pair<const Monomial, Rational>& leading(const Poly& p) {
  return *p.terms().rbegin();
}

}  // namespace

std::optional<Poly> exact_divide(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) return std::nullopt;
  Poly remainder = dividend;
  Poly quotient;
  const auto& [dm, dc] = leading(divisor);
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = leading(remainder);
    auto qm = rm.divide(dm);
    if (!qm) return std::nullopt;
    Rational qc = rc / dc;
    quotient.add_term(*qm, qc);
    remainder.add_product(-qc, *qm, divisor);
  }
  return quotient;
}

std::vector<Rational> univariate_coeffs(const Poly& p, VarId v) {
  std::vector<Rational> out(p.degree_in(v) + 1, Rational(0));
  for (const auto& [m, c] : p.terms()) {
    if (m.entries().size() > 1 || (!m.is_one() && m.entries().front().first != v))
      throw InvalidParamError("polynomial is not univariate in " + v.name() + ": " + to_string(p));
    out[m.exponent(v)] = c;
  }
  if (p.is_zero()) out.clear();
  return out;
}

Poly from_univariate(std::span<const Rational> coeffs, VarId v) {
  Poly out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out.add_term(Monomial(v, static_cast<std::uint32_t>(i)), coeffs[i]);
  return out;
}

Poly elementary_symmetric(int k, std::span<const VarId> vars) {
  if (k < 0 || k > static_cast<int>(vars.size())) return Poly{};
  // e_k via the generating product prod (1 + x_i t), tracking degree rows
  std::vector<Poly> rows(k + 1);
  rows[0] = Poly(1L);
  for (VarId v : vars) {
    for (int j = k; j >= 1; --j) rows[j] += rows[j - 1] * Poly(v);
  }
  return rows[k];
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(const Rational& q) { return canonical(q).get_str(); }

std::string to_string(const Monomial& m) {
  if (m.is_one()) return "1";
  std::vector<Monomial::Entry> es = m.entries();
  std::sort(es.begin(), es.end(),
            [](const auto& a, const auto& b) { return a.first.name() < b.first.name(); });
  std::string out;
  for (const auto& [v, e] : es) {
    if (!out.empty()) out += '*';
    out += v.name();
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  auto terms = p.sorted_terms();
  std::ostringstream os;
  bool first = true;
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = abs(c);
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (m.is_one()) {
      os << to_string(a);
    } else {
      if (a != 1) os << to_string(a) << '*';
      os << to_string(m);
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace eulab
