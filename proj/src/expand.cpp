#include "eulab/expand.hpp"

#include <algorithm>

#include "eulab/errors.hpp"
#include "eulab/grammar.hpp"
#include "eulab/trees.hpp"

namespace eulab {

Basis basis_from_string(std::string_view name) {
  if (name == "gamma") return Basis::gamma;
  if (name == "frobenius") return Basis::frobenius;
  if (name == "partial-gamma") return Basis::partial_gamma;
  if (name == "esym") return Basis::esym;
  throw InvalidParamError("unknown basis '" + std::string(name) + "'");
}

std::string to_string(Basis b) {
  switch (b) {
    case Basis::gamma: return "gamma";
    case Basis::frobenius: return "frobenius";
    case Basis::partial_gamma: return "partial-gamma";
    case Basis::esym: return "esym";
  }
  return {};
}

Rational Expansion::at(const std::vector<int>& index) const {
  auto it = coeffs.find(index);
  return it == coeffs.end() ? Rational(0) : it->second;
}

bool Expansion::nonnegative() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const auto& kv) { return kv.second >= 0; });
}

namespace {

Poly gamma_basis(VarId v, int n, int k) {
  return Poly(Monomial(v, k), 1) * pow(Poly(1L) + Poly(v), n - 2 * k);
}

Poly frobenius_basis(VarId v, int n, int k) {
  return Poly(Monomial(v, k), 1) * pow(Poly(1L) - Poly(v), n - k);
}

Poly partial_gamma_basis(int n, int i, int j) {
  const Poly x = Poly::var("x"), y = Poly::var("y"), s = Poly::var("s");
  return pow(s + y, i) * pow(Rational(2) * x * y, j) * pow(x + y, n - i - 2 * j);
}

void require_univariate(const Poly& f, VarId v) {
  for (VarId w : f.variables())
    if (w != v) throw InvalidParamError("expected a polynomial in " + v.name() + " only, found " + w.name());
}

}  // namespace

Expansion gamma_expand(const Poly& f, VarId v, int n) {
  require_univariate(f, v);
  if (n < 0 || !is_palindromic(f, v, n))
    throw NotPalindromicError(to_string(f) + " is not palindromic of degree " + std::to_string(n) + " in " + v.name());
  Expansion out{Basis::gamma, n, {v}, {}};
  Poly residual = f;
  for (int k = 0; 2 * k <= n; ++k) {
    Rational g = residual.coeff(Monomial(v, k));
    out.coeffs[{k}] = g;
    residual -= g * gamma_basis(v, n, k);
  }
  if (!residual.is_zero()) throw NotPalindromicError("nonzero residual " + to_string(residual));
  return out;
}

Expansion frobenius_expand(const Poly& f, VarId v, int n) {
  require_univariate(f, v);
  if (f.constant_term() != 0) throw NotExpandableError("Frobenius expansion needs f(0) = 0");
  Expansion out{Basis::frobenius, n, {v}, {}};
  Poly residual = f;
  for (int k = 1; k <= n; ++k) {
    Rational c = residual.coeff(Monomial(v, k));
    out.coeffs[{k}] = c;
    residual -= c * frobenius_basis(v, n, k);
  }
  if (!residual.is_zero()) throw NotExpandableError("nonzero residual " + to_string(residual));
  return out;
}

Expansion partial_gamma_expand(const Poly& f, int n) {
  const VarId x("x"), y("y"), s("s"), t("t");
  for (VarId w : f.variables())
    if (w != x && w != y && w != s) throw InvalidParamError("partial gamma expansion expects variables x, y, s");
  if (n < 0) throw InvalidParamError("degree must be nonnegative");

  const Poly shifted = subst(f, {{s, Poly(t) - Poly(y)}});
  if (shifted.degree_in(t) > static_cast<std::uint32_t>(n))
    throw NotExpandableError("degree in s+y exceeds " + std::to_string(n));

  Expansion out{Basis::partial_gamma, n, {x, y, s}, {}};
  const std::vector<VarId> pair{x, y};
  for (int i = 0; i <= n; ++i) {
    Poly residual = shifted.coefficient_of(t, i);
    if (!is_symmetric(residual, pair))
      throw NotExpandableError("coefficient of (s+y)^" + std::to_string(i) + " is not symmetric in x, y: " +
                               to_string(residual));
    const int m = n - i;
    for (int j = 0; 2 * j <= m; ++j) {
      Rational g = residual.coeff(Monomial{{x, static_cast<std::uint32_t>(m - j)}, {y, static_cast<std::uint32_t>(j)}});
      if (g == 0) continue;
      g /= Rational(BigInt(1) << j);
      out.coeffs[{i, j}] = g;
      residual -= g * (pow(Rational(2) * Poly(x) * Poly(y), j) * pow(Poly(x) + Poly(y), m - 2 * j));
    }
    if (!residual.is_zero())
      throw NotExpandableError("residual " + to_string(residual) + " at (s+y)^" + std::to_string(i));
  }
  return out;
}

Expansion esym_expand(const Poly& f, std::span<const VarId> vars) {
  const int m = static_cast<int>(vars.size());
  for (VarId w : f.variables())
    if (std::find(vars.begin(), vars.end(), w) == vars.end())
      throw InvalidParamError("variable " + w.name() + " is not in the symmetric alphabet");
  if (!is_symmetric(f, vars)) throw NotSymmetricError(to_string(f) + " is not symmetric");

  Expansion out{Basis::esym, static_cast<int>(f.total_degree()), {vars.begin(), vars.end()}, {}};
  std::vector<std::vector<Poly>> powers(m + 1);  // powers[i][p] = e_i^p
  for (int i = 1; i <= m; ++i) powers[i].push_back(Poly(1L));
  std::vector<Poly> es(m + 1);
  for (int i = 1; i <= m; ++i) es[i] = elementary_symmetric(i, vars);
  auto e_pow = [&](int i, int p) -> const Poly& {
    while (static_cast<int>(powers[i].size()) <= p) powers[i].push_back(powers[i].back() * es[i]);
    return powers[i][p];
  };

  auto exponents = [&](const Monomial& mono) {
    std::vector<int> a(m);
    for (int i = 0; i < m; ++i) a[i] = static_cast<int>(mono.exponent(vars[i]));
    return a;
  };

  Poly residual = f;
  while (!residual.is_zero()) {
    // leading term in lex order along vars
    const std::pair<const Monomial, Rational>* lead = nullptr;
    std::vector<int> lead_exp;
    for (const auto& term : residual.terms()) {
      auto a = exponents(term.first);
      if (lead == nullptr || a > lead_exp) {
        lead = &term;
        lead_exp = std::move(a);
      }
    }
    std::vector<int> index(m);
    for (int i = 0; i < m; ++i) {
      index[i] = lead_exp[i] - (i + 1 < m ? lead_exp[i + 1] : 0);
      if (index[i] < 0) throw NotSymmetricError("leading exponent is not a partition");
    }
    const Rational c = lead->second;
    Poly product(c);
    for (int i = 0; i < m; ++i)
      if (index[i] > 0) product *= e_pow(i + 1, index[i]);
    out.coeffs[index] += c;
    residual -= product;
  }
  return out;
}

Poly esym_to_e_poly(const Expansion& e) {
  Poly out;
  for (const auto& [index, c] : e.coeffs) {
    Monomial mono;
    for (std::size_t i = 0; i < index.size(); ++i)
      mono = mono * Monomial(e_var(static_cast<int>(i) + 1), index[i]);
    out.add_term(mono, c);
  }
  return out;
}

Poly reexpand(const Expansion& e) {
  Poly out;
  switch (e.basis) {
    case Basis::gamma:
      for (const auto& [index, c] : e.coeffs) out += c * gamma_basis(e.vars.at(0), e.degree, index.at(0));
      break;
    case Basis::frobenius:
      for (const auto& [index, c] : e.coeffs) out += c * frobenius_basis(e.vars.at(0), e.degree, index.at(0));
      break;
    case Basis::partial_gamma:
      for (const auto& [index, c] : e.coeffs) out += c * partial_gamma_basis(e.degree, index.at(0), index.at(1));
      break;
    case Basis::esym: {
      Substitution expand;
      for (std::size_t i = 1; i <= e.vars.size(); ++i)
        expand.emplace(e_var(static_cast<int>(i)), elementary_symmetric(static_cast<int>(i), e.vars));
      out = subst(esym_to_e_poly(e), expand);
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

void check_table_size(int n_max) {
  if (n_max < 0 || n_max > kMaxGammaTableN)
    throw OutOfRangeError("gamma tables need 0 <= n <= " + std::to_string(kMaxGammaTableN));
}

}  // namespace

std::map<std::vector<int>, BigInt> gamma_nij_table(int n_max) {
  check_table_size(n_max);
  std::map<std::vector<int>, BigInt> out;
  out[{0, 0, 0}] = 1;
  auto g = [&](int n, int i, int j) -> BigInt {
    auto it = out.find({n, i, j});
    return it == out.end() ? BigInt(0) : it->second;
  };
  for (int n = 0; n < n_max; ++n) {
    for (int i = 0; i <= n + 1; ++i) {
      for (int j = 0; i + 2 * j <= n + 1; ++j) {
        BigInt v = g(n, i - 1, j) + (1 + i) * g(n, i + 1, j - 1) + j * g(n, i, j) + (n - i - 2 * j + 2) * g(n, i, j - 1);
        if (v != 0) out[{n + 1, i, j}] = v;
      }
    }
  }
  return out;
}

std::map<std::vector<int>, BigInt> gamma_histogram_table(int n_max) {
  check_table_size(n_max);
  const int k = std::max(n_max - 1, 1);
  const Grammar g = grammars::g10(k);
  std::map<std::vector<int>, BigInt> out;
  Poly p(indexed_var("x", 1));
  for (int n = 1; n <= n_max; ++n) {
    p = g.derive(p);
    for (const auto& [mono, c] : p.terms()) {
      std::vector<int> key{n};
      auto hist = e_monomial_to_histogram(mono, n, k);
      key.insert(key.end(), hist.begin(), hist.end());
      out[key] = c.get_num();
    }
  }
  return out;
}

std::vector<Poly> gamma_xy_table(int n_max) {
  check_table_size(n_max);
  const VarId xv("x"), yv("y");
  const Poly x(xv), y(yv), one(1L);
  std::vector<Poly> out{Poly(1L)};
  for (int n = 0; n < n_max; ++n) {
    const Poly& g = out.back();
    Poly next = (x + Rational(n) * y) * g + (y * (one - x)) * diff(g, xv) + (y * (one - Rational(2) * y)) * diff(g, yv);
    out.push_back(std::move(next));
  }
  return out;
}

void check_histogram_row(const std::vector<int>& key) {
  const int n = key.at(0);
  if (static_cast<int>(key.size()) != n + 1) throw InvalidParamError("row length does not match n");
  if (n < 2) return;
  int sum = 0;
  for (int j = 1; j <= n; ++j) sum += key[j];
  const int first = key[1];
  const int last = key[n];
  if (sum != n) throw InvalidParamError("histogram entries do not sum to n");
  if (first < 1 || first > n - 1) throw InvalidParamError("i_1 outside [1, n-1]");
  if (last != 0 && last != 1) throw InvalidParamError("i_n is not 0 or 1");
  if (last == 1 && first != n - 1) throw InvalidParamError("i_n = 1 without i_1 = n-1");
}

}  // namespace eulab
