#include "eulab/series.hpp"

#include <algorithm>

#include "eulab/errors.hpp"

namespace eulab {

Series::Series(int order) {
  if (order < 0) throw InvalidParamError("series order must be nonnegative");
  coeffs_.resize(order + 1);
}

Series::Series(int order, std::vector<Poly> coeffs) : Series(order) {
  for (int n = 0; n <= order && n < static_cast<int>(coeffs.size()); ++n)
    coeffs_[n] = std::move(coeffs[n]);
}

Series Series::constant(const Poly& c, int order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::linear(const Poly& a, int order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = a;
  return s;
}

Series Series::truncate(int order) const {
  Series out(std::min(order, this->order()));
  for (int n = 0; n <= out.order(); ++n) out.coeffs_[n] = coeffs_[n];
  return out;
}

Series& Series::operator+=(const Series& o) {
  *this = truncate(o.order());
  for (int n = 0; n <= order(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

Series& Series::operator-=(const Series& o) {
  *this = truncate(o.order());
  for (int n = 0; n <= order(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

Series operator+(const Series& a, const Series& b) {
  Series out = a;
  return out += b;
}

Series operator-(const Series& a, const Series& b) {
  Series out = a;
  return out -= b;
}

Series operator*(const Series& a, const Series& b) {
  Series out(std::min(a.order(), b.order()));
  for (int i = 0; i <= out.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= out.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

Series operator*(const Poly& c, const Series& a) {
  return a.map([&](const Poly& p) { return c * p; });
}

Series divide(const Series& a, const Series& b) {
  const int order = std::min(a.order(), b.order());
  const Poly& lead = b[0];
  if (lead.is_zero()) throw NonInvertibleConstantTermError("divisor has zero constant term");
  std::optional<Rational> inverse;
  if (lead.is_constant()) inverse = 1 / lead.constant_term();

  Series q(order);
  for (int n = 0; n <= order; ++n) {
    Poly r = a[n];
    for (int i = 0; i < n; ++i) r -= q[i] * b[n - i];
    if (inverse) {
      q[n] = r * *inverse;
    } else {
      auto quotient = exact_divide(r, lead);
      if (!quotient)
        throw NonInvertibleConstantTermError("constant term " + to_string(lead) + " does not divide " +
                                             to_string(r) + " at z^" + std::to_string(n));
      q[n] = std::move(*quotient);
    }
  }
  return q;
}

Series exp(const Series& a) {
  if (!a[0].is_zero()) throw NonzeroConstantTermError("exp needs a zero constant term");
  Series out(a.order());
  out[0] = Poly(1L);
  // n e_n = sum_{k=1}^{n} k a_k e_{n-k}
  for (int n = 1; n <= a.order(); ++n) {
    Poly acc;
    for (int k = 1; k <= n; ++k) {
      if (a[k].is_zero()) continue;
      acc += Rational(k) * (a[k] * out[n - k]);
    }
    out[n] = acc * Rational(1, n);
  }
  return out;
}

Series compose(const Series& outer, const Series& inner) {
  if (!inner[0].is_zero()) throw NonzeroConstantTermError("compose needs an inner series with zero constant term");
  const int order = std::min(outer.order(), inner.order());
  Series result = Series::constant(outer[order], order);
  for (int n = order - 1; n >= 0; --n) {
    result = result * inner.truncate(order);
    result[0] += outer[n];
  }
  return result;
}

Series diff_z(const Series& a) {
  if (a.order() == 0) return Series(0);
  Series out(a.order() - 1);
  for (int n = 0; n < a.order(); ++n) out[n] = a[n + 1] * Rational(n + 1);
  return out;
}

namespace {

Series trig_series(int order, int parity) {
  Series out(order);
  Rational term(1);  // 1/n!
  for (int n = 0; n <= order; ++n) {
    if (n > 0) term /= n;
    if (n % 2 == parity) {
      int sign = ((n - parity) / 2) % 2 == 0 ? 1 : -1;
      out[n] = Poly(term * sign);
    }
  }
  return out;
}

Series exp_linear(const Poly& a, int order) { return exp(Series::linear(a, order)); }

}  // namespace

Series sin_series(int order) { return trig_series(order, 1); }
Series cos_series(int order) { return trig_series(order, 0); }

Poly egf_coefficient(const Series& s, int n) {
  Rational factorial(1);
  for (int i = 2; i <= n; ++i) factorial *= i;
  return s[n] * factorial;
}

EgfName egf_name_from_string(std::string_view name) {
  if (name == "trivariate") return EgfName::trivariate;
  if (name == "derangement") return EgfName::derangement;
  if (name == "fixpoint") return EgfName::fixpoint;
  if (name == "bivariate") return EgfName::bivariate;
  if (name == "no-succession") return EgfName::no_succession;
  if (name == "gamma-xy") return EgfName::gamma_xy;
  throw InvalidParamError("unknown generating function '" + std::string(name) + "'");
}

std::string to_string(EgfName name) {
  switch (name) {
    case EgfName::trivariate: return "trivariate";
    case EgfName::derangement: return "derangement";
    case EgfName::fixpoint: return "fixpoint";
    case EgfName::bivariate: return "bivariate";
    case EgfName::no_succession: return "no-succession";
    case EgfName::gamma_xy: return "gamma-xy";
  }
  return {};
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  BigInt num = q.get_num();
  BigInt den = q.get_den();
  BigInt rn = sqrt(num);
  BigInt rd = sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

namespace {

// y e^{xz} - x e^{yz}
Series eulerian_denominator(int order) {
  const Poly x = Poly::var("x");
  const Poly y = Poly::var("y");
  return y * exp_linear(x, order) - x * exp_linear(y, order);
}

Series fixpoint_egf(int order) {
  const Poly x = Poly::var("x");
  const Poly y = Poly::var("y");
  const Poly s = Poly::var("s");
  return divide((y - x) * exp_linear(s, order), eulerian_denominator(order));
}

Series gamma_xy_egf(int order, const EgfParams& params) {
  auto y_it = params.find("y");
  if (y_it == params.end()) throw InvalidParamError("gamma-xy needs a rational value for y");
  auto root = rational_sqrt(2 * y_it->second - 1);
  if (!root) throw InvalidParamError("2y-1 = " + to_string(Rational(2 * y_it->second - 1)) + " is not a rational square");
  if (*root == 0) throw InvalidParamError("gamma-xy closed form is degenerate at y = 1/2");
  const Rational r = *root;

  const Series arg = Series::linear(Poly(Rational(r / 2)), order);
  const Series cos_part = compose(cos_series(order), arg);
  const Series sin_part = compose(sin_series(order), arg);
  const Series one = Series::constant(Poly(1L), order);
  const Series sec = divide(one, cos_part);
  const Series tan = divide(sin_part, cos_part);

  const Series base = divide(Poly(r) * sec, Series::constant(Poly(r), order) - tan);
  const Poly x = Poly::var("x");
  return exp_linear(x - Poly(1L), order) * (base * base);
}

}  // namespace

Series egf_build(EgfName name, int order, const EgfParams& params) {
  const Poly x = Poly::var("x");
  const Poly y = Poly::var("y");
  const Poly s = Poly::var("s");

  Series out(order);
  switch (name) {
    case EgfName::trivariate: {
      Series ratio = divide(Series::constant(y - x, order), eulerian_denominator(order));
      out = exp_linear(y + s, order) * (ratio * ratio);
      break;
    }
    case EgfName::fixpoint:
      out = fixpoint_egf(order);
      break;
    case EgfName::derangement: {
      Substitution at{{VarId("y"), Poly(1L)}, {VarId("s"), Poly(0L)}};
      out = fixpoint_egf(order).map([&](const Poly& p) { return subst(p, at); });
      break;
    }
    case EgfName::bivariate:
      out = divide((y - x) * exp_linear(y, order), eulerian_denominator(order));
      break;
    case EgfName::no_succession:
      out = divide(Series::constant(Poly(1L) - x, order), exp_linear(x, order) - x * exp_linear(Poly(1L), order));
      break;
    case EgfName::gamma_xy:
      out = gamma_xy_egf(order, params);
      break;
  }

  Substitution bind;
  for (const auto& [var, value] : params) {
    if (name == EgfName::gamma_xy && var == "y") continue;
    bind.emplace(VarId(var), Poly(value));
  }
  if (!bind.empty()) out = out.map([&](const Poly& p) { return subst(p, bind); });
  return out;
}

}  // namespace eulab
