#pragma once

// Truncated power series in z with Poly coefficients.

#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eulab/exactalg.hpp"

namespace eulab {

/// Coefficients of z^0..z^order. Binary operations truncate at the smaller
/// of the two orders.
class Series {
 public:
  explicit Series(int order);
  Series(int order, std::vector<Poly> coeffs);

  static Series constant(const Poly& c, int order);
  /// a*z
  static Series linear(const Poly& a, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Poly& operator[](int n) const { return coeffs_.at(n); }
  Poly& operator[](int n) { return coeffs_.at(n); }
  std::span<const Poly> coeffs() const { return coeffs_; }

  Series truncate(int order) const;

  /// Applies f to every coefficient.
  template <class F>
  Series map(F&& f) const {
    Series out(order());
    for (int n = 0; n <= order(); ++n) out.coeffs_[n] = f(coeffs_[n]);
    return out;
  }

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const Poly& c, const Series& a);
  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Poly> coeffs_;
};

/// a / b. The constant term of b must divide every step exactly: a nonzero
/// rational always does; a polynomial constant term (such as y - x) works when
/// the quotient has polynomial coefficients. Throws
/// NonInvertibleConstantTermError otherwise.
Series divide(const Series& a, const Series& b);

/// Requires a zero constant term (NonzeroConstantTermError).
Series exp(const Series& a);

/// outer(inner(z)); inner must have zero constant term.
Series compose(const Series& outer, const Series& inner);

/// d/dz, one order lower.
Series diff_z(const Series& a);

Series sin_series(int order);
Series cos_series(int order);

/// n! times the coefficient of z^n.
Poly egf_coefficient(const Series& s, int n);

enum class EgfName { trivariate, derangement, fixpoint, bivariate, no_succession, gamma_xy };

EgfName egf_name_from_string(std::string_view name);
std::string to_string(EgfName name);

/// Optional variable bindings applied to the closed form (x, y, s, ...).
using EgfParams = std::map<std::string, Rational>;

/// Builds one of the closed-form exponential generating functions:
///  trivariate     e^{z(y+s)} ((y-x)/(y e^{xz} - x e^{yz}))^2     (A_{n+1}(x,y,s))
///  derangement    C(x,1,0;z) = (1-x)/(e^{xz} - x e^z)            (d_n(x))
///  fixpoint       (y-x) e^{sz} / (y e^{xz} - x e^{yz})          (C_n(x,y,s))
///  bivariate      (y-x) e^{yz} / (y e^{xz} - x e^{yz})          (A_n(x,y))
///  no-succession  (1-x)/(e^{xz} - x e^z), built directly          (P*_n(x))
///  gamma-xy       e^{z(x-1)} (r sec(rz/2) / (r - tan(rz/2)))^2, r = sqrt(2y-1)
/// gamma-xy needs params["y"] with 2y-1 the square of a rational (else
/// InvalidParamError); params["x"] is optional.
Series egf_build(EgfName name, int order, const EgfParams& params = {});

/// Exact rational square root, if one exists.
std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace eulab
