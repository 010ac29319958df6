#include "eulab/permstats.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "eulab/errors.hpp"

namespace eulab {

Perm::Perm(std::vector<int> values) : values_(std::move(values)) {
  std::vector<bool> seen(values_.size() + 1, false);
  for (int v : values_) {
    if (v < 1 || v > size() || seen[v]) throw InvalidParamError("not a permutation of [n]");
    seen[v] = true;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Perm(std::move(v));
}

StatRecord perm_stats(const Perm& p) {
  StatRecord r;
  const int n = p.size();
  auto at = [&](int i) { return (i < 1 || i > n) ? 0 : p(i); };
  for (int i = 1; i <= n; ++i) {
    if (p(i) > i) ++r.exc;
    if (p(i) < i) ++r.aexc;
    if (p(i) == i) {
      ++r.fix;
      if (i <= n - 1) r.fix_set_restricted |= 1u << (i - 1);
    }
    if (i <= n - 1) {
      if (p(i) > p(i + 1)) {
        ++r.des;
      } else {
        ++r.asc;
        if (p(i + 1) == p(i) + 1) {
          ++r.suc;
          r.suc_set |= 1u << (i - 1);
        } else {
          ++r.basc;
        }
      }
    }
    if (at(i - 1) > p(i) && p(i) > at(i + 1)) ++r.ddes;
    if (i >= 2 && i <= n - 1 && p(i - 1) < p(i) && p(i) > p(i + 1)) ++r.ipk;
  }
  return r;
}

void for_each_perm(int n, const std::function<void(const Perm&)>& visit) {
  if (n < 0) throw InvalidParamError("permutation size must be nonnegative");
  if (n > kMaxPermSize)
    throw SizeLimitError("permutation enumeration guard: n = " + std::to_string(n) + " exceeds " +
                         std::to_string(kMaxPermSize));
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    visit(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
}

PermFamily perm_family_from_string(std::string_view name) {
  if (name == "eulerian") return PermFamily::eulerian;
  if (name == "trivariate") return PermFamily::trivariate;
  if (name == "fixpoint") return PermFamily::fixpoint;
  if (name == "bivariate") return PermFamily::bivariate;
  if (name == "derangement") return PermFamily::derangement;
  if (name == "no-succession-first-not-1") return PermFamily::no_succession_first_not_1;
  if (name == "gamma-eulerian-no-ddes") return PermFamily::gamma_eulerian_no_ddes;
  if (name == "peak") return PermFamily::peak;
  throw InvalidParamError("unknown permutation family '" + std::string(name) + "'");
}

Poly perm_poly(int n, PermFamily family) {
  if (n == 0) return Poly(1L);
  // exponents of (x, y, s) -> count
  std::map<std::array<int, 3>, std::uint64_t> counts;
  for_each_perm(n, [&](const Perm& p) {
    const StatRecord r = perm_stats(p);
    switch (family) {
      case PermFamily::eulerian: ++counts[{r.des, 0, 0}]; break;
      case PermFamily::trivariate: ++counts[{r.basc, r.des, r.suc}]; break;
      case PermFamily::fixpoint: ++counts[{r.exc, r.aexc, r.fix}]; break;
      case PermFamily::bivariate: ++counts[{r.asc, r.des + 1, 0}]; break;
      case PermFamily::derangement:
        if (r.fix == 0) ++counts[{r.exc, 0, 0}];
        break;
      case PermFamily::no_succession_first_not_1:
        // with pi(0) = 0, pi(1) > 1 is a leading ascent that is not a succession
        if (r.suc == 0 && p(1) > 1) ++counts[{r.asc + 1, 0, 0}];
        break;
      case PermFamily::gamma_eulerian_no_ddes:
        if (r.ddes == 0) ++counts[{r.des, 0, 0}];
        break;
      case PermFamily::peak: ++counts[{r.ipk, 0, 0}]; break;
    }
  });
  const VarId x("x"), y("y"), s("s");
  Poly out;
  for (const auto& [e, c] : counts) {
    Monomial m = Monomial(x, e[0]) * Monomial(y, e[1]) * Monomial(s, e[2]);
    out.add_term(m, Rational(std::to_string(c)));
  }
  return out;
}

TriangleKind triangle_kind_from_string(std::string_view name) {
  if (name == "stirling2") return TriangleKind::stirling2;
  if (name == "eulerian") return TriangleKind::eulerian;
  if (name == "second-order-eulerian") return TriangleKind::second_order_eulerian;
  if (name == "surjection") return TriangleKind::surjection;
  throw InvalidParamError("unknown triangle '" + std::string(name) + "'");
}

namespace {

using Table = std::vector<std::vector<BigInt>>;

Table build_triangle(TriangleKind kind) {
  const int rows = kMaxTriangleRow + 1;
  Table t(rows, std::vector<BigInt>(rows + 1, 0));
  t[0][0] = 1;
  for (int n = 1; n < rows; ++n) {
    for (int k = 0; k <= n; ++k) {
      const BigInt& same = t[n - 1][k];
      const BigInt lower = k > 0 ? t[n - 1][k - 1] : BigInt(0);
      switch (kind) {
        case TriangleKind::stirling2: t[n][k] = k * same + lower; break;
        case TriangleKind::eulerian: t[n][k] = (k + 1) * same + (n - k) * lower; break;
        case TriangleKind::second_order_eulerian: t[n][k] = k * same + (2 * n - k) * lower; break;
        case TriangleKind::surjection: t[n][k] = k * (same + lower); break;
      }
    }
  }
  return t;
}

const Table& triangle(TriangleKind kind) {
  static const std::array<Table, 4> tables{
      build_triangle(TriangleKind::stirling2), build_triangle(TriangleKind::eulerian),
      build_triangle(TriangleKind::second_order_eulerian), build_triangle(TriangleKind::surjection)};
  return tables[static_cast<int>(kind)];
}

}  // namespace

BigInt triangle_get(TriangleKind kind, int n, int k) {
  if (n < 0 || n > kMaxTriangleRow || k < 0 || k > n)
    throw OutOfRangeError("triangle index (" + std::to_string(n) + "," + std::to_string(k) +
                          ") outside 0 <= k <= n <= " + std::to_string(kMaxTriangleRow));
  return triangle(kind)[n][k];
}

DiaconisProfile diaconis_profile(int n) {
  if (n < 1 || n > 9) throw SizeLimitError("diaconis profile needs 1 <= n <= 9");
  DiaconisProfile out;
  for_each_perm(n, [&](const Perm& p) {
    const StatRecord r = perm_stats(p);
    ++out.by_succession_set[r.suc_set];
    ++out.by_fixed_point_set[r.fix_set_restricted];
  });
  return out;
}

std::map<std::pair<int, int>, std::uint64_t> ascent_succession_counts(int n) {
  std::map<std::pair<int, int>, std::uint64_t> out;
  for_each_perm(n, [&](const Perm& p) {
    const StatRecord r = perm_stats(p);
    ++out[{r.asc, r.suc}];
  });
  return out;
}

}  // namespace eulab
