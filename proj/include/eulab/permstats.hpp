#pragma once

// Exhaustive permutation enumeration and the statistics used throughout the
// verification suite, plus the classical number triangles.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulab/exactalg.hpp"

namespace eulab {

/// A permutation pi(1)..pi(n) of [n] in one-line notation.
class Perm {
 public:
  /// Throws InvalidParamError unless `values` is a bijection on [n].
  explicit Perm(std::vector<int> values);
  static Perm identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  /// 1-based access, pi(i).
  int operator()(int i) const { return values_[i - 1]; }
  std::span<const int> values() const { return values_; }

  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<int> values_;
};

/// Statistics of a permutation. Ascents, descents, successions and big
/// ascents are boundary-free (indices in [n-1]). Double descents use
/// pi(0) = pi(n+1) = 0; interior peaks use indices 2..n-1.
struct StatRecord {
  int des = 0;
  int asc = 0;
  int exc = 0;
  int aexc = 0;
  int fix = 0;
  int suc = 0;
  int basc = 0;
  int ddes = 0;
  int ipk = 0;
  /// Bit k-1 set iff k in [n-1] is a succession.
  std::uint32_t suc_set = 0;
  /// Bit k-1 set iff k in [n-1] is a fixed point.
  std::uint32_t fix_set_restricted = 0;
};

StatRecord perm_stats(const Perm& p);

inline constexpr int kMaxPermSize = 10;

/// Visits S_n in lexicographic order. Throws SizeLimitError for n > 10.
void for_each_perm(int n, const std::function<void(const Perm&)>& visit);

enum class PermFamily {
  eulerian,                  // x^des
  trivariate,                // x^basc y^des s^suc
  fixpoint,                  // x^exc y^aexc s^fix
  bivariate,                 // x^asc y^(des+1), with A_0 = 1
  derangement,               // x^exc over derangements
  no_succession_first_not_1, // x^(asc+1) over pi with no successions, pi(1) > 1 (pi(0) = 0)
  gamma_eulerian_no_ddes,    // x^des over pi without double descents
  peak,                      // x^ipk
};

PermFamily perm_family_from_string(std::string_view name);

/// Generating polynomial of a family over S_n in the variables x, y, s.
/// n = 0 gives the empty-permutation weight (1 except where the family
/// filters it out). Throws SizeLimitError for n > 10.
Poly perm_poly(int n, PermFamily family);

enum class TriangleKind { stirling2, eulerian, second_order_eulerian, surjection };

TriangleKind triangle_kind_from_string(std::string_view name);

inline constexpr int kMaxTriangleRow = 60;

/// Exact triangle entry for 0 <= k <= n <= 60 (OutOfRangeError otherwise).
///  stirling2              S(n,k) = k S(n-1,k) + S(n-1,k-1)
///  eulerian               A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1)
///  second_order_eulerian  C(n,k) = k C(n-1,k) + (2n-k) C(n-1,k-1)
///  surjection             E(n,k) = k (E(n-1,k) + E(n-1,k-1))
/// all seeded with T(0,0) = 1.
BigInt triangle_get(TriangleKind kind, int n, int k);

using SubsetCounts = std::map<std::uint32_t, std::uint64_t>;

struct DiaconisProfile {
  SubsetCounts by_succession_set;
  SubsetCounts by_fixed_point_set;
};

/// Counts of S_n by succession set and by fixed-point set restricted to
/// [n-1]. Requires 1 <= n <= 9.
DiaconisProfile diaconis_profile(int n);

/// P(n, r, s): number of pi in S_n with r ascents and s successions, keyed
/// by (r, s).
std::map<std::pair<int, int>, std::uint64_t> ascent_succession_counts(int n);

}  // namespace eulab
