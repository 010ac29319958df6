#pragma once

// k-Stirling permutations: words on {1^k, ..., n^k} in which every letter
// between two copies of i is at least i.

#include <cstdint>
#include <functional>
#include <vector>

#include "eulab/exactalg.hpp"

namespace eulab {

class StirlingWord {
 public:
  /// Throws InvalidParamError unless `word` is a k-Stirling permutation.
  StirlingWord(int k, std::vector<int> word);

  int k() const { return k_; }
  int order() const { return n_; }
  const std::vector<int>& letters() const { return word_; }

  friend bool operator==(const StirlingWord&, const StirlingWord&) = default;

 private:
  int k_;
  int n_;
  std::vector<int> word_;
};

/// Ascents, descents and plateaux over indices 0..kn with sigma_0 =
/// sigma_{kn+1} = 0. plat_j[j-1] counts j-plateaux, j = 1..k-1.
struct StirlingStats {
  int asc = 0;
  int des = 0;
  int plat = 0;
  std::vector<int> plat_j;
};

StirlingStats stirling_stats(const StirlingWord& w);

inline constexpr std::uint64_t kMaxStirlingWords = 10'000'000;

/// |Q_n(k)| = prod_{i=0}^{n-1} (ki+1), saturating at UINT64_MAX.
std::uint64_t stirling_count(int n, int k);

/// Visits every word of Q_n(k) once, built by inserting the block m^k into
/// each of the k(m-1)+1 gaps of every word of Q_{m-1}(k). Throws
/// SizeLimitError when the count exceeds kMaxStirlingWords.
void for_each_stirling(int n, int k, const std::function<void(const StirlingWord&)>& visit);
std::vector<StirlingWord> stirling_gen(int n, int k);

/// Sum over Q_n(k) of x_1^{plat_1} ... x_{k-1}^{plat_{k-1}} x_k^{des} x_{k+1}^{asc}.
Poly kth_order_poly(int n, int k);

}  // namespace eulab
