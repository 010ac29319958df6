#include "eulab/stirlingperm.hpp"

#include <limits>
#include <map>
#include <string>

#include "eulab/errors.hpp"

namespace eulab {

StirlingWord::StirlingWord(int k, std::vector<int> word) : k_(k), n_(0), word_(std::move(word)) {
  if (k < 1) throw InvalidParamError("k-Stirling permutations need k >= 1");
  if (word_.size() % k != 0) throw InvalidParamError("word length is not a multiple of k");
  n_ = static_cast<int>(word_.size()) / k;
  std::vector<int> seen(n_ + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n_) throw InvalidParamError("letter outside [n]");
    ++seen[v];
  }
  for (int v = 1; v <= n_; ++v)
    if (seen[v] != k) throw InvalidParamError("letter " + std::to_string(v) + " does not appear k times");
  // between the first and last copy of v, nothing smaller than v
  std::vector<int> first(n_ + 1, -1), last(n_ + 1, -1);
  for (int i = 0; i < static_cast<int>(word_.size()); ++i) {
    if (first[word_[i]] < 0) first[word_[i]] = i;
    last[word_[i]] = i;
  }
  for (int v = 1; v <= n_; ++v)
    for (int i = first[v]; i <= last[v]; ++i)
      if (word_[i] < v) throw InvalidParamError("not a Stirling permutation");
}

StirlingStats stirling_stats(const StirlingWord& w) {
  const auto& s = w.letters();
  const int len = static_cast<int>(s.size());
  StirlingStats out;
  out.plat_j.assign(std::max(w.k() - 1, 0), 0);
  std::vector<int> seen(w.order() + 1, 0);  // copies of each letter at indices < i
  for (int i = 0; i <= len; ++i) {
    const int cur = i == 0 ? 0 : s[i - 1];
    const int next = i == len ? 0 : s[i];
    if (cur < next) {
      ++out.asc;
    } else if (cur > next) {
      ++out.des;
    } else {
      ++out.plat;
      ++out.plat_j[seen[cur]];  // seen[cur] = j - 1 earlier copies
    }
    if (i > 0) ++seen[cur];
  }
  return out;
}

std::uint64_t stirling_count(int n, int k) {
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t factor = static_cast<std::uint64_t>(k) * i + 1;
    if (count > std::numeric_limits<std::uint64_t>::max() / factor)
      return std::numeric_limits<std::uint64_t>::max();
    count *= factor;
  }
  return count;
}

namespace {

void extend(std::vector<int>& word, int m, int n, int k, const std::function<void(const StirlingWord&)>& visit) {
  if (m > n) {
    visit(StirlingWord(k, word));
    return;
  }
  const std::size_t gaps = word.size() + 1;
  for (std::size_t g = 0; g < gaps; ++g) {
    word.insert(word.begin() + g, k, m);
    extend(word, m + 1, n, k, visit);
    word.erase(word.begin() + g, word.begin() + g + k);
  }
}

}  // namespace

void for_each_stirling(int n, int k, const std::function<void(const StirlingWord&)>& visit) {
  if (n < 1 || k < 1) throw InvalidParamError("Stirling generation needs n >= 1 and k >= 1");
  if (stirling_count(n, k) > kMaxStirlingWords)
    throw SizeLimitError("Stirling enumeration guard: |Q_" + std::to_string(n) + "(" + std::to_string(k) +
                         ")| exceeds " + std::to_string(kMaxStirlingWords));
  std::vector<int> word(k, 1);
  word.reserve(static_cast<std::size_t>(n) * k);
  extend(word, 2, n, k, visit);
}

std::vector<StirlingWord> stirling_gen(int n, int k) {
  std::vector<StirlingWord> out;
  for_each_stirling(n, k, [&](const StirlingWord& w) { out.push_back(w); });
  return out;
}

Poly kth_order_poly(int n, int k) {
  std::map<std::vector<int>, std::uint64_t> counts;  // (plat_1..plat_{k-1}, des, asc)
  for_each_stirling(n, k, [&](const StirlingWord& w) {
    StirlingStats st = stirling_stats(w);
    std::vector<int> key = st.plat_j;
    key.push_back(st.des);
    key.push_back(st.asc);
    ++counts[key];
  });
  std::vector<VarId> xs;
  for (int i = 1; i <= k + 1; ++i) xs.push_back(indexed_var("x", i));
  Poly out;
  for (const auto& [key, c] : counts) {
    Monomial m;
    for (int i = 0; i <= k; ++i) m = m * Monomial(xs[i], key[i]);
    out.add_term(m, Rational(std::to_string(c)));
  }
  return out;
}

}  // namespace eulab
