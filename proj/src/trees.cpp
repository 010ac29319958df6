#include "eulab/trees.hpp"

#include <map>
#include <sstream>

#include "eulab/errors.hpp"

namespace eulab {

IncTree::IncTree(Flavor flavor, int first_label)
    : flavor_(flavor), first_label_(first_label), parent_{-1}, children_(1) {}

void IncTree::attach(int vertex, int gap) {
  const int fresh = size();
  parent_.push_back(vertex);
  children_.emplace_back();
  auto& kids = children_[vertex];
  kids.insert(kids.begin() + gap, fresh);
}

void IncTree::detach_last() {
  const int last = size() - 1;
  auto& kids = children_[parent_[last]];
  kids.erase(std::find(kids.begin(), kids.end(), last));
  parent_.pop_back();
  children_.pop_back();
}

std::string IncTree::canonical() const {
  std::ostringstream os;
  auto walk = [&](auto&& self, int v) -> void {
    os << first_label_ + v;
    if (children_[v].empty()) return;
    os << '(';
    for (std::size_t i = 0; i < children_[v].size(); ++i) {
      if (i > 0) os << ' ';
      self(self, children_[v][i]);
    }
    os << ')';
  };
  walk(walk, 0);
  return os.str();
}

namespace {

int vertex_count(int n, const FamilySpec& spec) {
  const int count = n - spec.first_label + 1;
  if (count < 1)
    throw InvalidParamError("tree family needs n >= " + std::to_string(spec.first_label));
  if (spec.max_degree < 0) throw InvalidParamError("degree bound must be nonnegative");
  return count;
}

// Number of ways to attach a new leaf under `vertex` (0 if not allowed).
int insertion_ways(const IncTree& t, int vertex, const FamilySpec& spec) {
  const int d = t.degree(vertex);
  if (spec.kind == FamilySpec::Kind::forest012) {
    if (vertex == 0) return 1;
    const int bound = t.parent(vertex) == 0 ? 1 : 2;
    return d < bound ? 1 : 0;
  }
  if (d >= spec.max_degree) return 0;
  return spec.kind == FamilySpec::Kind::maxdeg_plane ? d + 1 : 1;
}

void grow(IncTree& t, int target, const FamilySpec& spec, const std::function<void(const IncTree&)>& visit) {
  if (t.size() == target) {
    visit(t);
    return;
  }
  const int current = t.size();
  for (int v = 0; v < current; ++v) {
    const int ways = insertion_ways(t, v, spec);
    for (int g = 0; g < ways; ++g) {
      // non-plane trees keep children in label order: always append
      t.attach(v, spec.flavor() == Flavor::plane ? g : t.degree(v));
      grow(t, target, spec, visit);
      t.detach_last();
    }
  }
}

}  // namespace

BigInt tree_count(int n, const FamilySpec& spec) {
  const int vertices = vertex_count(n, spec);
  std::map<std::vector<int>, BigInt> states;
  if (spec.kind == FamilySpec::Kind::forest012) {
    // root, root-child deg 0, root-child deg 1, other deg 0, other deg 1, other deg 2
    states[{1, 0, 0, 0, 0, 0}] = 1;
    for (int step = 1; step < vertices; ++step) {
      std::map<std::vector<int>, BigInt> next;
      for (const auto& [s, c] : states) {
        auto add = [&](int from, int to, int ways, int fresh) {
          if (ways == 0) return;
          auto t = s;
          if (from != to) {
            --t[from];
            ++t[to];
          }
          ++t[fresh];
          next[t] += c * ways;
        };
        add(0, 0, 1, 1);
        add(1, 2, s[1], 3);
        add(3, 4, s[3], 3);
        add(4, 5, s[4], 3);
      }
      states = std::move(next);
    }
  } else {
    const int d = std::min(spec.max_degree, vertices);
    const bool plane = spec.kind == FamilySpec::Kind::maxdeg_plane;
    std::vector<int> start(d + 1, 0);
    start[0] = 1;
    states[start] = 1;
    for (int step = 1; step < vertices; ++step) {
      std::map<std::vector<int>, BigInt> next;
      for (const auto& [s, c] : states) {
        for (int deg = 0; deg < d; ++deg) {
          if (s[deg] == 0) continue;
          auto t = s;
          --t[deg];
          ++t[deg + 1];
          ++t[0];
          next[t] += c * s[deg] * (plane ? deg + 1 : 1);
        }
      }
      states = std::move(next);
    }
  }
  BigInt total = 0;
  for (const auto& [s, c] : states) total += c;
  return total;
}

void for_each_tree(int n, const FamilySpec& spec, const std::function<void(const IncTree&)>& visit) {
  const int vertices = vertex_count(n, spec);
  const BigInt count = tree_count(n, spec);
  if (count > kMaxTrees)
    throw SizeLimitError("tree enumeration guard: " + count.get_str() + " trees exceed " + std::to_string(kMaxTrees));
  IncTree t(spec.flavor(), spec.first_label);
  grow(t, vertices, spec, visit);
}

std::vector<IncTree> trees_gen(int n, const FamilySpec& spec) {
  std::vector<IncTree> out;
  for_each_tree(n, spec, [&](const IncTree& t) { out.push_back(t); });
  return out;
}

DegHist degree_histogram(const IncTree& t) {
  DegHist h;
  h.counts.assign(t.size(), 0);
  for (int v = 0; v < t.size(); ++v) {
    ++h.counts[t.degree(v)];
    if (v != 0 && t.degree(v) == 0) {
      if (t.parent(v) == 0)
        ++h.root_leaf_count;
      else
        ++h.other_leaf_count;
    }
  }
  return h;
}

TreeWeighting tree_weighting_from_string(std::string_view name) {
  if (name == "andre") return TreeWeighting::andre;
  if (name == "forest-gamma") return TreeWeighting::forest_gamma;
  if (name == "plane-leaf") return TreeWeighting::plane_leaf;
  if (name == "chenfu-3") return TreeWeighting::chenfu3;
  if (name == "deghist") return TreeWeighting::deghist;
  throw InvalidParamError("unknown tree weighting '" + std::string(name) + "'");
}

VarId degree_marker(int j) { return indexed_var("m", j); }

Poly tree_weight_poly(int n, const FamilySpec& spec, TreeWeighting weighting) {
  if (weighting == TreeWeighting::forest_gamma && spec.kind != FamilySpec::Kind::forest012)
    throw InvalidParamError("forest-gamma weighting needs the forest012 family");
  const VarId u("u"), v("v"), t("t"), x("x");

  std::map<Monomial, std::uint64_t> counts;
  for_each_tree(n, spec, [&](const IncTree& tree) {
    const DegHist h = degree_histogram(tree);
    const int leaves = h.counts[0];
    const int unary = h.counts.size() > 1 ? h.counts[1] : 0;
    Monomial m;
    switch (weighting) {
      case TreeWeighting::andre: m = Monomial(u, leaves) * Monomial(v, unary); break;
      case TreeWeighting::forest_gamma: m = Monomial(t, h.root_leaf_count) * Monomial(u, h.other_leaf_count); break;
      case TreeWeighting::plane_leaf: m = Monomial(x, leaves); break;
      case TreeWeighting::chenfu3:
      case TreeWeighting::deghist:
        for (std::size_t d = 0; d < h.counts.size(); ++d)
          m = m * Monomial(degree_marker(static_cast<int>(d) + 1), h.counts[d]);
        break;
    }
    ++counts[m];
  });
  Poly out;
  for (const auto& [m, c] : counts) out.add_term(m, Rational(std::to_string(c)));
  return out;
}

int e_index_for_slot(int j, int k) { return k - j + 2; }

Monomial histogram_to_e_monomial(const std::vector<int>& hist, int k) {
  Monomial m;
  for (int j = 1; j <= static_cast<int>(hist.size()); ++j) {
    if (hist[j - 1] == 0) continue;
    const int idx = e_index_for_slot(j, k);
    if (idx < 0) throw InvalidParamError("degree " + std::to_string(j - 1) + " exceeds the bound k+1");
    if (idx == 0) continue;  // e_0 = 1
    m = m * Monomial(indexed_var("e", idx), hist[j - 1]);
  }
  return m;
}

std::vector<int> e_monomial_to_histogram(const Monomial& m, int n, int k) {
  std::vector<int> hist(n, 0);
  int total = 0;
  for (const auto& [var, e] : m.entries()) {
    const std::string& name = var.name();
    if (name.rfind("e_", 0) != 0) throw InvalidParamError("not an e-alphabet monomial: " + to_string(m));
    const int idx = std::stoi(name.substr(2));
    const int j = k - idx + 2;
    if (j < 1 || j > n) throw InvalidParamError("e_" + std::to_string(idx) + " has no histogram slot for n = " + std::to_string(n));
    hist[j - 1] = static_cast<int>(e);
    total += static_cast<int>(e);
  }
  const int zero_slot = k + 2;  // degree k+1 vertices carry e_0 = 1
  if (total < n) {
    if (zero_slot > n) throw InvalidParamError("histogram does not sum to n: " + to_string(m));
    hist[zero_slot - 1] = n - total;
  }
  return hist;
}

}  // namespace eulab
