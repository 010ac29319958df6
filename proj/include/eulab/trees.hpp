#pragma once

// Increasing trees built by leaf insertion: degree-bounded plane and
// non-plane families, and 0-1-2 increasing rooted forests.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "eulab/exactalg.hpp"

namespace eulab {

enum class Flavor { plane, nonplane };

struct FamilySpec {
  enum class Kind { maxdeg_nonplane, maxdeg_plane, forest012 };

  Kind kind = Kind::maxdeg_plane;
  /// Maximum number of children. For forest012 the bound is fixed: the root
  /// is unbounded, root children have at most one child, everything else at
  /// most two.
  int max_degree = 2;
  /// Smallest label; the vertex set is {first_label, ..., n}.
  int first_label = 1;

  Flavor flavor() const { return kind == Kind::maxdeg_plane ? Flavor::plane : Flavor::nonplane; }

  /// Non-plane trees on {0..n} with at most d children per vertex.
  static FamilySpec nonplane(int d) { return {Kind::maxdeg_nonplane, d, 0}; }
  /// Plane trees on [n] with at most d children per vertex.
  static FamilySpec plane(int d) { return {Kind::maxdeg_plane, d, 1}; }
  /// 0-1-2 increasing rooted forests on {0..n}.
  static FamilySpec forest() { return {Kind::forest012, 2, 0}; }
};

/// An increasing tree stored as ordered child lists. Vertex v has label
/// first_label + v; vertex 0 is the root.
class IncTree {
 public:
  IncTree(Flavor flavor, int first_label);

  Flavor flavor() const { return flavor_; }
  int first_label() const { return first_label_; }
  int size() const { return static_cast<int>(children_.size()); }
  int max_label() const { return first_label_ + size() - 1; }

  int degree(int vertex) const { return static_cast<int>(children_[vertex].size()); }
  int parent(int vertex) const { return parent_[vertex]; }
  const std::vector<int>& children(int vertex) const { return children_[vertex]; }

  /// Appends the next label as a child of `vertex` at child position `gap`
  /// (0 = leftmost).
  void attach(int vertex, int gap);
  void detach_last();

  /// Preorder serialization with child lists, e.g. "0(1(2)3)".
  std::string canonical() const;

 private:
  Flavor flavor_;
  int first_label_;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
};

inline constexpr std::uint64_t kMaxTrees = 10'000'000;

/// Exact family size, computed by dynamic programming over degree
/// histograms (independent of the enumeration).
BigInt tree_count(int n, const FamilySpec& spec);

/// Visits every tree of the family with labels {first_label..n} exactly once.
/// Plane insertion puts the new label into any of the d+1 gaps of a degree-d
/// vertex; non-plane insertion attaches it once per eligible vertex. Throws
/// SizeLimitError when tree_count exceeds kMaxTrees.
void for_each_tree(int n, const FamilySpec& spec, const std::function<void(const IncTree&)>& visit);
std::vector<IncTree> trees_gen(int n, const FamilySpec& spec);

/// Degree histogram: counts[j] = number of vertices with j children.
struct DegHist {
  std::vector<int> counts;
  int root_leaf_count = 0;   // forests: leaves that are children of the root
  int other_leaf_count = 0;  // forests: all other leaves
};

DegHist degree_histogram(const IncTree& t);

enum class TreeWeighting { andre, forest_gamma, plane_leaf, chenfu3, deghist };

TreeWeighting tree_weighting_from_string(std::string_view name);

/// Generating polynomial of a tree family:
///  andre         u^{leaves} v^{degree-1 vertices}
///  forest-gamma  t^{root leaves} u^{other leaves}
///  plane-leaf    x^{leaves}
///  chenfu-3      same markers as deghist
///  deghist       prod_j m_j^{i_j}, i_j = number of degree j-1 vertices
Poly tree_weight_poly(int n, const FamilySpec& spec, TreeWeighting weighting);

/// Marker variable m_j for degree j-1 vertices.
VarId degree_marker(int j);

/// Correspondence between the degree histogram (i_1, ..., i_n) of a tree on
/// [n] and monomials in e_0..e_{k+1}: i_j is the exponent of e_{k-j+2}.
/// e_0 is the constant 1 and is dropped from monomials; its exponent is
/// recovered from i_1 + ... + i_n = n.
int e_index_for_slot(int j, int k);
Monomial histogram_to_e_monomial(const std::vector<int>& hist, int k);
std::vector<int> e_monomial_to_histogram(const Monomial& m, int n, int k);

}  // namespace eulab
