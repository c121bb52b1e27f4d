#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/error.hpp"

namespace schubert {

/// A node of the Dynkin diagram. Ids are contiguous from 0 within one matrix;
/// the display name is what appears in words, documents and reports.
struct NodeLabel {
  int id = 0;
  std::string display;

  friend bool operator==(const NodeLabel&, const NodeLabel&) = default;
};

/// A finite-type generalized Cartan matrix a[s][t] over labeled nodes.
///
/// Instances are immutable and only obtainable through validate() or the
/// built-in constructors, so every CartanMatrix in the program satisfies:
///   - a[s][s] = 2,
///   - a[s][t] <= 0 for s != t,
///   - a[s][t] = 0 iff a[t][s] = 0,
///   - a[s][t]*a[t][s] in {0,1,2,3} for s != t,
///   - the symmetrized form is positive definite.
class CartanMatrix {
 public:
  static CartanMatrix validate(std::vector<std::vector<int>> entries,
                               std::vector<NodeLabel> labels);
  /// Same, with labels displayed "1".."n".
  static CartanMatrix validate(std::vector<std::vector<int>> entries);

  int rank() const { return static_cast<int>(labels_.size()); }
  /// a_{st}. Throws unknown_label on an out-of-range index.
  int entry(int s, int t) const;
  const std::vector<NodeLabel>& labels() const { return labels_; }
  const NodeLabel& label(int s) const;
  std::optional<int> find_display(std::string_view display) const;

  /// Principal submatrix on the given node ids, re-indexed from 0 in
  /// ascending id order with display names preserved.
  CartanMatrix submatrix(const std::vector<int>& subset) const;

  /// Coxeter bond order m_st: 1 on the diagonal, else 2,3,4,6 as
  /// a[s][t]*a[t][s] = 0,1,2,3.
  int bond_order(int s, int t) const;

  bool same_entries(const CartanMatrix& other) const { return entries_ == other.entries_; }

  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;

  // Built-in types, displays "1".."n".
  static CartanMatrix type_a(int n);
  /// Chain with the doubled bond at the tail: a[n][n-1] = -2.
  static CartanMatrix type_b(int n);
  static CartanMatrix type_g2();  // [[2,-1],[-3,2]]
  static CartanMatrix type_f4();
  static CartanMatrix a1xa1();  // 2 * identity
  /// Block-diagonal sum; nodes renumbered and re-displayed "1".."n".
  static CartanMatrix direct_sum(const CartanMatrix& a, const CartanMatrix& b);

 private:
  CartanMatrix() = default;

  std::vector<NodeLabel> labels_;
  std::vector<std::vector<int>> entries_;
};

}  // namespace schubert
