#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "schubert/cartan.hpp"

namespace schubert {

/// A positive root carried in both coordinate systems: coefficients over the
/// simple roots and over the simple coroots.
struct Root {
  std::vector<int> root_coords;
  std::vector<int> coroot_coords;

  int height() const;

  friend bool operator==(const Root&, const Root&) = default;
};

/// All positive roots of a finite root system. The first rank() entries are
/// the simple roots in label order; the rest follow by (height, lex).
class RootSystem {
 public:
  int simple_count() const { return simple_count_; }
  const std::vector<Root>& positive_roots() const { return roots_; }
  const Root& positive_root(std::size_t i) const { return roots_.at(i); }
  /// Index of the positive root with these root coordinates, if any.
  std::optional<std::size_t> index_of(std::span<const int> root_coords) const;

 private:
  friend struct GroupCore;
  int simple_count_ = 0;
  std::vector<Root> roots_;
};

enum class Side { left, right };

/// A word in the generators, as node ids.
using Word = std::vector<int>;

struct GroupCore;
class WeylElement;

/// The finite Weyl group of a Cartan matrix. Cheap to copy; the underlying
/// tables are shared and immutable (the Bruhat memo is internally locked).
class WeylGroup {
 public:
  explicit WeylGroup(CartanMatrix cartan);

  const CartanMatrix& cartan() const;
  const RootSystem& roots() const;
  int rank() const;

  WeylElement identity() const;
  WeylElement generator(int s) const;
  WeylElement from_word(std::span<const int> word) const;
  WeylElement from_word(const Word& word) const;
  /// The reflection s_beta of a positive root of this system.
  WeylElement reflection(const Root& root) const;

  /// All group elements ordered by (length, matrix); throws cap_exceeded if
  /// the group has more than `cap` elements.
  std::vector<WeylElement> elements(std::size_t cap = 1000000) const;
  /// Group order if it does not exceed `cap`.
  std::optional<std::size_t> order_if_at_most(std::size_t cap) const;

  bool same_group(const WeylGroup& other) const { return core_ == other.core_; }

 private:
  friend class WeylElement;
  friend bool bruhat_leq(const WeylElement&, const WeylElement&);
  explicit WeylGroup(std::shared_ptr<const GroupCore> core) : core_(std::move(core)) {}

  std::shared_ptr<const GroupCore> core_;
};

/// A Weyl group element in canonical form: the integer matrix of its action
/// on root coordinates (a faithful representation), with the inverse matrix
/// kept alongside. Length is cached as the inversion count.
class WeylElement {
 public:
  int length() const { return length_; }
  WeylGroup group() const { return WeylGroup(core_); }

  WeylElement operator*(const WeylElement& rhs) const;
  WeylElement times_generator(int s) const;
  WeylElement inverse() const;

  bool is_identity() const { return length_ == 0; }
  bool is_descent(int s, Side side = Side::right) const;
  std::set<int> descents(Side side) const;
  /// Generators occurring in any (equivalently every) reduced word.
  std::set<int> support() const;
  Word lex_min_reduced_word() const;
  /// All reduced words; throws cap_exceeded if more than `cap` exist.
  std::set<Word> reduced_words(std::size_t cap = 10000) const;
  /// Minimal-length representative of the coset w·W_I.
  WeylElement min_rep(const std::set<int>& parabolic) const;
  /// Whether w is the minimal representative of its coset, i.e. w in W^I.
  bool in_quotient(const std::set<int>& parabolic) const;
  /// I(w) = R+ ∩ w(R-), in root-system order; its size equals length().
  std::vector<Root> inversion_set() const;
  /// Image of a vector of root coordinates.
  std::vector<int> apply(std::span<const int> root_coords) const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) {
    return a.forward_ == b.forward_;
  }
  /// Deterministic order: by length, then matrix lexicographically.
  std::strong_ordering operator<=>(const WeylElement& b) const;
  std::size_t hash() const;

 private:
  friend class WeylGroup;
  friend bool bruhat_leq(const WeylElement&, const WeylElement&);
  WeylElement(std::shared_ptr<const GroupCore> core, std::vector<int> forward,
              std::vector<int> backward);

  std::shared_ptr<const GroupCore> core_;
  std::vector<int> forward_;   // action on root coordinates, row-major
  std::vector<int> backward_;  // the same matrix for the inverse element
  int length_ = 0;
};

inline WeylElement WeylGroup::from_word(const Word& word) const {
  return from_word(std::span<const int>(word));
}

/// Bruhat order, by the descent recursion, memoized per group.
bool bruhat_leq(const WeylElement& u, const WeylElement& v);

/// Streaming reduced-word enumeration in lexicographic order. Stops early when
/// the visitor returns true; throws cap_exceeded after `cap` words.
bool visit_reduced_words(const WeylElement& w, std::size_t cap,
                         const std::function<bool(const Word&)>& visit);

/// The graded poset [1,w]^I: elements sorted by (length, canonical order)
/// with the full order relation.
struct Interval {
  std::vector<WeylElement> elements;
  std::vector<std::vector<bool>> leq;  // leq[i][j] iff elements[i] <= elements[j]

  std::optional<std::size_t> index_of(const WeylElement& v) const;
  /// Number of elements of each length 0..l(w).
  std::vector<std::size_t> length_histogram() const;
};

Interval interval(const WeylElement& w, const std::set<int>& parabolic);

}  // namespace schubert

template <>
struct std::hash<schubert::WeylElement> {
  std::size_t operator()(const schubert::WeylElement& w) const noexcept { return w.hash(); }
};
