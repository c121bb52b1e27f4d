#pragma once

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

/// The triple (A, w, I) with w a minimal coset representative of W/W_I.
/// Identifies the Schubert variety X(w, A, I); dimension is l(w).
class SchubertDatum {
 public:
  SchubertDatum(WeylGroup group, WeylElement w, std::set<int> parabolic);
  SchubertDatum(CartanMatrix cartan, const Word& word, std::set<int> parabolic);

  const WeylGroup& group() const { return group_; }
  const CartanMatrix& cartan() const { return group_.cartan(); }
  const WeylElement& top() const { return w_; }
  const std::set<int>& parabolic() const { return parabolic_; }
  int dimension() const { return w_.length(); }
  std::set<int> support() const { return w_.support(); }
  /// Labels of the degree-2 basis classes: S(w) minus the parabolic set.
  std::set<int> degree_two_labels() const;
  /// Whether v indexes a basis class, i.e. v in [1,w]^I.
  bool contains(const WeylElement& v) const;

  friend bool operator==(const SchubertDatum& a, const SchubertDatum& b) {
    return a.cartan() == b.cartan() && a.w_ == b.w_ && a.parabolic_ == b.parabolic_;
  }

 private:
  WeylGroup group_;
  WeylElement w_;
  std::set<int> parabolic_;
};

/// Integer combination of basis classes sigma_v, v in [1,w]^I. Keys of a
/// class produced by one degree-2 multiplication share a single degree 2l(v).
struct SchubertClass {
  std::map<WeylElement, long long> coefficients;

  bool is_zero() const { return coefficients.empty(); }
  /// 2l(v) if the class is nonzero and homogeneous.
  std::optional<int> degree() const;

  friend bool operator==(const SchubertClass&, const SchubertClass&) = default;
};

/// One entry (v, 2l(v)) per basis class, graded order.
std::vector<std::pair<WeylElement, int>> basis(const SchubertDatum& d);

/// sigma_s * sigma_v by the degree-2 cup-product rule: sum over positive
/// roots beta with l((v s_beta)^min) = l(v)+1 of the s-th coroot coordinate
/// of beta, keyed by (v s_beta)^min and truncated to keys inside [1,w]^I.
SchubertClass chevalley(const SchubertDatum& d, int s, const WeylElement& v);

/// Coefficient-linear extension of chevalley over the keys of c.
SchubertClass multiply_by_degree2(const SchubertDatum& d, int s, const SchubertClass& c);

std::set<WeylElement> class_support(const SchubertClass& c);

/// The basis with the partial order generated by "sigma_u precedes sigma_v
/// whenever sigma_v appears in some sigma_s * sigma_u", plus the distinguished
/// degree-2 subset.
struct BasisPoset {
  std::vector<WeylElement> elements;
  std::vector<std::vector<bool>> preceq;  // reflexive-transitive
  std::vector<std::size_t> degree_two;    // indices into elements
};

BasisPoset reconstruct_poset(const SchubertDatum& d);

/// Union of supports of all monomials in the degree-2 generators outside
/// `removed`, computed by closure from sigma_1.
std::set<WeylElement> subring_support(const SchubertDatum& d, const std::set<int>& removed);

/// Degree-2 generators t with sigma_v outside the subring generated without
/// sigma_t; equals the right descent set of v carried through the basis.
std::set<int> class_descents(const SchubertDatum& d, const WeylElement& v);

/// The unique maximal basis element below sigma_v lying in the subring that
/// omits sigma_t.
WeylElement max_below(const SchubertDatum& d, const WeylElement& v, int t);

/// Reduced words of a basis class when the parabolic set is a single
/// generator s: words over the alphabet of degree-2 classes extended by the
/// symbol for s, built inductively descent by descent. For each descent t of
/// sigma_v the word is a reduced word of the maximal class below, followed by
/// an alternating tail in s and t that ends with t: a tail ending with s
/// cannot happen, since elements of W^{{s}} have no right descent at s. Each
/// word, read through the alphabet bijection, is a reduced word of v.
std::set<Word> class_reduced_words(const SchubertDatum& d, const WeylElement& v);

}  // namespace schubert
