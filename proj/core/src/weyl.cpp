#include "schubert/weyl.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace schubert {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<unsigned int>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Row-major n x n product.
std::vector<int> mat_mul(int n, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> c(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const int aik = a[i * n + k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  }
  return c;
}

std::vector<int> identity_matrix(int n) {
  std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

bool column_negative(int n, const std::vector<int>& m, int col) {
  // Columns are images of simple roots, so entries are uniformly signed.
  for (int i = 0; i < n; ++i) {
    if (m[i * n + col] < 0) return true;
    if (m[i * n + col] > 0) return false;
  }
  return false;
}

}  // namespace

int Root::height() const {
  int h = 0;
  for (int c : root_coords) h += c;
  return h;
}

std::optional<std::size_t> RootSystem::index_of(std::span<const int> root_coords) const {
  for (std::size_t i = 0; i < roots_.size(); ++i) {
    if (std::equal(root_coords.begin(), root_coords.end(), roots_[i].root_coords.begin(),
                   roots_[i].root_coords.end())) {
      return i;
    }
  }
  return std::nullopt;
}

/// Shared immutable tables of one Weyl group, plus the per-group Bruhat memo.
struct GroupCore {
  CartanMatrix cartan;
  int n = 0;
  RootSystem roots;
  std::vector<std::vector<int>> generator_mats;   // one per simple reflection
  std::vector<std::vector<int>> reflection_mats;  // one per positive root
  std::unordered_map<std::vector<int>, std::size_t, VecHash> root_index;

  mutable std::mutex mutex;
  mutable std::unordered_map<std::vector<int>, bool, VecHash> bruhat_memo;
  mutable bool elements_complete = false;
  mutable std::vector<std::pair<std::vector<int>, std::vector<int>>> element_mats;

  explicit GroupCore(CartanMatrix a) : cartan(std::move(a)), n(cartan.rank()) {
    build_roots();
    build_generators();
    build_reflections();
  }

  int inversion_count(const std::vector<int>& forward) const {
    int count = 0;
    for (const Root& r : roots.positive_roots()) {
      int sign = 0;
      for (int i = 0; i < n && sign == 0; ++i) {
        int y = 0;
        for (int j = 0; j < n; ++j) y += forward[i * n + j] * r.root_coords[j];
        sign = y;
      }
      if (sign < 0) ++count;
    }
    return count;
  }

 private:
  void build_roots() {
    std::vector<Root> found;
    std::unordered_map<std::vector<int>, std::size_t, VecHash> seen;
    for (int s = 0; s < n; ++s) {
      Root r;
      r.root_coords.assign(n, 0);
      r.coroot_coords.assign(n, 0);
      r.root_coords[s] = 1;
      r.coroot_coords[s] = 1;
      seen.emplace(r.root_coords, found.size());
      found.push_back(std::move(r));
    }
    for (std::size_t head = 0; head < found.size(); ++head) {
      for (int t = 0; t < n; ++t) {
        const Root r = found[head];
        int pair_root = 0, pair_coroot = 0;
        for (int u = 0; u < n; ++u) {
          pair_root += cartan.entry(t, u) * r.root_coords[u];
          pair_coroot += cartan.entry(u, t) * r.coroot_coords[u];
        }
        Root image = r;
        image.root_coords[t] -= pair_root;
        image.coroot_coords[t] -= pair_coroot;
        if (std::all_of(image.root_coords.begin(), image.root_coords.end(),
                        [](int c) { return c >= 0; }) &&
            !seen.contains(image.root_coords)) {
          seen.emplace(image.root_coords, found.size());
          found.push_back(std::move(image));
        }
      }
    }
    std::sort(found.begin() + n, found.end(), [](const Root& a, const Root& b) {
      return std::pair(a.height(), a.root_coords) < std::pair(b.height(), b.root_coords);
    });
    roots.simple_count_ = n;
    roots.roots_ = std::move(found);
    for (std::size_t i = 0; i < roots.roots_.size(); ++i) {
      root_index.emplace(roots.roots_[i].root_coords, i);
    }
  }

  void build_generators() {
    generator_mats.resize(n);
    for (int s = 0; s < n; ++s) {
      // Column t is e_t - a[s][t] e_s.
      auto m = identity_matrix(n);
      for (int t = 0; t < n; ++t) m[s * n + t] -= cartan.entry(s, t);
      generator_mats[s] = std::move(m);
    }
  }

  void build_reflections() {
    reflection_mats.reserve(roots.roots_.size());
    for (const Root& beta : roots.roots_) {
      // Column t is e_t - <beta_coroot, alpha_t> * beta_root.
      auto m = identity_matrix(n);
      for (int t = 0; t < n; ++t) {
        int pairing = 0;
        for (int s = 0; s < n; ++s) pairing += beta.coroot_coords[s] * cartan.entry(s, t);
        for (int i = 0; i < n; ++i) m[i * n + t] -= pairing * beta.root_coords[i];
      }
      reflection_mats.push_back(std::move(m));
    }
  }
};

WeylElement::WeylElement(std::shared_ptr<const GroupCore> core, std::vector<int> forward,
                         std::vector<int> backward)
    : core_(std::move(core)), forward_(std::move(forward)), backward_(std::move(backward)) {
  length_ = core_->inversion_count(forward_);
}

WeylGroup::WeylGroup(CartanMatrix cartan)
    : core_(std::make_shared<GroupCore>(std::move(cartan))) {}

const CartanMatrix& WeylGroup::cartan() const { return core_->cartan; }
const RootSystem& WeylGroup::roots() const { return core_->roots; }
int WeylGroup::rank() const { return core_->n; }

WeylElement WeylGroup::identity() const {
  auto id = identity_matrix(core_->n);
  return WeylElement(core_, id, id);
}

WeylElement WeylGroup::generator(int s) const {
  if (s < 0 || s >= core_->n) {
    throw Error(errc::unknown_label, "generator " + std::to_string(s) + " out of range");
  }
  return WeylElement(core_, core_->generator_mats[s], core_->generator_mats[s]);
}

WeylElement WeylGroup::from_word(std::span<const int> word) const {
  auto forward = identity_matrix(core_->n);
  auto backward = forward;
  for (int s : word) {
    if (s < 0 || s >= core_->n) {
      throw Error(errc::unknown_label, "letter " + std::to_string(s) + " out of range");
    }
    forward = mat_mul(core_->n, forward, core_->generator_mats[s]);
    backward = mat_mul(core_->n, core_->generator_mats[s], backward);
  }
  return WeylElement(core_, std::move(forward), std::move(backward));
}

WeylElement WeylGroup::reflection(const Root& root) const {
  const auto idx = core_->root_index.find(root.root_coords);
  if (idx == core_->root_index.end() ||
      core_->roots.positive_root(idx->second).coroot_coords != root.coroot_coords) {
    throw Error(errc::not_a_root, "not a positive root of this system");
  }
  const auto& m = core_->reflection_mats[idx->second];
  return WeylElement(core_, m, m);
}

std::optional<std::size_t> WeylGroup::order_if_at_most(std::size_t cap) const {
  std::scoped_lock lock(core_->mutex);
  if (core_->elements_complete) {
    return core_->element_mats.size() <= cap
               ? std::optional<std::size_t>(core_->element_mats.size())
               : std::nullopt;
  }
  // Closure under generator multiplication, by length layers.
  std::unordered_set<std::vector<int>, VecHash> seen;
  std::vector<std::pair<std::vector<int>, std::vector<int>>> all;
  const auto id = identity_matrix(core_->n);
  seen.insert(id);
  all.emplace_back(id, id);
  std::vector<std::pair<std::vector<int>, std::vector<int>>> layer = all;
  while (!layer.empty()) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> next;
    for (const auto& [fwd, bwd] : layer) {
      for (int s = 0; s < core_->n; ++s) {
        auto nf = mat_mul(core_->n, fwd, core_->generator_mats[s]);
        if (seen.contains(nf)) continue;
        auto nb = mat_mul(core_->n, core_->generator_mats[s], bwd);
        seen.insert(nf);
        next.emplace_back(std::move(nf), std::move(nb));
      }
    }
    for (auto& e : next) all.push_back(e);
    if (all.size() > cap) return std::nullopt;
    layer = std::move(next);
  }
  core_->element_mats = std::move(all);
  core_->elements_complete = true;
  return core_->element_mats.size();
}

std::vector<WeylElement> WeylGroup::elements(std::size_t cap) const {
  if (!order_if_at_most(cap)) {
    throw Error(errc::cap_exceeded, "group has more than " + std::to_string(cap) + " elements");
  }
  std::vector<WeylElement> result;
  {
    std::scoped_lock lock(core_->mutex);
    result.reserve(core_->element_mats.size());
    for (const auto& [fwd, bwd] : core_->element_mats) {
      result.push_back(WeylElement(core_, fwd, bwd));
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  return WeylElement(core_, mat_mul(core_->n, forward_, rhs.forward_),
                     mat_mul(core_->n, rhs.backward_, backward_));
}

WeylElement WeylElement::times_generator(int s) const {
  if (s < 0 || s >= core_->n) {
    throw Error(errc::unknown_label, "generator " + std::to_string(s) + " out of range");
  }
  return WeylElement(core_, mat_mul(core_->n, forward_, core_->generator_mats[s]),
                     mat_mul(core_->n, core_->generator_mats[s], backward_));
}

WeylElement WeylElement::inverse() const { return WeylElement(core_, backward_, forward_); }

bool WeylElement::is_descent(int s, Side side) const {
  if (s < 0 || s >= core_->n) {
    throw Error(errc::unknown_label, "generator " + std::to_string(s) + " out of range");
  }
  return column_negative(core_->n, side == Side::right ? forward_ : backward_, s);
}

std::set<int> WeylElement::descents(Side side) const {
  std::set<int> result;
  for (int s = 0; s < core_->n; ++s) {
    if (is_descent(s, side)) result.insert(s);
  }
  return result;
}

std::set<int> WeylElement::support() const {
  const Word word = lex_min_reduced_word();
  return std::set<int>(word.begin(), word.end());
}

Word WeylElement::lex_min_reduced_word() const {
  Word word;
  WeylElement w = *this;
  while (!w.is_identity()) {
    for (int s = 0; s < core_->n; ++s) {
      if (w.is_descent(s, Side::left)) {
        word.push_back(s);
        w = w.group().generator(s) * w;
        break;
      }
    }
  }
  return word;
}

bool visit_reduced_words(const WeylElement& w, std::size_t cap,
                         const std::function<bool(const Word&)>& visit) {
  std::size_t produced = 0;
  Word prefix;
  // Lexicographic depth-first search over left descents.
  std::function<bool(const WeylElement&)> rec = [&](const WeylElement& rest) -> bool {
    if (rest.is_identity()) {
      if (++produced > cap) {
        throw Error(errc::cap_exceeded,
                    "more than " + std::to_string(cap) + " reduced words");
      }
      return visit(prefix);
    }
    for (int s = 0; s < rest.group().rank(); ++s) {
      if (!rest.is_descent(s, Side::left)) continue;
      prefix.push_back(s);
      const bool stop = rec(rest.group().generator(s) * rest);
      prefix.pop_back();
      if (stop) return true;
    }
    return false;
  };
  return rec(w);
}

std::set<Word> WeylElement::reduced_words(std::size_t cap) const {
  std::set<Word> words;
  visit_reduced_words(*this, cap, [&](const Word& word) {
    words.insert(word);
    return false;
  });
  return words;
}

WeylElement WeylElement::min_rep(const std::set<int>& parabolic) const {
  WeylElement w = *this;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s : parabolic) {
      if (w.is_descent(s, Side::right)) {
        w = w.times_generator(s);
        changed = true;
      }
    }
  }
  return w;
}

bool WeylElement::in_quotient(const std::set<int>& parabolic) const {
  for (int s : parabolic) {
    if (is_descent(s, Side::right)) return false;
  }
  return true;
}

std::vector<Root> WeylElement::inversion_set() const {
  std::vector<Root> result;
  for (const Root& gamma : core_->roots.positive_roots()) {
    auto image = apply(gamma.root_coords);
    const bool negative = std::any_of(image.begin(), image.end(), [](int c) { return c < 0; });
    if (!negative) continue;
    for (int& c : image) c = -c;
    const auto idx = core_->root_index.at(image);
    result.push_back(core_->roots.positive_root(idx));
  }
  std::sort(result.begin(), result.end(), [](const Root& a, const Root& b) {
    return std::pair(a.height(), a.root_coords) < std::pair(b.height(), b.root_coords);
  });
  return result;
}

std::vector<int> WeylElement::apply(std::span<const int> root_coords) const {
  std::vector<int> result(core_->n, 0);
  for (int i = 0; i < core_->n; ++i) {
    for (int j = 0; j < core_->n; ++j) result[i] += forward_[i * core_->n + j] * root_coords[j];
  }
  return result;
}

std::strong_ordering WeylElement::operator<=>(const WeylElement& b) const {
  if (auto c = length_ <=> b.length_; c != 0) return c;
  return forward_ <=> b.forward_;
}

std::size_t WeylElement::hash() const { return VecHash{}(forward_); }

bool bruhat_leq(const WeylElement& u, const WeylElement& v) {
  if (u.length() > v.length()) return false;
  if (u.length() == v.length()) return u == v;
  if (u.is_identity()) return true;

  const auto& core = *u.core_;
  std::vector<int> key;
  key.reserve(u.forward_.size() + v.forward_.size());
  key.insert(key.end(), u.forward_.begin(), u.forward_.end());
  key.insert(key.end(), v.forward_.begin(), v.forward_.end());
  {
    std::scoped_lock lock(core.mutex);
    if (const auto it = core.bruhat_memo.find(key); it != core.bruhat_memo.end()) {
      return it->second;
    }
  }

  // Descent recursion: for a left descent s of v,
  //   u <= v  iff  (s in D_L(u) ? su <= sv : u <= sv).
  int s = 0;
  while (!v.is_descent(s, Side::left)) ++s;
  const WeylElement gen = v.group().generator(s);
  const WeylElement sv = gen * v;
  const bool result = u.is_descent(s, Side::left) ? bruhat_leq(gen * u, sv) : bruhat_leq(u, sv);

  std::scoped_lock lock(core.mutex);
  core.bruhat_memo.emplace(std::move(key), result);
  return result;
}

std::optional<std::size_t> Interval::index_of(const WeylElement& v) const {
  const auto it = std::lower_bound(elements.begin(), elements.end(), v);
  if (it != elements.end() && *it == v) return static_cast<std::size_t>(it - elements.begin());
  return std::nullopt;
}

std::vector<std::size_t> Interval::length_histogram() const {
  std::vector<std::size_t> histogram;
  for (const auto& v : elements) {
    if (histogram.size() <= static_cast<std::size_t>(v.length())) {
      histogram.resize(v.length() + 1, 0);
    }
    ++histogram[v.length()];
  }
  return histogram;
}

Interval interval(const WeylElement& w, const std::set<int>& parabolic) {
  if (!w.in_quotient(parabolic)) {
    throw Error(errc::not_minimal_representative,
                "w has a right descent inside the parabolic set");
  }
  const WeylGroup group = w.group();

  std::vector<WeylElement> members;
  if (group.order_if_at_most(400)) {
    // Small group: filter the whole of W.
    for (const auto& v : group.elements(400)) {
      if (v.in_quotient(parabolic) && bruhat_leq(v, w)) members.push_back(v);
    }
  } else {
    // Downward closure from w: single-letter deletions in a fixed reduced
    // word reach every cover, then project by min_rep and deduplicate.
    std::map<WeylElement, bool> visited;
    std::vector<WeylElement> stack{w};
    visited.emplace(w, true);
    while (!stack.empty()) {
      const WeylElement u = stack.back();
      stack.pop_back();
      const Word word = u.lex_min_reduced_word();
      for (std::size_t skip = 0; skip < word.size(); ++skip) {
        Word shorter;
        shorter.reserve(word.size() - 1);
        for (std::size_t i = 0; i < word.size(); ++i) {
          if (i != skip) shorter.push_back(word[i]);
        }
        WeylElement next = group.from_word(shorter);
        if (visited.emplace(next, true).second) stack.push_back(next);
      }
    }
    std::set<WeylElement> quotient;
    for (const auto& [u, unused] : visited) quotient.insert(u.min_rep(parabolic));
    members.assign(quotient.begin(), quotient.end());
  }

  std::sort(members.begin(), members.end());
  Interval result;
  result.elements = std::move(members);
  const std::size_t count = result.elements.size();
  result.leq.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      result.leq[i][j] = bruhat_leq(result.elements[i], result.elements[j]);
    }
  }
  return result;
}

}  // namespace schubert
