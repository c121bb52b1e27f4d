#include "schubert/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

namespace schubert {

namespace {

void check_datum(const WeylGroup& group, const WeylElement& w, const std::set<int>& parabolic) {
  for (int s : parabolic) {
    if (s < 0 || s >= group.rank()) {
      throw Error(errc::unknown_label, "parabolic node " + std::to_string(s) + " out of range");
    }
  }
  if (!w.in_quotient(parabolic)) {
    throw Error(errc::not_minimal_representative,
                "w is not the minimal representative of its coset");
  }
}

}  // namespace

SchubertDatum::SchubertDatum(WeylGroup group, WeylElement w, std::set<int> parabolic)
    : group_(std::move(group)), w_(std::move(w)), parabolic_(std::move(parabolic)) {
  check_datum(group_, w_, parabolic_);
}

SchubertDatum::SchubertDatum(CartanMatrix cartan, const Word& word, std::set<int> parabolic)
    : group_(std::move(cartan)), w_(group_.from_word(word)), parabolic_(std::move(parabolic)) {
  check_datum(group_, w_, parabolic_);
}

std::set<int> SchubertDatum::degree_two_labels() const {
  std::set<int> result = support();
  for (int s : parabolic_) result.erase(s);
  return result;
}

bool SchubertDatum::contains(const WeylElement& v) const {
  return v.in_quotient(parabolic_) && bruhat_leq(v, w_);
}

std::optional<int> SchubertClass::degree() const {
  std::optional<int> result;
  for (const auto& [v, c] : coefficients) {
    if (c == 0) continue;
    if (result && *result != 2 * v.length()) return std::nullopt;
    result = 2 * v.length();
  }
  return result;
}

std::vector<std::pair<WeylElement, int>> basis(const SchubertDatum& d) {
  std::vector<std::pair<WeylElement, int>> result;
  for (const auto& v : interval(d.top(), d.parabolic()).elements) {
    result.emplace_back(v, 2 * v.length());
  }
  return result;
}

SchubertClass chevalley(const SchubertDatum& d, int s, const WeylElement& v) {
  if (d.parabolic().contains(s)) {
    throw Error(errc::generator_in_parabolic,
                "node " + d.cartan().label(s).display + " lies in the parabolic set");
  }
  if (!d.contains(d.group().generator(s))) {
    throw Error(errc::not_in_interval,
                "node " + d.cartan().label(s).display + " indexes no degree-2 class");
  }
  if (!d.contains(v)) {
    throw Error(errc::not_in_interval, "element is not a basis index");
  }

  SchubertClass result;
  for (const Root& beta : d.group().roots().positive_roots()) {
    const long long weight = beta.coroot_coords[s];
    if (weight == 0) continue;
    const WeylElement key = (v * d.group().reflection(beta)).min_rep(d.parabolic());
    if (key.length() != v.length() + 1) continue;
    if (!bruhat_leq(key, d.top())) continue;  // classes beyond w vanish
    result.coefficients[key] += weight;
  }
  return result;
}

SchubertClass multiply_by_degree2(const SchubertDatum& d, int s, const SchubertClass& c) {
  SchubertClass result;
  for (const auto& [v, coefficient] : c.coefficients) {
    if (coefficient == 0) continue;
    for (const auto& [key, weight] : chevalley(d, s, v).coefficients) {
      result.coefficients[key] += coefficient * weight;
    }
  }
  std::erase_if(result.coefficients, [](const auto& entry) { return entry.second == 0; });
  return result;
}

std::set<WeylElement> class_support(const SchubertClass& c) {
  std::set<WeylElement> result;
  for (const auto& [v, coefficient] : c.coefficients) {
    if (coefficient != 0) result.insert(v);
  }
  return result;
}

BasisPoset reconstruct_poset(const SchubertDatum& d) {
  BasisPoset poset;
  for (auto& [v, degree] : basis(d)) poset.elements.push_back(v);
  const std::size_t count = poset.elements.size();
  std::map<WeylElement, std::size_t> index;
  for (std::size_t i = 0; i < count; ++i) {
    index.emplace(poset.elements[i], i);
    if (poset.elements[i].length() == 1) poset.degree_two.push_back(i);
  }

  poset.preceq.assign(count, std::vector<bool>(count, false));
  for (std::size_t i = 0; i < count; ++i) poset.preceq[i][i] = true;
  const std::set<int> generators = d.degree_two_labels();
  for (std::size_t i = 0; i < count; ++i) {
    for (int s : generators) {
      for (const auto& key : class_support(chevalley(d, s, poset.elements[i]))) {
        poset.preceq[i][index.at(key)] = true;
      }
    }
  }
  // Transitive closure of the covering relation.
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!poset.preceq[i][k]) continue;
      for (std::size_t j = 0; j < count; ++j) {
        if (poset.preceq[k][j]) poset.preceq[i][j] = true;
      }
    }
  }
  return poset;
}

std::set<WeylElement> subring_support(const SchubertDatum& d, const std::set<int>& removed) {
  const std::set<int> sigma1 = d.degree_two_labels();
  for (int t : removed) {
    if (!sigma1.contains(t)) {
      throw Error(errc::unknown_label,
                  "node " + std::to_string(t) + " indexes no degree-2 class");
    }
  }
  std::set<int> allowed = sigma1;
  for (int t : removed) allowed.erase(t);

  // Coefficients are nonnegative, so supports of monomials accumulate with no
  // cancellation: close the support set one generator multiplication at a time.
  std::set<WeylElement> reached{d.group().identity()};
  std::vector<WeylElement> frontier(reached.begin(), reached.end());
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& v : frontier) {
      for (int s : allowed) {
        for (const auto& key : class_support(chevalley(d, s, v))) {
          if (reached.insert(key).second) next.push_back(key);
        }
      }
    }
    frontier = std::move(next);
  }
  return reached;
}

std::set<int> class_descents(const SchubertDatum& d, const WeylElement& v) {
  if (!d.contains(v)) throw Error(errc::not_in_interval, "element is not a basis index");
  std::set<int> result;
  for (int t : d.degree_two_labels()) {
    if (!subring_support(d, {t}).contains(v)) result.insert(t);
  }
  return result;
}

WeylElement max_below(const SchubertDatum& d, const WeylElement& v, int t) {
  if (!class_descents(d, v).contains(t)) {
    throw Error(errc::not_a_descent,
                "node " + std::to_string(t) + " is not a descent of the class");
  }
  std::vector<WeylElement> candidates;
  for (const auto& u : subring_support(d, {t})) {
    if (bruhat_leq(u, v) && !(u == v)) candidates.push_back(u);
  }
  std::vector<WeylElement> maximal;
  for (const auto& u : candidates) {
    const bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& x) {
      return !(x == u) && bruhat_leq(u, x);
    });
    if (!dominated) maximal.push_back(u);
  }
  if (maximal.size() != 1) {
    throw std::logic_error("expected a unique maximal element below the class");
  }
  return maximal.front();
}

std::set<Word> class_reduced_words(const SchubertDatum& d, const WeylElement& v) {
  if (d.parabolic().size() != 1) {
    throw Error(errc::parabolic_too_large, "defined only for a single parabolic generator");
  }
  if (!d.contains(v)) throw Error(errc::not_in_interval, "element is not a basis index");
  const int parabolic_symbol = *d.parabolic().begin();

  std::map<WeylElement, std::set<Word>> memo;
  std::function<const std::set<Word>&(const WeylElement&)> words =
      [&](const WeylElement& x) -> const std::set<Word>& {
    if (const auto it = memo.find(x); it != memo.end()) return it->second;
    std::set<Word> result;
    if (x.is_identity()) {
      result.insert(Word{});
    } else {
      for (int t : class_descents(d, x)) {
        const WeylElement below = max_below(d, x, t);
        const int n = x.length() - below.length();
        // The coset part of x over W_{{s,t}} is the unique alternating word
        // of length n ending with t; ending with s would put a right descent
        // of x inside the parabolic set.
        Word tail(n);
        for (int i = 0; i < n; ++i) tail[i] = ((n - 1 - i) % 2 == 0) ? t : parabolic_symbol;
        for (const Word& head : words(below)) {
          Word word = head;
          word.insert(word.end(), tail.begin(), tail.end());
          result.insert(std::move(word));
        }
      }
    }
    return memo.emplace(x, std::move(result)).first->second;
  };
  return words(v);
}

}  // namespace schubert
