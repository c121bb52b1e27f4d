#include "schubert/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace schubert {
namespace {

std::string pair_text(const std::vector<NodeLabel>& labels, int s, int t) {
  return "a[" + labels[s].display + "][" + labels[t].display + "]";
}

/// Determinant of the leading k x k minor by fraction-free (Bareiss)
/// elimination with row pivoting; exact in 64-bit at these sizes.
long long leading_minor(std::vector<std::vector<long long>> m, int k) {
  long long prev = 1;
  int sign = 1;
  for (int i = 0; i < k - 1; ++i) {
    if (m[i][i] == 0) {
      int pivot = -1;
      for (int r = i + 1; r < k; ++r) {
        if (m[r][i] != 0) {
          pivot = r;
          break;
        }
      }
      if (pivot < 0) return 0;
      std::swap(m[i], m[pivot]);
      sign = -sign;
    }
    for (int r = i + 1; r < k; ++r) {
      for (int c = i + 1; c < k; ++c) {
        m[r][c] = (m[r][c] * m[i][i] - m[r][i] * m[i][c]) / prev;
      }
      m[r][i] = 0;
    }
    prev = m[i][i];
  }
  return k == 0 ? 1 : sign * m[k - 1][k - 1];
}

}  // namespace

CartanMatrix CartanMatrix::validate(std::vector<std::vector<int>> entries,
                                    std::vector<NodeLabel> labels) {
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(entries.size()) != n) {
    throw Error(errc::invalid_datum, "matrix has " + std::to_string(entries.size()) +
                                         " rows for " + std::to_string(n) + " labels");
  }
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != n) {
      throw Error(errc::invalid_datum, "matrix is not square");
    }
  }
  std::set<std::string> displays;
  for (int s = 0; s < n; ++s) {
    if (labels[s].id != s) {
      throw Error(errc::invalid_datum, "label ids must be contiguous from 0");
    }
    if (!displays.insert(labels[s].display).second) {
      throw Error(errc::invalid_datum, "duplicate label \"" + labels[s].display + "\"");
    }
  }

  for (int s = 0; s < n; ++s) {
    if (entries[s][s] != 2) {
      throw Error(errc::diagonal_not_two,
                  pair_text(labels, s, s) + " = " + std::to_string(entries[s][s]));
    }
    for (int t = 0; t < n; ++t) {
      if (s == t) continue;
      if (entries[s][t] > 0) {
        throw Error(errc::positive_off_diagonal,
                    pair_text(labels, s, t) + " = " + std::to_string(entries[s][t]));
      }
      if ((entries[s][t] == 0) != (entries[t][s] == 0)) {
        throw Error(errc::asymmetric_zero, pair_text(labels, s, t) + " = " +
                                               std::to_string(entries[s][t]) + " but " +
                                               pair_text(labels, t, s) + " = " +
                                               std::to_string(entries[t][s]));
      }
      const int product = entries[s][t] * entries[t][s];
      if (product > 3) {
        throw Error(errc::not_finite_type, pair_text(labels, s, t) + "*" +
                                               pair_text(labels, t, s) + " = " +
                                               std::to_string(product) + " exceeds 3");
      }
    }
  }

  // Symmetrizer d_s > 0 with d_s*a[s][t] = d_t*a[t][s], propagated by
  // breadth-first search along nonzero bonds; fractions cleared per component.
  std::vector<long long> num(n, 0), den(n, 1);
  std::vector<int> seen(n, 0);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    num[start] = 1;
    seen[start] = 1;
    std::queue<int> queue;
    queue.push(start);
    std::vector<int> component{start};
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop();
      for (int t = 0; t < n; ++t) {
        if (t == s || entries[s][t] == 0) continue;
        // d_t = d_s * a[s][t] / a[t][s]
        long long nt = num[s] * entries[s][t];
        long long dt = den[s] * entries[t][s];
        if (dt < 0) {
          nt = -nt;
          dt = -dt;
        }
        const long long g = std::gcd(nt, dt);
        if (g > 1) {
          nt /= g;
          dt /= g;
        }
        if (!seen[t]) {
          num[t] = nt;
          den[t] = dt;
          seen[t] = 1;
          component.push_back(t);
          queue.push(t);
        } else if (num[t] * dt != nt * den[t]) {
          throw Error(errc::not_finite_type, "matrix is not symmetrizable around " +
                                                 pair_text(labels, s, t));
        }
      }
    }
    long long lcm = 1;
    for (int s : component) lcm = std::lcm(lcm, den[s]);
    for (int s : component) {
      num[s] *= lcm / den[s];
      den[s] = 1;
    }
  }

  std::vector<std::vector<long long>> sym(n, std::vector<long long>(n, 0));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) sym[s][t] = num[s] * entries[s][t];
  }
  for (int k = 1; k <= n; ++k) {
    if (leading_minor(sym, k) <= 0) {
      throw Error(errc::not_finite_type,
                  "symmetrized form is not positive definite (leading minor " +
                      std::to_string(k) + ")");
    }
  }

  CartanMatrix result;
  result.labels_ = std::move(labels);
  result.entries_ = std::move(entries);
  return result;
}

CartanMatrix CartanMatrix::validate(std::vector<std::vector<int>> entries) {
  std::vector<NodeLabel> labels;
  labels.reserve(entries.size());
  for (int s = 0; s < static_cast<int>(entries.size()); ++s) {
    labels.push_back({s, std::to_string(s + 1)});
  }
  return validate(std::move(entries), std::move(labels));
}

int CartanMatrix::entry(int s, int t) const {
  if (s < 0 || s >= rank() || t < 0 || t >= rank()) {
    throw Error(errc::unknown_label, "node index out of range");
  }
  return entries_[s][t];
}

const NodeLabel& CartanMatrix::label(int s) const {
  if (s < 0 || s >= rank()) throw Error(errc::unknown_label, "node index out of range");
  return labels_[s];
}

std::optional<int> CartanMatrix::find_display(std::string_view display) const {
  for (const auto& label : labels_) {
    if (label.display == display) return label.id;
  }
  return std::nullopt;
}

CartanMatrix CartanMatrix::submatrix(const std::vector<int>& subset) const {
  std::vector<int> ids(subset);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int s : ids) {
    if (s < 0 || s >= rank()) {
      throw Error(errc::unknown_label, "node " + std::to_string(s) + " not in matrix");
    }
  }
  const int k = static_cast<int>(ids.size());
  CartanMatrix result;
  result.entries_.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    result.labels_.push_back({i, labels_[ids[i]].display});
    for (int j = 0; j < k; ++j) result.entries_[i][j] = entries_[ids[i]][ids[j]];
  }
  return result;
}

int CartanMatrix::bond_order(int s, int t) const {
  const int product = entry(s, t) * entry(t, s);
  if (s == t) return 1;
  switch (product) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    default: return 6;
  }
}

CartanMatrix CartanMatrix::type_a(int n) {
  if (n < 1) throw Error(errc::invalid_datum, "rank must be positive");
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    entries[i][i] = 2;
    if (i + 1 < n) entries[i][i + 1] = entries[i + 1][i] = -1;
  }
  return validate(std::move(entries));
}

CartanMatrix CartanMatrix::type_b(int n) {
  if (n < 2) throw Error(errc::invalid_datum, "rank must be at least 2");
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    entries[i][i] = 2;
    if (i + 1 < n) entries[i][i + 1] = entries[i + 1][i] = -1;
  }
  entries[n - 1][n - 2] = -2;
  return validate(std::move(entries));
}

CartanMatrix CartanMatrix::type_g2() { return validate({{2, -1}, {-3, 2}}); }

CartanMatrix CartanMatrix::type_f4() {
  return validate({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
}

CartanMatrix CartanMatrix::a1xa1() { return validate({{2, 0}, {0, 2}}); }

CartanMatrix CartanMatrix::direct_sum(const CartanMatrix& a, const CartanMatrix& b) {
  const int n = a.rank() + b.rank();
  std::vector<std::vector<int>> entries(n, std::vector<int>(n, 0));
  for (int i = 0; i < a.rank(); ++i) {
    for (int j = 0; j < a.rank(); ++j) entries[i][j] = a.entries_[i][j];
  }
  for (int i = 0; i < b.rank(); ++i) {
    for (int j = 0; j < b.rank(); ++j) entries[a.rank() + i][a.rank() + j] = b.entries_[i][j];
  }
  return validate(std::move(entries));
}

}  // namespace schubert
