#include "schubert/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace schubert {
namespace {

struct DisjointSet {
  std::vector<std::size_t> parent;

  explicit DisjointSet(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

struct NamedMatrix {
  std::string name;
  CartanMatrix matrix;
};

std::vector<NamedMatrix> irreducible_builtins(int max_rank) {
  std::vector<NamedMatrix> result;
  if (max_rank >= 1) result.push_back({"A1", CartanMatrix::type_a(1)});
  if (max_rank >= 2) {
    result.push_back({"A2", CartanMatrix::type_a(2)});
    result.push_back({"B2", CartanMatrix::type_b(2)});
    result.push_back({"G2", CartanMatrix::type_g2()});
  }
  if (max_rank >= 3) {
    result.push_back({"A3", CartanMatrix::type_a(3)});
    result.push_back({"B3", CartanMatrix::type_b(3)});
  }
  if (max_rank >= 4) {
    result.push_back({"A4", CartanMatrix::type_a(4)});
    result.push_back({"B4", CartanMatrix::type_b(4)});
    result.push_back({"F4", CartanMatrix::type_f4()});
  }
  std::sort(result.begin(), result.end(), [](const NamedMatrix& a, const NamedMatrix& b) {
    return std::pair(a.matrix.rank(), a.name) < std::pair(b.matrix.rank(), b.name);
  });
  return result;
}

/// Every multiset of irreducible blocks with total rank <= max_rank, one
/// canonical block order each (larger blocks first), so no presentation
/// appears twice.
std::vector<NamedMatrix> builtin_matrices(int max_rank) {
  const std::vector<NamedMatrix> blocks = irreducible_builtins(max_rank);
  std::vector<NamedMatrix> result;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, int)> rec = [&](std::size_t from, int rank_left) {
    if (!chosen.empty()) {
      NamedMatrix assembled = blocks[chosen[0]];
      for (std::size_t i = 1; i < chosen.size(); ++i) {
        assembled.name += "x" + blocks[chosen[i]].name;
        assembled.matrix = CartanMatrix::direct_sum(assembled.matrix, blocks[chosen[i]].matrix);
      }
      result.push_back(std::move(assembled));
    }
    for (std::size_t i = from; i-- > 0;) {
      if (blocks[i].matrix.rank() > rank_left) continue;
      chosen.push_back(i);
      rec(i + 1, rank_left - blocks[i].matrix.rank());
      chosen.pop_back();
    }
  };
  rec(blocks.size(), max_rank);
  std::sort(result.begin(), result.end(), [](const NamedMatrix& a, const NamedMatrix& b) {
    return std::pair(a.matrix.rank(), a.name) < std::pair(b.matrix.rank(), b.name);
  });
  return result;
}

std::vector<WeylElement> elements_up_to_length(const WeylGroup& group, int max_length) {
  std::vector<WeylElement> all{group.identity()};
  std::set<WeylElement> seen(all.begin(), all.end());
  std::vector<WeylElement> layer = all;
  for (int length = 1; length <= max_length && !layer.empty(); ++length) {
    std::vector<WeylElement> next;
    for (const auto& w : layer) {
      for (int s = 0; s < group.rank(); ++s) {
        WeylElement candidate = w.times_generator(s);
        if (candidate.length() == length && seen.insert(candidate).second) {
          next.push_back(std::move(candidate));
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

std::vector<EnumeratedDatum> enumerate_data(int max_rank, int max_length) {
  if (max_rank > 4 || max_length > 8 || max_rank < 0 || max_length < 0) {
    throw Error(errc::limit_exceeded, "supported limits are rank <= 4 and length <= 8");
  }
  std::vector<EnumeratedDatum> result;
  for (const NamedMatrix& built : builtin_matrices(max_rank)) {
    const WeylGroup group(built.matrix);
    const int rank = built.matrix.rank();
    for (const auto& w : elements_up_to_length(group, max_length)) {
      if (static_cast<int>(w.support().size()) != rank) continue;
      const std::set<int> descents = w.descents(Side::right);
      for (unsigned mask = 0; mask < (1u << rank); ++mask) {
        std::set<int> parabolic;
        bool admissible = true;
        for (int s = 0; s < rank; ++s) {
          if (!(mask & (1u << s))) continue;
          if (descents.contains(s)) {
            admissible = false;
            break;
          }
          parabolic.insert(s);
        }
        if (!admissible) continue;
        result.push_back({SchubertDatum(group, w, parabolic), built.name});
      }
    }
  }
  return result;
}

Classification classify(const std::vector<SchubertDatum>& data, std::size_t cap, int threads) {
  const std::size_t n = data.size();
  Classification result;
  result.verdicts.assign(n, std::vector<IsoVerdict>(n));
  for (std::size_t i = 0; i < n; ++i) {
    result.verdicts[i][i] = check_iso(data[i], data[i], cap);
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  std::vector<IsoVerdict> outcomes(pairs.size());
  const int workers = std::max(1, threads);
  if (workers == 1 || pairs.size() < 2) {
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      outcomes[k] = check_iso(data[pairs[k].first], data[pairs[k].second], cap);
    }
  } else {
    std::atomic<std::size_t> cursor{0};
    std::vector<std::exception_ptr> failures(workers);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) {
      pool.emplace_back([&, t] {
        try {
          for (std::size_t k = cursor++; k < pairs.size(); k = cursor++) {
            outcomes[k] = check_iso(data[pairs[k].first], data[pairs[k].second], cap);
          }
        } catch (...) {
          failures[t] = std::current_exception();
        }
      });
    }
    for (auto& worker : pool) worker.join();
    for (const auto& failure : failures) {
      if (failure) std::rethrow_exception(failure);
    }
  }

  DisjointSet components(n);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    result.verdicts[i][j] = outcomes[k];
    result.verdicts[j][i] = outcomes[k];
    if (outcomes[k].kind == VerdictKind::isomorphic) {
      components.merge(i, j);
    } else if (outcomes[k].kind == VerdictKind::unknown) {
      result.unknown_pairs.emplace_back(i, j);
    }
  }

  std::map<std::size_t, std::size_t> class_of_root;
  result.class_ids.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t root = components.find(i);
    const auto [it, inserted] = class_of_root.emplace(root, result.classes.size());
    if (inserted) result.classes.emplace_back();
    result.class_ids[i] = it->second;
    result.classes[it->second].push_back(i);
  }
  return result;
}

SurfaceAtlas surface_atlas(std::size_t cap, int threads) {
  std::vector<EnumeratedDatum> enumerated;
  for (auto& entry : enumerate_data(2, 2)) {
    if (entry.datum.dimension() == 2) enumerated.push_back(std::move(entry));
  }
  std::vector<SchubertDatum> data;
  for (const auto& entry : enumerated) data.push_back(entry.datum);
  Classification classification = classify(data, cap, threads);

  const auto m = [](int n) {
    return n == 1 ? CartanMatrix::type_a(2) : n == 2 ? CartanMatrix::type_b(2)
                                                     : CartanMatrix::type_g2();
  };
  const std::set<int> none;
  std::vector<std::pair<std::string, std::vector<SchubertDatum>>> expected;
  expected.emplace_back("P1xP1", std::vector<SchubertDatum>{
                                     {CartanMatrix::a1xa1(), Word{0, 1}, none}});
  expected.emplace_back("Sigma1", std::vector<SchubertDatum>{{m(1), Word{0, 1}, none},
                                                             {m(2), Word{0, 1}, none},
                                                             {m(3), Word{0, 1}, none},
                                                             {m(1), Word{1, 0}, none}});
  expected.emplace_back("Sigma2", std::vector<SchubertDatum>{{m(2), Word{1, 0}, none}});
  expected.emplace_back("Sigma3", std::vector<SchubertDatum>{{m(3), Word{1, 0}, none}});
  expected.emplace_back("P2", std::vector<SchubertDatum>{{m(1), Word{0, 1}, {0}},
                                                         {m(2), Word{0, 1}, {0}},
                                                         {m(3), Word{0, 1}, {0}},
                                                         {m(1), Word{1, 0}, {1}}});
  expected.emplace_back("ConeOverConic", std::vector<SchubertDatum>{{m(2), Word{1, 0}, {1}}});
  expected.emplace_back("G2Exceptional", std::vector<SchubertDatum>{{m(3), Word{1, 0}, {1}}});

  if (data.size() != 13 || classification.classes.size() != 7) {
    throw Error(errc::atlas_mismatch,
                "expected 7 classes over 13 surfaces, found " +
                    std::to_string(classification.classes.size()) + " over " +
                    std::to_string(data.size()));
  }

  std::vector<std::optional<std::string>> labels(classification.classes.size());
  for (const auto& [name, members] : expected) {
    std::set<std::size_t> expected_ids;
    for (const auto& member : members) {
      const auto found = std::find(data.begin(), data.end(), member);
      if (found == data.end()) {
        throw Error(errc::atlas_mismatch, "expected surface missing from enumeration");
      }
      expected_ids.insert(static_cast<std::size_t>(found - data.begin()));
    }
    const std::size_t class_id = classification.class_ids[*expected_ids.begin()];
    const auto& actual = classification.classes[class_id];
    if (std::set<std::size_t>(actual.begin(), actual.end()) != expected_ids) {
      throw Error(errc::atlas_mismatch, "class membership deviates for " + name);
    }
    if (labels[class_id]) {
      throw Error(errc::atlas_mismatch, "two names resolve to one class");
    }
    labels[class_id] = name;
  }

  SurfaceAtlas atlas;
  for (std::size_t i = 0; i < enumerated.size(); ++i) {
    AtlasRecord record{enumerated[i], classification.class_ids[i],
                       labels[classification.class_ids[i]], {}};
    for (std::size_t j = 0; j < data.size(); ++j) {
      if (j != i) record.verdicts.emplace_back(j, classification.verdicts[i][j].kind);
    }
    atlas.records.push_back(std::move(record));
  }
  atlas.classification = std::move(classification);
  return atlas;
}

}  // namespace schubert
