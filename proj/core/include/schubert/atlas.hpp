#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "schubert/isoclass.hpp"

namespace schubert {

struct EnumeratedDatum {
  SchubertDatum datum;
  std::string type_name;
};

/// All (A, w, I) with A a built-in matrix of rank <= max_rank (reducible
/// products included, one presentation each), w fully supported in W^I with
/// l(w) <= max_length, and I any admissible parabolic subset. Deterministic
/// order. Hard limits: max_rank <= 4, max_length <= 8.
std::vector<EnumeratedDatum> enumerate_data(int max_rank, int max_length);

struct Classification {
  std::vector<std::size_t> class_ids;             // per datum
  std::vector<std::vector<std::size_t>> classes;  // members, each sorted; classes by min member
  std::vector<std::vector<IsoVerdict>> verdicts;  // full matrix, diagonal isomorphic
  std::vector<std::pair<std::size_t, std::size_t>> unknown_pairs;
};

/// Pairwise verdicts folded through union-find; unknown pairs are reported
/// and never merged.
Classification classify(const std::vector<SchubertDatum>& data, std::size_t cap = 10000,
                        int threads = 1);

struct AtlasRecord {
  EnumeratedDatum datum;
  std::size_t class_id = 0;
  std::optional<std::string> class_label;
  std::vector<std::pair<std::size_t, VerdictKind>> verdicts;  // vs every other datum
};

struct SurfaceAtlas {
  std::vector<AtlasRecord> records;
  Classification classification;
};

/// The two-dimensional data at rank <= 2, classified and named. Throws
/// atlas_mismatch unless the result is exactly the seven expected classes
/// over thirteen data with the expected memberships.
SurfaceAtlas surface_atlas(std::size_t cap = 10000, int threads = 1);

}  // namespace schubert
