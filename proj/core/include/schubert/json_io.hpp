#pragma once

#include <string>
#include <vector>

#include "schubert/atlas.hpp"

namespace schubert {

inline constexpr const char* kVersion = "0.1.0";

/// The JSON form of a Schubert datum:
///   {"labels":["1","2"],"cartan":[[2,-1],[-2,2]],"word":["2","1"],"parabolic":["2"]}
/// Words and parabolic sets are arrays of label display strings.
struct DatumDocument {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> cartan;
  std::vector<std::string> word;
  std::vector<std::string> parabolic;

  friend bool operator==(const DatumDocument&, const DatumDocument&) = default;
};

DatumDocument parse_datum_document(const std::string& json_text);
std::string to_json(const DatumDocument& doc);

DatumDocument to_document(const SchubertDatum& d);

/// Build the datum a document denotes. Strict mode rejects words that are not
/// reduced or not minimal coset representatives; with normalize=true the word
/// is replaced by a reduced word of min_rep(product, I) and *warning is set.
SchubertDatum realize(const DatumDocument& doc, bool normalize = false,
                      std::string* warning = nullptr);

std::string to_json(const CartanMatrix& a);
std::string to_json(const Root& r);
/// Object keyed by the serialized lex-min reduced word of each basis element.
std::string to_json(const SchubertClass& c, const CartanMatrix& a);
std::string to_json(const IsoVerdict& v);
std::string word_to_json(const Word& word, const CartanMatrix& a);
std::string interval_to_json(const Interval& iv, const CartanMatrix& a);

/// One header line with tool version and parameters, then one record per
/// line; byte-stable for fixed parameters.
std::string atlas_to_jsonl(const std::vector<AtlasRecord>& records, int max_rank,
                           int max_length);

}  // namespace schubert
