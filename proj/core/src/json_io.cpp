#include "schubert/json_io.hpp"

#include <json.hpp>

namespace schubert {
namespace {

using nlohmann::json;

json word_as_json(const Word& word, const CartanMatrix& a) {
  json out = json::array();
  for (int s : word) out.push_back(a.label(s).display);
  return out;
}

json document_as_json(const DatumDocument& doc) {
  json out;
  out["labels"] = doc.labels;
  out["cartan"] = doc.cartan;
  out["word"] = doc.word;
  out["parabolic"] = doc.parabolic;
  return out;
}

json verdict_as_json(const IsoVerdict& v) {
  json out;
  out["verdict"] = verdict_kind_name(v.kind);
  switch (v.kind) {
    case VerdictKind::isomorphic: {
      json tau = json::object();
      for (const auto& [from, to] : v.certificate->mapping) tau[from] = to;
      out["tau"] = tau;
      out["witness_word"] = v.certificate->witness_word;
      break;
    }
    case VerdictKind::not_isomorphic:
      out["witness"] = v.witness;
      break;
    case VerdictKind::unknown:
      out["reason"] = v.reason;
      break;
  }
  return out;
}

}  // namespace

DatumDocument parse_datum_document(const std::string& json_text) {
  json parsed;
  try {
    parsed = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, e.what());
  }
  DatumDocument doc;
  try {
    if (!parsed.is_object()) throw Error(errc::parse_error, "document must be an object");
    parsed.at("labels").get_to(doc.labels);
    parsed.at("cartan").get_to(doc.cartan);
    if (parsed.contains("word")) parsed.at("word").get_to(doc.word);
    if (parsed.contains("parabolic")) parsed.at("parabolic").get_to(doc.parabolic);
  } catch (const json::exception& e) {
    throw Error(errc::parse_error, e.what());
  }
  return doc;
}

std::string to_json(const DatumDocument& doc) { return document_as_json(doc).dump(); }

DatumDocument to_document(const SchubertDatum& d) {
  DatumDocument doc;
  for (const auto& label : d.cartan().labels()) doc.labels.push_back(label.display);
  doc.cartan.resize(d.cartan().rank());
  for (int s = 0; s < d.cartan().rank(); ++s) {
    for (int t = 0; t < d.cartan().rank(); ++t) doc.cartan[s].push_back(d.cartan().entry(s, t));
  }
  for (int s : d.top().lex_min_reduced_word()) doc.word.push_back(d.cartan().label(s).display);
  for (int s : d.parabolic()) doc.parabolic.push_back(d.cartan().label(s).display);
  return doc;
}

SchubertDatum realize(const DatumDocument& doc, bool normalize, std::string* warning) {
  std::vector<NodeLabel> labels;
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    labels.push_back({static_cast<int>(i), doc.labels[i]});
  }
  const CartanMatrix cartan = CartanMatrix::validate(doc.cartan, std::move(labels));

  const auto resolve = [&](const std::string& display) {
    const auto id = cartan.find_display(display);
    if (!id) throw Error(errc::unknown_label, "label \"" + display + "\" not in matrix");
    return *id;
  };
  Word word;
  for (const auto& letter : doc.word) word.push_back(resolve(letter));
  std::set<int> parabolic;
  for (const auto& node : doc.parabolic) parabolic.insert(resolve(node));

  const WeylGroup group(cartan);
  WeylElement w = group.from_word(word);
  const bool reduced = w.length() == static_cast<int>(word.size());
  const bool minimal = w.in_quotient(parabolic);
  if (!reduced || !minimal) {
    if (!normalize) {
      throw Error(errc::invalid_datum,
                  std::string(!reduced ? "word is not reduced" : "word is not a minimal coset "
                                                                 "representative") +
                      " (pass normalize to repair)");
    }
    w = w.min_rep(parabolic);
    if (warning) {
      std::string repaired;
      for (int s : w.lex_min_reduced_word()) {
        repaired += (repaired.empty() ? "" : ",") + cartan.label(s).display;
      }
      *warning = "word normalized to [" + repaired + "]";
    }
  }
  return SchubertDatum(group, w, parabolic);
}

std::string to_json(const CartanMatrix& a) {
  json out;
  std::vector<std::string> displays;
  for (const auto& label : a.labels()) displays.push_back(label.display);
  out["labels"] = displays;
  std::vector<std::vector<int>> entries(a.rank());
  for (int s = 0; s < a.rank(); ++s) {
    for (int t = 0; t < a.rank(); ++t) entries[s].push_back(a.entry(s, t));
  }
  out["cartan"] = entries;
  return out.dump();
}

std::string to_json(const Root& r) {
  json out;
  out["root"] = r.root_coords;
  out["coroot"] = r.coroot_coords;
  return out.dump();
}

std::string to_json(const SchubertClass& c, const CartanMatrix& a) {
  json out = json::object();
  for (const auto& [v, coefficient] : c.coefficients) {
    if (coefficient == 0) continue;
    out[word_as_json(v.lex_min_reduced_word(), a).dump()] = coefficient;
  }
  return out.dump();
}

std::string to_json(const IsoVerdict& v) { return verdict_as_json(v).dump(); }

std::string word_to_json(const Word& word, const CartanMatrix& a) {
  return word_as_json(word, a).dump();
}

std::string interval_to_json(const Interval& iv, const CartanMatrix& a) {
  json rows = json::array();
  for (const auto& v : iv.elements) {
    json row;
    row["word"] = word_as_json(v.lex_min_reduced_word(), a);
    row["length"] = v.length();
    rows.push_back(row);
  }
  json out;
  out["elements"] = rows;
  return out.dump();
}

std::string atlas_to_jsonl(const std::vector<AtlasRecord>& records, int max_rank,
                           int max_length) {
  json header;
  header["tool"] = "schubert";
  header["version"] = kVersion;
  header["max_rank"] = max_rank;
  header["max_length"] = max_length;
  header["count"] = records.size();
  std::string out = header.dump() + "\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const AtlasRecord& record = records[i];
    json line;
    line["id"] = i;
    line["type"] = record.datum.type_name;
    line["datum"] = document_as_json(to_document(record.datum.datum));
    line["class_id"] = record.class_id;
    if (record.class_label) line["class_label"] = *record.class_label;
    json verdicts = json::array();
    for (const auto& [other, kind] : record.verdicts) {
      verdicts.push_back(json::array({other, verdict_kind_name(kind)}));
    }
    line["verdicts"] = verdicts;
    out += line.dump() + "\n";
  }
  return out;
}

}  // namespace schubert
