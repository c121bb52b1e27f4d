#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "schubert/json_io.hpp"

namespace {

using namespace schubert;

constexpr int kExitIsomorphic = 0;
constexpr int kExitNotIsomorphic = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitInputError = 3;
constexpr int kExitComputeError = 4;
constexpr int kExitInternalError = 5;

struct Options {
  bool json = false;
  bool normalize = false;
  std::size_t cap = 10000;
  int threads = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SchubertDatum load_datum(const std::string& path, const Options& options) {
  std::string warning;
  SchubertDatum d = realize(parse_datum_document(read_file(path)), options.normalize, &warning);
  if (!warning.empty()) std::cerr << path << ": " << warning << "\n";
  return d;
}

std::string node_text(const CartanMatrix& a, int s) { return "s" + a.label(s).display; }

std::string word_text(const CartanMatrix& a, const Word& word) {
  std::string out;
  for (int s : word) out += (out.empty() ? "" : " ") + node_text(a, s);
  return out.empty() ? "e" : out;
}

std::string parabolic_text(const SchubertDatum& d) {
  std::string out = "{";
  bool first = true;
  for (int s : d.parabolic()) {
    if (!first) out += ",";
    out += node_text(d.cartan(), s);
    first = false;
  }
  return out + "}";
}

std::string datum_text(const SchubertDatum& d, const std::string& type_name) {
  return "X(" + word_text(d.cartan(), d.top().lex_min_reduced_word()) + ", " + type_name +
         ", " + parabolic_text(d) + ")";
}

std::string class_text(const SchubertClass& c, const CartanMatrix& a) {
  if (c.coefficients.empty()) return "0";
  std::string out;
  for (const auto& [v, coefficient] : c.coefficients) {
    if (!out.empty()) out += " + ";
    if (coefficient != 1) out += std::to_string(coefficient) + "·";
    out += "σ[";
    bool first = true;
    for (int s : v.lex_min_reduced_word()) {
      if (!first) out += ",";
      out += a.label(s).display;
      first = false;
    }
    out += "]";
  }
  return out;
}

int run_check(const std::string& file_a, const std::string& file_b, const Options& options) {
  const SchubertDatum a = load_datum(file_a, options);
  const SchubertDatum b = load_datum(file_b, options);
  const IsoVerdict verdict = check_iso(a, b, options.cap);
  std::cout << to_json(verdict) << "\n";
  switch (verdict.kind) {
    case VerdictKind::isomorphic: return kExitIsomorphic;
    case VerdictKind::not_isomorphic: return kExitNotIsomorphic;
    case VerdictKind::unknown: return kExitUnknown;
  }
  return kExitInternalError;
}

int run_surfaces(bool verify, const Options& options) {
  const SurfaceAtlas atlas = surface_atlas(options.cap, options.threads);
  if (options.json) {
    std::cout << atlas_to_jsonl(atlas.records, 2, 2);
  } else {
    std::printf("# schubert surfaces  version=%s max_rank=2 max_length=2 cap=%zu threads=%d\n",
                kVersion, options.cap, options.threads);
    std::printf("%-3s %-14s %s\n", "id", "class", "datum");
    for (std::size_t i = 0; i < atlas.records.size(); ++i) {
      const AtlasRecord& record = atlas.records[i];
      std::printf("%-3zu %-14s %s\n", i, record.class_label->c_str(),
                  datum_text(record.datum.datum, record.datum.type_name).c_str());
    }
    std::printf("# %zu surfaces in %zu classes\n", atlas.records.size(),
                atlas.classification.classes.size());
  }
  if (verify) {
    std::size_t checked = 0;
    for (std::size_t i = 0; i < atlas.records.size(); ++i) {
      for (std::size_t j = i + 1; j < atlas.records.size(); ++j) {
        const SchubertDatum& a = atlas.records[i].datum.datum;
        const SchubertDatum& b = atlas.records[j].datum.datum;
        const IsoVerdict again = check_iso(a, b, options.cap);
        if (again.kind != atlas.classification.verdicts[i][j].kind) {
          std::cerr << "verification mismatch on pair (" << i << "," << j << ")\n";
          return kExitComputeError;
        }
        if (again.kind == VerdictKind::isomorphic &&
            !verify_certificate(*again.certificate, a, b)) {
          std::cerr << "certificate failed re-verification on pair (" << i << "," << j << ")\n";
          return kExitComputeError;
        }
        ++checked;
      }
    }
    std::cerr << "verified " << checked << " pairwise verdicts\n";
  }
  return 0;
}

int run_cohomology(const std::string& file, const std::string& generator,
                   const std::string& element, const Options& options) {
  const SchubertDatum d = load_datum(file, options);
  const auto s = d.cartan().find_display(generator);
  if (!s) throw Error(errc::unknown_label, "generator \"" + generator + "\" not in matrix");
  Word word;
  std::stringstream parts(element);
  for (std::string part; std::getline(parts, part, ',');) {
    const auto id = d.cartan().find_display(part);
    if (!id) throw Error(errc::unknown_label, "letter \"" + part + "\" not in matrix");
    word.push_back(*id);
  }
  const SchubertClass product = chevalley(d, *s, d.group().from_word(word));
  if (options.json) {
    std::cout << to_json(product, d.cartan()) << "\n";
  } else {
    std::cout << class_text(product, d.cartan()) << "\n";
  }
  return 0;
}

int run_interval(const std::string& file, const Options& options) {
  const SchubertDatum d = load_datum(file, options);
  const Interval poset = interval(d.top(), d.parabolic());
  if (options.json) {
    std::cout << interval_to_json(poset, d.cartan()) << "\n";
    return 0;
  }
  std::printf("# schubert interval  version=%s cap=%zu\n", kVersion, options.cap);
  std::printf("%-4s %-7s %s\n", "id", "length", "word");
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    std::printf("%-4zu %-7d %s\n", i, poset.elements[i].length(),
                word_text(d.cartan(), poset.elements[i].lex_min_reduced_word()).c_str());
  }
  return 0;
}

int run_enumerate(int max_rank, int max_length, const Options& options) {
  const auto data = enumerate_data(max_rank, max_length);
  if (options.json) {
    nlohmann::json out;
    out["params"] = {{"max_rank", max_rank}, {"max_length", max_length}};
    out["data"] = nlohmann::json::array();
    for (const auto& entry : data) {
      auto line = nlohmann::json::parse(to_json(to_document(entry.datum)));
      line["type"] = entry.type_name;
      out["data"].push_back(line);
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::printf("# schubert enumerate  version=%s max_rank=%d max_length=%d\n", kVersion,
              max_rank, max_length);
  std::printf("%-4s %-8s %-4s %-10s %s\n", "id", "type", "dim", "parabolic", "word");
  for (std::size_t i = 0; i < data.size(); ++i) {
    const SchubertDatum& d = data[i].datum;
    std::printf("%-4zu %-8s %-4d %-10s %s\n", i, data[i].type_name.c_str(), d.dimension(),
                parabolic_text(d).c_str(),
                word_text(d.cartan(), d.top().lex_min_reduced_word()).c_str());
  }
  return 0;
}

int run_roots(const std::string& file, const Options& options) {
  const DatumDocument doc = parse_datum_document(read_file(file));
  std::vector<NodeLabel> labels;
  for (std::size_t i = 0; i < doc.labels.size(); ++i) {
    labels.push_back({static_cast<int>(i), doc.labels[i]});
  }
  const CartanMatrix cartan = CartanMatrix::validate(doc.cartan, std::move(labels));
  const WeylGroup group(cartan);
  if (options.json) {
    nlohmann::json out;
    out["labels"] = doc.labels;
    out["roots"] = nlohmann::json::array();
    for (const Root& r : group.roots().positive_roots()) {
      out["roots"].push_back(nlohmann::json::parse(to_json(r)));
    }
    std::cout << out.dump() << "\n";
    return 0;
  }
  std::printf("# schubert roots  version=%s rank=%d\n", kVersion, cartan.rank());
  std::printf("%-4s %-16s %s\n", "id", "root", "coroot");
  const auto coords = [](const std::vector<int>& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
      out += (i ? "," : "") + std::to_string(v[i]);
    }
    return out + ")";
  };
  const auto& roots = group.roots().positive_roots();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    std::printf("%-4zu %-16s %s\n", i, coords(roots[i].root_coords).c_str(),
                coords(roots[i].coroot_coords).c_str());
  }
  return 0;
}

int exit_code_for(errc code) {
  switch (code) {
    case errc::cap_exceeded:
    case errc::limit_exceeded:
    case errc::atlas_mismatch:
      return kExitComputeError;
    default:
      return kExitInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isomorphism of Schubert varieties from combinatorial data"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  app.add_flag("--json", options.json, "Emit machine-readable JSON");
  app.add_flag("--normalize", options.normalize,
               "Repair words that are not reduced minimal representatives");
  app.add_option("--cap", options.cap, "Reduced-word enumeration cap")->capture_default_str();
  app.add_option("--threads", options.threads, "Worker threads for pairwise checking")
      ->capture_default_str();

  std::string file_a, file_b, generator, element = "";
  int max_rank = 2, max_length = 2;
  bool verify = false;

  auto* check = app.add_subcommand("check", "Decide isomorphism of two Schubert data");
  check->add_option("file_a", file_a, "First datum document")->required();
  check->add_option("file_b", file_b, "Second datum document")->required();

  auto* surfaces = app.add_subcommand("surfaces", "Classify all Schubert surfaces");
  surfaces->add_flag("--verify", verify, "Re-check every pairwise verdict");

  auto* cohomology =
      app.add_subcommand("cohomology", "Multiply a basis class by a degree-2 class");
  cohomology->add_option("file", file_a, "Datum document")->required();
  cohomology->add_option("--generator", generator, "Degree-2 generator label")->required();
  cohomology->add_option("--element", element, "Basis element as comma-separated labels");

  auto* interval_cmd = app.add_subcommand("interval", "List the basis poset of a datum");
  interval_cmd->add_option("file", file_a, "Datum document")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate Schubert data at bounded size");
  enumerate->add_option("--max-rank", max_rank, "Largest Cartan rank")->capture_default_str();
  enumerate->add_option("--max-length", max_length, "Largest dimension")->capture_default_str();

  auto* roots = app.add_subcommand("roots", "Positive roots of a Cartan matrix");
  roots->add_option("file", file_a, "Document with labels and cartan entries")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(file_a, file_b, options);
    if (surfaces->parsed()) return run_surfaces(verify, options);
    if (cohomology->parsed()) return run_cohomology(file_a, generator, element, options);
    if (interval_cmd->parsed()) return run_interval(file_a, options);
    if (enumerate->parsed()) return run_enumerate(max_rank, max_length, options);
    if (roots->parsed()) return run_roots(file_a, options);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternalError;
  }
  return kExitInternalError;
}
