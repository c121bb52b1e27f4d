#include <doctest.h>

#include "schubert/json_io.hpp"
#include "test_support.hpp"

using namespace schubert;
using test_support::m_matrix;

TEST_CASE("datum documents round-trip") {
  const std::string text =
      R"({"labels":["1","2"],"cartan":[[2,-1],[-2,2]],"word":["2","1"],"parabolic":["2"]})";
  const DatumDocument doc = parse_datum_document(text);
  const SchubertDatum d = realize(doc);
  CHECK(d.dimension() == 2);
  CHECK(d.parabolic() == std::set<int>{1});

  const DatumDocument back = to_document(d);
  CHECK(back == doc);
  CHECK(realize(parse_datum_document(to_json(back))) == d);
}

TEST_CASE("every enumerated datum survives the document round-trip") {
  for (const auto& entry : enumerate_data(2, 2)) {
    const DatumDocument doc = to_document(entry.datum);
    CHECK(realize(parse_datum_document(to_json(doc))) == entry.datum);
  }
}

TEST_CASE("parse failures carry the parse_error code") {
  const auto code = [](const std::string& text) {
    try {
      (void)parse_datum_document(text);
    } catch (const Error& e) {
      return e.code();
    }
    return errc::invalid_datum;
  };
  CHECK(code("{") == errc::parse_error);
  CHECK(code("[1,2]") == errc::parse_error);
  CHECK(code(R"({"labels":["1"],"cartan":"x"})") == errc::parse_error);
}

TEST_CASE("strict realize rejects bad words; normalize repairs them") {
  DatumDocument doc;
  doc.labels = {"1", "2"};
  doc.cartan = {{2, -1}, {-2, 2}};
  doc.word = {"1", "1", "2", "1"};
  doc.parabolic = {"2"};

  CHECK_THROWS_AS((void)realize(doc), Error);

  std::string warning;
  const SchubertDatum repaired = realize(doc, true, &warning);
  CHECK(repaired.top() == repaired.group().from_word(Word{1, 0}));
  CHECK(!warning.empty());

  doc.word = {"1", "2"};  // reduced but not the minimal coset representative
  CHECK_THROWS_AS((void)realize(doc), Error);
  CHECK(realize(doc, true).top() == WeylGroup(m_matrix(2)).generator(0));

  doc.word = {"1", "3"};
  CHECK_THROWS_AS((void)realize(doc, true), Error);
}

TEST_CASE("verdict JSON shapes") {
  const SchubertDatum cone(m_matrix(2), Word{1, 0}, {1});
  const SchubertDatum exceptional(m_matrix(3), Word{1, 0}, {1});
  CHECK(to_json(check_iso(cone, exceptional)) ==
        R"({"verdict":"not_isomorphic","witness":"cartan_entry a[2][1]: -2 vs -3"})");

  const SchubertDatum plane_a(m_matrix(1), Word{0, 1}, {0});
  const SchubertDatum plane_b(m_matrix(1), Word{1, 0}, {1});
  CHECK(to_json(check_iso(plane_a, plane_b)) ==
        R"({"tau":{"1":"2","2":"1"},"verdict":"isomorphic","witness_word":["1","2"]})");
}

TEST_CASE("root and class serialization") {
  const WeylGroup b2(m_matrix(2));
  const auto& high = b2.roots().positive_root(*b2.roots().index_of(std::vector<int>{1, 1}));
  CHECK(to_json(high) == R"({"coroot":[2,1],"root":[1,1]})");

  const SchubertDatum cone(b2, b2.from_word(Word{1, 0}), {1});
  const SchubertClass square = chevalley(cone, 0, b2.generator(0));
  CHECK(to_json(square, cone.cartan()) == "{\"[\\\"2\\\",\\\"1\\\"]\":2}");
}
