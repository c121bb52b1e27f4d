#include <doctest.h>

#include "schubert/isoclass.hpp"
#include "test_support.hpp"

using namespace schubert;
using test_support::all_data;
using test_support::m_matrix;

namespace {

SchubertDatum a4_datum() {
  return SchubertDatum(CartanMatrix::type_a(4), Word{3, 2, 1, 0}, {3});
}
// Example 2.1's B4 and F4 varieties: the bijection i -> 5-i carries the A4
// parabolic {s4} to {s1}, so that is where the minimality requirement puts it.
SchubertDatum b4_datum() {
  return SchubertDatum(CartanMatrix::type_b(4), Word{0, 1, 2, 3}, {0});
}
SchubertDatum f4_datum() {
  return SchubertDatum(CartanMatrix::type_f4(), Word{0, 1, 2, 3}, {0});
}

SupportBijection identity_bijection(int n) {
  SupportBijection tau;
  for (int s = 0; s < n; ++s) tau.emplace_back(s, s);
  return tau;
}

}  // namespace

TEST_CASE("restrict_to_support cuts the matrix down to S(w)") {
  const SchubertDatum full = a4_datum();
  const SchubertDatum same = restrict_to_support(full);
  CHECK(same == full);
  CHECK(restrict_to_support(same) == same);

  const SchubertDatum partial(CartanMatrix::type_a(4), Word{0, 1}, {3});
  const SchubertDatum cut = restrict_to_support(partial);
  CHECK(cut.cartan().rank() == 2);
  CHECK(cut.cartan().same_entries(m_matrix(1)));
  CHECK(cut.parabolic().empty());
  CHECK(cut.dimension() == 2);
  CHECK(cut.cartan().label(1).display == "2");
}

TEST_CASE("necessary_filters name their witness") {
  const WeylGroup a2(m_matrix(1));
  const SchubertDatum plane(a2, a2.from_word(Word{0, 1}), {0});
  const SchubertDatum hirzebruch(a2, a2.from_word(Word{0, 1}), {});
  const SchubertDatum line(CartanMatrix::type_a(1), Word{0}, {});

  CHECK(necessary_filters(plane, plane).pass);
  CHECK(necessary_filters(hirzebruch, plane).witness == "empty_vs_nonempty_parabolic");
  CHECK(necessary_filters(line, hirzebruch).witness.starts_with("dimension"));
}

TEST_CASE("cartan_condition checks only comparable pairs") {
  CHECK(cartan_condition(SupportBijection{{0, 3}, {1, 2}, {2, 1}, {3, 0}}, a4_datum(),
                         b4_datum()));

  const SchubertDatum cone(m_matrix(2), Word{1, 0}, {1});
  const SchubertDatum plane(m_matrix(1), Word{1, 0}, {1});
  CHECK_FALSE(cartan_condition(identity_bijection(2), plane, cone));
  CHECK(cartan_condition(identity_bijection(2), cone, cone));
}

TEST_CASE("word_condition finds a witness word") {
  const SchubertDatum self = a4_datum();
  const auto reflexive = word_condition(identity_bijection(4), self, self);
  REQUIRE(reflexive.has_value());
  CHECK(self.group().from_word(*reflexive) == self.top());

  const auto witness =
      word_condition(SupportBijection{{0, 3}, {1, 2}, {2, 1}, {3, 0}}, a4_datum(), b4_datum());
  REQUIRE(witness.has_value());
  CHECK(*witness == Word{3, 2, 1, 0});

  // Identity bijection from A2 to A1xA1: the image word is reduced and
  // multiplies to w', although the Cartan condition separates the pair.
  const SchubertDatum sigma1(m_matrix(1), Word{0, 1}, {});
  const SchubertDatum boxes(CartanMatrix::a1xa1(), Word{0, 1}, {});
  CHECK(word_condition(identity_bijection(2), sigma1, boxes).has_value());
  CHECK_FALSE(cartan_condition(identity_bijection(2), sigma1, boxes));
  CHECK(check_iso(sigma1, boxes).kind == VerdictKind::not_isomorphic);
}

TEST_CASE("check_iso merges the rank-4 chain triple") {
  const auto triple = {a4_datum(), b4_datum(), f4_datum()};
  for (const auto& left : triple) {
    for (const auto& right : triple) {
      const IsoVerdict verdict = check_iso(left, right);
      REQUIRE(verdict.kind == VerdictKind::isomorphic);
      CHECK(verify_certificate(*verdict.certificate, left, right));
    }
  }
  const IsoVerdict a_to_b = check_iso(a4_datum(), b4_datum());
  const TauCertificate expected{{{"1", "4"}, {"2", "3"}, {"3", "2"}, {"4", "1"}},
                                {"4", "3", "2", "1"}};
  CHECK(*a_to_b.certificate == expected);
}

TEST_CASE("check_iso separates the cone family and merges the plane family") {
  for (int m = 1; m <= 3; ++m) {
    for (int n = 1; n <= 3; ++n) {
      const SchubertDatum left(m_matrix(m), Word{1, 0}, {1});
      const SchubertDatum right(m_matrix(n), Word{1, 0}, {1});
      const IsoVerdict verdict = check_iso(left, right);
      if (m == n) {
        CHECK(verdict.kind == VerdictKind::isomorphic);
      } else {
        CHECK(verdict.kind == VerdictKind::not_isomorphic);
        CHECK(verdict.witness.starts_with("cartan_entry a[2][1]"));
      }

      const SchubertDatum planes_left(m_matrix(m), Word{0, 1}, {0});
      const SchubertDatum planes_right(m_matrix(n), Word{0, 1}, {0});
      CHECK(check_iso(planes_left, planes_right).kind == VerdictKind::isomorphic);
    }
  }
}

TEST_CASE("check_iso finds the swap between the two plane presentations") {
  const SchubertDatum left(m_matrix(1), Word{0, 1}, {0});
  const SchubertDatum right(m_matrix(1), Word{1, 0}, {1});
  const IsoVerdict verdict = check_iso(left, right);
  REQUIRE(verdict.kind == VerdictKind::isomorphic);
  CHECK(verdict.certificate->mapping ==
        std::vector<std::pair<std::string, std::string>>{{"1", "2"}, {"2", "1"}});
}

TEST_CASE("verdicts beyond the proven hypothesis are unknown") {
  // Both parabolic intersections have two elements, every filter passes, and
  // each candidate bijection fails one of the two conditions; the checker
  // must not claim a negative here.
  const SchubertDatum left(CartanMatrix::type_b(3), Word{0, 1, 2}, {0, 1});
  const SchubertDatum right(CartanMatrix::type_b(3), Word{2, 1, 0}, {1, 2});
  REQUIRE(necessary_filters(left, right).pass);

  const IsoVerdict verdict = check_iso(left, right);
  CHECK(verdict.kind == VerdictKind::unknown);
  CHECK(verdict.reason.starts_with("beyond_theorem_scope"));
  // With both sides inside the proven hypothesis the same exhaustion is a
  // conclusive negative.
  const SchubertDatum small_left(CartanMatrix::type_b(3), Word{0, 1, 2}, {1});
  const SchubertDatum small_right(CartanMatrix::type_b(3), Word{2, 1, 0}, {1});
  const IsoVerdict conclusive = check_iso(small_left, small_right);
  CHECK(conclusive.kind == VerdictKind::not_isomorphic);
}

TEST_CASE("certificate algebra: invert and compose") {
  const IsoVerdict ab = check_iso(a4_datum(), b4_datum());
  const IsoVerdict bf = check_iso(b4_datum(), f4_datum());
  REQUIRE(ab.kind == VerdictKind::isomorphic);
  REQUIRE(bf.kind == VerdictKind::isomorphic);

  CHECK(verify_certificate(invert(*ab.certificate), b4_datum(), a4_datum()));
  CHECK(verify_certificate(compose(*ab.certificate, *bf.certificate), a4_datum(), f4_datum()));

  TauCertificate broken = *ab.certificate;
  broken.mapping[0].second = "2";
  CHECK_FALSE(verify_certificate(broken, a4_datum(), b4_datum()));
}

TEST_CASE("checker algebra over every rank <= 2 datum of dimension <= 3") {
  std::vector<SchubertDatum> data;
  for (const auto& [name, matrix] : test_support::rank_le2_types()) {
    for (const auto& d : all_data(WeylGroup(matrix), 3)) data.push_back(d);
  }

  for (const auto& d : data) {
    const IsoVerdict self = check_iso(d, d);
    REQUIRE(self.kind == VerdictKind::isomorphic);
    CHECK(verify_certificate(*self.certificate, d, d));
  }

  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      const IsoVerdict forward = check_iso(data[i], data[j]);
      const IsoVerdict backward = check_iso(data[j], data[i]);
      CHECK(forward.kind == backward.kind);
      if (forward.kind == VerdictKind::isomorphic) {
        CHECK(verify_certificate(*forward.certificate, data[i], data[j]));
        // The two searches return mutually inverse bijections.
        CHECK(invert(*forward.certificate).mapping == backward.certificate->mapping);
        CHECK(verify_certificate(invert(*forward.certificate), data[j], data[i]));
      }
      // Restriction invariance.
      const IsoVerdict restricted =
          check_iso(restrict_to_support(data[i]), restrict_to_support(data[j]));
      CHECK(restricted.kind == forward.kind);
      // Whenever a filter fails, the certificate search agrees there is none.
      const SchubertDatum left = restrict_to_support(data[i]);
      const SchubertDatum right = restrict_to_support(data[j]);
      if (!necessary_filters(left, right).pass && left.cartan().rank() == right.cartan().rank()) {
        bool found = false;
        std::vector<int> image(left.cartan().rank());
        for (int s = 0; s < left.cartan().rank(); ++s) image[s] = s;
        do {
          SupportBijection tau;
          bool parabolic_ok = true;
          for (int s = 0; s < left.cartan().rank(); ++s) {
            tau.emplace_back(s, image[s]);
            if (left.parabolic().contains(s) != right.parabolic().contains(image[s])) {
              parabolic_ok = false;
            }
          }
          if (parabolic_ok && cartan_condition(tau, left, right) &&
              word_condition(tau, left, right)) {
            found = true;
          }
        } while (!found && std::next_permutation(image.begin(), image.end()));
        CHECK_FALSE(found);
      }
    }
  }
}

TEST_CASE("transitivity: composing certificates across one class stays valid") {
  const std::vector<SchubertDatum> family = {SchubertDatum(m_matrix(1), Word{0, 1}, {0}),
                                             SchubertDatum(m_matrix(2), Word{0, 1}, {0}),
                                             SchubertDatum(m_matrix(3), Word{0, 1}, {0}),
                                             SchubertDatum(m_matrix(1), Word{1, 0}, {1})};
  for (const auto& a : family) {
    for (const auto& b : family) {
      for (const auto& c : family) {
        const IsoVerdict ab = check_iso(a, b);
        const IsoVerdict bc = check_iso(b, c);
        REQUIRE(ab.kind == VerdictKind::isomorphic);
        REQUIRE(bc.kind == VerdictKind::isomorphic);
        CHECK(verify_certificate(compose(*ab.certificate, *bc.certificate), a, c));
      }
    }
  }
}
