#include <doctest.h>

#include "schubert/cartan.hpp"
#include "test_support.hpp"

using namespace schubert;

namespace {

errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return errc::invalid_datum;
}

/// Order of the product of two generators in the generated group, by naive
/// powering; the oracle for bond_order.
int brute_force_bond(const CartanMatrix& a, int s, int t) {
  const WeylGroup group(a);
  const WeylElement st = group.generator(s) * group.generator(t);
  WeylElement power = st;
  int order = 1;
  while (!power.is_identity()) {
    power = power * st;
    ++order;
  }
  return order;
}

}  // namespace

TEST_CASE("validate accepts the rank-2 matrices in use") {
  const CartanMatrix m2 = CartanMatrix::validate({{2, -1}, {-2, 2}});
  CHECK(m2.rank() == 2);
  CHECK(m2.entry(1, 0) == -2);
  CHECK(m2 == CartanMatrix::type_b(2));

  const CartanMatrix boxes = CartanMatrix::validate({{2, 0}, {0, 2}});
  CHECK(boxes == CartanMatrix::a1xa1());
}

TEST_CASE("validate rejects each invariant violation by name") {
  CHECK(code_of([] { CartanMatrix::validate({{2, -2}, {-2, 2}}); }) == errc::not_finite_type);
  CHECK(code_of([] { CartanMatrix::validate({{1}}); }) == errc::diagonal_not_two);
  CHECK(code_of([] { CartanMatrix::validate({{2, 1}, {1, 2}}); }) == errc::positive_off_diagonal);
  CHECK(code_of([] { CartanMatrix::validate({{2, 0}, {-1, 2}}); }) == errc::asymmetric_zero);
  // Affine chain: bonds are fine but the form is degenerate.
  CHECK(code_of([] {
          CartanMatrix::validate({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
        }) == errc::not_finite_type);
  CHECK(code_of([] { CartanMatrix::validate({{2, -1}}); }) == errc::invalid_datum);
  CHECK(code_of([] {
          CartanMatrix::validate({{2, 0}, {0, 2}}, {{0, "x"}, {1, "x"}});
        }) == errc::invalid_datum);
}

TEST_CASE("submatrix restricts entries and keeps display names") {
  const CartanMatrix a4 = CartanMatrix::type_a(4);
  const CartanMatrix top = a4.submatrix({0, 1});
  CHECK(top.same_entries(CartanMatrix::validate({{2, -1}, {-1, 2}})));
  CHECK(top.label(0).display == "1");
  CHECK(top.label(1).display == "2");

  CHECK(a4.submatrix({0, 1, 2, 3}) == a4);

  const CartanMatrix b4 = CartanMatrix::type_b(4);
  const CartanMatrix tail = b4.submatrix({2, 3});
  CHECK(tail.same_entries(CartanMatrix::validate({{2, -1}, {-2, 2}})));
  CHECK(tail.label(0).display == "3");
  CHECK(tail.label(1).display == "4");

  CHECK(code_of([&] { a4.submatrix({5}); }) == errc::unknown_label);
}

TEST_CASE("bond_order matches the brute-force order of the product") {
  CHECK(test_support::m_matrix(1).bond_order(0, 1) == 3);
  CHECK(test_support::m_matrix(3).bond_order(0, 1) == 6);
  CHECK(test_support::m_matrix(2).bond_order(0, 0) == 1);

  for (const auto& [name, a] : test_support::rank_le2_types()) {
    CAPTURE(name);
    for (int s = 0; s < a.rank(); ++s) {
      for (int t = 0; t < a.rank(); ++t) {
        if (s == t) continue;
        CHECK(a.bond_order(s, t) == brute_force_bond(a, s, t));
        CHECK(a.bond_order(s, t) == a.bond_order(t, s));
      }
    }
  }
}

TEST_CASE("principal submatrices of finite type stay finite type") {
  std::vector<CartanMatrix> builtins = {CartanMatrix::type_a(4), CartanMatrix::type_b(4),
                                        CartanMatrix::type_f4(), CartanMatrix::type_g2(),
                                        CartanMatrix::a1xa1()};
  for (const auto& a : builtins) {
    for (unsigned mask = 1; mask < (1u << a.rank()); ++mask) {
      std::vector<int> subset;
      for (int s = 0; s < a.rank(); ++s) {
        if (mask & (1u << s)) subset.push_back(s);
      }
      CHECK_NOTHROW(a.submatrix(subset));
    }
  }
}

TEST_CASE("direct_sum renumbers labels") {
  const CartanMatrix sum =
      CartanMatrix::direct_sum(CartanMatrix::type_b(2), CartanMatrix::type_a(1));
  CHECK(sum.rank() == 3);
  CHECK(sum.entry(1, 0) == -2);
  CHECK(sum.entry(2, 2) == 2);
  CHECK(sum.entry(0, 2) == 0);
  CHECK(sum.label(2).display == "3");
}
