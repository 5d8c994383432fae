#include <doctest.h>

#include "hermitian/minwords.hpp"
#include "hermitian/onepoint.hpp"

using namespace hermitian;

TEST_CASE("pole order to (d, a) and back") {
  CHECK(m_to_da(7, 53) == DA{7, 3});   // 53 = 7*8 - 3
  CHECK(m_to_da(9, 80) == DA{8, 0});   // 80 = 8*10
  CHECK(m_to_da(2, 3) == DA{1, 0});
  CHECK_THROWS_AS((void)m_to_da(3, 0), std::invalid_argument);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    for (long m = 1; m <= max_nontrivial_m(q); ++m) {
      DA da = m_to_da(q, m);
      CHECK(da.d > 0);
      CHECK(da.a >= 0);
      CHECK(da.a <= static_cast<int>(q));
      CHECK(da_to_m(q, da) == m);
    }
  }
}

TEST_CASE("(d, a) reduction") {
  CHECK(reduce_da(3, DA{2, 2}) == DA{2, 2});
  CHECK(reduce_da(3, DA{2, 3}) == DA{1, 0});
  CHECK(reduce_da(5, DA{3, 5}) == DA{2, 0});
  CHECK_THROWS_AS((void)reduce_da(3, DA{1, 2}), std::invalid_argument);
  CHECK_THROWS_AS((void)reduce_da(3, DA{2, 4}), std::invalid_argument);
}

TEST_CASE("reduction preserves the evaluation row space") {
  HermitianCurve curve = HermitianCurve::build(3);
  for (long m = 1; m <= 12; ++m) {
    DA da = m_to_da(3, m);
    if (da.a <= da.d || da.d <= 1) continue;  // the reduction needs d > 1
    DA red = reduce_da(3, da);
    LinearCode original = build_code_projective(curve, da.d, da.a);
    LinearCode reduced = build_code_projective(curve, red.d, red.a);
    CHECK(row_space_equal(original.generator(), reduced.generator()));
    CHECK(row_space_equal(original.generator(), build_code(curve, m).generator()));
  }
}

TEST_CASE("monomial bases") {
  auto basis = monomial_basis(2, 3);
  REQUIRE(basis.size() == 3);  // 1, x, y with pole orders 0, 2, 3
  CHECK(basis[0] == std::pair{0, 0});
  CHECK(basis[1] == std::pair{1, 0});
  CHECK(basis[2] == std::pair{0, 1});
  CHECK(monomial_basis(3, 31).size() == 29);
  // pole orders ascend
  for (unsigned q : {2u, 3u, 4u}) {
    auto b = monomial_basis(q, static_cast<long>(q) * (q + 1));
    for (std::size_t i = 1; i < b.size(); ++i) {
      long prev = b[i - 1].first * q + b[i - 1].second * (q + 1);
      long cur = b[i].first * q + b[i].second * (q + 1);
      CHECK(prev <= cur);
    }
  }
}

TEST_CASE("code construction") {
  HermitianCurve curve2 = HermitianCurve::build(2);
  LinearCode c3 = build_code(curve2, 3);
  CHECK(c3.length() == 8);
  CHECK(c3.dim() == 3);
  LinearCode c1 = build_code(curve2, 1);
  CHECK(c1.dim() == 1);
  for (std::size_t j = 0; j < 8; ++j) CHECK(c1.generator().at(0, j) == 1);

  HermitianCurve curve3 = HermitianCurve::build(3);
  LinearCode c31 = build_code(curve3, 31);
  CHECK(c31.length() == 27);
  CHECK(c31.dim() == 26);

  // below q^3 the dimension equals the monomial count
  for (unsigned q : {2u, 3u}) {
    HermitianCurve curve = HermitianCurve::build(q);
    long q3 = static_cast<long>(q) * q * q;
    for (long m = 1; m < q3; ++m)
      CHECK(build_code(curve, m).dim() == monomial_basis(q, m).size());
  }
}

TEST_CASE("projective-forms construction: dimension and row space") {
  for (unsigned q : {2u, 3u, 4u}) {
    HermitianCurve curve = HermitianCurve::build(q);
    for (int d = 1; d <= static_cast<int>(q); ++d)
      for (int a = 0; a <= d; ++a) {
        LinearCode code = build_code_projective(curve, d, a);
        CHECK(code.dim() == static_cast<std::size_t>((d + 2) * (d + 1) / 2 - a));
        CHECK(row_space_equal(code.generator(),
                              build_code(curve, da_to_m(q, DA{d, a})).generator()));
      }
  }
}

TEST_CASE("dual index") {
  CHECK(dual_index(2, 3) == 5);
  CHECK(max_nontrivial_m(7) == 383);
  CHECK(dual_index(7, 53) == 330);
  for (unsigned q : {2u, 3u, 7u})
    for (long m = 0; m <= max_nontrivial_m(q); ++m)
      CHECK(dual_index(q, dual_index(q, m)) == m);
}

TEST_CASE("designed distances, all five phases") {
  CHECK(designed_distance(2, 3) == 5);    // q^3 - m
  CHECK(designed_distance(4, 3) == 64);   // m < q: q^3 - alpha(q+1), alpha = 0
  CHECK(designed_distance(3, 25) == 3);   // m = 27-9+2*3+1, b <= a: q^3 - m + b
  CHECK(designed_distance(2, 8) == 2);    // m_perp = 0: alpha + 2
  CHECK(designed_distance(7, 53) == 290);
  CHECK_THROWS_AS((void)designed_distance(2, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)designed_distance(2, 9), std::invalid_argument);
}

TEST_CASE("dual minimum distances are consistent with the table") {
  // delta(d, a) must equal the table value of the dual index, for every q and
  // every 1 <= d <= q, 0 <= a <= d with a nontrivial dual.
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    for (int d = 1; d <= static_cast<int>(q); ++d)
      for (int a = 0; a <= d; ++a) {
        long m = da_to_m(q, DA{d, a});
        long mp = dual_index(q, m);
        if (mp < 1 || mp > max_nontrivial_m(q)) continue;
        CHECK(dual_delta(q, d, a) == designed_distance(q, mp));
      }
  }
}
