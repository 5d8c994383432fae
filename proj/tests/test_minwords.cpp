#include <doctest.h>

#include "hermitian/minwords.hpp"
#include "hermitian/onepoint.hpp"

using namespace hermitian;

TEST_CASE("dual minimum distances") {
  CHECK(dual_delta(3, 2, 0) == 4);  // d + 2
  CHECK(dual_delta(3, 2, 1) == 3);  // d + 1
  CHECK(dual_delta(5, 5, 3) == 10); // 2q
  CHECK(dual_delta(4, 4, 1) == 9);  // 2q + 1
  CHECK(dual_delta(4, 4, 0) == 10); // 2q + 2
  CHECK_THROWS_AS((void)dual_delta(3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)dual_delta(3, 2, 3), std::invalid_argument);
}

TEST_CASE("closed-form counts") {
  CHECK(closed_form_count(9, 8, 0) == 466560);
  CHECK(closed_form_count(3, 3, 2) == 576);
  CHECK(closed_form_count(4, 4, 2) == 1800);   // 15 * C(16, 2)
  CHECK(closed_form_count(3, 2, 0) == 432);    // 8 * 54
  CHECK(closed_form_count(3, 1, 0) == 1800);   // 8 * (9 + 54*4)
  CHECK(closed_form_count(2, 1, 1) == 12);     // 3 * 4
  CHECK(closed_form_count(7, 7, 3) == 112896); // 48 * (1176 + 1176)
  CHECK_THROWS_AS((void)closed_form_count(3, 3, 0), std::invalid_argument);
  CHECK_THROWS_AS((void)closed_form_count(3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS((void)closed_form_count(3, 3, 3), std::invalid_argument);
}

TEST_CASE("support enumeration counts") {
  HermitianCurve curve3 = HermitianCurve::build(3);
  CHECK(enumerate_supports(curve3, 2, 1).size() == 9);    // q^2 C(q, 3)
  CHECK(enumerate_supports(curve3, 3, 2).size() == 72);   // 36 + 36
  CHECK(enumerate_supports(curve3, 1, 0).size() == 225);  // 9 + 54*4

  HermitianCurve curve2 = HermitianCurve::build(2);
  auto s = enumerate_supports(curve2, 1, 0);
  CHECK(s.size() == 8);  // C(2,3) empty on fibers, 8 full R-line sections
  for (const auto& sup : s) CHECK(sup.family == SupportFamily::line_r);
}

TEST_CASE("verification censuses at q = 3 with exhaustive scans") {
  HermitianCurve curve = HermitianCurve::build(3);
  {
    MinWeightCensus c = verify_min_words(curve, 2, 0, true);
    CHECK(c.delta == 4);
    CHECK(c.support_count == 54);
    CHECK(c.a_delta == 432);
    CHECK(c.ok());
    CHECK(c.exhaustive_checked);
  }
  {
    MinWeightCensus c = verify_min_words(curve, 2, 1, true);
    CHECK(c.support_count == 9);
    CHECK(c.a_delta == 72);
    CHECK(c.ok());
  }
  {
    MinWeightCensus c = verify_min_words(curve, 1, 0, true);
    CHECK(c.support_count == 225);
    CHECK(c.a_delta == 1800);
    CHECK(c.ok());
  }
  {
    MinWeightCensus c = verify_min_words(curve, 3, 2, true);
    CHECK(c.support_count == 72);
    CHECK(c.families.at("conic_pair_lines") == 36);
    CHECK(c.families.at("conic_parabola") == 36);
    CHECK(c.a_delta == 576);
    CHECK(c.ok());
  }
}

TEST_CASE("the q = 2 grid, including the conic-census cases") {
  HermitianCurve curve = HermitianCurve::build(2);
  {
    MinWeightCensus c = verify_min_words(curve, 1, 0, true);
    CHECK(c.delta == 3);
    CHECK(c.support_count == 8);
    CHECK(c.a_delta == 24);
    CHECK(c.ok());
  }
  {
    MinWeightCensus c = verify_min_words(curve, 1, 1, true);
    CHECK(c.delta == 2);
    CHECK(c.support_count == 4);
    CHECK(c.a_delta == 12);
    CHECK(c.ok());
  }
  {
    // d = q = 2, a = 0: supports are the 6-point conic sections
    MinWeightCensus c = verify_min_words(curve, 2, 0, true);
    CHECK(c.delta == 6);
    CHECK(c.support_count > 0);
    CHECK(c.ok());
    CHECK_FALSE(c.closed_form.has_value());
  }
  {
    // d = q = 2, a = 1: conics through P_inf with 5 affine points
    MinWeightCensus c = verify_min_words(curve, 2, 1, true);
    CHECK(c.delta == 5);
    CHECK(c.support_count > 0);
    CHECK(c.ok());
  }
}

TEST_CASE("the q = 3, d = q conic-census cases, exhaustively") {
  HermitianCurve curve = HermitianCurve::build(3);
  {
    // a = 0: supports are the full 8-point sections of conics missing P_inf.
    // Only pairs of 4-point lines meeting off the curve reach 8 points here:
    // C(54,2) - 27*C(8,2) = 675 (each affine curve point carries 8 such lines).
    MinWeightCensus c = verify_min_words(curve, 3, 0, true);
    CHECK(c.delta == 8);
    CHECK(c.support_count == 675);
    CHECK(c.families.at("conic_pair_lines") == 675);
    CHECK(c.ok());
    CHECK_FALSE(c.closed_form.has_value());
  }
  {
    // a = 1: conics through P_inf with 7 affine points: a 4-point line paired
    // with a fiber line, meeting off the curve: 54 * (9 - 4) = 270.
    MinWeightCensus c = verify_min_words(curve, 3, 1, true);
    CHECK(c.delta == 7);
    CHECK(c.support_count == 270);
    CHECK(c.ok());
  }
}

TEST_CASE("census counterexamples surface instead of being swallowed") {
  HermitianCurve curve = HermitianCurve::build(3);
  Budget tiny;
  tiny.max_subsets = 3;
  CHECK_THROWS_AS((void)verify_min_words(curve, 2, 0, true, tiny), budget_error);
}
