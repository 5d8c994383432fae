#include <doctest.h>

#include "hermitian/improve.hpp"

using namespace hermitian;

TEST_CASE("the improving criterion") {
  HermitianCurve curve = HermitianCurve::build(3);
  CHECK_FALSE(is_improving(curve, 2, 1, {}));  // every fiber keeps q >= d+1 points

  // the whole of B is vacuously improving
  std::vector<int> everything(27);
  for (int i = 0; i < 27; ++i) everything[i] = i;
  CHECK(is_improving(curve, 2, 1, everything));

  // one point per fiber leaves d = 2 points on every line through P_inf
  std::vector<int> one_per_fiber;
  for (Fel x = 0; x < 9; ++x) one_per_fiber.push_back(curve.fiber(x)[0]);
  CHECK(is_improving(curve, 2, 1, one_per_fiber));

  CHECK_THROWS_AS((void)is_improving(curve, 2, 0, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)is_improving(curve, 3, 1, {}), std::invalid_argument);
  CHECK_THROWS_AS((void)is_improving(curve, 2, 1, {0, 0}), std::invalid_argument);
}

TEST_CASE("minimal improving sets") {
  HermitianCurve curve = HermitianCurve::build(3);
  ImprovingSet h = minimal_improving_set(curve, 2, 1);
  CHECK(h.removed.size() == 9);  // q^2 (q - d)
  CHECK(is_improving(curve, 2, 1, h.removed));
  for (const auto& [x, ids] : h.per_line) CHECK(ids.size() == 1);
  // removing any single member breaks the property
  for (std::size_t i = 0; i < h.removed.size(); ++i) {
    std::vector<int> smaller = h.removed;
    smaller.erase(smaller.begin() + i);
    CHECK_FALSE(is_improving(curve, 2, 1, smaller));
  }
}

TEST_CASE("improvement reports: q = 3") {
  HermitianCurve curve = HermitianCurve::build(3);
  {
    ImprovingSet h = minimal_improving_set(curve, 2, 1);
    ImproveReport rep = improved_report(curve, 2, 1, h.removed);
    CHECK(rep.removed_size == 9);
    CHECK(rep.new_length == 18);  // q^2 d
    CHECK(rep.improving);
    CHECK(rep.dual_distance_bound == 4);  // >= d+2
    CHECK_FALSE(rep.dual_distance_exact);
    CHECK(rep.ok);
  }
  {
    // no removal: dual distance is exactly d+1 = 3
    ImproveReport rep = improved_report(curve, 2, 1, {});
    CHECK_FALSE(rep.improving);
    CHECK(rep.dual_distance_bound == 3);
    CHECK(rep.dual_distance_exact);
    REQUIRE(rep.weight_witness.has_value());
    CHECK(rep.weight_witness->size() == 3);
    CHECK(rep.ok);
  }
  {
    // a near-miss: drop one point of the minimal set; the criterion fails and
    // a weight-(d+1) dual word appears on the affected line
    ImprovingSet h = minimal_improving_set(curve, 2, 1);
    std::vector<int> smaller(h.removed.begin() + 1, h.removed.end());
    ImproveReport rep = improved_report(curve, 2, 1, smaller);
    CHECK_FALSE(rep.improving);
    CHECK(rep.dual_distance_bound == 3);
    CHECK(rep.dual_distance_exact);
    CHECK(rep.ok);
  }
}

TEST_CASE("improvement reports: q = 2") {
  HermitianCurve curve = HermitianCurve::build(2);
  ImprovingSet h = minimal_improving_set(curve, 1, 1);
  CHECK(h.removed.size() == 4);
  ImproveReport rep = improved_report(curve, 1, 1, h.removed);
  CHECK(rep.new_length == 4);
  CHECK(rep.improving);
  CHECK(rep.dual_distance_bound == 3);  // >= d+2
  CHECK_FALSE(rep.dual_distance_exact);
  CHECK(rep.ok);
}
