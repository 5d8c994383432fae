#include <doctest.h>

#include <map>

#include "hermitian/codes.hpp"
#include "hermitian/onepoint.hpp"

using namespace hermitian;

namespace {

LinearCode repetition_code(const std::shared_ptr<const Field>& f, std::size_t n) {
  Matrix g(f, 1, n);
  for (std::size_t j = 0; j < n; ++j) g.at(0, j) = 1;
  std::vector<ProjPoint> labels;
  for (std::size_t j = 0; j < n; ++j)
    labels.push_back(ProjPoint{static_cast<Fel>(j % f->order()),
                               static_cast<Fel>(j / f->order()), 1});
  return LinearCode(std::move(g), std::move(labels));
}

// Independent weight-distribution oracle: enumerate every codeword by nested
// coefficient recursion (no shared machinery with min_distance).
std::map<int, std::uint64_t> weight_distribution(const LinearCode& c) {
  const Field& f = c.field();
  std::map<int, std::uint64_t> dist;
  std::vector<Fel> coeff(c.dim(), 0);
  std::vector<Fel> word(c.length(), 0);
  auto rec = [&](auto&& self, std::size_t row) -> void {
    if (row == c.dim()) {
      int w = 0;
      for (Fel v : word) w += v != 0;
      ++dist[w];
      return;
    }
    for (Fel v = 0; v < f.order(); ++v) {
      coeff[row] = v;
      std::vector<Fel> saved = word;
      for (std::size_t j = 0; j < c.length(); ++j)
        word[j] = f.add(word[j], f.mul(v, c.generator().at(row, j)));
      self(self, row + 1);
      word = saved;
    }
  };
  rec(rec, 0);
  return dist;
}

}  // namespace

TEST_CASE("duals of the extreme codes") {
  auto f = Field::build(2, 2);
  // full space
  Matrix id(f, 3, 3);
  for (int i = 0; i < 3; ++i) id.at(i, i) = 1;
  std::vector<ProjPoint> labels{{0, 0, 1}, {0, 1, 1}, {0, 2, 1}};
  LinearCode full(std::move(id), labels);
  LinearCode zero = dual(full);
  CHECK(zero.dim() == 0);
  CHECK_FALSE(min_distance(zero, DistanceStrategy::exhaustive, 0).distance.has_value());

  // repetition -> sum-zero code
  LinearCode rep = repetition_code(f, 5);
  LinearCode sum_zero = dual(rep);
  CHECK(sum_zero.dim() == 4);
  CHECK(is_zero(mat_mul(rep.generator(), transpose(sum_zero.generator()))));
  CHECK(row_space_equal(dual(sum_zero).generator(), rep.generator()));
  CHECK(*min_distance(rep, DistanceStrategy::exhaustive, 0).distance == 5);
  CHECK(*min_distance(sum_zero, DistanceStrategy::exhaustive, 0).distance == 2);
}

TEST_CASE("the q=2 one-point code of pole order 3") {
  HermitianCurve curve = HermitianCurve::build(2);
  LinearCode c3 = build_code(curve, 3);
  CHECK(c3.length() == 8);
  CHECK(c3.dim() == 3);
  LinearCode d = dual(c3);
  CHECK(d.dim() == 5);
  CHECK(is_zero(mat_mul(c3.generator(), transpose(d.generator()))));

  auto exhaustive = min_distance(c3, DistanceStrategy::exhaustive, 0);
  auto searched = min_distance(c3, DistanceStrategy::support_search, 8);
  CHECK(*exhaustive.distance == 5);
  CHECK(*searched.distance == 5);

  auto dual_ex = min_distance(d, DistanceStrategy::exhaustive, 0);
  auto dual_ss = min_distance(d, DistanceStrategy::support_search, 8);
  CHECK(dual_ex.distance == dual_ss.distance);
}

TEST_CASE("words supported within a coordinate subset") {
  HermitianCurve curve = HermitianCurve::build(2);
  LinearCode c3 = build_code(curve, 3);
  LinearCode d = dual(c3);

  CHECK(words_supported_within(d, {}).dimension == 0);
  std::vector<int> everything;
  for (int i = 0; i < 8; ++i) everything.push_back(i);
  CHECK(words_supported_within(d, everything).dimension == 5);

  // a full 3-point section of a non-tangent line avoiding P_inf carries a
  // dual word of full support (the q=2 dual minimum weight is 3)
  const Field& f = curve.field();
  std::vector<int> section;
  for (const Line& l : all_lines(f)) {
    if (on_line(f, l, curve.p_infinity())) continue;
    section.clear();
    for (const ProjPoint& p : points_on_line(f, l)) {
      int id = curve.point_id(p);
      if (id >= 0) section.push_back(id);
    }
    if (section.size() == 3) break;
  }
  REQUIRE(section.size() == 3);
  SupportWords sw = words_supported_within(d, section);
  CHECK(sw.dimension >= 1);
  REQUIRE(sw.full_support_word.has_value());
  // witness is a dual codeword with support exactly the section
  const auto& w = *sw.full_support_word;
  for (int i = 0; i < 8; ++i) {
    bool in_s = std::find(section.begin(), section.end(), i) != section.end();
    CHECK((w[i] != 0) == in_s);
  }
  Matrix word(curve.field_ptr(), 1, 8);
  for (int i = 0; i < 8; ++i) word.at(0, i) = w[i];
  CHECK(is_zero(mat_mul(word, transpose(c3.generator()))));

  CHECK_THROWS_AS((void)words_supported_within(d, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS((void)words_supported_within(d, {99}), std::invalid_argument);
}

TEST_CASE("full-support witness search in the small-field fallback regime") {
  // sum-zero code over F_4 on 6 coordinates, S of size 5 > |F|
  auto f = Field::build(2, 2);
  LinearCode rep = repetition_code(f, 6);
  LinearCode sum_zero = dual(rep);
  std::vector<int> s{0, 1, 2, 3, 4};
  SupportWords sw = words_supported_within(sum_zero, s);
  CHECK(sw.dimension == 4);
  REQUIRE(sw.full_support_word.has_value());
  Fel acc = 0;
  int nonzero = 0;
  for (int i = 0; i < 6; ++i) {
    acc = f->add(acc, (*sw.full_support_word)[i]);
    nonzero += (*sw.full_support_word)[i] != 0;
  }
  CHECK(acc == 0);
  CHECK(nonzero == 5);
}

TEST_CASE("puncturing") {
  auto f = Field::build(2, 2);
  LinearCode rep = repetition_code(f, 5);
  LinearCode same = puncture(rep, {});
  CHECK(row_space_equal(same.generator(), rep.generator()));
  LinearCode shorter = puncture(rep, {2});
  CHECK(shorter.length() == 4);
  CHECK(shorter.dim() == 1);
  for (std::size_t j = 0; j < 4; ++j) CHECK(shorter.generator().at(0, j) == 1);
  CHECK_THROWS_AS((void)puncture(rep, {0, 1, 2, 3, 4}), std::invalid_argument);
}

TEST_CASE("column scaling is a strong isometry") {
  HermitianCurve curve = HermitianCurve::build(2);
  LinearCode c3 = build_code(curve, 3);
  const Field& f = curve.field();

  std::vector<Fel> ones(8, 1);
  CHECK(row_space_equal(scale_columns(c3, ones).generator(), c3.generator()));

  std::vector<Fel> v{1, 2, 3, 1, 2, 3, 2, 2};
  std::vector<Fel> vinv;
  for (Fel x : v) vinv.push_back(f.inv(x));
  LinearCode scaled = scale_columns(c3, v);
  CHECK(row_space_equal(scale_columns(scaled, vinv).generator(), c3.generator()));

  CHECK(weight_distribution(c3) == weight_distribution(scaled));

  std::vector<Fel> with_zero(8, 1);
  with_zero[3] = 0;
  CHECK_THROWS_AS((void)scale_columns(c3, with_zero), std::invalid_argument);
}

TEST_CASE("both distance strategies agree across the whole q = 2 family") {
  HermitianCurve curve = HermitianCurve::build(2);
  for (long m = 1; m <= 8; ++m) {
    LinearCode code = build_code(curve, m);
    auto ex = min_distance(code, DistanceStrategy::exhaustive, 0);
    auto ss = min_distance(code, DistanceStrategy::support_search, 8);
    REQUIRE(ex.distance.has_value());
    CHECK(ex.distance == ss.distance);
  }
}

TEST_CASE("budgets are enforced loudly") {
  HermitianCurve curve = HermitianCurve::build(2);
  LinearCode c3 = build_code(curve, 3);
  Budget tiny;
  tiny.max_codewords = 4;
  CHECK_THROWS_AS((void)min_distance(c3, DistanceStrategy::exhaustive, 0, tiny), budget_error);
  Budget tiny2;
  tiny2.max_subsets = 4;
  CHECK_THROWS_AS((void)min_distance(c3, DistanceStrategy::support_search, 8, tiny2),
                  budget_error);
}

TEST_CASE("generator construction rejects bad input") {
  auto f = Field::build(2, 2);
  Matrix dep(f, 2, 3);
  dep.at(0, 0) = 1;
  dep.at(1, 0) = 2;  // scalar multiple of row 0
  std::vector<ProjPoint> labels{{0, 0, 1}, {0, 1, 1}, {0, 2, 1}};
  CHECK_THROWS_AS(LinearCode(dep, labels), std::invalid_argument);
  Matrix ok(f, 1, 3);
  ok.at(0, 0) = 1;
  std::vector<ProjPoint> dup{{0, 0, 1}, {0, 0, 1}, {0, 2, 1}};
  CHECK_THROWS_AS(LinearCode(ok, dup), std::invalid_argument);
}
