#include <doctest.h>

#include <random>
#include <set>

#include "hermitian/geometry.hpp"

using namespace hermitian;

TEST_CASE("curve point counts: q^3 affine plus one at infinity") {
  for (unsigned q : {2u, 3u, 4u}) {
    HermitianCurve curve = HermitianCurve::build(q);
    CHECK(curve.affine_points().size() == static_cast<std::size_t>(q) * q * q);
    CHECK(curve.total_points() == static_cast<std::size_t>(q) * q * q + 1);
    for (const ProjPoint& p : curve.affine_points()) {
      CHECK(p.z == 1);
      CHECK(curve.on_curve(p));
    }
    CHECK(curve.on_curve(curve.p_infinity()));
    // point order is lexicographic in (x, y); fibers are contiguous
    for (std::size_t i = 1; i < curve.affine_points().size(); ++i) {
      const auto& a = curve.affine_points()[i - 1];
      const auto& b = curve.affine_points()[i];
      CHECK((a.x < b.x || (a.x == b.x && a.y < b.y)));
    }
  }
}

TEST_CASE("canonical representatives are scale invariant") {
  auto f = Field::build(3, 2);
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    Fel x = static_cast<Fel>(rng() % 9), y = static_cast<Fel>(rng() % 9),
        z = static_cast<Fel>(rng() % 9);
    if (x == 0 && y == 0 && z == 0) continue;
    Fel s = 1 + static_cast<Fel>(rng() % 8);
    ProjPoint a = canonical_point(*f, x, y, z);
    ProjPoint b = canonical_point(*f, f->mul(s, x), f->mul(s, y), f->mul(s, z));
    CHECK(a == b);
  }
}

TEST_CASE("two distinct points lie on exactly one line") {
  auto f = Field::build(2, 2);
  auto pts = all_points(*f);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const ProjPoint& p = pts[rng() % pts.size()];
    const ProjPoint& q = pts[rng() % pts.size()];
    if (p == q) continue;
    Line l = line_through(*f, p, q);
    CHECK(on_line(*f, l, p));
    CHECK(on_line(*f, l, q));
    int count = 0;
    for (const Line& m : all_lines(*f))
      if (on_line(*f, m, p) && on_line(*f, m, q)) ++count;
    CHECK(count == 1);
  }
}

TEST_CASE("plane enumeration sizes and line point counts") {
  auto f = Field::build(2, 2);
  CHECK(all_points(*f).size() == 21);  // q^4 + q^2 + 1 for q = 2
  CHECK(all_lines(*f).size() == 21);
  for (const Line& l : all_lines(*f)) {
    auto pts = points_on_line(*f, l);
    CHECK(pts.size() == 5);  // q^2 + 1
    std::set<ProjPoint> distinct(pts.begin(), pts.end());
    CHECK(distinct.size() == 5);
    for (const ProjPoint& p : pts) CHECK(on_line(*f, l, p));
  }
}

TEST_CASE("tangent lines") {
  for (unsigned q : {2u, 3u, 4u}) {
    HermitianCurve curve = HermitianCurve::build(q);
    const Field& f = curve.field();
    // at P_inf the tangent is z = 0
    CHECK(curve.tangent_line(curve.p_infinity()) == Line{0, 0, 1});
    // at (0,0,1) the tangent meets the curve only there
    ProjPoint origin{0, 0, 1};
    REQUIRE(curve.on_curve(origin));
    Line t = curve.tangent_line(origin);
    for (const ProjPoint& p : curve.affine_points())
      if (on_line(f, t, p)) CHECK(p == origin);
    CHECK_FALSE(on_line(f, t, curve.p_infinity()));
    // tangents at distinct points are pairwise distinct
    std::set<Line> tangents;
    for (const ProjPoint& p : curve.affine_points()) tangents.insert(curve.tangent_line(p));
    tangents.insert(curve.tangent_line(curve.p_infinity()));
    CHECK(tangents.size() == curve.total_points());
    CHECK_THROWS_AS((void)curve.tangent_line(ProjPoint{1, 0, 0}), std::invalid_argument);
  }
}

TEST_CASE("line classification matches the known class sizes") {
  {
    HermitianCurve curve = HermitianCurve::build(2);
    LineClasses c = classify_lines(curve);
    CHECK(c.tangents.size() == 9);
    CHECK(c.r_inf.size() == 4);
    CHECK(c.r.size() == 8);
  }
  {
    HermitianCurve curve = HermitianCurve::build(3);
    LineClasses c = classify_lines(curve);
    CHECK(c.tangents.size() == 28);
    CHECK(c.r_inf.size() == 9);
    CHECK(c.r.size() == 54);
    CHECK(c.tangents.size() + c.r_inf.size() + c.r.size() == 91);  // q^4+q^2+1
    // every non-tangent line meets the curve in exactly q+1 rational points
    const Field& f = curve.field();
    for (const Line& l : c.r_inf) {
      int count = curve.on_curve(curve.p_infinity()) && on_line(f, l, curve.p_infinity());
      for (const ProjPoint& p : curve.affine_points())
        if (on_line(f, l, p)) ++count;
      CHECK(count == 4);
    }
  }
}

TEST_CASE("fibers are the sections of the lines through P_inf") {
  HermitianCurve curve = HermitianCurve::build(3);
  const Field& f = curve.field();
  for (Fel x = 0; x < f.order(); ++x) {
    const auto& fiber = curve.fiber(x);
    CHECK(fiber.size() == 3);
    Line l = curve.fiber_line(x);
    CHECK(on_line(f, l, curve.p_infinity()));
    for (int id : fiber) CHECK(on_line(f, l, curve.affine_points()[id]));
  }
}

TEST_CASE("parabola census") {
  {
    HermitianCurve curve = HermitianCurve::build(3);
    auto census = parabola_census(curve);
    CHECK(census.at(6) == 36);  // q^2 (q+1)(q-1)/2 for q = 3
    std::uint64_t total = 0;
    for (auto [h, n] : census) {
      total += n;
      CHECK(h <= 6);
    }
    CHECK(total == 648);  // (q^2 - 1) q^4
  }
  {
    HermitianCurve curve = HermitianCurve::build(2);
    auto census = parabola_census(curve);
    std::uint64_t total = 0;
    for (auto [h, n] : census) {
      total += n;
      CHECK(h <= 3);  // 2q - 1 for even q
    }
    CHECK(total == 48);
  }
}

TEST_CASE("conic evaluation, line pairs and the parabola family") {
  HermitianCurve curve = HermitianCurve::build(3);
  const Field& f = curve.field();

  Conic par = parabola_conic(f, 1, 0, 0);  // y = x^2
  for (Fel x = 0; x < f.order(); ++x)
    CHECK(on_conic(f, par, ProjPoint{x, f.mul(x, x), 1}));
  CHECK(on_conic(f, par, ProjPoint{0, 1, 0}));
  CHECK(is_smooth_conic(f, par));

  Line l1 = curve.fiber_line(0), l2 = curve.fiber_line(1);
  Conic pair = line_pair_conic(f, l1, l2);
  CHECK_FALSE(is_smooth_conic(f, pair));
  for (const ProjPoint& p : points_on_line(f, l1)) CHECK(on_conic(f, pair, p));
  for (const ProjPoint& p : points_on_line(f, l2)) CHECK(on_conic(f, pair, p));
}

namespace {

// Independent characteristic-2 smoothness oracle: the associated alternating
// form has rank 0 or 2; the conic is degenerate exactly when (D,E,F) = 0 (a
// double line) or the rational nucleus (F:E:D) lies on it.
bool smooth_char2_oracle(const Field& f, const Conic& c) {
  Fel d = c.c[3], e = c.c[4], ff = c.c[5];
  if (d == 0 && e == 0 && ff == 0) return false;
  Fel v = f.add(f.add(f.mul(c.c[0], f.mul(ff, ff)), f.mul(c.c[1], f.mul(e, e))),
                f.add(f.mul(c.c[2], f.mul(d, d)), f.mul(d, f.mul(e, ff))));
  return v != 0;
}

}  // namespace

TEST_CASE("characteristic-2 smoothness agrees with the algebraic nucleus criterion") {
  auto f = Field::build(2, 2);  // F_4, the plane of the q = 2 curve
  const Fel n = f->order();
  // exhaust all canonical conics
  std::array<Fel, 6> coeff{};
  for (int lead = 0; lead < 6; ++lead) {
    std::uint64_t combos = 1;
    for (int i = 0; i < lead; ++i) combos *= n;
    for (std::uint64_t idx = 0; idx < combos; ++idx) {
      std::uint64_t v = idx;
      coeff.fill(0);
      for (int i = 0; i < lead; ++i) {
        coeff[i] = static_cast<Fel>(v % n);
        v /= n;
      }
      coeff[lead] = 1;
      Conic c{coeff};
      CHECK(is_smooth_conic(*f, c) == smooth_char2_oracle(*f, c));
    }
  }
}

TEST_CASE("odd-characteristic smoothness agrees with a factor search") {
  auto f = Field::build(3, 2);
  auto f_ext = Field::build(3, 4);
  auto emb = find_embedding(*f, *f_ext);
  auto factor_search_degenerate = [&](const Conic& c) {
    Conic lifted;
    for (int i = 0; i < 6; ++i) lifted.c[i] = emb[c.c[i]];
    for (const Line& l : all_lines(*f_ext)) {
      bool divides = true;
      for (const ProjPoint& p : points_on_line(*f_ext, l))
        if (eval_conic(*f_ext, lifted, p) != 0) {
          divides = false;
          break;
        }
      if (divides) return true;
    }
    return false;
  };
  std::mt19937_64 rng(31337);
  int checked = 0;
  while (checked < 40) {
    std::array<Fel, 6> coeff{};
    for (auto& v : coeff) v = static_cast<Fel>(rng() % 9);
    bool zero = true;
    for (Fel v : coeff) zero = zero && v == 0;
    if (zero) continue;
    Conic c = canonical_conic(*f, coeff);
    CHECK(is_smooth_conic(*f, c) == !factor_search_degenerate(c));
    ++checked;
  }
}
