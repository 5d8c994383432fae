#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <vector>

#include "hermitian/common.hpp"
#include "hermitian/gf.hpp"

namespace hermitian {

// Projective objects are kept in canonical form: scaled so that the last
// (rightmost) nonzero coordinate is 1. This gives unique representatives and
// deterministic set semantics.
struct ProjPoint {
  Fel x = 0, y = 0, z = 0;
  auto operator<=>(const ProjPoint&) const = default;
};

// Line a*x + b*y + c*z = 0, coefficients canonicalized like points.
struct Line {
  Fel a = 0, b = 0, c = 0;
  auto operator<=>(const Line&) const = default;
};

// Conic A x^2 + B y^2 + C z^2 + D xy + E xz + F yz = 0 with coefficient order
// (A,B,C,D,E,F), canonicalized like points.
struct Conic {
  std::array<Fel, 6> c{};
  auto operator<=>(const Conic&) const = default;
};

ProjPoint canonical_point(const Field& f, Fel x, Fel y, Fel z);
Line canonical_line(const Field& f, Fel a, Fel b, Fel c);
Conic canonical_conic(const Field& f, const std::array<Fel, 6>& c);

bool on_line(const Field& f, const Line& l, const ProjPoint& p);
Fel eval_conic(const Field& f, const Conic& c, const ProjPoint& p);
bool on_conic(const Field& f, const Conic& c, const ProjPoint& p);
Line line_through(const Field& f, const ProjPoint& p, const ProjPoint& q);

std::vector<ProjPoint> all_points(const Field& f);  // q^4 + q^2 + 1 of them
std::vector<Line> all_lines(const Field& f);
std::vector<ProjPoint> points_on_line(const Field& f, const Line& l);
// The degree-2 divisor L*M as a conic.
Conic line_pair_conic(const Field& f, const Line& l, const Line& m);
// Smoothness = the conic is not a product of two linear forms over the
// algebraic closure. Odd characteristic: rank test of the symmetric-form
// matrix [[2A,D,E],[D,2B,F],[E,F,2C]]. Characteristic 2: explicit search for
// a linear factor over the quadratic extension field.
bool is_smooth_conic(const Field& f, const Conic& c);

// The Hermitian curve y^q + y = x^(q+1) over F_{q^2}, with its q^3 affine
// rational points enumerated in lexicographic (x index, y index) order and
// P_inf = (0:1:0) last.
class HermitianCurve {
 public:
  static HermitianCurve build(unsigned q);

  unsigned q() const { return q_; }
  const Field& field() const { return *field_; }
  const std::shared_ptr<const Field>& field_ptr() const { return field_; }
  const std::vector<ProjPoint>& affine_points() const { return affine_; }
  const ProjPoint& p_infinity() const { return p_inf_; }
  std::size_t total_points() const { return affine_.size() + 1; }

  bool on_curve(const ProjPoint& p) const;
  // Index of an affine curve point in affine_points(), or -1.
  int point_id(const ProjPoint& p) const;
  // Tangent line at a rational curve point; meets the curve only there.
  Line tangent_line(const ProjPoint& p) const;

  // The affine points with x-coordinate c (a fiber of size q); these are the
  // traces of the non-tangent lines through P_inf.
  const std::vector<int>& fiber(Fel x) const { return fibers_[x]; }
  Line fiber_line(Fel x) const;  // the line x = c*z

 private:
  unsigned q_ = 0;
  std::shared_ptr<const Field> field_;
  std::vector<ProjPoint> affine_;
  ProjPoint p_inf_;
  std::vector<std::vector<int>> fibers_;
  std::unordered_map<std::uint64_t, int> index_;
};

struct LineClasses {
  std::vector<Line> tangents;  // q^3 + 1: meet the curve in one rational point
  std::vector<Line> r_inf;     // q^2: through P_inf, not tangent
  std::vector<Line> r;         // q^4 - q^3: neither through P_inf nor tangent
};

// Partitions all lines of PG(2, q^2) by exhaustive incidence counting. Throws
// logic_error if any line profile falls outside the tangent/(q+1) dichotomy.
LineClasses classify_lines(const HermitianCurve& curve);

// Census of the affine parabolas y = a x^2 + b x + c (a != 0), i.e. of the
// smooth conics through P_inf tangent to the curve there: maps h to the
// number of parabolas meeting the curve in exactly h affine points.
std::map<unsigned, std::uint64_t> parabola_census(const HermitianCurve& curve,
                                                  unsigned workers = 0);

// The parabola y = a x^2 + b x + c as a projective conic.
Conic parabola_conic(const Field& f, Fel a, Fel b, Fel c);

}  // namespace hermitian
