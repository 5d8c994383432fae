#pragma once

#include <optional>
#include <vector>

#include "hermitian/codes.hpp"
#include "hermitian/geometry.hpp"

namespace hermitian {

// The zero-dimensional scheme E u S with E = a*P_inf along the curve
// (0 <= a <= q) and S a reduced set of affine rational curve points,
// identified by their ids in curve.affine_points().
struct ZeroScheme {
  int a = 0;
  std::vector<int> points;
  int degree() const { return a + static_cast<int>(points.size()); }
};

enum class H1Case { none, line, conic, cubic_ci, cubic, unresolved };
const char* to_string(H1Case c);

struct H1Report {
  int h0 = 0;
  int h1 = 0;
  H1Case witness_case = H1Case::none;
  std::optional<Line> line_witness;
  std::optional<Conic> conic_witness;
};

// Local branch of the curve at a rational point P, as truncated coordinate
// series in a local parameter t (degree < cap).
struct BranchSeries {
  std::vector<Fel> x, y, z;
};
BranchSeries branch_at(const HermitianCurve& curve, const ProjPoint& p, int cap);

// Order of vanishing of the divisor along the branch at P; returns cap when
// the truncated composition vanishes identically (order >= cap).
int contact_order(const HermitianCurve& curve, const ProjPoint& p, const Line& l, int cap);
int contact_order(const HermitianCurve& curve, const ProjPoint& p, const Conic& c, int cap);

// Branch order at P_inf, capped at 2q+3. For a line: 0 when P_inf is off the
// line, 1 when the line passes through P_inf transversally, q+1 for the
// tangent z = 0.
int order_at_infinity(const HermitianCurve& curve, const Line& l);
int order_at_infinity(const HermitianCurve& curve, const Conic& c);

// deg(T n Z) = |S n T| + min(a, branch order of T at P_inf).
int intersection_degree(const HermitianCurve& curve, const Line& l, const ZeroScheme& z);
int intersection_degree(const HermitianCurve& curve, const Conic& c, const ZeroScheme& z);

// h^0 / h^1 of the ideal sheaf of Z twisted by d, for 0 < d <= q: h0 is the
// dimension of degree-d ternary forms vanishing on S and to order >= a at
// P_inf; h1 = deg(Z) - (C(d+2,2) - h0). The report's witness_case is `none`
// when h1 = 0 and `unresolved` otherwise (run classify_h1_positive for the
// witness search).
H1Report h0_h1(const HermitianCurve& curve, int d, const ZeroScheme& z);

// Searches for the object certifying h1 > 0: lines always (exhaustively, in
// canonical order), conics when deg(Z) >= 2d+2. The cubic branches are not
// searched (not needed at degree <= 3d-1) and report `unresolved`.
H1Report classify_h1_positive(const HermitianCurve& curve, int d, const ZeroScheme& z);

// The kernel <-> h1 identity: dim{words of C(d,a)^perp supported within S}
// equals h1(I_{S u E}(d)). Returns true when the two independently computed
// integers agree.
bool kernel_h1_identity(const HermitianCurve& curve, int d, int a,
                        const std::vector<int>& s);
bool kernel_h1_identity(const HermitianCurve& curve, const LinearCode& cda, int d,
                        int a, const std::vector<int>& s);

}  // namespace hermitian
