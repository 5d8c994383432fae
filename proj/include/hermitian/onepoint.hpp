#pragma once

#include <utility>
#include <vector>

#include "hermitian/codes.hpp"
#include "hermitian/geometry.hpp"

namespace hermitian {

// Designations of a one-point code on the Hermitian curve: either the pole
// order m, or the pair (d, a) with m = d(q+1) - a and 0 <= a <= q.
struct DA {
  int d = 0;
  int a = 0;
  auto operator<=>(const DA&) const = default;
};

DA m_to_da(unsigned q, long m);     // the unique (d, a); requires m > 0
long da_to_m(unsigned q, DA da);
// (d, a) -> (d-1, 0) when a > d (division by the tangent line at P_inf);
// identity otherwise. Requires d > 1 when a > d.
DA reduce_da(unsigned q, DA da);

// Monomials x^i y^j with 0 <= j <= q-1 and iq + j(q+1) <= m, ordered by
// ascending pole order iq + j(q+1), ties by ascending j. This order fixes the
// generator rows of every code built here.
std::vector<std::pair<int, int>> monomial_basis(unsigned q, long m);

long max_nontrivial_m(unsigned q);  // q^3 + q^2 - q - 2
long dual_index(unsigned q, long m);

// The true minimum distance of C_m (all five phases of the known table).
int designed_distance(unsigned q, long m);

// Evaluation of the monomial basis of L(m P_inf) at the affine points, in
// canonical point order, minus the columns in `removed` (point ids). The
// generator keeps the literal monomial evaluations whenever they are
// independent and is row-reduced otherwise (m >= q^3 or nonempty removal).
LinearCode build_code(const HermitianCurve& curve, long m,
                      const std::vector<int>& removed = {});
LinearCode build_code_da(const HermitianCurve& curve, int d, int a,
                         const std::vector<int>& removed = {});

// Independent construction by degree-d ternary forms vanishing to order >= a
// at P_inf. Since the tangent branch at P_inf has contact order q+1, the
// order conditions for a <= q kill exactly the coefficients of x^i y^(d-i)
// with i < a, so the surviving monomial forms are an explicit basis. Its row
// space must coincide with build_code_da(d, a).
LinearCode build_code_projective(const HermitianCurve& curve, int d, int a);

}  // namespace hermitian
