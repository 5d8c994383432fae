#include "hermitian/onepoint.hpp"

#include <algorithm>
#include <stdexcept>

namespace hermitian {

DA m_to_da(unsigned q, long m) {
  if (m <= 0) throw std::invalid_argument("m_to_da: m must be positive");
  long d = (m + q) / (q + 1);  // ceil(m / (q+1))
  long a = d * (q + 1) - m;
  if (a < 0 || a > static_cast<long>(q)) throw std::logic_error("m_to_da: normalization failed");
  return DA{static_cast<int>(d), static_cast<int>(a)};
}

long da_to_m(unsigned q, DA da) {
  return static_cast<long>(da.d) * (q + 1) - da.a;
}

DA reduce_da(unsigned q, DA da) {
  if (da.a < 0 || da.a > static_cast<int>(q))
    throw std::invalid_argument("reduce_da: a out of range");
  if (da.a <= da.d) return da;
  if (da.d <= 1) throw std::invalid_argument("reduce_da: requires d > 1 when a > d");
  return DA{da.d - 1, 0};
}

std::vector<std::pair<int, int>> monomial_basis(unsigned q, long m) {
  if (m < 0) throw std::invalid_argument("monomial_basis: m must be nonnegative");
  // x^i y^j has pole order iq + j(q+1) at P_inf.
  std::vector<std::pair<int, int>> basis;
  for (int j = 0; j < static_cast<int>(q); ++j)
    for (long i = 0; i * q + static_cast<long>(j) * (q + 1) <= m; ++i)
      basis.emplace_back(static_cast<int>(i), j);
  std::sort(basis.begin(), basis.end(), [q](const auto& l, const auto& r) {
    long pl = static_cast<long>(l.first) * q + static_cast<long>(l.second) * (q + 1);
    long pr = static_cast<long>(r.first) * q + static_cast<long>(r.second) * (q + 1);
    if (pl != pr) return pl < pr;
    return l.second < r.second;
  });
  return basis;
}

long max_nontrivial_m(unsigned q) {
  long q3 = static_cast<long>(q) * q * q;
  return q3 + static_cast<long>(q) * q - q - 2;
}

long dual_index(unsigned q, long m) {
  return max_nontrivial_m(q) - m;
}

int designed_distance(unsigned q, long m) {
  const long q2 = static_cast<long>(q) * q;
  const long q3 = q2 * q;
  if (m < 1 || m > max_nontrivial_m(q))
    throw std::invalid_argument("designed_distance: m out of range");

  if (m < q2 - q) {
    long alpha = m / q, beta = m % q;
    if (m < static_cast<long>(q) || alpha <= beta)
      return static_cast<int>(q3 - alpha * (q + 1));
    return static_cast<int>(q3 - beta - alpha * q);
  }
  if (m < q3 - q2) return static_cast<int>(q3 - m);
  if (m < q3) {
    long t = m - (q3 - q2);
    long a = t / q, b = t % q;
    if (a < b) return static_cast<int>(q3 - m);
    return static_cast<int>(q3 - m + b);
  }
  long mp = dual_index(q, m);
  long alpha = mp / q, beta = mp % q;
  if (mp < static_cast<long>(q) || alpha <= beta) return static_cast<int>(alpha + 2);
  return static_cast<int>(alpha + 1);
}

namespace {

LinearCode evaluation_code(const HermitianCurve& curve,
                           const std::vector<std::pair<int, int>>& exponents,
                           const std::vector<int>& removed, bool expect_full_rank) {
  const Field& f = curve.field();
  std::vector<bool> drop(curve.affine_points().size(), false);
  for (int id : removed) {
    if (id < 0 || static_cast<std::size_t>(id) >= curve.affine_points().size())
      throw std::invalid_argument("build_code: removed point out of range");
    drop[id] = true;
  }
  std::vector<int> keep;
  for (std::size_t i = 0; i < curve.affine_points().size(); ++i)
    if (!drop[i]) keep.push_back(static_cast<int>(i));
  if (keep.empty()) throw std::invalid_argument("build_code: empty evaluation set");

  Matrix g(curve.field_ptr(), exponents.size(), keep.size());
  for (std::size_t r = 0; r < exponents.size(); ++r) {
    auto [i, j] = exponents[r];
    for (std::size_t cidx = 0; cidx < keep.size(); ++cidx) {
      const ProjPoint& p = curve.affine_points()[keep[cidx]];
      g.at(r, cidx) = f.mul(f.pow(p.x, i), f.pow(p.y, j));
    }
  }
  std::vector<ProjPoint> labels;
  labels.reserve(keep.size());
  for (int id : keep) labels.push_back(curve.affine_points()[id]);

  RrefResult rr = rref_rank_kernel(g);
  if (rr.rank == g.rows) return LinearCode(std::move(g), std::move(labels));
  if (expect_full_rank)
    throw std::logic_error("build_code: evaluation matrix unexpectedly rank-deficient");
  Matrix reduced(g.field, rr.rank, g.cols);
  std::copy(rr.rref.a.begin(), rr.rref.a.begin() + rr.rank * g.cols, reduced.a.begin());
  return LinearCode(std::move(reduced), std::move(labels));
}

}  // namespace

LinearCode build_code(const HermitianCurve& curve, long m, const std::vector<int>& removed) {
  if (m < 0) throw std::invalid_argument("build_code: m must be nonnegative");
  long q3 = static_cast<long>(curve.q()) * curve.q() * curve.q();
  auto basis = monomial_basis(curve.q(), m);
  // A nonzero function of L(m P_inf) has at most m < q^3 zeros, so the
  // evaluation matrix on all affine points has full row rank below q^3.
  bool expect_full = m < q3 && removed.empty();
  return evaluation_code(curve, basis, removed, expect_full);
}

LinearCode build_code_da(const HermitianCurve& curve, int d, int a,
                         const std::vector<int>& removed) {
  if (d <= 0 || a < 0 || a > static_cast<int>(curve.q()))
    throw std::invalid_argument("build_code_da: parameters out of range");
  return build_code(curve, da_to_m(curve.q(), DA{d, a}), removed);
}

LinearCode build_code_projective(const HermitianCurve& curve, int d, int a) {
  const unsigned q = curve.q();
  if (d <= 0 || d > static_cast<int>(q) || a < 0 || a > static_cast<int>(q))
    throw std::invalid_argument("build_code_projective: parameters out of range");

  // Basis of degree-d forms vanishing to order >= a at P_inf. On the branch
  // (t, 1, z(t)) with ord z = q+1, a monomial x^al y^be z^ga restricts to
  // t^al z(t)^ga, so for a <= q the order conditions are exactly "no pure
  // x^al y^(d-al) term with al < a".
  std::vector<std::array<int, 3>> forms;
  for (int ga = 0; ga <= d; ++ga)
    for (int al = 0; al + ga <= d; ++al) {
      int be = d - al - ga;
      if (ga == 0 && al < a) continue;
      forms.push_back({al, be, ga});
    }

  const Field& f = curve.field();
  Matrix g(curve.field_ptr(), forms.size(), curve.affine_points().size());
  for (std::size_t r = 0; r < forms.size(); ++r) {
    auto [al, be, ga] = forms[r];
    for (std::size_t c = 0; c < curve.affine_points().size(); ++c) {
      const ProjPoint& p = curve.affine_points()[c];  // z = 1
      g.at(r, c) = f.mul(f.pow(p.x, al), f.pow(p.y, be));
    }
  }
  return LinearCode(std::move(g), curve.affine_points());
}

}  // namespace hermitian
