#include "hermitian/cohomology.hpp"

#include <algorithm>
#include <stdexcept>

#include "hermitian/onepoint.hpp"

namespace hermitian {

const char* to_string(H1Case c) {
  switch (c) {
    case H1Case::none: return "none";
    case H1Case::line: return "line";
    case H1Case::conic: return "conic";
    case H1Case::cubic_ci: return "cubic_ci";
    case H1Case::cubic: return "cubic";
    case H1Case::unresolved: return "unresolved";
  }
  return "?";
}

namespace {

// Truncated power series in t over one field: coefficient vectors of fixed
// length cap (degrees 0 .. cap-1).
using Series = std::vector<Fel>;

Series series_const(Fel v, int cap) {
  Series s(cap, 0);
  s[0] = v;
  return s;
}

Series series_add(const Field& f, const Series& a, const Series& b) {
  Series r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Series series_sub(const Field& f, const Series& a, const Series& b) {
  Series r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Series series_mul(const Field& f, const Series& a, const Series& b) {
  Series r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
    }
  }
  return r;
}

Series series_scale(const Field& f, Fel v, const Series& a) {
  Series r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(v, a[i]);
  return r;
}

// a(t)^e for a power e of the characteristic: coefficientwise e-th power with
// exponents stretched by e.
Series series_pow_frobenius(const Field& f, const Series& a, unsigned e) {
  Series r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    std::size_t deg = i * e;
    if (deg >= r.size()) break;
    r[deg] = f.pow(a[i], e);
  }
  return r;
}

Series series_pow(const Field& f, Series base, unsigned e, int cap) {
  Series r = series_const(1, cap);
  while (e) {
    if (e & 1) r = series_mul(f, r, base);
    base = series_mul(f, base, base);
    e >>= 1;
  }
  return r;
}

int series_order(const Series& a) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) return static_cast<int>(i);
  return static_cast<int>(a.size());  // == cap: vanishes to the truncation depth
}

}  // namespace

BranchSeries branch_at(const HermitianCurve& curve, const ProjPoint& p, int cap) {
  if (cap < 2) throw std::invalid_argument("branch: cap too small");
  if (!curve.on_curve(p)) throw std::invalid_argument("branch: point not on the curve");
  const Field& f = curve.field();
  const unsigned q = curve.q();

  BranchSeries b;
  if (p == curve.p_infinity()) {
    // Chart y = 1: z + z^q = t^(q+1); iterate z <- t^(q+1) - z^q from 0.
    Series t_pow(cap, 0);
    if (q + 1 < static_cast<unsigned>(cap)) t_pow[q + 1] = 1;
    Series z(cap, 0);
    for (;;) {
      Series next = series_sub(f, t_pow, series_pow_frobenius(f, z, q));
      if (next == z) break;
      z = std::move(next);
    }
    Series x(cap, 0);
    x[1] = 1;
    b.x = std::move(x);
    b.y = series_const(1, cap);
    b.z = std::move(z);
    return b;
  }

  // Affine point (x0, y0, 1); x - x0 is a local parameter since no tangent
  // line at an affine point is vertical. Solve u^q + u = (x0+t)^(q+1) - x0^(q+1).
  Series xt(cap, 0);
  xt[0] = p.x;
  if (cap > 1) xt[1] = 1;
  Series g = series_pow(f, xt, q + 1, cap);
  g[0] = f.sub(g[0], f.pow(p.x, q + 1));
  Series u(cap, 0);
  for (;;) {
    Series next = series_sub(f, g, series_pow_frobenius(f, u, q));
    if (next == u) break;
    u = std::move(next);
  }
  u[0] = f.add(u[0], p.y);
  b.x = std::move(xt);
  b.y = std::move(u);
  b.z = series_const(1, cap);
  return b;
}

namespace {

Series compose_line(const Field& f, const Line& l, const BranchSeries& b) {
  Series r = series_scale(f, l.a, b.x);
  r = series_add(f, r, series_scale(f, l.b, b.y));
  r = series_add(f, r, series_scale(f, l.c, b.z));
  return r;
}

Series compose_conic(const Field& f, const Conic& c, const BranchSeries& b) {
  Series r = series_scale(f, c.c[0], series_mul(f, b.x, b.x));
  r = series_add(f, r, series_scale(f, c.c[1], series_mul(f, b.y, b.y)));
  r = series_add(f, r, series_scale(f, c.c[2], series_mul(f, b.z, b.z)));
  r = series_add(f, r, series_scale(f, c.c[3], series_mul(f, b.x, b.y)));
  r = series_add(f, r, series_scale(f, c.c[4], series_mul(f, b.x, b.z)));
  r = series_add(f, r, series_scale(f, c.c[5], series_mul(f, b.y, b.z)));
  return r;
}

int default_cap(const HermitianCurve& curve) { return 2 * curve.q() + 3; }

void validate_scheme(const HermitianCurve& curve, const ZeroScheme& z) {
  if (z.a < 0 || z.a > static_cast<int>(curve.q()))
    throw std::invalid_argument("scheme: multiplicity a out of range");
  std::vector<int> s = z.points;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end())
    throw std::invalid_argument("scheme: duplicate points");
  for (int id : s)
    if (id < 0 || static_cast<std::size_t>(id) >= curve.affine_points().size())
      throw std::invalid_argument("scheme: point id out of range");
}

}  // namespace

int contact_order(const HermitianCurve& curve, const ProjPoint& p, const Line& l, int cap) {
  return series_order(compose_line(curve.field(), l, branch_at(curve, p, cap)));
}

int contact_order(const HermitianCurve& curve, const ProjPoint& p, const Conic& c, int cap) {
  return series_order(compose_conic(curve.field(), c, branch_at(curve, p, cap)));
}

int order_at_infinity(const HermitianCurve& curve, const Line& l) {
  return contact_order(curve, curve.p_infinity(), l, default_cap(curve));
}

int order_at_infinity(const HermitianCurve& curve, const Conic& c) {
  return contact_order(curve, curve.p_infinity(), c, default_cap(curve));
}

int intersection_degree(const HermitianCurve& curve, const Line& l, const ZeroScheme& z) {
  validate_scheme(curve, z);
  if (l.a == 0 && l.b == 0 && l.c == 0) throw std::invalid_argument("line: zero divisor");
  const Field& f = curve.field();
  int count = 0;
  for (int id : z.points)
    if (on_line(f, l, curve.affine_points()[id])) ++count;
  return count + std::min(z.a, order_at_infinity(curve, l));
}

int intersection_degree(const HermitianCurve& curve, const Conic& c, const ZeroScheme& z) {
  validate_scheme(curve, z);
  if (std::all_of(c.c.begin(), c.c.end(), [](Fel v) { return v == 0; }))
    throw std::invalid_argument("conic: zero divisor");
  const Field& f = curve.field();
  int count = 0;
  for (int id : z.points)
    if (on_conic(f, c, curve.affine_points()[id])) ++count;
  return count + std::min(z.a, order_at_infinity(curve, c));
}

H1Report h0_h1(const HermitianCurve& curve, int d, const ZeroScheme& z) {
  const unsigned q = curve.q();
  if (d <= 0 || d > static_cast<int>(q))
    throw std::invalid_argument("h0_h1: d outside (0, q]");
  validate_scheme(curve, z);
  const Field& f = curve.field();

  // Degree-d monomials x^al y^be z^ga, and the branch series of each at P_inf
  // (x = t, y = 1), truncated to degree < a.
  std::vector<std::array<int, 3>> monomials;
  for (int ga = 0; ga <= d; ++ga)
    for (int al = 0; al + ga <= d; ++al) monomials.push_back({al, d - al - ga, ga});
  const std::size_t ncols = monomials.size();

  Matrix cond(curve.field_ptr(), z.a + z.points.size(), ncols);
  if (z.a > 0) {
    const int cap = std::max(z.a, 2);
    BranchSeries b = branch_at(curve, curve.p_infinity(), cap);
    std::vector<Series> zpow(d + 1);
    zpow[0] = series_const(1, cap);
    for (int g = 1; g <= d; ++g) zpow[g] = series_mul(f, zpow[g - 1], b.z);
    for (std::size_t col = 0; col < ncols; ++col) {
      auto [al, be, ga] = monomials[col];
      // t^al * z(t)^ga, rows are the coefficients of t^0 .. t^(a-1)
      for (int i = 0; i + al < z.a; ++i)
        cond.at(static_cast<std::size_t>(i + al), col) = zpow[ga][i];
    }
  }
  for (std::size_t s = 0; s < z.points.size(); ++s) {
    const ProjPoint& p = curve.affine_points()[z.points[s]];
    for (std::size_t col = 0; col < ncols; ++col) {
      auto [al, be, ga] = monomials[col];
      cond.at(z.a + s, col) = f.mul(f.pow(p.x, al), f.pow(p.y, be));
    }
  }

  std::size_t rk = rank(cond);
  H1Report rep;
  rep.h0 = static_cast<int>(ncols - rk);
  rep.h1 = z.degree() - static_cast<int>(rk);
  if (rep.h1 < 0) throw std::logic_error("h0_h1: negative h1");
  rep.witness_case = rep.h1 == 0 ? H1Case::none : H1Case::unresolved;
  return rep;
}

H1Report classify_h1_positive(const HermitianCurve& curve, int d, const ZeroScheme& z) {
  H1Report rep = h0_h1(curve, d, z);
  if (rep.h1 == 0) return rep;
  const Field& f = curve.field();
  const int cap = default_cap(curve);
  const BranchSeries binf = branch_at(curve, curve.p_infinity(), cap);

  // Lines first, in canonical order; deg(T1 n Z) >= d+2 certifies case (b).
  for (const Line& l : all_lines(f)) {
    int count = 0;
    for (int id : z.points)
      if (on_line(f, l, curve.affine_points()[id])) ++count;
    int ord = series_order(compose_line(f, l, binf));
    if (count + std::min(z.a, ord) >= d + 2) {
      rep.witness_case = H1Case::line;
      rep.line_witness = l;
      return rep;
    }
  }

  if (z.degree() >= 2 * d + 2) {
    const Fel n = f.order();
    std::array<Fel, 6> coeff{};
    // Enumerate representatives with the last nonzero coefficient equal to 1,
    // lower coefficients free, in lexicographic coefficient order.
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
        Conic t{coeff};
        int count = 0;
        for (int id : z.points)
          if (on_conic(f, t, curve.affine_points()[id])) ++count;
        int ord = series_order(compose_conic(f, t, binf));
        if (count + std::min(z.a, ord) >= 2 * d + 2) {
          rep.witness_case = H1Case::conic;
          rep.conic_witness = t;
          return rep;
        }
      }
    }
  }

  // Cubic witnesses (degrees 3d and up) are deliberately not searched.
  rep.witness_case = H1Case::unresolved;
  return rep;
}

bool kernel_h1_identity(const HermitianCurve& curve, const LinearCode& cda, int d,
                        int a, const std::vector<int>& s) {
  if (a > d) throw std::invalid_argument("kernel_h1_identity: requires a <= d");
  SupportOracle oracle(cda.generator());
  int dim = oracle.dimension(s);
  ZeroScheme z{a, s};
  return dim == h0_h1(curve, d, z).h1;
}

bool kernel_h1_identity(const HermitianCurve& curve, int d, int a,
                        const std::vector<int>& s) {
  LinearCode cda = build_code_da(curve, d, a);
  return kernel_h1_identity(curve, cda, d, a, s);
}

}  // namespace hermitian
